#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "euclidpt/e2_element.hpp"

namespace euclidpt {

// Element acting on modes e^{i k theta}, k = n + sector/2, n = -N..N.
struct SpectralProblem {
  E2Element element;
  double sector = 0.0;
  int truncation = 64;
};

double wavenumber(double sector, int truncation, int index);

// Multiplication by u^a v^b (restricted exactly) times diag(k)^c, summed over monomials.
Eigen::MatrixXcd build_matrix(const SpectralProblem& p);

struct SpectrumOptions {
  double reality_rtol = 1e-8;
  bool use_pt_structure = true;
  bool want_vectors = false;
};

struct Spectrum {
  std::vector<cplx> eigenvalues;  // sorted by real part, then imaginary part
  std::vector<bool> real;
  Eigen::MatrixXcd vectors;  // Fourier coefficients, column per eigenvalue, if requested
  int truncation = 0;
  double sector = 0.0;
  std::size_t trusted = 0;  // the lowest `trusted` levels are converged in N
  std::optional<PtSymmetry> structure_used;

  std::size_t size() const { return eigenvalues.size(); }
  bool all_real(std::size_t count) const;
  double max_abs_imag(std::size_t count) const;
};

bool is_real_eigenvalue(cplx e, double rtol);
std::size_t trusted_level_count(int truncation);

Spectrum eigen_spectrum(const SpectralProblem& p, const SpectrumOptions& opt = {});

// Parity theta -> -theta (u -> -u, v -> v, J -> -J). For invariant elements and
// sector 0 or 1 the problem splits into cos(k theta) and sin(k theta) blocks.
enum class Parity { Even, Odd };
bool is_parity_invariant(const E2Element& a, double tol = 0.0);
std::vector<cplx> parity_resolved_spectrum(const E2Element& a, double sector, Parity parity,
                                           int truncation);

enum class Statistics { Bosonic, Fermionic };
double pt1_closed_spectrum(double mu1, double mu3, int n, Statistics st);

}  // namespace euclidpt

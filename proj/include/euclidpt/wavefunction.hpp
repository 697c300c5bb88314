#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "euclidpt/e2_element.hpp"
#include "euclidpt/spectral_circle.hpp"

namespace euclidpt {

// psi(theta) = sum_n c_n e^{i (n + s/2) theta} / sqrt(2 pi), n = -N..N
struct FourierForm {
  std::vector<cplx> coeffs;
  double sector = 0.0;
};

// exp(-i (mu3 sin + mu4 cos)/mu1) [c1 e^{-i k theta} + i/(2k) c2 e^{i k theta}]
struct Pt1ClosedForm {
  double mu1 = 1.0, mu3 = 0.0, mu4 = 0.0;
  double k = 0.0;
};

// exp(-i mu4 cos/2 + mu6 sin/2) [c1 C(4E, i mu4, theta/2) + c2 S(4E, i mu4, theta/2)]
struct Pt5ComplexMathieuForm {
  double mu4 = 0.0, mu6 = 0.0, energy = 0.0;
};

class WavefunctionSpec {
 public:
  using Form = std::variant<FourierForm, Pt1ClosedForm, Pt5ComplexMathieuForm>;

  WavefunctionSpec(Form form, cplx c1, cplx c2, cplx energy);

  static WavefunctionSpec fourier(std::vector<cplx> coeffs, double sector, cplx energy);
  // c1-type (1, -2ik) = 2 pref cos(k theta) and c2-type (i/(2k), 1) = (i/k) pref cos(k theta);
  // for k = 0 only the c1 part exists.
  static WavefunctionSpec pt1_standing(double mu1, double mu3, double mu4, int n,
                                       Statistics st, bool c2_type);

  const Form& form() const { return form_; }
  cplx c1() const { return c1_; }
  cplx c2() const { return c2_; }
  cplx energy() const { return energy_; }

  cplx operator()(double theta) const;
  std::vector<cplx> evaluate(std::span<const double> theta) const;

  double norm() const;  // L2 over [0, 2 pi)
  WavefunctionSpec normalized() const;

 private:
  Form form_;
  cplx c1_, c2_;
  cplx energy_;
};

std::vector<double> uniform_grid(double lo, double hi, int points);

// Eigenvector of the given level (sorted by real part), normalized.
WavefunctionSpec wavefunction(const SpectralProblem& p, std::size_t level);

std::vector<double> intensity(const WavefunctionSpec& w, std::span<const double> theta);

// Result of comparing the PT image conj(psi(P theta)) with psi. Phase means
// PT psi = c psi with |c| = 1 but c != +-1 (numerical eigenvectors carry an
// arbitrary phase).
struct PtEigenCheck {
  enum class Kind { Even, Odd, Phase, Broken };
  Kind kind = Kind::Broken;
  cplx phase;        // best c with PT psi ~ c psi
  double residual;   // relative mismatch for that c
  int sign() const { return kind == Kind::Even ? 1 : kind == Kind::Odd ? -1 : 0; }
};

// Intensities of two levels (sorted by real part) and their sum
// |psi_a|^2 + |psi_b|^2 - |psi_even(0)|^2, where psi_even is the member closer
// to even under theta -> -theta.
struct IntensityPair {
  std::vector<double> a, b, sum;
  cplx energy_a, energy_b;
  bool a_is_even = true;
};

IntensityPair intensity_pair(const SpectralProblem& p, std::size_t level_a, std::size_t level_b,
                             std::span<const double> theta);

// theta map of the antilinear symmetry on the circle.
double pt_theta_image(PtSymmetry s, double theta);

PtEigenCheck pt_eigenstate_check(const WavefunctionSpec& w, PtSymmetry s, double tol = 1e-8);
std::string_view to_string(PtEigenCheck::Kind k);

}  // namespace euclidpt

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "euclidpt/e2_element.hpp"

namespace euclidpt {

// Mathieu equation y'' + (a - 2q cos 2z) y = 0.
enum class MathieuParity { Even, Odd };
enum class MathieuPeriod { Pi, TwoPi };

struct MathieuClass {
  MathieuParity parity = MathieuParity::Even;
  MathieuPeriod period = MathieuPeriod::Pi;
  bool operator==(const MathieuClass&) const = default;
};

// "even-pi" (a_2n), "odd-pi" (b_2n+2), "even-2pi" (a_2n+1), "odd-2pi" (b_2n+1)
MathieuClass parse_mathieu_class(std::string_view text);
std::string to_string(const MathieuClass& c);

// Order r of the index-th function of a class at q = 0, e.g. odd-pi index 0 -> b_2.
int mathieu_order(const MathieuClass& c, int index);

// Recurrence matrix for the Fourier coefficients (unscaled, row-major in the
// cos/sin(order z) basis).
Eigen::MatrixXcd mathieu_recurrence(cplx q, const MathieuClass& c, int trunc);

std::vector<cplx> characteristic_values(cplx q, const MathieuClass& c, int count, int trunc);

struct MathieuMode {
  MathieuClass cls;
  int index = 0;
  cplx a;
  std::vector<cplx> coeffs;  // on cos/sin(mathieu_order(cls, m) z), m = 0..trunc-1

  cplx operator()(double z) const;
  cplx derivative(double z) const;
};

// Unit L2 norm over [0, 2 pi); phase fixed so the coefficient of order `index` is real positive.
MathieuMode mathieu_mode(cplx q, const MathieuClass& c, int index, int trunc);

// Periodic function of the class whose characteristic value is closest to a.
std::vector<cplx> mathieu_function(cplx q, cplx a, const MathieuClass& c,
                                   std::span<const double> z, int trunc = 0);
std::vector<cplx> mathieu_function(cplx q, cplx a, MathieuParity parity,
                                   std::span<const double> z, int trunc = 0);

// Even (y(0)=1, y'(0)=0) and odd (y(0)=0, y'(0)=1) solutions for arbitrary a by
// adaptive integration; periodic only when a is a characteristic value.
std::vector<cplx> mathieu_cs(cplx a, cplx q, MathieuParity parity, std::span<const double> z);

struct MathieuEp {
  double t = 0.0;  // q = i t
  cplx a_merge;
  int lower_index = 0;
  double bracket_width = 0.0;
};

struct MathieuEpOptions {
  int count = 8;
  double step = 0.01;
  double tol = 1e-9;
  double reality_rtol = 1e-8;
  int trunc = 0;  // 0: chosen from max_q
};

std::vector<MathieuEp> complex_mathieu_eps(double max_q, const MathieuClass& c,
                                           const MathieuEpOptions& opt = {});

// The PT5 family mu1 = 1, mu2 = 0, mu3 = -mu6/2, mu5 = -mu4, mu7 = mu4^2/4,
// mu8 = -mu6^2/4, mu9 = -mu4 mu6/2, equal to (J + w)^2 + i mu4 v / 2 with
// w = (-mu4 u + i mu6 v)/2.
Couplings pt5_complex_mathieu_couplings(double mu4, double mu6);
E2Element pt5_complex_mathieu_hamiltonian(double mu4, double mu6);

// psi(theta) = exp(-i mu4 cos(theta)/2 + mu6 sin(theta)/2) [c1 C(4E, i mu4, theta/2) + c2 S(...)]
std::vector<cplx> pt5_complex_solution(double mu4, double mu6, double E,
                                       std::span<const double> theta, cplx c1 = 1.0,
                                       cplx c2 = 0.0);

// Bosonic energies of the family, E = a/4 from the pi-periodic classes.
std::vector<cplx> pt5_complex_bosonic_energies(double mu4, MathieuParity parity, int count,
                                               int trunc = 40);

// H^(3) of the three-parameter PT5 family is similar to J^2 + A + 2q cos(2 theta)
// with 2q = K, K^2 = B^2 - mu3^2 mu4^2, A = (mu3^2 + mu7 - mu4^2)/2,
// B = (mu3^2 + mu4^2 - mu7)/2. K is imaginary in the broken regime.
struct MathieuFrame {
  double A = 0.0;
  cplx q;
  E2Element element() const;  // J^2 + A + 2q (v^2 - u^2)
};

MathieuFrame pt5_three_param_mathieu_frame(double mu3, double mu4, double mu7);

}  // namespace euclidpt

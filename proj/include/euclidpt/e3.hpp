#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include "euclidpt/e2_element.hpp"

namespace euclidpt {

// Listed in normal order: translations left of rotations.
enum class E3Generator { Pz, Pp, Pm, Jz, Jp, Jm };
inline constexpr std::size_t kE3Generators = 6;
inline constexpr std::size_t kE3BasisSize = 1 + 6 + 21;

std::string_view to_string(E3Generator g);

class E3Element {
 public:
  using Coeffs = std::array<cplx, kE3BasisSize>;

  E3Element() { c_.fill(cplx{}); }
  explicit E3Element(const Coeffs& c) : c_(c) {}

  static E3Element scalar(cplx s);
  static E3Element generator(E3Generator g, cplx coeff = 1.0);
  // g h with g <= h in normal order
  static E3Element quadratic(E3Generator g, E3Generator h, cplx coeff = 1.0);

  cplx coeff(std::size_t i) const { return c_.at(i); }
  cplx scalar_part() const { return c_[0]; }
  cplx linear(E3Generator g) const { return c_[1 + static_cast<std::size_t>(g)]; }
  cplx quadratic_coeff(E3Generator g, E3Generator h) const;
  const Coeffs& coeffs() const { return c_; }

  int degree() const;
  double max_abs() const;

  E3Element operator+(const E3Element& o) const;
  E3Element operator-(const E3Element& o) const;
  E3Element operator*(cplx s) const;
  friend E3Element operator*(cplx s, const E3Element& a) { return a * s; }
  bool operator==(const E3Element& o) const { return c_ == o.c_; }

  std::string to_string() const;

  static std::size_t quadratic_index(E3Generator g, E3Generator h);

 private:
  Coeffs c_;
};

double max_abs_diff(const E3Element& a, const E3Element& b);

// [g, h] from the (z, +-) relations; a linear element.
E3Element structure(E3Generator g, E3Generator h);

E3Element multiply(const E3Element& a, const E3Element& b);
E3Element commutator(const E3Element& a, const E3Element& b);

// J_z^dagger = J_z, J_+-^dagger = J_-+, P_z^dagger = P_z, P_+-^dagger = -P_-+
E3Element hermitian_conjugate(const E3Element& a);
double hermiticity_residual(const E3Element& a);

enum class E3PtSymmetry { PT1, PT2, PT3, PT4 };
std::string_view to_string(E3PtSymmetry s);
E3PtSymmetry parse_e3_pt_symmetry(std::string_view text);

// Signed permutation of the Cartesian (J1, J2, J3, P1, P2, P3) with i -> -i.
struct E3PtAction {
  std::array<int, 6> target;
  std::array<int, 6> sign;
};
const E3PtAction& e3_pt_action(E3PtSymmetry s);

// Image of a (z, +-) generator under the antilinear map, as a linear element.
E3Element e3_pt_generator_image(E3PtSymmetry s, E3Generator g);
E3Element apply_pt_e3(E3PtSymmetry s, const E3Element& a);
// Whether the map respects the commutation relations as an antilinear map.
bool e3_pt_preserves_algebra(E3PtSymmetry s, double tol = 1e-12);

// eta = exp(lz Jz + lp J+ + lm J- + kz Pz + kp P+ + km P-)
struct DysonParamsE3 {
  double lambda_z = 0.0, lambda_plus = 0.0, lambda_minus = 0.0;
  double kappa_z = 0.0, kappa_plus = 0.0, kappa_minus = 0.0;
};

// Index order z, +, - for l and m. eta P_l eta^-1 = sum_m mu[l][m] P_m,
// eta J_l eta^-1 = sum_m nu[l][m] J_m + rho[l][m] P_m.
struct E3AdjointTable {
  std::array<std::array<double, 3>, 3> mu{}, nu{}, rho{};
  double omega2 = 0.0;        // lz^2 + lp lm, may be negative
  double omega_tilde2 = 0.0;  // 2 lz^2 + lp lm
  double mu_s = 0.0, mu_tilde = 0.0, nu_s = 0.0;
  double c = 1.0, s = 1.0;    // c(omega), s(omega)
};

E3AdjointTable e3_adjoint(const DysonParamsE3& p);
E3Element adjoint_image(const E3AdjointTable& t, E3Generator g);
E3Element transform_h_tilde(const DysonParamsE3& p, const E3Element& H);

using E3Couplings = std::array<double, 9>;
// mu1 J+^2 + mu2 J-^2 + mu3 Pz^2 + mu4 Pz J+ + mu5 Pz J- + mu6 J+ J- + i mu7 J+ + i mu8 J- + i mu9 Pz
E3Element build_h_tilde_pt1(const E3Couplings& mu);

}  // namespace euclidpt

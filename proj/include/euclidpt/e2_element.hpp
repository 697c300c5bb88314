#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

namespace euclidpt {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

// Normal-ordered monomials of degree <= 2: u powers, then v powers, then J powers.
enum class Monomial : std::size_t { One, U, V, J, UU, VV, UV, UJ, VJ, JJ };
inline constexpr std::size_t kE2BasisSize = 10;

struct Exponents {
  int u = 0, v = 0, j = 0;
  int degree() const { return u + v + j; }
  bool operator==(const Exponents&) const = default;
};

Exponents exponents(Monomial m);
Monomial monomial_from_exponents(const Exponents& e);  // throws DegreeOverflow
std::string_view monomial_name(Monomial m);

enum class Generator { U, V, J };

class E2Element {
 public:
  using Coeffs = std::array<cplx, kE2BasisSize>;

  E2Element() { c_.fill(cplx{}); }
  explicit E2Element(const Coeffs& c) : c_(c) {}

  static E2Element monomial(Monomial m, cplx coeff = 1.0);
  static E2Element scalar(cplx s) { return monomial(Monomial::One, s); }
  static E2Element generator(Generator g);
  static E2Element u() { return monomial(Monomial::U); }
  static E2Element v() { return monomial(Monomial::V); }
  static E2Element J() { return monomial(Monomial::J); }
  static E2Element casimir();

  cplx operator[](Monomial m) const { return c_[static_cast<std::size_t>(m)]; }
  cplx coeff(std::size_t i) const { return c_.at(i); }
  const Coeffs& coeffs() const { return c_; }
  E2Element with(Monomial m, cplx value) const;

  // Highest degree carrying a nonzero coefficient; 0 for the zero element.
  int degree() const;
  double max_abs() const;

  E2Element operator+(const E2Element& o) const;
  E2Element operator-(const E2Element& o) const;
  E2Element operator-() const;
  E2Element operator*(cplx s) const;
  friend E2Element operator*(cplx s, const E2Element& a) { return a * s; }
  bool operator==(const E2Element& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  Coeffs c_;
};

double max_abs_diff(const E2Element& a, const E2Element& b);

E2Element multiply(const E2Element& a, const E2Element& b);
E2Element commutator(const E2Element& a, const E2Element& b);
E2Element anticommutator(const E2Element& a, const E2Element& b);

E2Element hermitian_conjugate(const E2Element& a);
double hermiticity_residual(const E2Element& a);
bool is_hermitian(const E2Element& a, double tol);

enum class PtSymmetry { PT1, PT2, PT3, PT4, PT5 };
inline constexpr std::array<PtSymmetry, 5> kAllPtSymmetries{
    PtSymmetry::PT1, PtSymmetry::PT2, PtSymmetry::PT3, PtSymmetry::PT4, PtSymmetry::PT5};

std::string_view to_string(PtSymmetry s);
PtSymmetry parse_pt_symmetry(std::string_view text);  // throws ConfigError

struct SignedGenerator {
  Generator target;
  int sign;
};

// Image of (U, V, J) under the linear part of the antilinear map.
struct PtAction {
  std::array<SignedGenerator, 3> image;
};

const PtAction& pt_action(PtSymmetry s);
E2Element apply_pt(PtSymmetry s, const E2Element& a);

using Couplings = std::array<double, 9>;  // mu1..mu9 at indices 0..8

E2Element build_hamiltonian(PtSymmetry s, const Couplings& mu);

}  // namespace euclidpt

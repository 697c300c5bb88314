#include "euclidpt/e2_element.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "euclidpt/errors.hpp"

namespace euclidpt {
namespace {

constexpr std::array<Exponents, kE2BasisSize> kExponents{{
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
    {0, 2, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2},
}};

constexpr std::array<std::string_view, kE2BasisSize> kNames{
    "1", "u", "v", "J", "u^2", "v^2", "uv", "uJ", "vJ", "J^2"};

std::size_t idx(Monomial m) { return static_cast<std::size_t>(m); }

std::vector<Generator> factors(Monomial m) {
  const Exponents e = exponents(m);
  std::vector<Generator> out;
  out.insert(out.end(), e.u, Generator::U);
  out.insert(out.end(), e.v, Generator::V);
  out.insert(out.end(), e.j, Generator::J);
  return out;
}

// Product of two normal-ordered monomials. J u = uJ - iv and J v = vJ + iu are
// the only reorderings reachable inside degree 2.
E2Element monomial_product(Monomial a, Monomial b) {
  const Exponents ea = exponents(a);
  const Exponents eb = exponents(b);
  if (ea.degree() + eb.degree() > 2) throw DegreeOverflow("product exceeds degree 2");
  if (ea.j == 0 || (eb.u == 0 && eb.v == 0)) {
    return E2Element::monomial(
        monomial_from_exponents({ea.u + eb.u, ea.v + eb.v, ea.j + eb.j}));
  }
  if (eb.u == 1) {
    return E2Element::monomial(Monomial::UJ) + E2Element::monomial(Monomial::V, -I);
  }
  return E2Element::monomial(Monomial::VJ) + E2Element::monomial(Monomial::U, I);
}

E2Element product_of(const std::vector<E2Element>& parts) {
  E2Element acc = E2Element::scalar(1.0);
  for (const auto& p : parts) acc = multiply(acc, p);
  return acc;
}

}  // namespace

Exponents exponents(Monomial m) { return kExponents[idx(m)]; }

Monomial monomial_from_exponents(const Exponents& e) {
  for (std::size_t i = 0; i < kE2BasisSize; ++i)
    if (kExponents[i] == e) return static_cast<Monomial>(i);
  throw DegreeOverflow("no monomial of degree <= 2 with these exponents");
}

std::string_view monomial_name(Monomial m) { return kNames[idx(m)]; }

E2Element E2Element::monomial(Monomial m, cplx coeff) {
  E2Element e;
  e.c_[idx(m)] = coeff;
  return e;
}

E2Element E2Element::generator(Generator g) {
  switch (g) {
    case Generator::U: return u();
    case Generator::V: return v();
    case Generator::J: return J();
  }
  return {};
}

E2Element E2Element::casimir() { return monomial(Monomial::UU) + monomial(Monomial::VV); }

E2Element E2Element::with(Monomial m, cplx value) const {
  E2Element e = *this;
  e.c_[idx(m)] = value;
  return e;
}

int E2Element::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < kE2BasisSize; ++i)
    if (c_[i] != cplx{}) d = std::max(d, kExponents[i].degree());
  return d;
}

double E2Element::max_abs() const {
  double m = 0.0;
  for (const auto& z : c_) m = std::max(m, std::abs(z));
  return m;
}

E2Element E2Element::operator+(const E2Element& o) const {
  E2Element r = *this;
  for (std::size_t i = 0; i < kE2BasisSize; ++i) r.c_[i] += o.c_[i];
  return r;
}

E2Element E2Element::operator-(const E2Element& o) const { return *this + (-o); }

E2Element E2Element::operator-() const { return *this * cplx{-1.0}; }

E2Element E2Element::operator*(cplx s) const {
  E2Element r = *this;
  for (auto& z : r.c_) z *= s;
  return r;
}

std::string E2Element::to_string() const {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < kE2BasisSize; ++i) {
    if (c_[i] == cplx{}) continue;
    std::snprintf(buf, sizeof buf, "%s(%.6g%+.6gi)%s%s", out.empty() ? "" : " + ",
                  c_[i].real(), c_[i].imag(), i == 0 ? "" : "*", i == 0 ? "" : kNames[i].data());
    out += buf;
  }
  return out.empty() ? "0" : out;
}

double max_abs_diff(const E2Element& a, const E2Element& b) { return (a - b).max_abs(); }

E2Element multiply(const E2Element& a, const E2Element& b) {
  if (a.degree() + b.degree() > 2) throw DegreeOverflow("product exceeds degree 2");
  E2Element out;
  for (std::size_t i = 0; i < kE2BasisSize; ++i) {
    if (a.coeff(i) == cplx{}) continue;
    for (std::size_t j = 0; j < kE2BasisSize; ++j) {
      if (b.coeff(j) == cplx{}) continue;
      out = out + monomial_product(static_cast<Monomial>(i), static_cast<Monomial>(j)) *
                      (a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

E2Element commutator(const E2Element& a, const E2Element& b) {
  return multiply(a, b) - multiply(b, a);
}

E2Element anticommutator(const E2Element& a, const E2Element& b) {
  return multiply(a, b) + multiply(b, a);
}

E2Element hermitian_conjugate(const E2Element& a) {
  E2Element out;
  for (std::size_t i = 0; i < kE2BasisSize; ++i) {
    if (a.coeff(i) == cplx{}) continue;
    auto f = factors(static_cast<Monomial>(i));
    std::reverse(f.begin(), f.end());
    std::vector<E2Element> parts;
    for (auto g : f) parts.push_back(E2Element::generator(g));
    out = out + product_of(parts) * std::conj(a.coeff(i));
  }
  return out;
}

double hermiticity_residual(const E2Element& a) { return max_abs_diff(a, hermitian_conjugate(a)); }

bool is_hermitian(const E2Element& a, double tol) { return hermiticity_residual(a) <= tol; }

std::string_view to_string(PtSymmetry s) {
  static constexpr std::array<std::string_view, 5> names{"PT1", "PT2", "PT3", "PT4", "PT5"};
  return names[static_cast<std::size_t>(s)];
}

PtSymmetry parse_pt_symmetry(std::string_view text) {
  for (auto s : kAllPtSymmetries)
    if (to_string(s) == text) return s;
  throw ConfigError("unknown symmetry '" + std::string(text) + "'");
}

const PtAction& pt_action(PtSymmetry s) {
  using G = Generator;
  static const std::array<PtAction, 5> table{{
      {{{{G::U, -1}, {G::V, -1}, {G::J, -1}}}},
      {{{{G::U, 1}, {G::V, 1}, {G::J, -1}}}},
      {{{{G::V, 1}, {G::U, 1}, {G::J, 1}}}},
      {{{{G::U, -1}, {G::V, 1}, {G::J, 1}}}},
      {{{{G::U, 1}, {G::V, -1}, {G::J, 1}}}},
  }};
  return table[static_cast<std::size_t>(s)];
}

E2Element apply_pt(PtSymmetry s, const E2Element& a) {
  const PtAction& act = pt_action(s);
  E2Element out;
  for (std::size_t i = 0; i < kE2BasisSize; ++i) {
    if (a.coeff(i) == cplx{}) continue;
    std::vector<E2Element> parts;
    for (auto g : factors(static_cast<Monomial>(i))) {
      const SignedGenerator& img = act.image[static_cast<std::size_t>(g)];
      parts.push_back(E2Element::generator(img.target) * cplx(img.sign));
    }
    out = out + product_of(parts) * std::conj(a.coeff(i));
  }
  return out;
}

E2Element build_hamiltonian(PtSymmetry s, const Couplings& mu) {
  using M = Monomial;
  auto m = [](M mono, cplx c) { return E2Element::monomial(mono, c); };
  const E2Element u = E2Element::u(), v = E2Element::v();
  const E2Element uJ = m(M::UJ, 1.0), vJ = m(M::VJ, 1.0);
  const E2Element uu = m(M::UU, 1.0), vv = m(M::VV, 1.0);
  E2Element h = m(M::JJ, mu[0]);
  switch (s) {
    case PtSymmetry::PT1:
      return h + m(M::J, I * mu[1]) + m(M::U, I * mu[2]) + m(M::V, I * mu[3]) +
             m(M::UJ, mu[4]) + m(M::VJ, mu[5]) + m(M::UU, mu[6]) + m(M::VV, mu[7]) +
             m(M::UV, mu[8]);
    case PtSymmetry::PT2:
      return h + m(M::J, I * mu[1]) + m(M::U, mu[2]) + m(M::V, mu[3]) +
             m(M::UJ, I * mu[4]) + m(M::VJ, I * mu[5]) + m(M::UU, mu[6]) +
             m(M::VV, mu[7]) + m(M::UV, mu[8]);
    case PtSymmetry::PT3:
      return h + m(M::J, mu[1]) + (u + v) * mu[2] + (u - v) * (I * mu[3]) +
             (uJ + vJ) * mu[4] + (uJ - vJ) * (I * mu[5]) + (vv - uu) * (I * mu[6]) +
             (vv + uu) * mu[7] + m(M::UV, mu[8]);
    case PtSymmetry::PT4:
      return h + m(M::J, mu[1]) + m(M::U, I * mu[2]) + m(M::V, mu[3]) +
             m(M::UJ, I * mu[4]) + m(M::VJ, mu[5]) + m(M::UU, mu[6]) + m(M::VV, mu[7]) +
             m(M::UV, I * mu[8]);
    case PtSymmetry::PT5:
      return h + m(M::J, mu[1]) + m(M::U, mu[2]) + m(M::V, I * mu[3]) + m(M::UJ, mu[4]) +
             m(M::VJ, I * mu[5]) + m(M::UU, mu[6]) + m(M::VV, mu[7]) + m(M::UV, I * mu[8]);
  }
  return h;
}

}  // namespace euclidpt

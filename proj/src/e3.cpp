#include "euclidpt/e3.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "euclidpt/errors.hpp"

namespace euclidpt {
namespace {

using G = E3Generator;
constexpr std::array<std::string_view, kE3Generators> kNames{"Pz", "P+", "P-", "Jz", "J+", "J-"};

std::size_t gi(G g) { return static_cast<std::size_t>(g); }
G gen(std::size_t i) { return static_cast<G>(i); }

// Index of the first quadratic monomial g_i g_j with this i.
std::size_t row_offset(std::size_t i) {
  std::size_t off = 0;
  for (std::size_t r = 0; r < i; ++r) off += kE3Generators - r;
  return off;
}

struct QuadPair {
  std::size_t i, j;
};

QuadPair quad_pair(std::size_t index) {
  for (std::size_t i = 0; i < kE3Generators; ++i)
    for (std::size_t j = i; j < kE3Generators; ++j)
      if (E3Element::quadratic_index(gen(i), gen(j)) == index) return {i, j};
  return {0, 0};
}

E3Element generator_product(std::size_t i, std::size_t j) {
  if (i <= j) return E3Element::quadratic(gen(i), gen(j));
  return E3Element::quadratic(gen(j), gen(i)) + structure(gen(i), gen(j));
}

// Cartesian (J1, J2, J3, P1, P2, P3) -> (z, +-) conversions.
using Mat6 = std::array<std::array<cplx, 6>, 6>;

// Column g: Cartesian coefficients of generator g.
const Mat6& zpm_in_cartesian() {
  static const Mat6 m = [] {
    Mat6 a{};
    for (auto& row : a) row.fill(cplx{});
    a[3][gi(G::Pz)] = 1.0;
    a[4][gi(G::Pp)] = 1.0, a[5][gi(G::Pp)] = I;
    a[4][gi(G::Pm)] = -1.0, a[5][gi(G::Pm)] = I;
    a[0][gi(G::Jz)] = 2.0;
    a[1][gi(G::Jp)] = 1.0, a[2][gi(G::Jp)] = I;
    a[1][gi(G::Jm)] = 1.0, a[2][gi(G::Jm)] = -I;
    return a;
  }();
  return m;
}

// Column k: (z, +-) coefficients of Cartesian generator k.
const Mat6& cartesian_in_zpm() {
  static const Mat6 m = [] {
    Mat6 a{};
    for (auto& row : a) row.fill(cplx{});
    a[gi(G::Jz)][0] = 0.5;
    a[gi(G::Jp)][1] = 0.5, a[gi(G::Jm)][1] = 0.5;
    a[gi(G::Jp)][2] = -0.5 * I, a[gi(G::Jm)][2] = 0.5 * I;
    a[gi(G::Pz)][3] = 1.0;
    a[gi(G::Pp)][4] = 0.5, a[gi(G::Pm)][4] = -0.5;
    a[gi(G::Pp)][5] = -0.5 * I, a[gi(G::Pm)][5] = -0.5 * I;
    return a;
  }();
  return m;
}

E3Element cartesian_generator(std::size_t k) {
  E3Element e;
  for (std::size_t g = 0; g < kE3Generators; ++g)
    e = e + E3Element::generator(gen(g), cartesian_in_zpm()[g][k]);
  return e;
}

// Series coefficients in w = omega^2 of c, s, cosh(2 omega) and the divided
// differences (c - s)/w, (cosh 2 omega - s)/w.
struct OmegaFunctions {
  double c, s, d1, d2;
};

OmegaFunctions omega_functions(double w) {
  OmegaFunctions f{};
  if (std::abs(w) < 1.0) {
    double pw = 1.0;         // w^j
    double fact2 = 1.0;      // (2j)!
    double four = 1.0;       // 4^j
    f.c = f.s = f.d1 = f.d2 = 0.0;
    double pw_prev = 0.0;    // w^{j-1}
    for (int j = 0; j < 30; ++j) {
      const double f21 = fact2 * (2 * j + 1);
      const double f22 = f21 * (2 * j + 2);
      f.s += four * pw / f21;
      f.c += 2.0 * four * pw / f22;
      if (j >= 1) {
        f.d1 -= 2.0 * j * four * pw_prev / f22;
        f.d2 += 2.0 * j * four * pw_prev / f21;
      }
      pw_prev = pw;
      pw *= w;
      four *= 4.0;
      fact2 = f22;
    }
    return f;
  }
  double ch;
  if (w > 0.0) {
    const double om = std::sqrt(w);
    ch = std::cosh(2.0 * om);
    f.s = std::sinh(2.0 * om) / (2.0 * om);
  } else {
    const double th = std::sqrt(-w);
    ch = std::cos(2.0 * th);
    f.s = std::sin(2.0 * th) / (2.0 * th);
  }
  f.c = (ch - 1.0) / (2.0 * w);
  f.d1 = (f.c - f.s) / w;
  f.d2 = (ch - f.s) / w;
  return f;
}

}  // namespace

std::string_view to_string(E3Generator g) { return kNames[gi(g)]; }

std::size_t E3Element::quadratic_index(E3Generator g, E3Generator h) {
  std::size_t i = gi(g), j = gi(h);
  if (i > j) std::swap(i, j);
  return 1 + kE3Generators + row_offset(i) + (j - i);
}

E3Element E3Element::scalar(cplx s) {
  E3Element e;
  e.c_[0] = s;
  return e;
}

E3Element E3Element::generator(E3Generator g, cplx coeff) {
  E3Element e;
  e.c_[1 + gi(g)] = coeff;
  return e;
}

E3Element E3Element::quadratic(E3Generator g, E3Generator h, cplx coeff) {
  if (gi(g) > gi(h)) throw std::invalid_argument("quadratic monomial must be normal ordered");
  E3Element e;
  e.c_[quadratic_index(g, h)] = coeff;
  return e;
}

cplx E3Element::quadratic_coeff(E3Generator g, E3Generator h) const {
  return c_[quadratic_index(g, h)];
}

int E3Element::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < kE3BasisSize; ++i)
    if (c_[i] != cplx{}) d = std::max(d, i == 0 ? 0 : i <= kE3Generators ? 1 : 2);
  return d;
}

double E3Element::max_abs() const {
  double m = 0.0;
  for (const auto& z : c_) m = std::max(m, std::abs(z));
  return m;
}

E3Element E3Element::operator+(const E3Element& o) const {
  E3Element r = *this;
  for (std::size_t i = 0; i < kE3BasisSize; ++i) r.c_[i] += o.c_[i];
  return r;
}

E3Element E3Element::operator-(const E3Element& o) const { return *this + o * cplx(-1.0); }

E3Element E3Element::operator*(cplx s) const {
  E3Element r = *this;
  for (auto& z : r.c_) z *= s;
  return r;
}

std::string E3Element::to_string() const {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < kE3BasisSize; ++i) {
    if (c_[i] == cplx{}) continue;
    std::string name;
    if (i >= 1 && i <= kE3Generators) name = std::string(kNames[i - 1]);
    if (i > kE3Generators) {
      const QuadPair p = quad_pair(i);
      name = std::string(kNames[p.i]) + std::string(kNames[p.j]);
    }
    std::snprintf(buf, sizeof buf, "%s(%.6g%+.6gi)%s%s", out.empty() ? "" : " + ",
                  c_[i].real(), c_[i].imag(), name.empty() ? "" : "*", name.c_str());
    out += buf;
  }
  return out.empty() ? "0" : out;
}

double max_abs_diff(const E3Element& a, const E3Element& b) { return (a - b).max_abs(); }

E3Element structure(E3Generator g, E3Generator h) {
  const std::size_t i = gi(g), j = gi(h);
  if (i == j) return {};
  if (i > j) return structure(h, g) * cplx(-1.0);
  auto lin = [](G x, double c) { return E3Element::generator(x, c); };
  // i < j in normal order
  switch (g) {
    case G::Pz:
      if (h == G::Jp) return lin(G::Pp, 1.0);  // [J+, Pz] = -P+
      if (h == G::Jm) return lin(G::Pm, 1.0);
      return {};
    case G::Pp:
      if (h == G::Jz) return lin(G::Pp, -2.0);  // [Jz, P+] = 2P+
      if (h == G::Jm) return lin(G::Pz, 2.0);   // [J-, P+] = -2Pz
      return {};
    case G::Pm:
      if (h == G::Jz) return lin(G::Pm, 2.0);
      if (h == G::Jp) return lin(G::Pz, 2.0);
      return {};
    case G::Jz:
      if (h == G::Jp) return lin(G::Jp, 2.0);
      if (h == G::Jm) return lin(G::Jm, -2.0);
      return {};
    case G::Jp:
      if (h == G::Jm) return lin(G::Jz, 1.0);
      return {};
    default:
      return {};
  }
}

E3Element multiply(const E3Element& a, const E3Element& b) {
  if (a.degree() + b.degree() > 2) throw DegreeOverflow("E3 product exceeds degree 2");
  E3Element out;
  for (std::size_t x = 0; x < kE3BasisSize; ++x) {
    const cplx ca = a.coeff(x);
    if (ca == cplx{}) continue;
    for (std::size_t y = 0; y < kE3BasisSize; ++y) {
      const cplx cb = b.coeff(y);
      if (cb == cplx{}) continue;
      if (x == 0 || y == 0) {
        E3Element::Coeffs c{};
        c.fill(cplx{});
        c[x == 0 ? y : x] = ca * cb;
        out = out + E3Element(c);
      } else {
        out = out + generator_product(x - 1, y - 1) * (ca * cb);
      }
    }
  }
  return out;
}

E3Element commutator(const E3Element& a, const E3Element& b) {
  return multiply(a, b) - multiply(b, a);
}

E3Element hermitian_conjugate(const E3Element& a) {
  auto dagger = [](std::size_t i) {
    switch (gen(i)) {
      case G::Jz: return E3Element::generator(G::Jz);
      case G::Jp: return E3Element::generator(G::Jm);
      case G::Jm: return E3Element::generator(G::Jp);
      case G::Pz: return E3Element::generator(G::Pz);
      case G::Pp: return E3Element::generator(G::Pm, -1.0);
      case G::Pm: return E3Element::generator(G::Pp, -1.0);
    }
    return E3Element{};
  };
  E3Element out = E3Element::scalar(std::conj(a.scalar_part()));
  for (std::size_t i = 0; i < kE3Generators; ++i)
    out = out + dagger(i) * std::conj(a.coeff(1 + i));
  for (std::size_t x = 1 + kE3Generators; x < kE3BasisSize; ++x) {
    if (a.coeff(x) == cplx{}) continue;
    const QuadPair p = quad_pair(x);
    out = out + multiply(dagger(p.j), dagger(p.i)) * std::conj(a.coeff(x));
  }
  return out;
}

double hermiticity_residual(const E3Element& a) {
  return max_abs_diff(a, hermitian_conjugate(a));
}

std::string_view to_string(E3PtSymmetry s) {
  static constexpr std::array<std::string_view, 4> names{"PT1", "PT2", "PT3", "PT4"};
  return names[static_cast<std::size_t>(s)];
}

E3PtSymmetry parse_e3_pt_symmetry(std::string_view text) {
  for (auto s : {E3PtSymmetry::PT1, E3PtSymmetry::PT2, E3PtSymmetry::PT3, E3PtSymmetry::PT4})
    if (to_string(s) == text) return s;
  throw ConfigError("unknown E3 symmetry '" + std::string(text) + "'");
}

const E3PtAction& e3_pt_action(E3PtSymmetry s) {
  static const std::array<E3PtAction, 4> table{{
      {{0, 1, 2, 3, 4, 5}, {-1, -1, -1, -1, -1, -1}},
      {{0, 1, 2, 3, 4, 5}, {-1, -1, -1, 1, 1, 1}},
      {{0, 1, 2, 3, 5, 4}, {1, 1, 1, 1, 1, 1}},
      {{0, 1, 2, 3, 4, 5}, {-1, 1, 1, -1, 1, -1}},
  }};
  return table[static_cast<std::size_t>(s)];
}

E3Element e3_pt_generator_image(E3PtSymmetry s, E3Generator g) {
  const E3PtAction& act = e3_pt_action(s);
  const Mat6& m = zpm_in_cartesian();
  E3Element out;
  for (std::size_t k = 0; k < 6; ++k) {
    const cplx c = m[k][gi(g)];
    if (c == cplx{}) continue;
    out = out + cartesian_generator(act.target[k]) * (std::conj(c) * double(act.sign[k]));
  }
  return out;
}

E3Element apply_pt_e3(E3PtSymmetry s, const E3Element& a) {
  E3Element out = E3Element::scalar(std::conj(a.scalar_part()));
  for (std::size_t i = 0; i < kE3Generators; ++i)
    if (a.coeff(1 + i) != cplx{})
      out = out + e3_pt_generator_image(s, gen(i)) * std::conj(a.coeff(1 + i));
  for (std::size_t x = 1 + kE3Generators; x < kE3BasisSize; ++x) {
    if (a.coeff(x) == cplx{}) continue;
    const QuadPair p = quad_pair(x);
    out = out + multiply(e3_pt_generator_image(s, gen(p.i)), e3_pt_generator_image(s, gen(p.j))) *
                    std::conj(a.coeff(x));
  }
  return out;
}

bool e3_pt_preserves_algebra(E3PtSymmetry s, double tol) {
  for (std::size_t i = 0; i < kE3Generators; ++i)
    for (std::size_t j = 0; j < kE3Generators; ++j) {
      const E3Element lhs =
          commutator(e3_pt_generator_image(s, gen(i)), e3_pt_generator_image(s, gen(j)));
      const E3Element rhs = apply_pt_e3(s, structure(gen(i), gen(j)));
      if (max_abs_diff(lhs, rhs) > tol) return false;
    }
  return true;
}

E3AdjointTable e3_adjoint(const DysonParamsE3& p) {
  const double lz = p.lambda_z, kz = p.kappa_z;
  const std::array<double, 3> L{0.0, p.lambda_plus, p.lambda_minus};
  const std::array<double, 3> K{0.0, p.kappa_plus, p.kappa_minus};
  const double lp = L[1], lm = L[2], kp = K[1], km = K[2];

  E3AdjointTable t;
  t.omega2 = lz * lz + lp * lm;
  t.omega_tilde2 = 2.0 * lz * lz + lp * lm;
  t.mu_s = kz * lz + kp * lm - km * lp;
  t.mu_tilde = 2.0 * kz * lz + kp * lm - km * lp;
  t.nu_s = kp * lz * lm - kz * lp * lm - km * lz * lp;
  const OmegaFunctions f = omega_functions(t.omega2);
  const double c = f.c, s = f.s, d1 = f.d1, d2 = f.d2;
  t.c = c;
  t.s = s;
  const double mu = t.mu_s, mut = t.mu_tilde, nu = t.nu_s, wt2 = t.omega_tilde2;

  constexpr int z = 0;
  t.mu[z][z] = 1.0 + 2.0 * c * lp * lm;
  t.nu[z][z] = 1.0 + 2.0 * c * lp * lm;
  t.rho[z][z] = 4.0 * ((lm * kp - lp * km) * c - lp * lm * mu * d1);
  for (int a = 1; a <= 2; ++a) {
    const int b = 3 - a;
    const double S = a == 1 ? 1.0 : -1.0;
    t.mu[a][a] = 1.0 + (2.0 * lz * lz + lp * lm) * c + 2.0 * S * s * lz;
    t.mu[a][b] = c * L[b] * L[b];
    t.mu[a][z] = -2.0 * S * c * lz * L[b] - 2.0 * s * L[b];
    t.mu[z][a] = -S * c * lz * L[a] - s * L[a];

    t.nu[a][a] = 1.0 + wt2 * c + 2.0 * S * s * lz;
    t.nu[a][b] = -c * L[b] * L[b];
    t.nu[a][z] = -S * s * L[b] - c * lz * L[b];
    t.nu[z][a] = -2.0 * c * lz * L[a] - 2.0 * S * s * L[a];

    t.rho[z][a] = c * (S * L[a] * kz - 2.0 * lz * K[a]) - 2.0 * S * s * (K[a] + L[a] * kz) +
                  2.0 * S * L[a] * nu * d1 - L[a] * mu * d2;
    t.rho[a][z] = c * (L[b] * kz + 2.0 * S * lz * K[b]) + 2.0 * s * (K[b] - L[b] * kz) +
                  2.0 * L[b] * nu * d1 - S * L[b] * mu * d2;
    t.rho[a][a] = S * c * mut + s * kz - S * mu * wt2 * d1 + lz * mu * d2;
    t.rho[a][b] = -2.0 * c * L[b] * K[b] - S * mu * L[b] * L[b] * d1;
  }
  return t;
}

E3Element adjoint_image(const E3AdjointTable& t, E3Generator g) {
  static constexpr std::array<G, 3> P{G::Pz, G::Pp, G::Pm};
  static constexpr std::array<G, 3> J{G::Jz, G::Jp, G::Jm};
  E3Element out;
  const bool is_p = g == G::Pz || g == G::Pp || g == G::Pm;
  const int l = is_p ? static_cast<int>(gi(g)) : static_cast<int>(gi(g)) - 3;
  for (int m = 0; m < 3; ++m) {
    if (is_p) {
      out = out + E3Element::generator(P[m], t.mu[l][m]);
    } else {
      out = out + E3Element::generator(J[m], t.nu[l][m]) + E3Element::generator(P[m], t.rho[l][m]);
    }
  }
  return out;
}

E3Element transform_h_tilde(const DysonParamsE3& p, const E3Element& H) {
  if (H.degree() > 2) throw DegreeOverflow("element exceeds degree 2");
  const E3AdjointTable t = e3_adjoint(p);
  std::array<E3Element, kE3Generators> img;
  for (std::size_t i = 0; i < kE3Generators; ++i) img[i] = adjoint_image(t, gen(i));
  E3Element out = E3Element::scalar(H.scalar_part());
  for (std::size_t i = 0; i < kE3Generators; ++i)
    if (H.coeff(1 + i) != cplx{}) out = out + img[i] * H.coeff(1 + i);
  for (std::size_t x = 1 + kE3Generators; x < kE3BasisSize; ++x) {
    if (H.coeff(x) == cplx{}) continue;
    const QuadPair q = quad_pair(x);
    out = out + multiply(img[q.i], img[q.j]) * H.coeff(x);
  }
  return out;
}

E3Element build_h_tilde_pt1(const E3Couplings& mu) {
  auto q = [](G a, G b, cplx c) { return E3Element::quadratic(a, b, c); };
  auto l = [](G a, cplx c) { return E3Element::generator(a, c); };
  return q(G::Jp, G::Jp, mu[0]) + q(G::Jm, G::Jm, mu[1]) + q(G::Pz, G::Pz, mu[2]) +
         q(G::Pz, G::Jp, mu[3]) + q(G::Pz, G::Jm, mu[4]) + q(G::Jp, G::Jm, mu[5]) +
         l(G::Jp, I * mu[6]) + l(G::Jm, I * mu[7]) + l(G::Pz, I * mu[8]);
}

}  // namespace euclidpt

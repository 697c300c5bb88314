#include "euclidpt/dyson_e2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "euclidpt/errors.hpp"

namespace euclidpt {
namespace {

constexpr double kSmallLambda = 1e-4;

// sinh(x)/x
double sinhc(double x) {
  if (std::abs(x) < kSmallLambda) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0;
  }
  return std::sinh(x) / x;
}

// (1 - cosh x)/x
double one_minus_cosh_over(double x) {
  if (std::abs(x) < kSmallLambda) {
    const double x2 = x * x;
    return -x * (0.5 + x2 / 24.0 + x2 * x2 / 720.0 + x2 * x2 * x2 / 40320.0);
  }
  const double sh = std::sinh(0.5 * x);
  return -2.0 * sh * sh / x;
}

// x coth x
double x_coth(double x) {
  if (std::abs(x) < kSmallLambda) {
    const double x2 = x * x;
    return 1.0 + x2 / 3.0 - x2 * x2 / 45.0 + 2.0 * x2 * x2 * x2 / 945.0;
  }
  return x / std::tanh(x);
}

E2Element substitute(const DysonParamsE2& p, Monomial m) {
  const Exponents e = exponents(m);
  E2Element acc = E2Element::scalar(1.0);
  for (int k = 0; k < e.u; ++k) acc = multiply(acc, adjoint_generator(p, Generator::U));
  for (int k = 0; k < e.v; ++k) acc = multiply(acc, adjoint_generator(p, Generator::V));
  for (int k = 0; k < e.j; ++k) acc = multiply(acc, adjoint_generator(p, Generator::J));
  return acc;
}

double get(const NamedParams& f, const std::string& name, double fallback = 0.0) {
  auto it = f.find(name);
  return it == f.end() ? fallback : it->second;
}

void validate_names(PtSymmetry s, const NamedParams& free) {
  const auto required = hermitize_parameter_names(s);
  const auto optional = hermitize_optional_names(s);
  for (const auto& name : required)
    if (!free.count(name))
      throw ConfigError(std::string(to_string(s)) + ": missing free parameter '" + name + "'");
  for (const auto& [name, value] : free) {
    const bool known = std::find(required.begin(), required.end(), name) != required.end() ||
                       std::find(optional.begin(), optional.end(), name) != optional.end();
    if (!known)
      throw ConfigError(std::string(to_string(s)) + ": '" + name + "' is not a free parameter");
    if (!std::isfinite(value)) throw ConfigError("free parameter '" + name + "' is not finite");
  }
}

void require_nonzero(double value, const char* what) {
  if (value == 0.0) throw DegenerateCouplings(std::string("vanishing denominator: ") + what);
}

}  // namespace

E2Element adjoint_generator(const DysonParamsE2& p, Generator g) {
  const double l = p.lambda;
  switch (g) {
    case Generator::J: {
      const double s = sinhc(l), c = one_minus_cosh_over(l);
      return E2Element::J() + E2Element::u() * cplx(p.rho * c, -p.tau * s) +
             E2Element::v() * cplx(p.tau * c, p.rho * s);
    }
    case Generator::U:
      return E2Element::u() * std::cosh(l) + E2Element::v() * cplx(0.0, -std::sinh(l));
    case Generator::V:
      return E2Element::v() * std::cosh(l) + E2Element::u() * cplx(0.0, std::sinh(l));
  }
  return {};
}

E2Element similarity_transform(const DysonParamsE2& p, const E2Element& H) {
  if (H.degree() > 2) throw DegreeOverflow("element exceeds degree 2");
  E2Element out;
  for (std::size_t i = 0; i < kE2BasisSize; ++i) {
    if (H.coeff(i) == cplx{}) continue;
    out = out + substitute(p, static_cast<Monomial>(i)) * H.coeff(i);
  }
  return out;
}

double lambda_from_coth2(double rhs) {
  if (std::isnan(rhs) || std::abs(rhs) <= 1.0)
    throw MapUndefined("coth(2 lambda) = " + std::to_string(rhs) + " has no real solution", rhs);
  if (std::isinf(rhs)) return 0.0;
  return 0.25 * std::log((rhs + 1.0) / (rhs - 1.0));
}

std::vector<std::string> hermitize_parameter_names(PtSymmetry s) {
  switch (s) {
    case PtSymmetry::PT1:
    case PtSymmetry::PT2: return {"lambda", "mu1", "mu3", "mu4"};
    case PtSymmetry::PT3: return {"mu1", "mu2", "mu4", "mu5", "mu6", "mu7", "mu8", "mu9"};
    case PtSymmetry::PT4:
    case PtSymmetry::PT5: return {"mu1", "mu2", "mu4", "mu5", "mu6", "mu7", "mu8"};
  }
  return {};
}

std::vector<std::string> hermitize_optional_names(PtSymmetry s) {
  if (s == PtSymmetry::PT1 || s == PtSymmetry::PT2) return {"mu8"};
  return {};
}

double hermitize_coth_rhs(PtSymmetry s, const NamedParams& f) {
  const double m1 = get(f, "mu1"), m5 = get(f, "mu5"), m6 = get(f, "mu6");
  const double m7 = get(f, "mu7"), m8 = get(f, "mu8"), m9 = get(f, "mu9");
  require_nonzero(m1, "mu1");
  switch (s) {
    case PtSymmetry::PT3: {
      const double den = 2.0 * m5 * m6 + 4.0 * m1 * m7;
      require_nonzero(den, "2 mu5 mu6 + 4 mu1 mu7");
      return (2.0 * m1 * m9 - m5 * m5 - m6 * m6) / den;
    }
    case PtSymmetry::PT4:
      require_nonzero(m5 * m6, "mu5 mu6");
      return (4.0 * m1 * (m8 - m7) - m5 * m5 - m6 * m6) / (2.0 * m5 * m6);
    case PtSymmetry::PT5:
      require_nonzero(m5 * m6, "mu5 mu6");
      return (m5 * m5 + m6 * m6 - 4.0 * m1 * m7 + 4.0 * m1 * m8) / (2.0 * m5 * m6);
    default:
      return std::numeric_limits<double>::quiet_NaN();
  }
}

HermitizationResult hermitize(PtSymmetry s, const NamedParams& free) {
  validate_names(s, free);
  HermitizationResult r;
  r.symmetry = s;
  r.free_parameter_names = hermitize_parameter_names(s);
  r.coth_rhs = std::numeric_limits<double>::quiet_NaN();
  Couplings& mu = r.constrained_mu;
  mu.fill(0.0);
  const double m1 = get(free, "mu1");
  require_nonzero(m1, "mu1");
  mu[0] = m1;

  switch (s) {
    case PtSymmetry::PT1:
    case PtSymmetry::PT2: {
      const double l = get(free, "lambda"), m3 = get(free, "mu3"), m4 = get(free, "mu4");
      const double m8 = get(free, "mu8");
      mu[2] = m3;
      mu[3] = m4;
      mu[7] = m8;
      if (s == PtSymmetry::PT1) {
        r.params = {l, -l * m4 / m1, l * m3 / m1};
        mu[4] = -2.0 * m4;
        mu[5] = 2.0 * m3;
        mu[6] = m8 + (m4 * m4 - m3 * m3) / m1;
        mu[8] = -2.0 * m3 * m4 / m1;
      } else {
        const double lc = x_coth(l);
        r.params = {l, m3 * lc / m1, m4 * lc / m1};
        mu[4] = 2.0 * m4;
        mu[5] = -2.0 * m3;
        mu[6] = m8 + (m3 * m3 - m4 * m4) / m1;
        mu[8] = 2.0 * m3 * m4 / m1;
      }
      break;
    }
    case PtSymmetry::PT3: {
      const double m2 = get(free, "mu2"), m4 = get(free, "mu4"), m5 = get(free, "mu5");
      const double m6 = get(free, "mu6");
      r.coth_rhs = hermitize_coth_rhs(s, free);
      const double l = lambda_from_coth2(r.coth_rhs);
      const double ct = 1.0 / std::tanh(l);
      mu = {m1, m2, 0.0, m4, m5, m6, get(free, "mu7"), get(free, "mu8"), get(free, "mu9")};
      mu[2] = (m2 * m5 + m1 * m6 - ct * (m1 * (2.0 * m4 - m5) - m2 * m6)) / (2.0 * m1);
      const double rt = l * (m5 + m6 * ct) / (2.0 * m1);
      r.params = {l, rt, rt};
      break;
    }
    case PtSymmetry::PT4: {
      const double m2 = get(free, "mu2"), m4 = get(free, "mu4"), m5 = get(free, "mu5");
      const double m6 = get(free, "mu6");
      r.coth_rhs = hermitize_coth_rhs(s, free);
      const double l = lambda_from_coth2(r.coth_rhs);
      const double th = std::tanh(l);
      mu = {m1, m2, 0.0, m4, m5, m6, get(free, "mu7"), get(free, "mu8"), 0.0};
      mu[2] = (m1 * m5 + m2 * m6 - 2.0 * m1 * m4) / (2.0 * m1) * th + m2 * m5 / (2.0 * m1) +
              0.5 * m6;
      r.params = {l, 0.0, l * (m5 / th + m6) / (2.0 * m1)};
      break;
    }
    case PtSymmetry::PT5: {
      const double m2 = get(free, "mu2"), m4 = get(free, "mu4"), m5 = get(free, "mu5");
      const double m6 = get(free, "mu6");
      r.coth_rhs = hermitize_coth_rhs(s, free);
      const double l = lambda_from_coth2(r.coth_rhs);
      const double ct = 1.0 / std::tanh(l);
      mu = {m1, m2, 0.0, m4, m5, m6, get(free, "mu7"), get(free, "mu8"), 0.0};
      mu[2] = (2.0 * m1 * m4 + m1 * m5 - m2 * m6) * ct / (2.0 * m1) + m2 * m5 / (2.0 * m1) -
              0.5 * m6;
      r.params = {l, l * (m5 - m6 * ct) / (2.0 * m1), 0.0};
      break;
    }
  }

  r.H = build_hamiltonian(s, mu);
  r.h = similarity_transform(r.params, r.H);
  r.residual = hermiticity_residual(r.h);
  r.original_hermitian = is_hermitian(r.H, 1e-12 * std::max(1.0, r.H.max_abs()));
  return r;
}

Couplings pt5_three_param_couplings(double mu3, double mu4, double mu7) {
  return {1.0, 0.0, mu3, mu4, -2.0 * mu4, -2.0 * mu3, mu7, 0.0, 0.0};
}

E2Element pt5_three_param_hamiltonian(double mu3, double mu4, double mu7) {
  return build_hamiltonian(PtSymmetry::PT5, pt5_three_param_couplings(mu3, mu4, mu7));
}

ThreeParamReduction reduce_pt5_three_param(double mu3, double mu4, double mu7) {
  require_nonzero(mu3 * mu4, "mu3 mu4");
  ThreeParamReduction r;
  r.coth_rhs = (mu3 * mu3 + mu4 * mu4 - mu7) / (2.0 * mu3 * mu4);
  const double l = lambda_from_coth2(r.coth_rhs);
  const double ch = std::cosh(l), sh = std::sinh(l);
  r.lambda = l;
  r.rho = l * (mu3 / std::tanh(l) - mu4);
  r.alpha = mu3 * std::tanh(0.5 * l) - mu4;
  const double w = mu3 * ch - mu4 * sh;
  r.gamma = w * w - mu7 * sh * sh;
  r.beta = 2.0 * mu3 / (1.0 + ch) * w + mu7 - 2.0 * r.gamma;
  r.H = pt5_three_param_hamiltonian(mu3, mu4, mu7);
  r.h = similarity_transform({l, r.rho, 0.0}, r.H);
  return r;
}

std::vector<double> ep_predictions_pt5(double mu3, double mu4, double mu7, Pt5Axis axis) {
  std::vector<double> out;
  switch (axis) {
    case Pt5Axis::Mu3:
    case Pt5Axis::Mu4: {
      if (mu7 < 0.0) return out;
      const double other = axis == Pt5Axis::Mu3 ? mu4 : mu3;
      const double r = std::sqrt(mu7);
      out = {other + r, other - r, -other + r, -other - r};
      break;
    }
    case Pt5Axis::Mu7:
      out = {(mu3 + mu4) * (mu3 + mu4), (mu3 - mu4) * (mu3 - mu4)};
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

OpticalLatticeMap optical_lattice_map(double mu7, double mu8, double mu9) {
  OpticalLatticeMap r;
  Couplings mu{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, mu7, mu8, mu9};
  r.H = build_hamiltonian(PtSymmetry::PT5, mu);
  if (mu9 == 0.0) {
    r.coth_rhs = mu7 >= mu8 ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
    r.lambda = 0.0;
  } else {
    r.coth_rhs = (mu7 - mu8) / mu9;
    r.lambda = lambda_from_coth2(r.coth_rhs);
  }
  r.h = similarity_transform({r.lambda, 0.0, 0.0}, r.H);
  return r;
}

}  // namespace euclidpt

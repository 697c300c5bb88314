#include "euclidpt/serialize.hpp"

#include <cmath>

#include "euclidpt/errors.hpp"

namespace euclidpt {
namespace {

Json pair(cplx z) { return Json::array({z.real(), z.imag()}); }

Json table3(const std::array<std::array<double, 3>, 3>& m) {
  static constexpr const char* labels[3] = {"z", "+", "-"};
  Json out = Json::object();
  for (int l = 0; l < 3; ++l)
    for (int k = 0; k < 3; ++k) out[std::string(labels[l]) + labels[k]] = m[l][k];
  return out;
}

}  // namespace

Json to_json(const E2Element& a) {
  Json coeffs = Json::array();
  for (cplx z : a.coeffs()) coeffs.push_back(pair(z));
  return {{"basis", "u,v,J-normal"}, {"coeffs", coeffs}};
}

E2Element e2_from_json(const Json& j) {
  try {
    if (j.at("basis").get<std::string>() != "u,v,J-normal")
      throw ConfigError("unsupported E2 basis tag");
    const Json& c = j.at("coeffs");
    if (!c.is_array() || c.size() != kE2BasisSize)
      throw ConfigError("E2 element needs 10 coefficients");
    E2Element::Coeffs out{};
    for (std::size_t i = 0; i < kE2BasisSize; ++i) {
      if (!c[i].is_array() || c[i].size() != 2) throw ConfigError("coefficient must be [re, im]");
      out[i] = {c[i][0].get<double>(), c[i][1].get<double>()};
    }
    return E2Element(out);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed E2 element: ") + e.what());
  }
}

Json to_json(const E3Element& a) {
  Json terms = Json::object();
  terms["1"] = pair(a.scalar_part());
  for (std::size_t i = 0; i < kE3Generators; ++i) {
    const auto g = static_cast<E3Generator>(i);
    if (a.linear(g) != cplx{}) terms[std::string(to_string(g))] = pair(a.linear(g));
  }
  for (std::size_t i = 0; i < kE3Generators; ++i)
    for (std::size_t k = i; k < kE3Generators; ++k) {
      const auto g = static_cast<E3Generator>(i), h = static_cast<E3Generator>(k);
      if (a.quadratic_coeff(g, h) != cplx{})
        terms[std::string(to_string(g)) + std::string(to_string(h))] = pair(a.quadratic_coeff(g, h));
    }
  return terms;
}

Json to_json(const DysonParamsE2& p) {
  return {{"lambda", p.lambda}, {"rho", p.rho}, {"tau", p.tau}};
}

Json to_json(const HermitizationResult& r) {
  Json j = Json::object();
  j["lambda"] = r.params.lambda;
  j["rho"] = r.params.rho;
  j["tau"] = r.params.tau;
  j["h"] = to_json(r.h);
  j["residual"] = r.residual;
  j["constrained_mu"] = r.constrained_mu;
  j["H"] = to_json(r.H);
  j["original_hermitian"] = r.original_hermitian;
  if (std::isfinite(r.coth_rhs)) j["coth_rhs"] = r.coth_rhs;
  return j;
}

Json to_json(const E3AdjointTable& t) {
  return {{"mu", table3(t.mu)},
          {"nu", table3(t.nu)},
          {"rho", table3(t.rho)},
          {"omega2", t.omega2},
          {"omega_tilde2", t.omega_tilde2},
          {"mu_scalar", t.mu_s},
          {"mu_tilde", t.mu_tilde},
          {"nu_scalar", t.nu_s},
          {"c", t.c},
          {"s", t.s}};
}

Json to_json(const ExceptionalPoint& ep) {
  return {{"parameter_value", ep.parameter_value},
          {"energy", ep.energy},
          {"level_pair", ep.level_pair},
          {"bracket_width", ep.bracket_width}};
}

}  // namespace euclidpt

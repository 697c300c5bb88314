#pragma once

#include <map>
#include <string>
#include <vector>

#include "euclidpt/e2_element.hpp"

namespace euclidpt {

// eta = exp(lambda J + rho u + tau v)
struct DysonParamsE2 {
  double lambda = 0.0;
  double rho = 0.0;
  double tau = 0.0;
};

E2Element adjoint_generator(const DysonParamsE2& p, Generator g);
E2Element similarity_transform(const DysonParamsE2& p, const E2Element& H);

// Real solution of coth(2 lambda) = rhs; MapUndefined for |rhs| <= 1.
double lambda_from_coth2(double rhs);

using NamedParams = std::map<std::string, double>;

struct HermitizationResult {
  PtSymmetry symmetry{};
  DysonParamsE2 params;
  Couplings constrained_mu{};
  E2Element H;
  E2Element h;
  std::vector<std::string> free_parameter_names;
  double coth_rhs = 0.0;  // NaN for PT1/PT2, which need no coth equation
  double residual = 0.0;  // max |coeff(h - h^dagger)|
  bool original_hermitian = false;
};

std::vector<std::string> hermitize_parameter_names(PtSymmetry s);
std::vector<std::string> hermitize_optional_names(PtSymmetry s);

// RHS of the coth(2 lambda) equation for PT3..PT5; throws DegenerateCouplings
// when its denominator (or mu1) vanishes.
double hermitize_coth_rhs(PtSymmetry s, const NamedParams& free);

HermitizationResult hermitize(PtSymmetry s, const NamedParams& free);

// The three-parameter PT5 family: mu1 = 1, mu2 = 0, mu5 = -2 mu4, mu6 = -2 mu3,
// mu8 = mu9 = 0.
Couplings pt5_three_param_couplings(double mu3, double mu4, double mu7);
E2Element pt5_three_param_hamiltonian(double mu3, double mu4, double mu7);

struct ThreeParamReduction {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double lambda = 0.0, rho = 0.0;
  double coth_rhs = 0.0;
  E2Element H;
  // Algebra-level image J^2 + alpha{u,J} + beta u^2 + gamma (u^2 + v^2); equals
  // J^2 + alpha{u,J} + beta u^2 + gamma on the circle, where u^2 + v^2 = 1.
  E2Element h;
};

ThreeParamReduction reduce_pt5_three_param(double mu3, double mu4, double mu7);

enum class Pt5Axis { Mu3, Mu4, Mu7 };
std::vector<double> ep_predictions_pt5(double mu3, double mu4, double mu7, Pt5Axis axis);

struct OpticalLatticeMap {
  double lambda = 0.0;
  double coth_rhs = 0.0;
  E2Element H;
  E2Element h;
};

// H = J^2 + mu7 u^2 + mu8 v^2 + i mu9 uv, the PT5 member with only these couplings.
OpticalLatticeMap optical_lattice_map(double mu7, double mu8, double mu9);

}  // namespace euclidpt

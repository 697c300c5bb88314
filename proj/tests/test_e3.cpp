#include "doctest.h"

#include <cmath>

#include "euclidpt/e3.hpp"
#include "euclidpt/serialize.hpp"
#include "oracles.hpp"

using namespace euclidpt;
using G = E3Generator;

namespace {

const std::array<G, 6> kGens{G::Pz, G::Pp, G::Pm, G::Jz, G::Jp, G::Jm};
const std::array<G, 3> kP{G::Pz, G::Pp, G::Pm};
const std::array<G, 3> kJ{G::Jz, G::Jp, G::Jm};

E3Element gen(G g) { return E3Element::generator(g); }

DysonParamsE3 random_params(double r) {
  return {oracle::uniform(-r, r), oracle::uniform(-r, r), oracle::uniform(-r, r),
          oracle::uniform(-r, r), oracle::uniform(-r, r), oracle::uniform(-r, r)};
}

// Largest deviation between the table and exp(X) G exp(-X) in the 4x4 representation.
double oracle_mismatch(const DysonParamsE3& p) {
  const oracle::E3Matrices R;
  const Eigen::Matrix4cd X = R.eta_generator(p);
  const Eigen::Matrix4cd eta = X.exp(), inv = (-X).exp();
  const E3AdjointTable t = e3_adjoint(p);
  double worst = 0.0;
  for (G g : kGens) {
    const auto ref = R.decompose(eta * R[g] * inv);
    const E3Element img = adjoint_image(t, g);
    for (int k = 0; k < 6; ++k)
      worst = std::max(worst, std::abs(ref(k) - img.linear(static_cast<G>(k))));
  }
  return worst;
}

// Table as a 6x6 matrix acting on generator coefficient vectors.
Eigen::Matrix<double, 6, 6> as_matrix(const E3AdjointTable& t) {
  Eigen::Matrix<double, 6, 6> m;
  for (G g : kGens) {
    const E3Element img = adjoint_image(t, g);
    for (int k = 0; k < 6; ++k) m(k, static_cast<int>(g)) = img.linear(static_cast<G>(k)).real();
  }
  return m;
}

}  // namespace

TEST_CASE("commutation relations") {
  CHECK(commutator(gen(G::Jp), gen(G::Jm)) == gen(G::Jz));
  CHECK(commutator(gen(G::Jp), gen(G::Pm)) == -2.0 * gen(G::Pz));
  CHECK(commutator(gen(G::Jm), gen(G::Pp)) == -2.0 * gen(G::Pz));
  for (G a : kP)
    for (G b : kP) CHECK(commutator(gen(a), gen(b)) == E3Element{});
  // The 4x4 representation obeys the same table.
  const oracle::E3Matrices R;
  for (G a : kGens)
    for (G b : kGens) {
      const Eigen::Matrix4cd lhs = R[a] * R[b] - R[b] * R[a];
      CHECK((lhs - R.of_linear(structure(a, b))).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("normal-ordered products and conjugation") {
  const E3Element a = gen(G::Jp), b = gen(G::Pz);
  CHECK(multiply(a, b) == E3Element::quadratic(G::Pz, G::Jp) + structure(G::Jp, G::Pz));
  CHECK_THROWS(multiply(E3Element::quadratic(G::Pz, G::Jz), a));
  for (G g : kGens) {
    const E3Element x = gen(g) * cplx(0.3, 0.8);
    CHECK(hermitian_conjugate(hermitian_conjugate(x)) == x);
  }
  CHECK(hermitian_conjugate(gen(G::Pp)) == -1.0 * gen(G::Pm));
  CHECK(hermitian_conjugate(gen(G::Jp)) == gen(G::Jm));
  CHECK(hermiticity_residual(gen(G::Jz) + E3Element::quadratic(G::Pz, G::Pz)) == 0.0);
  const E3Element q = E3Element::quadratic(G::Pp, G::Jm, cplx(0.2, -1.0));
  CHECK(max_abs_diff(hermitian_conjugate(hermitian_conjugate(q)), q) < 1e-15);
}

TEST_CASE("antilinear maps") {
  // PT2: J -> -J, P -> P with i -> -i; J+- = J2 +- i J3 -> -J-+.
  CHECK(e3_pt_generator_image(E3PtSymmetry::PT2, G::Jz) == -1.0 * gen(G::Jz));
  CHECK(e3_pt_generator_image(E3PtSymmetry::PT2, G::Jp) == -1.0 * gen(G::Jm));
  CHECK(e3_pt_generator_image(E3PtSymmetry::PT2, G::Pz) == gen(G::Pz));
  // PT3 keeps P+- inside span{P+, P-}.
  for (G g : {G::Pp, G::Pm}) {
    const E3Element img = e3_pt_generator_image(E3PtSymmetry::PT3, g);
    CHECK(img.linear(G::Pz) == cplx(0.0));
    for (G j : kJ) CHECK(img.linear(j) == cplx(0.0));
  }
  for (auto s : {E3PtSymmetry::PT1, E3PtSymmetry::PT2, E3PtSymmetry::PT3, E3PtSymmetry::PT4})
    for (G g : kGens) {
      const E3Element x = gen(g) * cplx(0.4, -1.3);
      CHECK(max_abs_diff(apply_pt_e3(s, apply_pt_e3(s, x)), x) < 1e-15);
    }
  CHECK(e3_pt_preserves_algebra(E3PtSymmetry::PT1));
  CHECK(e3_pt_preserves_algebra(E3PtSymmetry::PT2));
  // The P2 <-> P3 and (J1, P1, P3) sign rows are not antilinear automorphisms.
  CHECK_FALSE(e3_pt_preserves_algebra(E3PtSymmetry::PT3));
  CHECK_FALSE(e3_pt_preserves_algebra(E3PtSymmetry::PT4));
}

TEST_CASE("PT1 invariant Hamiltonian") {
  // Invariance holds on the subfamily mu1 = mu2, mu4 = mu5, mu7 = mu8, mu6 = 0.
  const E3Couplings mu{0.7, 0.7, -1.2, 0.4, 0.4, 0.0, 0.9, 0.9, 1.5};
  const E3Element H = build_h_tilde_pt1(mu);
  CHECK(max_abs_diff(apply_pt_e3(E3PtSymmetry::PT1, H), H) < 1e-14);
  const E3Couplings generic{0.7, 0.2, -1.2, 0.4, 0.1, 0.3, 0.9, -0.5, 1.5};
  CHECK(max_abs_diff(apply_pt_e3(E3PtSymmetry::PT1, build_h_tilde_pt1(generic)),
                     build_h_tilde_pt1(generic)) > 1e-3);
  CHECK(build_h_tilde_pt1(mu).linear(G::Pz) == cplx(0.0, 1.5));
}

TEST_CASE("adjoint table") {
  const E3AdjointTable id = e3_adjoint({});
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m) {
      CHECK(id.mu[l][m] == (l == m ? 1.0 : 0.0));
      CHECK(id.nu[l][m] == (l == m ? 1.0 : 0.0));
      CHECK(id.rho[l][m] == 0.0);
    }
  const double lz = 0.37;
  const E3AdjointTable t = e3_adjoint({lz, 0, 0, 0, 0, 0});
  CHECK(t.mu[1][1] == doctest::Approx(std::exp(2 * lz)).epsilon(1e-14));
  CHECK(t.mu[2][2] == doctest::Approx(std::exp(-2 * lz)).epsilon(1e-14));

  for (int trial = 0; trial < 40; ++trial) CHECK(oracle_mismatch(random_params(1.5)) < 1e-9);
  // Imaginary omega and both sides of the series switch.
  CHECK(oracle_mismatch({0.2, 1.3, -0.9, 0.4, -0.6, 0.8}) < 1e-9);
  CHECK(oracle_mismatch({1e-5, 0, 0, 0.3, 0.2, -0.1}) < 1e-12);
  CHECK(oracle_mismatch({0.999999, 0, 0, 0.3, 0.2, -0.1}) < 1e-10);
  CHECK(oracle_mismatch({1.000001, 0, 0, 0.3, 0.2, -0.1}) < 1e-10);
  CHECK(oracle_mismatch({0.0, 1.0, 1e-10, 0.5, -0.4, 0.3}) < 1e-10);
}

TEST_CASE("table group law along a one-parameter subgroup") {
  for (int trial = 0; trial < 10; ++trial) {
    const DysonParamsE3 p = random_params(0.8);
    const DysonParamsE3 p2{2 * p.lambda_z, 2 * p.lambda_plus, 2 * p.lambda_minus,
                           2 * p.kappa_z, 2 * p.kappa_plus, 2 * p.kappa_minus};
    const auto a = as_matrix(e3_adjoint(p));
    const auto b = as_matrix(e3_adjoint(p2));
    CHECK((a * a - b).cwiseAbs().maxCoeff() < 1e-9 * (1.0 + b.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("transformed Hamiltonians") {
  const E3Element cas = E3Element::quadratic(G::Pz, G::Pz) + E3Element::quadratic(G::Pp, G::Pm);
  CHECK(max_abs_diff(transform_h_tilde({0.6, 0, 0, 0, 0, 0}, cas), cas) < 1e-12);
  const E3Couplings mu{0.7, 0.7, -1.2, 0.4, 0.4, 0.0, 0.9, 0.9, 1.5};
  const E3Element H = build_h_tilde_pt1(mu);
  CHECK(max_abs_diff(transform_h_tilde({}, H), H) < 1e-15);
  // Linear part through the matrix oracle.
  const oracle::E3Matrices R;
  for (int trial = 0; trial < 10; ++trial) {
    const DysonParamsE3 p = random_params(1.0);
    const E3Element x = E3Element::generator(G::Pz, cplx(0.0, 1.5));
    const Eigen::Matrix4cd X = R.eta_generator(p);
    const Eigen::Matrix4cd ref = X.exp() * R.of_linear(x) * (-X).exp();
    CHECK((R.of_linear(transform_h_tilde(p, x)) - ref).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("table JSON") {
  const Json j = to_json(e3_adjoint({0.1, 0.2, 0.3, 0.4, 0.5, 0.6}));
  CHECK(j.contains("mu"));
  CHECK(j.contains("rho"));
  CHECK(j["mu"].size() == 9);
  CHECK(j["mu"].contains("z+"));
}

#include "doctest.h"

#include "euclidpt/errors.hpp"
#include "euclidpt/serialize.hpp"
#include "euclidpt/spectral_circle.hpp"
#include "oracles.hpp"

using namespace euclidpt;
using M = Monomial;

namespace {

const E2Element u = E2Element::u(), v = E2Element::v(), J = E2Element::J();
E2Element mono(M m, cplx c = 1.0) { return E2Element::monomial(m, c); }

Couplings random_mu() {
  Couplings mu;
  for (auto& x : mu) x = oracle::uniform(-2.0, 2.0);
  return mu;
}

}  // namespace

TEST_CASE("normal-ordered products") {
  CHECK(multiply(J, u) == mono(M::UJ) - I * v);
  CHECK(multiply(J, v) == mono(M::VJ) + I * u);
  CHECK(multiply(u, v) == mono(M::UV));
  CHECK(multiply(v, u) == mono(M::UV));
  CHECK(multiply(u + I * J, J) == mono(M::UJ) + I * mono(M::JJ));
  CHECK_THROWS_AS(multiply(u, mono(M::UV)), DegreeOverflow);
  CHECK_THROWS_AS(multiply(mono(M::JJ), J), DegreeOverflow);
  CHECK(multiply(E2Element::scalar(2.0), mono(M::JJ)) == mono(M::JJ, 2.0));
}

TEST_CASE("commutators of generators follow the Leibniz-extended structure constants") {
  const std::array<E2Element, 4> basis{E2Element::scalar(1.0), u, v, J};
  // [J, u] = -i v, [J, v] = i u, [u, v] = 0
  auto expected = [&](int a, int b) -> E2Element {
    if (a == 0 || b == 0 || a == b) return {};
    if (a == 3 && b == 1) return -I * v;
    if (a == 3 && b == 2) return I * u;
    if (a == 1 && b == 3) return I * v;
    if (a == 2 && b == 3) return -I * u;
    return {};
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(max_abs_diff(commutator(basis[a], basis[b]), expected(a, b)) == 0.0);
}

TEST_CASE("products agree with the truncated Fourier matrices on the interior block") {
  const oracle::Fourier F(32);
  for (int trial = 0; trial < 20; ++trial) {
    const E2Element a = oracle::random_element(1), b = oracle::random_element(1);
    const auto lhs = F.interior(F.of(multiply(a, b)), 2);
    const auto rhs = F.interior(F.of(a) * F.of(b), 2);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
  const auto lhs = F.interior(F.of(multiply(u + I * J, J)), 2);
  const auto rhs = F.interior(F.of(u + I * J) * F.of(J), 2);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("build_matrix matches the Fourier oracle") {
  for (double s : {0.0, 1.0, 0.37}) {
    const oracle::Fourier F(16, s);
    const E2Element a = oracle::random_element(2);
    const auto M1 = build_matrix({a, s, 16});
    CHECK((F.interior(M1, 2) - F.interior(F.of(a), 2)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hermitian conjugation") {
  CHECK(hermitian_conjugate(I * u) == -I * u);
  CHECK(hermitian_conjugate(mono(M::UJ)) == mono(M::UJ) - I * v);
  CHECK(hermitian_conjugate(mono(M::VJ)) == mono(M::VJ) + I * u);
  for (std::size_t i = 0; i < kE2BasisSize; ++i) {
    const E2Element m = mono(static_cast<M>(i), cplx(0.3, -1.7));
    CHECK(max_abs_diff(hermitian_conjugate(hermitian_conjugate(m)), m) < 1e-15);
  }
  // Conjugation matches the adjoint of the Fourier matrix.
  const oracle::Fourier F(20);
  const E2Element a = oracle::random_element(2);
  const auto lhs = F.interior(F.of(hermitian_conjugate(a)), 3);
  const auto rhs = F.interior(F.of(a).adjoint(), 3);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("hermiticity tests") {
  CHECK(is_hermitian(mono(M::JJ) + mono(M::UV), 0.0));
  CHECK_FALSE(is_hermitian(mono(M::JJ) + I * v, 1e-12));
  // H_PT1 with mu2 = 0, mu5 = -2 mu4, mu6 = 2 mu3 is Hermitian.
  for (int trial = 0; trial < 10; ++trial) {
    Couplings mu = random_mu();
    mu[1] = 0.0;
    mu[4] = -2.0 * mu[3];
    mu[5] = 2.0 * mu[2];
    CHECK(hermiticity_residual(build_hamiltonian(PtSymmetry::PT1, mu)) < 1e-14);
  }
  Couplings mu = random_mu();
  mu[1] = 0.5;
  CHECK_FALSE(is_hermitian(build_hamiltonian(PtSymmetry::PT1, mu), 1e-12));
}

TEST_CASE("antilinear maps") {
  CHECK(apply_pt(PtSymmetry::PT1, I * 0.7 * v) == I * 0.7 * v);
  CHECK(apply_pt(PtSymmetry::PT5, v) == -v);
  CHECK(apply_pt(PtSymmetry::PT5, I * v) == I * v);
  CHECK(apply_pt(PtSymmetry::PT3, mono(M::UJ, cplx(2.0, 1.0))) == mono(M::VJ, cplx(2.0, -1.0)));
  for (PtSymmetry s : kAllPtSymmetries) {
    CAPTURE(to_string(s));
    for (int trial = 0; trial < 10; ++trial) {
      const E2Element a = oracle::random_element(2);
      CHECK(max_abs_diff(apply_pt(s, apply_pt(s, a)), a) < 1e-14);
      const E2Element H = build_hamiltonian(s, random_mu());
      CHECK(max_abs_diff(apply_pt(s, H), H) < 1e-14);
      // Antilinear automorphism of the algebra.
      const E2Element x = oracle::random_element(1), y = oracle::random_element(1);
      CHECK(max_abs_diff(apply_pt(s, commutator(x, y)),
                         commutator(apply_pt(s, x), apply_pt(s, y))) < 1e-14);
    }
  }
  CHECK_THROWS_AS(parse_pt_symmetry("PT6"), ConfigError);
}

TEST_CASE("Hamiltonian displays") {
  Couplings mu{1, 0, 0, 1, 0, 0, 0, 0, 0};
  CHECK(build_hamiltonian(PtSymmetry::PT1, mu) == mono(M::JJ) + I * v);
  const double q = 0.35;
  mu = {1, 0, 0, 0, 0, 0, 2 * q, 0, 0};
  CHECK(build_hamiltonian(PtSymmetry::PT5, mu) == mono(M::JJ) + mono(M::UU, 2 * q));
  CHECK(max_abs_diff(build_hamiltonian(PtSymmetry::PT3, mu),
                     mono(M::JJ) + 2.0 * I * q * (mono(M::VV) - mono(M::UU))) < 1e-15);
}

TEST_CASE("JSON round trip is exact") {
  for (int trial = 0; trial < 10; ++trial) {
    const E2Element a = oracle::random_element(2) * cplx(1.0 / 3.0, 1e-7);
    const Json j = to_json(a);
    CHECK(j["basis"] == "u,v,J-normal");
    CHECK(e2_from_json(Json::parse(j.dump())) == a);
  }
  CHECK_THROWS_AS(e2_from_json(Json::parse(R"({"basis":"x","coeffs":[]})")), ConfigError);
}

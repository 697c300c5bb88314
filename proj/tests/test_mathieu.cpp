#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "euclidpt/dyson_e2.hpp"
#include "euclidpt/mathieu.hpp"
#include "euclidpt/spectral_circle.hpp"
#include "euclidpt/wavefunction.hpp"
#include "oracles.hpp"

using namespace euclidpt;

namespace {

const MathieuClass kEvenPi{MathieuParity::Even, MathieuPeriod::Pi};
const MathieuClass kOddPi{MathieuParity::Odd, MathieuPeriod::Pi};
const MathieuClass kEven2Pi{MathieuParity::Even, MathieuPeriod::TwoPi};
const MathieuClass kOdd2Pi{MathieuParity::Odd, MathieuPeriod::TwoPi};

}  // namespace

TEST_CASE("characteristic values at q = 0 and q = 1") {
  const auto a = characteristic_values(0.0, kEvenPi, 4, 20);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(a[k] - cplx(4.0 * k * k)) < 1e-12);
  const auto b = characteristic_values(0.0, kOdd2Pi, 3, 20);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(b[k] - cplx((2 * k + 1) * (2 * k + 1))) < 1e-12);
  // a0(1) from the recurrence, cross-checked by shooting: the even solution
  // with that a has zero derivative at z = pi/2.
  const cplx a0 = characteristic_values(1.0, kEvenPi, 1, 60)[0];
  CHECK(a0.real() == doctest::Approx(-0.4551386).epsilon(1e-7));
  const double h = 1e-4;
  const std::vector<double> z{M_PI / 2 - h, M_PI / 2 + h};
  const auto y = mathieu_cs(a0, 1.0, MathieuParity::Even, z);
  CHECK(std::abs((y[1] - y[0]) / (2 * h)) < 1e-6);
  CHECK(parse_mathieu_class("odd-2pi") == kOdd2Pi);
  CHECK(mathieu_order(kOddPi, 0) == 2);
  CHECK(mathieu_order(kEven2Pi, 1) == 3);
}

TEST_CASE("real q: real values in the standard interlacing order") {
  for (double q : {0.3, 1.0, 2.5, 5.0}) {
    CAPTURE(q);
    const auto a0 = characteristic_values(q, kEvenPi, 4, 40);
    const auto a1 = characteristic_values(q, kEven2Pi, 4, 40);
    const auto b1 = characteristic_values(q, kOdd2Pi, 4, 40);
    const auto b2 = characteristic_values(q, kOddPi, 4, 40);
    std::vector<double> order;
    for (int n = 0; n < 3; ++n) {
      for (const auto* v : {&a0, &b1, &a1, &b2}) CHECK(std::abs((*v)[n].imag()) < 1e-10);
      order.insert(order.end(), {a0[n].real(), b1[n].real(), a1[n].real(), b2[n].real()});
    }
    CHECK(std::is_sorted(order.begin(), order.end()));
  }
}

TEST_CASE("imaginary q: real values or conjugate pairs; convergence in trunc") {
  for (double t : {0.5, 1.8, 6.0}) {
    for (const auto& c : {kEvenPi, kOddPi, kEven2Pi, kOdd2Pi}) {
      const auto v = characteristic_values(cplx(0, t), c, 6, 40);
      const auto w = characteristic_values(cplx(0, t), c, 6, 80);
      for (int k = 0; k < 6; ++k) {
        double conv = 1e9;
        for (cplx x : w) conv = std::min(conv, std::abs(x - v[k]));
        CHECK(conv < 1e-10);
        if (std::abs(v[k].imag()) < 1e-10) continue;
        double best = 1e9;
        // For 2pi-periodic classes conjugation swaps parity (a(-q) = b(q) for odd orders).
        for (const auto& d : {c, MathieuClass{c.parity == MathieuParity::Even ? MathieuParity::Odd
                                                                                 : MathieuParity::Even,
                                             c.period}}) {
          if (d.parity != c.parity && c.period == MathieuPeriod::Pi) continue;
          for (cplx x : characteristic_values(cplx(0, t), d, 8, 40))
            best = std::min(best, std::abs(x - std::conj(v[k])));
        }
        CHECK(best < 1e-10);
      }
    }
  }
}

TEST_CASE("periodic Mathieu functions") {
  const auto z = uniform_grid(-3.0, 3.0, 31);
  const auto c = mathieu_function(0.0, 4.0, kEvenPi, z);
  const cplx scale = c[15];  // z = 0
  for (std::size_t i = 0; i < z.size(); ++i)
    CHECK(std::abs(c[i] - scale * std::cos(2 * z[i])) < 1e-12);
  const cplx q(0.4, 0.7);
  const auto a = characteristic_values(q, kOdd2Pi, 3, 40);
  const auto s = mathieu_function(q, a[1], MathieuParity::Odd, z);
  for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(s[i] + s[30 - i]) < 1e-12);
  // Periodic function solves y'' + (a - 2 q cos 2z) y = 0.
  const MathieuMode m = mathieu_mode(q, kOdd2Pi, 1, 40);
  for (double x : {0.2, 1.1, 2.9}) {
    const cplx y2 = oracle::d2([&](double t) { return m(t); }, x, 1e-3);
    CHECK(std::abs(y2 + (m.a - 2.0 * q * std::cos(2 * x)) * m(x)) < 1e-7);
    CHECK(std::abs(m.derivative(x) - oracle::d1([&](double t) { return m(t); }, x, 1e-3)) < 1e-8);
  }
}

TEST_CASE("three-parameter solution through the Mathieu equation") {
  const double mu3 = 0.5, mu4 = 0.7, mu7 = 0.0;
  const auto r = reduce_pt5_three_param(mu3, mu4, mu7);
  const double q = (r.alpha * r.alpha - r.beta) / 4.0;
  const double E = 1.37;  // arbitrary: the local equation holds for any E
  const double a = E + (r.alpha * r.alpha - r.beta) / 2.0 - r.gamma;
  auto psi = [&](double t) {
    const double z[] = {t};
    return std::exp(cplx(0.0, r.alpha * std::cos(t))) *
           mathieu_cs(a, q, MathieuParity::Even, z)[0];
  };
  for (double x : {0.4, 1.3, 2.2, 3.0}) {
    const cplx lhs = oracle::apply_fd(r.h, psi, x);
    CHECK(std::abs(lhs - E * psi(x)) < 1e-6);
  }
  // Bosonic spectrum: characteristic values of all four classes shifted back.
  for (int trial = 0; trial < 5; ++trial) {
    const double m3 = oracle::uniform(0.2, 0.9), m4 = oracle::uniform(0.2, 0.9);
    const double m7 = oracle::uniform(-0.5, -0.1);
    CAPTURE(m3);
    CAPTURE(m4);
    CAPTURE(m7);
    const auto rr = reduce_pt5_three_param(m3, m4, m7);
    const double qq = (rr.alpha * rr.alpha - rr.beta) / 4.0;
    std::vector<double> mathieu;
    for (const auto& c : {kEvenPi, kOddPi, kEven2Pi, kOdd2Pi})
      for (cplx v : characteristic_values(qq, c, 4, 40))
        mathieu.push_back(v.real() - (rr.alpha * rr.alpha - rr.beta) / 2.0 + rr.gamma);
    std::sort(mathieu.begin(), mathieu.end());
    const Spectrum sp = eigen_spectrum({pt5_three_param_hamiltonian(m3, m4, m7), 0.0, 64});
    for (int k = 0; k < 9; ++k) CHECK(std::abs(sp.eigenvalues[k] - mathieu[k]) < 1e-6);
  }
  const auto frame = pt5_three_param_mathieu_frame(mu3, mu4, mu7);
  CHECK(std::abs(frame.q - q) < 1e-12);
}

TEST_CASE("complex Mathieu family") {
  const double mu4 = 0.9, mu6 = 0.35;
  const E2Element H = pt5_complex_mathieu_hamiltonian(mu4, mu6);
  CHECK(max_abs_diff(apply_pt(PtSymmetry::PT5, H), H) < 1e-15);
  // Any E: local solution.
  auto psi = [&](double t) {
    const double th[] = {t};
    return pt5_complex_solution(mu4, mu6, 0.83, th, 1.0, 0.4)[0];
  };
  for (double x : {0.5, 2.0, 4.4}) CHECK(std::abs(oracle::apply_fd(H, psi, x) - 0.83 * psi(x)) < 1e-6);
  // mu4 = mu6 = 0 is the free particle: plane waves with E = n^2 from a = 4 n^2.
  const auto e0 = pt5_complex_bosonic_energies(0.0, MathieuParity::Even, 3);
  for (int n = 0; n < 3; ++n) CHECK(std::abs(e0[n] - cplx(n * n)) < 1e-12);
  // Quantized energies agree with the direct spectrum.
  std::vector<cplx> quant = pt5_complex_bosonic_energies(mu4, MathieuParity::Even, 5);
  const auto odd = pt5_complex_bosonic_energies(mu4, MathieuParity::Odd, 5);
  quant.insert(quant.end(), odd.begin(), odd.end());
  const Spectrum sp = eigen_spectrum({pt5_complex_mathieu_hamiltonian(mu4, 0.0), 0.0, 64});
  for (cplx e : quant) {
    double best = 1e9;
    for (std::size_t k = 0; k < sp.trusted; ++k) best = std::min(best, std::abs(sp.eigenvalues[k] - e));
    CHECK(best < 1e-6);
  }
  // The even bosonic solution with a quantized energy is 2 pi periodic.
  const double E = quant[1].real();
  const double th[] = {0.3, 0.3 + 2 * M_PI};
  const auto p = pt5_complex_solution(mu4, mu6, E, th);
  CHECK(std::abs(p[0] - p[1]) < 1e-7 * std::abs(p[0]));
}

TEST_CASE("exceptional points along q = i t") {
  const auto eps = complex_mathieu_eps(3.0, kEvenPi);
  REQUIRE(eps.size() >= 1);
  CHECK(eps[0].t == doctest::Approx(1.4687686).epsilon(1e-6));
  CHECK(eps[0].lower_index == 0);
  CHECK(eps[0].bracket_width <= 1e-9);
  // Just below, the even bosonic energies are real.
  const auto below = pt5_complex_bosonic_energies(eps[0].t - 1e-4, MathieuParity::Even, 6);
  for (cplx e : below) CHECK(std::abs(e.imag()) < 1e-8);
  // The direct spectrum of the H-frame Hamiltonian merges at the same point.
  const Spectrum before = eigen_spectrum({pt5_complex_mathieu_hamiltonian(eps[0].t - 1e-3, 0.0), 0.0, 48});
  const Spectrum after = eigen_spectrum({pt5_complex_mathieu_hamiltonian(eps[0].t + 1e-3, 0.0), 0.0, 48});
  CHECK(before.all_real(6));
  CHECK_FALSE(after.all_real(6));
}

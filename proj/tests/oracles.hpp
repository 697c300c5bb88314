#pragma once

// Independent reference implementations used only by the tests.

#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "euclidpt/e2_element.hpp"
#include "euclidpt/e3.hpp"

namespace oracle {

using euclidpt::cplx;
using Mat = Eigen::MatrixXcd;

// Circle representation on modes n = -N..N (sector 0): J = -i d/dtheta,
// u = sin theta, v = cos theta.
struct Fourier {
  int N;
  Mat J, u, v, one;

  explicit Fourier(int n, double sector = 0.0) : N(n) {
    const int d = 2 * N + 1;
    J = Mat::Zero(d, d);
    u = Mat::Zero(d, d);
    v = Mat::Zero(d, d);
    one = Mat::Identity(d, d);
    for (int i = 0; i < d; ++i) {
      J(i, i) = (i - N) + sector / 2.0;
      if (i + 1 < d) {
        u(i + 1, i) = cplx(0.0, -0.5);  // e^{i theta}/(2i)
        u(i, i + 1) = cplx(0.0, 0.5);
        v(i + 1, i) = 0.5;
        v(i, i + 1) = 0.5;
      }
    }
  }

  Mat of(const euclidpt::E2Element& a) const {
    using M = euclidpt::Monomial;
    return a[M::One] * one + a[M::U] * u + a[M::V] * v + a[M::J] * J + a[M::UU] * u * u +
           a[M::VV] * v * v + a[M::UV] * u * v + a[M::UJ] * u * J + a[M::VJ] * v * J +
           a[M::JJ] * J * J;
  }

  // Rows/cols with |n| <= N - margin.
  Mat interior(const Mat& m, int margin) const {
    const int k = 2 * (N - margin) + 1;
    return m.block(margin, margin, k, k);
  }
};

// Faithful 3x3 representation of the Lie algebra: J = i L, u = Tx, v = -Ty.
struct E2Matrices {
  Eigen::Matrix3cd J, u, v;
  E2Matrices() {
    J.setZero();
    u.setZero();
    v.setZero();
    J(0, 1) = cplx(0.0, -1.0);
    J(1, 0) = cplx(0.0, 1.0);
    u(0, 2) = 1.0;
    v(1, 2) = -1.0;
  }
  Eigen::Matrix3cd of_linear(const euclidpt::E2Element& a) const {
    using M = euclidpt::Monomial;
    return a[M::One] * Eigen::Matrix3cd::Identity() + a[M::U] * u + a[M::V] * v + a[M::J] * J;
  }
};

// 4x4 representation of E3: J_j = i L_j with (L_j)_ab = -eps_jab, P_j = i E_{j,4};
// Jz = 2 J1, J+- = J2 +- i J3, Pz = P1, P+- = +-P2 + i P3.
struct E3Matrices {
  std::array<Eigen::Matrix4cd, 6> g;  // indexed by E3Generator

  E3Matrices() {
    auto eps = [](int a, int b, int c) {
      return static_cast<double>((a - b) * (b - c) * (c - a)) / 2.0;
    };
    std::array<Eigen::Matrix4cd, 3> Jc, Pc;
    for (int j = 0; j < 3; ++j) {
      Jc[j].setZero();
      Pc[j].setZero();
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) Jc[j](a, b) = cplx(0.0, -eps(j, a, b));
      Pc[j](j, 3) = cplx(0.0, 1.0);
    }
    const cplx i(0.0, 1.0);
    using G = euclidpt::E3Generator;
    g[static_cast<int>(G::Jz)] = 2.0 * Jc[0];
    g[static_cast<int>(G::Jp)] = Jc[1] + i * Jc[2];
    g[static_cast<int>(G::Jm)] = Jc[1] - i * Jc[2];
    g[static_cast<int>(G::Pz)] = Pc[0];
    g[static_cast<int>(G::Pp)] = Pc[1] + i * Pc[2];
    g[static_cast<int>(G::Pm)] = -Pc[1] + i * Pc[2];
  }

  const Eigen::Matrix4cd& operator[](euclidpt::E3Generator x) const {
    return g[static_cast<int>(x)];
  }

  Eigen::Matrix4cd of_linear(const euclidpt::E3Element& a) const {
    Eigen::Matrix4cd m = a.scalar_part() * Eigen::Matrix4cd::Identity();
    for (int k = 0; k < 6; ++k) m += a.linear(static_cast<euclidpt::E3Generator>(k)) * g[k];
    return m;
  }

  // Coefficients of m on the six generators (least squares over the 16 entries).
  Eigen::Matrix<cplx, 6, 1> decompose(const Eigen::Matrix4cd& m) const {
    Eigen::Matrix<cplx, 16, 6> A;
    for (int k = 0; k < 6; ++k) A.col(k) = Eigen::Map<const Eigen::Matrix<cplx, 16, 1>>(g[k].data());
    Eigen::Map<const Eigen::Matrix<cplx, 16, 1>> b(m.data());
    return A.colPivHouseholderQr().solve(b);
  }

  Eigen::Matrix4cd eta_generator(const euclidpt::DysonParamsE3& p) const {
    using G = euclidpt::E3Generator;
    return p.lambda_z * (*this)[G::Jz] + p.lambda_plus * (*this)[G::Jp] +
           p.lambda_minus * (*this)[G::Jm] + p.kappa_z * (*this)[G::Pz] +
           p.kappa_plus * (*this)[G::Pp] + p.kappa_minus * (*this)[G::Pm];
  }
};

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline cplx random_cplx(double r = 1.0) { return {uniform(-r, r), uniform(-r, r)}; }

inline euclidpt::E2Element random_element(int max_degree) {
  euclidpt::E2Element a;
  for (std::size_t i = 0; i < euclidpt::kE2BasisSize; ++i) {
    const auto m = static_cast<euclidpt::Monomial>(i);
    if (euclidpt::exponents(m).degree() <= max_degree) a = a.with(m, random_cplx());
  }
  return a;
}

// Central differences of order 4 for psi' and psi''.
template <class F>
cplx d1(F&& f, double x, double h) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}
template <class F>
cplx d2(F&& f, double x, double h) {
  return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h * h);
}

// (a psi)(theta) in the circle representation, by finite differences.
template <class F>
cplx apply_fd(const euclidpt::E2Element& a, F&& f, double x, double h = 1e-3) {
  using M = euclidpt::Monomial;
  const double s = std::sin(x), c = std::cos(x);
  const cplx p0 = f(x), jp = cplx(0.0, -1.0) * d1(f, x, h), jjp = -d2(f, x, h);
  return a[M::One] * p0 + a[M::U] * s * p0 + a[M::V] * c * p0 + a[M::J] * jp +
         a[M::UU] * s * s * p0 + a[M::VV] * c * c * p0 + a[M::UV] * s * c * p0 +
         a[M::UJ] * s * jp + a[M::VJ] * c * jp + a[M::JJ] * jjp;
}

}  // namespace oracle

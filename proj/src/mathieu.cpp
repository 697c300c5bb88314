#include "euclidpt/mathieu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "euclidpt/errors.hpp"
#include "euclidpt/linalg.hpp"

namespace euclidpt {
namespace {

bool is_pi_class(const MathieuClass& c) { return c.period == MathieuPeriod::Pi; }

bool less_by_real(cplx x, cplx y) {
  return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

struct SortedEigen {
  std::vector<cplx> values;
  Eigen::MatrixXcd vectors;  // columns in the unscaled coefficient basis
};

// Pure imaginary q on a pi class: diag(i^m) conjugation makes the matrix real,
// so eigenvalues come out as exact conjugate pairs.
SortedEigen solve_class(cplx q, const MathieuClass& c, int trunc, bool want_vectors) {
  const Eigen::MatrixXcd m = mathieu_recurrence(q, c, trunc);
  EigenDecomposition dec;
  Eigen::VectorXcd scale;
  if (q.imag() == 0.0) {
    dec = eigen_general(Eigen::MatrixXd(m.real()), want_vectors);
  } else if (q.real() == 0.0 && is_pi_class(c)) {
    scale.resize(trunc);
    for (int k = 0; k < trunc; ++k) scale[k] = std::pow(I, k);
    const Eigen::MatrixXcd r = scale.conjugate().asDiagonal() * m * scale.asDiagonal();
    dec = eigen_general(Eigen::MatrixXd(r.real()), want_vectors);
  } else {
    dec = eigen_general(m, want_vectors);
  }
  std::vector<int> order(trunc);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return less_by_real(dec.values[x], dec.values[y]); });
  SortedEigen out;
  for (int k : order) out.values.push_back(dec.values[k]);
  if (want_vectors) {
    out.vectors.resize(trunc, trunc);
    for (int k = 0; k < trunc; ++k) {
      Eigen::VectorXcd v = dec.vectors.col(order[k]);
      if (scale.size() > 0) v = scale.asDiagonal() * v;
      out.vectors.col(k) = v;
    }
  }
  return out;
}

int auto_trunc(cplx q, int index) {
  return 40 + 2 * index + static_cast<int>(6.0 * std::sqrt(std::abs(q)));
}

cplx synth(const MathieuMode& mode, double z, bool derivative) {
  const bool even = mode.cls.parity == MathieuParity::Even;
  cplx acc{};
  for (std::size_t m = 0; m < mode.coeffs.size(); ++m) {
    const double r = mathieu_order(mode.cls, static_cast<int>(m));
    double f;
    if (!derivative)
      f = even ? std::cos(r * z) : std::sin(r * z);
    else
      f = even ? -r * std::sin(r * z) : r * std::cos(r * z);
    acc += mode.coeffs[m] * f;
  }
  return acc;
}

}  // namespace

MathieuClass parse_mathieu_class(std::string_view text) {
  if (text == "even-pi") return {MathieuParity::Even, MathieuPeriod::Pi};
  if (text == "odd-pi") return {MathieuParity::Odd, MathieuPeriod::Pi};
  if (text == "even-2pi") return {MathieuParity::Even, MathieuPeriod::TwoPi};
  if (text == "odd-2pi") return {MathieuParity::Odd, MathieuPeriod::TwoPi};
  throw ConfigError("unknown Mathieu class '" + std::string(text) + "'");
}

std::string to_string(const MathieuClass& c) {
  return std::string(c.parity == MathieuParity::Even ? "even" : "odd") +
         (c.period == MathieuPeriod::Pi ? "-pi" : "-2pi");
}

int mathieu_order(const MathieuClass& c, int index) {
  if (c.period == MathieuPeriod::TwoPi) return 2 * index + 1;
  return c.parity == MathieuParity::Even ? 2 * index : 2 * index + 2;
}

Eigen::MatrixXcd mathieu_recurrence(cplx q, const MathieuClass& c, int trunc) {
  if (trunc < 2) throw std::invalid_argument("Mathieu truncation too small");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(trunc, trunc);
  for (int k = 0; k < trunc; ++k) {
    const double r = mathieu_order(c, k);
    m(k, k) = r * r;
    if (k + 1 < trunc) m(k, k + 1) = m(k + 1, k) = q;
  }
  if (c == MathieuClass{MathieuParity::Even, MathieuPeriod::Pi}) m(1, 0) = 2.0 * q;
  if (c.period == MathieuPeriod::TwoPi) m(0, 0) += c.parity == MathieuParity::Even ? q : -q;
  return m;
}

std::vector<cplx> characteristic_values(cplx q, const MathieuClass& c, int count, int trunc) {
  if (count < 1 || trunc < count + 8)
    throw std::invalid_argument("characteristic_values needs trunc >= count + 8");
  const auto coarse = solve_class(q, c, trunc, false).values;
  const auto fine = solve_class(q, c, 2 * trunc, false).values;
  std::vector<cplx> out(coarse.begin(), coarse.begin() + count);
  for (int k = 0; k < count; ++k) {
    double nearest = std::abs(fine[k] - out[k]);
    for (int j = std::max(0, k - 2); j < std::min<int>(fine.size(), k + 3); ++j)
      nearest = std::min(nearest, std::abs(fine[j] - out[k]));
    // Near a collision eigenvalues are only sqrt(eps) accurate.
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < static_cast<int>(coarse.size()); ++j)
      if (j != k) gap = std::min(gap, std::abs(coarse[j] - out[k]));
    const double scale = std::max(1.0, std::abs(out[k]));
    const double tol = gap < 1e-4 * scale ? 1e-6 * scale : 1e-10 * scale;
    if (nearest > tol)
      throw ConvergenceFailure("characteristic value " + std::to_string(k) +
                               " not converged at truncation " + std::to_string(trunc));
  }
  return out;
}

cplx MathieuMode::operator()(double z) const { return synth(*this, z, false); }
cplx MathieuMode::derivative(double z) const { return synth(*this, z, true); }

MathieuMode mathieu_mode(cplx q, const MathieuClass& c, int index, int trunc) {
  if (trunc <= 0) trunc = auto_trunc(q, index);
  if (index < 0 || index + 8 > trunc) throw std::invalid_argument("Mathieu index out of range");
  const SortedEigen se = solve_class(q, c, trunc, true);
  MathieuMode mode;
  mode.cls = c;
  mode.index = index;
  mode.a = se.values[index];
  Eigen::VectorXcd v = se.vectors.col(index);
  double norm2 = 0.0;
  for (int m = 0; m < trunc; ++m)
    norm2 += std::norm(v[m]) * (mathieu_order(c, m) == 0 ? 2.0 * M_PI : M_PI);
  v /= std::sqrt(norm2);
  Eigen::Index lead = index;
  if (std::abs(v[lead]) < 1e-3 * v.cwiseAbs().maxCoeff()) v.cwiseAbs().maxCoeff(&lead);
  v *= std::abs(v[lead]) / v[lead];
  mode.coeffs.assign(v.data(), v.data() + v.size());
  return mode;
}

std::vector<cplx> mathieu_function(cplx q, cplx a, const MathieuClass& c,
                                   std::span<const double> z, int trunc) {
  if (trunc <= 0) trunc = auto_trunc(q, static_cast<int>(std::sqrt(std::abs(a))) + 2);
  const SortedEigen se = solve_class(q, c, trunc, false);
  int best = 0;
  for (int k = 1; k < trunc; ++k)
    if (std::abs(se.values[k] - a) < std::abs(se.values[best] - a)) best = k;
  const MathieuMode mode = mathieu_mode(q, c, best, trunc);
  std::vector<cplx> out;
  out.reserve(z.size());
  for (double x : z) out.push_back(mode(x));
  return out;
}

std::vector<cplx> mathieu_function(cplx q, cplx a, MathieuParity parity,
                                   std::span<const double> z, int trunc) {
  const MathieuClass pi{parity, MathieuPeriod::Pi}, two_pi{parity, MathieuPeriod::TwoPi};
  if (trunc <= 0) trunc = auto_trunc(q, static_cast<int>(std::sqrt(std::abs(a))) + 2);
  auto dist = [&](const MathieuClass& c) {
    double d = std::numeric_limits<double>::infinity();
    for (cplx v : solve_class(q, c, trunc, false).values) d = std::min(d, std::abs(v - a));
    return d;
  };
  return mathieu_function(q, a, dist(pi) <= dist(two_pi) ? pi : two_pi, z, trunc);
}

std::vector<cplx> mathieu_cs(cplx a, cplx q, MathieuParity parity, std::span<const double> z) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<cplx, 2>;
  auto rhs = [&](const State& y, State& dy, double x) {
    dy[0] = y[1];
    dy[1] = (2.0 * q * std::cos(2.0 * x) - a) * y[0];
  };
  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return std::abs(z[i]) < std::abs(z[j]); });
  const bool even = parity == MathieuParity::Even;
  State y = even ? State{1.0, 0.0} : State{0.0, 1.0};
  auto stepper = ode::make_controlled(1e-13, 1e-13, ode::runge_kutta_dopri5<State>());
  std::vector<cplx> out(z.size());
  double x = 0.0;
  for (std::size_t i : order) {
    const double target = std::abs(z[i]);
    if (target > x) {
      ode::integrate_adaptive(stepper, rhs, y, x, target, std::min(1e-2, target - x));
      x = target;
    }
    out[i] = (!even && z[i] < 0.0) ? -y[0] : y[0];
  }
  return out;
}

std::vector<MathieuEp> complex_mathieu_eps(double max_q, const MathieuClass& c,
                                           const MathieuEpOptions& opt) {
  if (!(max_q > 0.0)) throw std::invalid_argument("max_q must be positive");
  const int trunc = opt.trunc > 0 ? opt.trunc
                                  : std::max(opt.count + 30, 40 + static_cast<int>(2.0 * max_q));
  auto lowest = [&](double t) {
    auto v = solve_class(cplx(0.0, t), c, trunc, false).values;
    v.resize(opt.count);
    return v;
  };
  auto complex_count = [&](const std::vector<cplx>& v) {
    int n = 0;
    for (cplx e : v)
      if (std::abs(e.imag()) > opt.reality_rtol * std::max(1.0, std::abs(e.real()))) ++n;
    return n;
  };

  std::vector<MathieuEp> eps;
  double t_prev = 0.0;
  int n_prev = complex_count(lowest(0.0));
  const int steps = std::max(1, static_cast<int>(std::ceil(max_q / opt.step)));
  for (int i = 1; i <= steps; ++i) {
    const double t = max_q * i / steps;
    const int n = complex_count(lowest(t));
    if (n > n_prev) {
      double lo = t_prev, hi = t;
      while (hi - lo > opt.tol) {
        const double mid = 0.5 * (lo + hi);
        (complex_count(lowest(mid)) > n_prev ? hi : lo) = mid;
      }
      const auto v = lowest(hi);
      // The newest pair has the smallest imaginary part.
      int pick = -1;
      for (int k = 0; k < static_cast<int>(v.size()); ++k) {
        if (!(v[k].imag() > opt.reality_rtol * std::max(1.0, std::abs(v[k].real())))) continue;
        if (pick < 0 || v[k].imag() < v[pick].imag()) pick = k;
      }
      int partner = -1;
      for (int k = 0; pick >= 0 && k < static_cast<int>(v.size()); ++k)
        if (k != pick && (partner < 0 || std::abs(v[k] - std::conj(v[pick])) <
                                             std::abs(v[partner] - std::conj(v[pick]))))
          partner = k;
      // Skip pairs whose partner lies beyond the watched window.
      if (partner >= 0 &&
          std::abs(v[partner] - std::conj(v[pick])) <= 1e-6 * std::max(1.0, std::abs(v[pick]))) {
        MathieuEp ep;
        ep.t = 0.5 * (lo + hi);
        ep.a_merge = v[pick].real();
        ep.lower_index = std::min(pick, partner);
        ep.bracket_width = hi - lo;
        eps.push_back(ep);
      }
    }
    n_prev = n;
    t_prev = t;
  }
  return eps;
}

Couplings pt5_complex_mathieu_couplings(double mu4, double mu6) {
  return {1.0, 0.0, -0.5 * mu6, mu4, -mu4, mu6, 0.25 * mu4 * mu4, -0.25 * mu6 * mu6,
          -0.5 * mu4 * mu6};
}

E2Element pt5_complex_mathieu_hamiltonian(double mu4, double mu6) {
  return build_hamiltonian(PtSymmetry::PT5, pt5_complex_mathieu_couplings(mu4, mu6));
}

std::vector<cplx> pt5_complex_solution(double mu4, double mu6, double E,
                                       std::span<const double> theta, cplx c1, cplx c2) {
  std::vector<double> z(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) z[i] = 0.5 * theta[i];
  const cplx q(0.0, mu4);
  std::vector<cplx> ev(theta.size(), cplx{}), od(theta.size(), cplx{});
  if (c1 != cplx{}) ev = mathieu_cs(4.0 * E, q, MathieuParity::Even, z);
  if (c2 != cplx{}) od = mathieu_cs(4.0 * E, q, MathieuParity::Odd, z);
  std::vector<cplx> out(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const cplx pref =
        std::exp(cplx(0.5 * mu6 * std::sin(theta[i]), -0.5 * mu4 * std::cos(theta[i])));
    out[i] = pref * (c1 * ev[i] + c2 * od[i]);
  }
  return out;
}

std::vector<cplx> pt5_complex_bosonic_energies(double mu4, MathieuParity parity, int count,
                                               int trunc) {
  auto a = characteristic_values(cplx(0.0, mu4), {parity, MathieuPeriod::Pi}, count,
                                 std::max(trunc, count + 8));
  for (auto& x : a) x *= 0.25;
  return a;
}

E2Element MathieuFrame::element() const {
  return E2Element::monomial(Monomial::JJ) + E2Element::scalar(A) +
         (E2Element::monomial(Monomial::VV) - E2Element::monomial(Monomial::UU)) * (2.0 * q);
}

MathieuFrame pt5_three_param_mathieu_frame(double mu3, double mu4, double mu7) {
  const double B = 0.5 * (mu3 * mu3 + mu4 * mu4 - mu7);
  MathieuFrame f;
  f.A = 0.5 * (mu3 * mu3 + mu7 - mu4 * mu4);
  f.q = 0.5 * std::sqrt(cplx(B * B - mu3 * mu3 * mu4 * mu4));
  return f;
}

}  // namespace euclidpt

#include "euclidpt/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "euclidpt/mathieu.hpp"

namespace euclidpt {
namespace {

constexpr int kQuadraturePoints = 4096;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

WavefunctionSpec::WavefunctionSpec(Form form, cplx c1, cplx c2, cplx energy)
    : form_(std::move(form)), c1_(c1), c2_(c2), energy_(energy) {}

WavefunctionSpec WavefunctionSpec::fourier(std::vector<cplx> coeffs, double sector,
                                           cplx energy) {
  return WavefunctionSpec(FourierForm{std::move(coeffs), sector}, 1.0, 0.0, energy);
}

WavefunctionSpec WavefunctionSpec::pt1_standing(double mu1, double mu3, double mu4, int n,
                                                Statistics st, bool c2_type) {
  const double k = st == Statistics::Bosonic ? std::abs(n) : std::abs(n + 0.5);
  const cplx energy = pt1_closed_spectrum(mu1, mu3, n, st);
  Pt1ClosedForm f{mu1, mu3, mu4, k};
  if (k == 0.0) return WavefunctionSpec(f, 1.0, 0.0, energy);
  if (c2_type) return WavefunctionSpec(f, cplx(0.0, 0.5 / k), 1.0, energy);
  return WavefunctionSpec(f, 1.0, cplx(0.0, -2.0 * k), energy);
}

cplx WavefunctionSpec::operator()(double theta) const {
  return std::visit(
      Overloaded{
          [&](const FourierForm& f) {
            const int n_modes = static_cast<int>(f.coeffs.size());
            const int N = (n_modes - 1) / 2;
            cplx acc{};
            for (int i = 0; i < n_modes; ++i)
              acc += f.coeffs[i] * std::polar(1.0, (i - N + 0.5 * f.sector) * theta);
            return c1_ * acc / std::sqrt(2.0 * M_PI);
          },
          [&](const Pt1ClosedForm& f) {
            const cplx pref =
                std::exp(cplx(0.0, -(f.mu3 * std::sin(theta) + f.mu4 * std::cos(theta)) / f.mu1));
            cplx bracket = c1_ * std::polar(1.0, -f.k * theta);
            if (f.k != 0.0) bracket += cplx(0.0, 0.5 / f.k) * c2_ * std::polar(1.0, f.k * theta);
            return pref * bracket;
          },
          [&](const Pt5ComplexMathieuForm& f) {
            const double t[1] = {theta};
            return pt5_complex_solution(f.mu4, f.mu6, f.energy, t, c1_, c2_)[0];
          },
      },
      form_);
}

std::vector<cplx> WavefunctionSpec::evaluate(std::span<const double> theta) const {
  if (const auto* f = std::get_if<Pt5ComplexMathieuForm>(&form_))
    return pt5_complex_solution(f->mu4, f->mu6, f->energy, theta, c1_, c2_);
  std::vector<cplx> out;
  out.reserve(theta.size());
  for (double t : theta) out.push_back((*this)(t));
  return out;
}

double WavefunctionSpec::norm() const {
  if (const auto* f = std::get_if<FourierForm>(&form_)) {
    double s = 0.0;
    for (cplx c : f->coeffs) s += std::norm(c);
    return std::abs(c1_) * std::sqrt(s);
  }
  const double h = 2.0 * M_PI / kQuadraturePoints;
  const auto grid = uniform_grid(0.0, 2.0 * M_PI - h, kQuadraturePoints);
  double s = 0.0;
  for (cplx v : evaluate(grid)) s += std::norm(v);
  return std::sqrt(s * h);
}

WavefunctionSpec WavefunctionSpec::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw std::domain_error("cannot normalize a zero wavefunction");
  return WavefunctionSpec(form_, c1_ / n, c2_ / n, energy_);
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return g;
}

WavefunctionSpec wavefunction(const SpectralProblem& p, std::size_t level) {
  SpectrumOptions opt;
  opt.want_vectors = true;
  const Spectrum sp = eigen_spectrum(p, opt);
  if (level >= sp.trusted) throw std::out_of_range("level outside the trusted interior");
  const Eigen::VectorXcd v = sp.vectors.col(static_cast<Eigen::Index>(level));
  return WavefunctionSpec::fourier(std::vector<cplx>(v.data(), v.data() + v.size()), p.sector,
                                   sp.eigenvalues[level]);
}

std::vector<double> intensity(const WavefunctionSpec& w, std::span<const double> theta) {
  std::vector<double> out;
  out.reserve(theta.size());
  for (cplx v : w.evaluate(theta)) out.push_back(std::norm(v));
  return out;
}

namespace {

double odd_fraction(const WavefunctionSpec& w) {
  const auto grid = uniform_grid(0.0, M_PI, 64);
  double odd = 0.0, total = 0.0;
  for (double t : grid) {
    const cplx x = w(t), y = w(-t);
    odd += std::norm(x - y);
    total += std::norm(x) + std::norm(y);
  }
  return total > 0.0 ? odd / (2.0 * total) : 0.0;
}

}  // namespace

IntensityPair intensity_pair(const SpectralProblem& p, std::size_t level_a, std::size_t level_b,
                             std::span<const double> theta) {
  SpectrumOptions opt;
  opt.want_vectors = true;
  const Spectrum sp = eigen_spectrum(p, opt);
  if (std::max(level_a, level_b) >= sp.trusted)
    throw std::out_of_range("level outside the trusted interior");
  auto state = [&](std::size_t level) {
    const Eigen::VectorXcd v = sp.vectors.col(static_cast<Eigen::Index>(level));
    return WavefunctionSpec::fourier(std::vector<cplx>(v.data(), v.data() + v.size()), p.sector,
                                     sp.eigenvalues[level]);
  };
  const WavefunctionSpec wa = state(level_a), wb = state(level_b);
  IntensityPair r;
  r.energy_a = wa.energy();
  r.energy_b = wb.energy();
  r.a = intensity(wa, theta);
  r.b = intensity(wb, theta);
  r.a_is_even = odd_fraction(wa) <= odd_fraction(wb);
  const double offset = std::norm((r.a_is_even ? wa : wb)(0.0));
  r.sum.resize(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) r.sum[i] = r.a[i] + r.b[i] - offset;
  return r;
}

double pt_theta_image(PtSymmetry s, double theta) {
  switch (s) {
    case PtSymmetry::PT1: return theta + M_PI;
    case PtSymmetry::PT2: return theta;
    case PtSymmetry::PT3: return 0.5 * M_PI - theta;
    case PtSymmetry::PT4: return -theta;
    case PtSymmetry::PT5: return M_PI - theta;
  }
  return theta;
}

PtEigenCheck pt_eigenstate_check(const WavefunctionSpec& w, PtSymmetry s, double tol) {
  constexpr int points = 257;
  const auto grid = uniform_grid(0.0, 2.0 * M_PI, points);
  std::vector<double> image(points);
  for (int i = 0; i < points; ++i) image[i] = pt_theta_image(s, grid[i]);
  const auto a = w.evaluate(grid);
  const auto b_raw = w.evaluate(image);
  cplx ab{};
  double aa = 0.0, bb = 0.0;
  for (int i = 0; i < points; ++i) {
    const cplx b = std::conj(b_raw[i]);
    ab += std::conj(a[i]) * b;
    aa += std::norm(a[i]);
    bb += std::norm(b);
  }
  PtEigenCheck r;
  r.phase = aa > 0.0 ? ab / aa : cplx{};
  double res = 0.0;
  for (int i = 0; i < points; ++i) res += std::norm(std::conj(b_raw[i]) - r.phase * a[i]);
  r.residual = bb > 0.0 ? std::sqrt(res / bb) : 0.0;
  if (r.residual > tol) {
    r.kind = PtEigenCheck::Kind::Broken;
  } else if (std::abs(r.phase - 1.0) <= tol * 10) {
    r.kind = PtEigenCheck::Kind::Even;
  } else if (std::abs(r.phase + 1.0) <= tol * 10) {
    r.kind = PtEigenCheck::Kind::Odd;
  } else {
    r.kind = PtEigenCheck::Kind::Phase;
  }
  return r;
}

std::string_view to_string(PtEigenCheck::Kind k) {
  switch (k) {
    case PtEigenCheck::Kind::Even: return "+1";
    case PtEigenCheck::Kind::Odd: return "-1";
    case PtEigenCheck::Kind::Phase: return "phase";
    case PtEigenCheck::Kind::Broken: return "broken";
  }
  return "broken";
}

}  // namespace euclidpt

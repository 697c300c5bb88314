#include "euclidpt/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include "euclidpt/dyson_e2.hpp"
#include "euclidpt/errors.hpp"
#include "euclidpt/mathieu.hpp"

namespace euclidpt {
namespace {

struct PointSpectrum {
  double x = 0.0;
  std::vector<cplx> lowest;  // candidates for tracking, sorted by real part
  int complex_count = 0;     // among the tracked window
};

PointSpectrum compute_point(const HamiltonianTemplate& base, const SweepAxis& axis,
                            const SweepOptions& opt, double x) {
  SpectrumOptions so;
  so.reality_rtol = opt.reality_rtol;
  const Spectrum sp = eigen_spectrum(base.with(axis.name, x).problem(), so);
  const std::size_t window = std::min(opt.levels, sp.trusted);
  PointSpectrum p;
  p.x = x;
  const std::size_t keep = std::min(window + 4, sp.size());
  p.lowest.assign(sp.eigenvalues.begin(), sp.eigenvalues.begin() + keep);
  for (std::size_t i = 0; i < window; ++i)
    if (!sp.real[i]) ++p.complex_count;
  return p;
}

std::vector<PointSpectrum> compute_points(const HamiltonianTemplate& base, const SweepAxis& axis,
                                          const SweepOptions& opt,
                                          const std::vector<double>& xs) {
  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(xs.size()));
  std::vector<PointSpectrum> out(xs.size());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < xs.size(); i += workers)
        out[i] = compute_point(base, axis, opt, xs[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

bool near(cplx a, cplx b) { return std::abs(a - b) <= 1e-7 * (1.0 + std::abs(a)); }

class Tracker {
 public:
  Tracker(const HamiltonianTemplate& base, const SweepAxis& axis, const SweepOptions& opt,
          SweepResult& result)
      : base_(base), axis_(axis), opt_(opt), res_(result) {}

  void start(const PointSpectrum& p) {
    const std::size_t n = std::min(opt_.levels, p.lowest.size());
    append(p, std::vector<cplx>(p.lowest.begin(), p.lowest.begin() + n));
  }

  void advance(const PointSpectrum& p, int depth) {
    std::vector<cplx> assigned;
    if (assign(p, assigned)) {
      append(p, assigned);
      return;
    }
    if (depth >= opt_.max_halvings) {
      std::ostringstream msg;
      msg << "level matching ambiguous near " << axis_.name << " = " << p.x;
      throw TrackingAmbiguity(msg.str(), p.x);
    }
    const double mid = 0.5 * (res_.axis_values.back() + p.x);
    advance(compute_point(base_, axis_, opt_, mid), depth + 1);
    advance(p, depth + 1);
  }

 private:
  void append(const PointSpectrum& p, std::vector<cplx> values) {
    res_.axis_values.push_back(p.x);
    res_.levels.push_back(std::move(values));
    res_.broken.push_back(p.complex_count > 0);
    counts_.push_back(p.complex_count);
  }

  // Greedy nearest matching against linear extrapolation; false when ambiguous.
  bool assign(const PointSpectrum& p, std::vector<cplx>& out) const {
    const auto& prev = res_.levels.back();
    const std::size_t L = prev.size();
    std::vector<cplx> pred(prev);
    if (res_.levels.size() >= 2) {
      const auto& pp = res_.levels[res_.levels.size() - 2];
      const double x1 = res_.axis_values.back(), x0 = res_.axis_values[res_.axis_values.size() - 2];
      const double f = (p.x - x1) / (x1 - x0);
      for (std::size_t j = 0; j < L; ++j) pred[j] = prev[j] + f * (prev[j] - pp[j]);
    }
    const auto& cand = p.lowest;
    std::vector<int> owner(cand.size(), -1);
    std::vector<int> match(L, -1);
    for (std::size_t round = 0; round < L; ++round) {
      double best = std::numeric_limits<double>::infinity();
      int bj = -1, bc = -1;
      for (std::size_t j = 0; j < L; ++j) {
        if (match[j] >= 0) continue;
        for (std::size_t c = 0; c < cand.size(); ++c) {
          if (owner[c] >= 0) continue;
          const double d = std::abs(pred[j] - cand[c]);
          if (d < best) best = d, bj = static_cast<int>(j), bc = static_cast<int>(c);
        }
      }
      if (bj < 0) return false;
      match[bj] = bc;
      owner[bc] = bj;
    }
    out.resize(L);
    for (std::size_t j = 0; j < L; ++j) out[j] = cand[match[j]];

    for (std::size_t j = 0; j < L; ++j) {
      const cplx c = cand[match[j]];
      const double d1 = std::abs(pred[j] - c);
      for (std::size_t k = 0; k < cand.size(); ++k) {
        if (static_cast<int>(k) == match[j]) continue;
        const cplx c2 = cand[k];
        if (std::abs(pred[j] - c2) >= opt_.ambiguity_ratio * d1 + 1e-12) continue;
        if (near(c, c2) || near(c, std::conj(c2))) continue;
        const int m = owner[k];
        if (m >= 0) {
          // Levels closing in on each other (approach to a merge or crossing) or
          // leaving a conjugate pair: the label choice is immaterial.
          if (std::abs(c - c2) <= std::abs(prev[j] - prev[m])) continue;
          if (near(prev[j], std::conj(prev[m])) && prev[j].imag() != 0.0) continue;
          // Splitting out of a degenerate point.
          if (std::abs(prev[j] - prev[m]) <= 1e-6 * (1.0 + std::abs(prev[j]))) continue;
          // Two real levels: swapping labels changes no reality flag.
          const double rt = opt_.reality_rtol;
          if (is_real_eigenvalue(prev[j], rt) && is_real_eigenvalue(prev[m], rt) &&
              is_real_eigenvalue(c, rt) && is_real_eigenvalue(c2, rt))
            continue;
        }
        return false;
      }
    }
    return true;
  }

  const HamiltonianTemplate& base_;
  const SweepAxis& axis_;
  const SweepOptions& opt_;
  SweepResult& res_;
  std::vector<int> counts_;
};

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::General: return "general";
    case Family::Pt5ThreeParam: return "pt5-three-param";
    case Family::Pt5ComplexMathieu: return "pt5-complex-mathieu";
  }
  return "general";
}

Family parse_family(std::string_view text) {
  for (auto f : {Family::General, Family::Pt5ThreeParam, Family::Pt5ComplexMathieu})
    if (to_string(f) == text) return f;
  throw ConfigError("unknown family '" + std::string(text) + "'");
}

E2Element HamiltonianTemplate::element() const {
  switch (family) {
    case Family::General: return build_hamiltonian(symmetry, mu);
    case Family::Pt5ThreeParam: return pt5_three_param_hamiltonian(mu[2], mu[3], mu[6]);
    case Family::Pt5ComplexMathieu: return pt5_complex_mathieu_hamiltonian(mu[3], mu[5]);
  }
  return {};
}

bool is_valid_axis(const std::string& axis) {
  if (axis == "s") return true;
  return axis.size() == 3 && axis.rfind("mu", 0) == 0 && axis[2] >= '1' && axis[2] <= '9';
}

HamiltonianTemplate HamiltonianTemplate::with(const std::string& axis, double value) const {
  if (!is_valid_axis(axis)) throw ConfigError("unknown sweep axis '" + axis + "'");
  HamiltonianTemplate t = *this;
  if (axis == "s")
    t.sector = value;
  else
    t.mu[axis[2] - '1'] = value;
  return t;
}

SweepAxis parse_sweep_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4) throw ConfigError("sweep must look like axis:lo:hi:steps");
  SweepAxis a;
  a.name = parts[0];
  if (!is_valid_axis(a.name)) throw ConfigError("unknown sweep axis '" + a.name + "'");
  try {
    std::size_t used = 0;
    a.lo = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("lo");
    a.hi = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("hi");
    a.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("steps");
  } catch (const std::exception&) {
    throw ConfigError("malformed sweep '" + spec + "'");
  }
  if (a.steps < 1 || !(a.hi > a.lo)) throw ConfigError("sweep needs hi > lo and steps >= 1");
  return a;
}

SweepResult sweep(const HamiltonianTemplate& tmpl, const SweepAxis& axis,
                  const SweepOptions& opt) {
  if (!is_valid_axis(axis.name)) throw ConfigError("unknown sweep axis '" + axis.name + "'");
  if (axis.steps < 1) throw ConfigError("sweep needs at least one step");
  SweepResult res;
  res.base = tmpl;
  res.axis = axis;
  res.options = opt;
  std::vector<double> xs(axis.steps + 1);
  for (int i = 0; i <= axis.steps; ++i)
    xs[i] = axis.lo + (axis.hi - axis.lo) * i / axis.steps;
  const auto points = compute_points(tmpl, axis, opt, xs);
  Tracker tracker(tmpl, axis, opt, res);
  tracker.start(points.front());
  for (std::size_t i = 1; i < points.size(); ++i) tracker.advance(points[i], 0);
  return res;
}

std::vector<ExceptionalPoint> find_exceptional_points(const SweepResult& s, double tol) {
  std::vector<ExceptionalPoint> eps;
  const double rtol = s.options.reality_rtol;
  const std::size_t n = s.axis_values.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& a = s.levels[i];
    const auto& b = s.levels[i + 1];
    const std::size_t L = a.size();
    std::vector<bool> done(L, false);
    for (std::size_t j = 0; j < L; ++j) {
      const bool ra = is_real_eigenvalue(a[j], rtol), rb = is_real_eigenvalue(b[j], rtol);
      if (ra == rb || done[j]) continue;
      const bool broken_hi = ra;
      const auto& br = broken_hi ? b : a;
      const auto& re = broken_hi ? a : b;
      // Partner: the tracked level forming the conjugate pair on the broken side.
      int k = -1;
      for (std::size_t m = 0; m < L; ++m) {
        if (m == j || is_real_eigenvalue(br[m], rtol) || !is_real_eigenvalue(re[m], rtol))
          continue;
        if (k < 0 || std::abs(br[m] - std::conj(br[j])) < std::abs(br[k] - std::conj(br[j])))
          k = static_cast<int>(m);
      }
      if (k < 0 || std::abs(br[k] - std::conj(br[j])) > 1e-6 * (1.0 + std::abs(br[j]))) continue;
      done[j] = done[k] = true;

      // Noise-level splittings of a defective but real crossing never grow; a
      // genuine broken stretch does.
      double grow = 0.0;
      for (std::size_t q = broken_hi ? i + 1 : i; q < n && !is_real_eigenvalue(s.levels[q][j], rtol);
           q = broken_hi ? q + 1 : q - 1) {
        grow = std::max(grow, std::abs(s.levels[q][j].imag()) /
                                  std::max(1.0, std::abs(s.levels[q][j].real())));
        if (q == 0) break;
      }
      if (grow < std::sqrt(rtol)) continue;

      // Energy window around the pair, clear of the other tracked levels.
      const double centre = br[j].real();
      double half = 1.0 + std::abs(centre);
      for (std::size_t m = 0; m < L; ++m) {
        if (m == j || static_cast<int>(m) == k) continue;
        half = std::min({half, 0.5 * std::abs(a[m].real() - centre),
                         0.5 * std::abs(b[m].real() - centre)});
      }
      auto pair_count = [&](double x, cplx* merged) {
        SpectrumOptions so;
        so.reality_rtol = rtol;
        const Spectrum sp = eigen_spectrum(s.base.with(s.axis.name, x).problem(), so);
        int c = 0;
        for (std::size_t q = 0; q < sp.trusted; ++q) {
          const cplx e = sp.eigenvalues[q];
          if (sp.real[q] || std::abs(e.real() - centre) > half) continue;
          ++c;
          if (merged && e.imag() > 0.0) *merged = e;
        }
        return c;
      };
      double lo = s.axis_values[i], hi = s.axis_values[i + 1];
      const int c_lo = pair_count(lo, nullptr);
      if (c_lo == pair_count(hi, nullptr)) continue;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (pair_count(mid, nullptr) == c_lo ? lo : hi) = mid;
      }
      cplx merged = br[j];
      pair_count(broken_hi ? hi : lo, &merged);
      ExceptionalPoint ep;
      ep.parameter_value = 0.5 * (lo + hi);
      ep.energy = merged.real();
      ep.level_pair = {static_cast<int>(std::min<std::size_t>(j, k)),
                       static_cast<int>(std::max<std::size_t>(j, k))};
      ep.bracket_width = hi - lo;
      eps.push_back(ep);
    }
  }
  return eps;
}

}  // namespace euclidpt

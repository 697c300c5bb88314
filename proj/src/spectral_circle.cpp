#include "euclidpt/spectral_circle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "euclidpt/linalg.hpp"

namespace euclidpt {
namespace {

struct TrigTerm {
  int shift;
  cplx coeff;
};

// Fourier coefficients of sin^a(theta) cos^b(theta), a + b <= 2.
std::vector<TrigTerm> trig_terms(int a, int b) {
  if (a == 0 && b == 0) return {{0, 1.0}};
  if (a == 1 && b == 0) return {{1, {0.0, -0.5}}, {-1, {0.0, 0.5}}};
  if (a == 0 && b == 1) return {{1, 0.5}, {-1, 0.5}};
  if (a == 2 && b == 0) return {{0, 0.5}, {2, -0.25}, {-2, -0.25}};
  if (a == 0 && b == 2) return {{0, 0.5}, {2, 0.25}, {-2, 0.25}};
  return {{2, {0.0, -0.25}}, {-2, {0.0, 0.25}}};
}

Eigen::MatrixXcd matrix_on_modes(const E2Element& a, const std::vector<double>& ks) {
  const int dim = static_cast<int>(ks.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < kE2BasisSize; ++i) {
    const cplx c = a.coeff(i);
    if (c == cplx{}) continue;
    const Exponents e = exponents(static_cast<Monomial>(i));
    for (const TrigTerm& t : trig_terms(e.u, e.v)) {
      for (int col = 0; col < dim; ++col) {
        const int row = col + t.shift;
        if (row < 0 || row >= dim) continue;
        m(row, col) += c * t.coeff * std::pow(ks[col], e.j);
      }
    }
  }
  return m;
}

std::vector<double> circle_modes(double sector, int n_lo, int n_hi) {
  std::vector<double> ks;
  for (int n = n_lo; n <= n_hi; ++n) ks.push_back(n + 0.5 * sector);
  return ks;
}

// Antilinear map x -> D conj(x) in Fourier space: (A x)[perm[i]] = phase[i] conj(x[i]).
struct FourierAntilinear {
  std::vector<int> perm;
  std::vector<cplx> phase;
};

std::optional<FourierAntilinear> fourier_action(PtSymmetry s, double sector, int N) {
  const int dim = 2 * N + 1;
  FourierAntilinear a;
  a.perm.resize(dim);
  a.phase.resize(dim);
  const bool flips = s == PtSymmetry::PT1 || s == PtSymmetry::PT2;
  if (flips && sector != 0.0) return std::nullopt;
  for (int i = 0; i < dim; ++i) {
    const double k = wavenumber(sector, N, i);
    a.perm[i] = flips ? dim - 1 - i : i;
    switch (s) {
      case PtSymmetry::PT1: a.phase[i] = std::polar(1.0, -k * M_PI); break;
      case PtSymmetry::PT2: a.phase[i] = 1.0; break;
      case PtSymmetry::PT3: a.phase[i] = std::polar(1.0, -k * M_PI / 2); break;
      case PtSymmetry::PT4: a.phase[i] = 1.0; break;
      case PtSymmetry::PT5: a.phase[i] = std::polar(1.0, -k * M_PI); break;
    }
  }
  return a;
}

// Unitary whose columns are fixed by the antilinear map; V^H M V is real for
// matrices commuting with it.
Eigen::MatrixXcd invariant_basis(const FourierAntilinear& a) {
  const int dim = static_cast<int>(a.perm.size());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<bool> done(dim, false);
  int col = 0;
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i) {
    if (done[i]) continue;
    const int j = a.perm[i];
    if (j == i) {
      v(i, col++) = std::sqrt(a.phase[i]);
    } else {
      v(i, col) = r;
      v(j, col++) = r * a.phase[i];
      v(i, col) = cplx(0.0, r);
      v(j, col++) = cplx(0.0, -r) * a.phase[i];
      done[j] = true;
    }
    done[i] = true;
  }
  return v;
}

std::vector<PtSymmetry> candidate_symmetries(const E2Element& a) {
  static constexpr std::array<PtSymmetry, 5> order{PtSymmetry::PT4, PtSymmetry::PT5,
                                                    PtSymmetry::PT3, PtSymmetry::PT2,
                                                    PtSymmetry::PT1};
  const double tol = 1e-13 * std::max(1.0, a.max_abs());
  std::vector<PtSymmetry> out;
  for (auto s : order)
    if (max_abs_diff(apply_pt(s, a), a) <= tol) out.push_back(s);
  return out;
}

void sort_spectrum(Spectrum& sp, const EigenDecomposition& dec, const Eigen::MatrixXcd* basis) {
  const auto n = static_cast<std::size_t>(dec.values.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const cplx a = dec.values[x], b = dec.values[y];
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  sp.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) sp.eigenvalues[i] = dec.values[order[i]];
  if (dec.vectors.size() > 0) {
    sp.vectors.resize(dec.vectors.rows(), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto src = static_cast<Eigen::Index>(order[i]);
      if (basis)
        sp.vectors.col(i) = (*basis * dec.vectors.col(src)).normalized();
      else
        sp.vectors.col(i) = dec.vectors.col(src).normalized();
    }
  }
}

}  // namespace

double wavenumber(double sector, int truncation, int index) {
  return index - truncation + 0.5 * sector;
}

Eigen::MatrixXcd build_matrix(const SpectralProblem& p) {
  if (p.truncation < 4) throw std::invalid_argument("truncation must be at least 4");
  return matrix_on_modes(p.element, circle_modes(p.sector, -p.truncation, p.truncation));
}

bool is_real_eigenvalue(cplx e, double rtol) {
  return std::abs(e.imag()) <= rtol * std::max(1.0, std::abs(e.real()));
}

std::size_t trusted_level_count(int truncation) {
  const int dim = 2 * truncation + 1;
  const int cut = static_cast<int>(std::ceil(4.0 * std::sqrt(static_cast<double>(truncation))));
  return static_cast<std::size_t>(std::max(1, dim - cut));
}

bool Spectrum::all_real(std::size_t count) const {
  for (std::size_t i = 0; i < std::min(count, real.size()); ++i)
    if (!real[i]) return false;
  return true;
}

double Spectrum::max_abs_imag(std::size_t count) const {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(count, eigenvalues.size()); ++i)
    m = std::max(m, std::abs(eigenvalues[i].imag()));
  return m;
}

Spectrum eigen_spectrum(const SpectralProblem& p, const SpectrumOptions& opt) {
  const Eigen::MatrixXcd m = build_matrix(p);
  Spectrum sp;
  sp.truncation = p.truncation;
  sp.sector = p.sector;
  sp.trusted = trusted_level_count(p.truncation);

  bool solved = false;
  if (opt.use_pt_structure) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    for (PtSymmetry s : candidate_symmetries(p.element)) {
      const auto action = fourier_action(s, p.sector, p.truncation);
      if (!action) continue;
      const Eigen::MatrixXcd v = invariant_basis(*action);
      const Eigen::MatrixXcd mr = v.adjoint() * m * v;
      if (mr.imag().cwiseAbs().maxCoeff() > 1e-13 * scale) continue;
      const EigenDecomposition dec = eigen_general(Eigen::MatrixXd(mr.real()), opt.want_vectors);
      sort_spectrum(sp, dec, &v);
      sp.structure_used = s;
      solved = true;
      break;
    }
  }
  if (!solved) sort_spectrum(sp, eigen_general(m, opt.want_vectors), nullptr);

  sp.real.resize(sp.eigenvalues.size());
  for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i)
    sp.real[i] = is_real_eigenvalue(sp.eigenvalues[i], opt.reality_rtol);
  return sp;
}

bool is_parity_invariant(const E2Element& a, double tol) {
  for (std::size_t i = 0; i < kE2BasisSize; ++i) {
    const Exponents e = exponents(static_cast<Monomial>(i));
    if ((e.u + e.j) % 2 == 1 && std::abs(a.coeff(i)) > tol) return false;
  }
  return true;
}

std::vector<cplx> parity_resolved_spectrum(const E2Element& a, double sector, Parity parity,
                                           int truncation) {
  if (sector != 0.0 && sector != 1.0)
    throw std::invalid_argument("parity splitting needs sector 0 or 1");
  if (!is_parity_invariant(a, 1e-13 * std::max(1.0, a.max_abs())))
    throw std::invalid_argument("element is not invariant under theta -> -theta");
  const int n_lo = sector == 0.0 ? -truncation : -truncation - 1;
  const auto ks = circle_modes(sector, n_lo, truncation);
  const Eigen::MatrixXcd m = matrix_on_modes(a, ks);
  const int dim = static_cast<int>(ks.size());

  std::vector<Eigen::VectorXcd> cols;
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i) {
    const int j = dim - 1 - i;  // index of -k
    if (ks[i] < 0.0) continue;
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
    if (i == j) {
      if (parity == Parity::Odd) continue;
      c(i) = 1.0;
    } else {
      c(i) = r;
      c(j) = parity == Parity::Even ? r : -r;
    }
    cols.push_back(std::move(c));
  }
  Eigen::MatrixXcd v(dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) v.col(static_cast<Eigen::Index>(c)) = cols[c];
  const EigenDecomposition dec = eigen_general(Eigen::MatrixXcd(v.adjoint() * m * v), false);
  std::vector<cplx> out(dec.values.data(), dec.values.data() + dec.values.size());
  std::sort(out.begin(), out.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

double pt1_closed_spectrum(double mu1, double mu3, int n, Statistics st) {
  if (mu1 == 0.0) throw std::invalid_argument("mu1 must be nonzero");
  const double shift = mu3 * mu3 / (mu1 * mu1);
  const double nn = static_cast<double>(n);
  if (st == Statistics::Bosonic) return mu1 * (nn * nn - shift);
  return mu1 * (nn * nn + nn + 0.25 - shift);
}

}  // namespace euclidpt

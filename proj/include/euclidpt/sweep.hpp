#pragma once

#include <string>
#include <vector>

#include "euclidpt/e2_element.hpp"
#include "euclidpt/spectral_circle.hpp"

namespace euclidpt {

enum class Family {
  General,           // build_hamiltonian(symmetry, mu)
  Pt5ThreeParam,     // mu3, mu4, mu7 of the three-parameter PT5 family
  Pt5ComplexMathieu  // mu4, mu6 of the complex Mathieu PT5 family
};

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

struct HamiltonianTemplate {
  Family family = Family::General;
  PtSymmetry symmetry = PtSymmetry::PT5;
  Couplings mu{};
  double sector = 0.0;
  int truncation = 64;

  E2Element element() const;
  SpectralProblem problem() const { return {element(), sector, truncation}; }
  // axis is "mu1".."mu9" or "s"
  HamiltonianTemplate with(const std::string& axis, double value) const;
};

bool is_valid_axis(const std::string& axis);

struct SweepAxis {
  std::string name;
  double lo = 0.0, hi = 1.0;
  int steps = 100;  // number of intervals; steps + 1 points
};

SweepAxis parse_sweep_axis(const std::string& spec);  // "mu3:-4:4:400"

struct SweepOptions {
  std::size_t levels = 7;
  double reality_rtol = 1e-8;
  int max_halvings = 8;
  // A match is ambiguous when the runner-up candidate is within this factor of
  // the best distance.
  double ambiguity_ratio = 2.0;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct SweepResult {
  HamiltonianTemplate base;
  SweepAxis axis;
  SweepOptions options;
  std::vector<double> axis_values;         // includes points inserted by step halving
  std::vector<std::vector<cplx>> levels;   // [point][label]
  std::vector<bool> broken;                // any of the tracked window complex
};

SweepResult sweep(const HamiltonianTemplate& tmpl, const SweepAxis& axis,
                  const SweepOptions& opt = {});

struct ExceptionalPoint {
  double parameter_value = 0.0;
  double energy = 0.0;
  std::array<int, 2> level_pair{-1, -1};
  double bracket_width = 0.0;
};

std::vector<ExceptionalPoint> find_exceptional_points(const SweepResult& s, double tol = 1e-6);

}  // namespace euclidpt

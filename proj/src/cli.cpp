#include "euclidpt/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "euclidpt/dyson_e2.hpp"
#include "euclidpt/e3.hpp"
#include "euclidpt/errors.hpp"
#include "euclidpt/mathieu.hpp"
#include "euclidpt/serialize.hpp"
#include "euclidpt/spectral_circle.hpp"
#include "euclidpt/sweep.hpp"
#include "euclidpt/wavefunction.hpp"

namespace euclidpt {
namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

// Rounded through the fixed format so JSON output is as reproducible as CSV.
double fixed(double x) { return std::isfinite(x) ? std::stod(num(x)) : x; }

Json fixed_json(const Json& j) {
  if (j.is_number_float()) return fixed(j.get<double>());
  if (j.is_array() || j.is_object()) {
    Json r = j;
    for (auto& v : r) v = fixed_json(v);
    return r;
  }
  return j;
}

struct ModelOptions {
  std::string symmetry = "PT5";
  std::string family = "general";
  std::array<double, 9> mu{1, 0, 0, 0, 0, 0, 0, 0, 0};
  std::array<CLI::Option*, 9> mu_opt{};
  double sector = 0.0;
  int truncation = 64;

  void add_mu(CLI::App* app) {
    for (int i = 0; i < 9; ++i) {
      const std::string name = "mu" + std::to_string(i + 1);
      mu_opt[i] = app->add_option("--" + name, mu[i], "coupling " + name);
    }
  }
  void add(CLI::App* app) {
    app->add_option("--symmetry", symmetry, "PT1..PT5");
    app->add_option("--family", family, "general, pt5-three-param or pt5-complex-mathieu");
    add_mu(app);
    app->add_option("--sector", sector, "boundary phase s, psi(theta + 2 pi) = e^{i pi s} psi");
    app->add_option("--truncation", truncation, "Fourier modes |n| <= N");
  }
  bool given(int i) const { return mu_opt[i] && mu_opt[i]->count() > 0; }

  HamiltonianTemplate make() const {
    HamiltonianTemplate t;
    t.family = parse_family(family);
    t.symmetry = parse_pt_symmetry(symmetry);
    if (t.family != Family::General && t.symmetry != PtSymmetry::PT5)
      throw ConfigError("family " + family + " belongs to PT5");
    t.mu = mu;
    t.sector = sector;
    if (truncation < 4) throw ConfigError("truncation must be at least 4");
    t.truncation = truncation;
    return t;
  }

  Json echo() const {
    Json j;
    j["symmetry"] = symmetry;
    j["family"] = family;
    j["mu"] = mu;
    j["sector"] = sector;
    j["truncation"] = truncation;
    return j;
  }
};

struct Output {
  std::string path;
  std::string plot_script;

  void add(CLI::App* app, bool plot) {
    app->add_option("--output", path, "output file (default stdout)");
    if (plot) app->add_option("--plot-script", plot_script, "also write a matplotlib script");
  }
  void write(const std::string& text, std::ostream& out) const {
    if (path.empty() || path == "-") {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open '" + path + "' for writing");
    f << text;
  }
  void script(const std::string& body) const {
    if (plot_script.empty()) return;
    if (path.empty() || path == "-") throw ConfigError("--plot-script needs --output");
    std::ofstream f(plot_script, std::ios::binary);
    if (!f) throw ConfigError("cannot open '" + plot_script + "' for writing");
    f << "import csv\nimport sys\nimport matplotlib.pyplot as plt\n\n"
      << "path = sys.argv[1] if len(sys.argv) > 1 else " << Json(path).dump() << "\n"
      << "with open(path) as f:\n    rows = list(csv.DictReader(f))\n\n"
      << body
      << "out = path.rsplit('.', 1)[0] + '.png'\nplt.savefig(out, dpi=150)\nprint(out)\n";
  }
};

std::string spectrum_script(const std::string& axis) {
  return "levels = sorted({int(r['level_index']) for r in rows})\n"
         "fig, (ax_re, ax_im) = plt.subplots(2, 1, sharex=True)\n"
         "for l in levels:\n"
         "    pts = [r for r in rows if int(r['level_index']) == l]\n"
         "    x = [float(r['axis_value']) for r in pts]\n"
         "    ax_re.plot(x, [float(r['re_E']) for r in pts], '.', ms=2)\n"
         "    ax_im.plot(x, [float(r['im_E']) for r in pts], '.', ms=2)\n"
         "ax_re.set_ylabel('Re E')\nax_im.set_ylabel('Im E')\nax_im.set_xlabel(" +
         Json(axis).dump() + ")\n";
}

std::string intensity_script(bool swept, const std::string& axis) {
  if (!swept)
    return "t = [float(r['theta']) for r in rows]\n"
           "for key, style in (('I_a', '-'), ('I_b', '--'), ('I_sum', ':')):\n"
           "    plt.plot(t, [float(r[key]) for r in rows], style, label=key)\n"
           "plt.xlabel('theta')\nplt.legend()\n";
  return "xs = sorted({float(r['axis_value']) for r in rows})\n"
         "ts = sorted({float(r['theta']) for r in rows})\n"
         "grid = {(float(r['axis_value']), float(r['theta'])): float(r['I_sum']) for r in rows}\n"
         "z = [[grid[(x, t)] for x in xs] for t in ts]\n"
         "plt.pcolormesh(xs, ts, z, shading='auto')\nplt.colorbar(label='I_sum')\n"
         "plt.xlabel(" + Json(axis).dump() + ")\nplt.ylabel('theta')\n";
}

std::string mathieu_script() {
  return "x = [float(r['order']) for r in rows]\n"
         "plt.plot(x, [float(r['re_a']) for r in rows], 'o', label='Re a')\n"
         "plt.plot(x, [float(r['im_a']) for r in rows], 'x', label='Im a')\n"
         "plt.xlabel('order')\nplt.legend()\n";
}

cplx parse_complex(const std::string& text) {
  std::stringstream ss(text);
  std::string re, im;
  std::getline(ss, re, ',');
  std::getline(ss, im, ',');
  try {
    std::size_t used = 0;
    const double r = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(re);
    double i = 0.0;
    if (!im.empty()) {
      i = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument(im);
    }
    return {r, i};
  } catch (const std::exception&) {
    throw ConfigError("expected re,im but got '" + text + "'");
  }
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text) {
  std::stringstream ss(text);
  std::string a, b, extra;
  std::getline(ss, a, ',');
  std::getline(ss, b, ',');
  if (std::getline(ss, extra, ',')) throw ConfigError("--pair takes two levels");
  try {
    const int x = std::stoi(a), y = std::stoi(b);
    if (x < 0 || y < 0 || x == y) throw std::invalid_argument(text);
    return {static_cast<std::size_t>(x), static_cast<std::size_t>(y)};
  } catch (const std::exception&) {
    throw ConfigError("expected two distinct levels a,b but got '" + text + "'");
  }
}

// JSON config values become flags placed ahead of the command line, so later
// flags win.
std::vector<std::string> config_args(const std::string& path, CLI::App* sub) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config '" + path + "'");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const std::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON");
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  std::vector<std::string> args;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = it.key();
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (!opt || key == "config") throw ConfigError("unknown config key '" + key + "'");
    const Json& v = it.value();
    std::string text;
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back("--" + key);
      continue;
    } else if (v.is_string()) {
      text = v.get<std::string>();
    } else if (v.is_number()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
      text = v.is_number_float() ? buf : v.dump();
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) throw ConfigError("config key '" + key + "' must hold numbers");
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v[i].get<double>());
        text += (i ? "," : "") + std::string(buf);
      }
    } else {
      throw ConfigError("config key '" + key + "' has an unsupported value");
    }
    args.push_back("--" + key);
    args.push_back(text);
  }
  return args;
}

// ---------------------------------------------------------------- transform

struct TransformCmd {
  ModelOptions model;
  double lambda = 0.0;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* symmetry_opt = nullptr;
  Output output;

  void add(CLI::App* app) {
    symmetry_opt = app->add_option("--symmetry", model.symmetry, "PT1..PT5")->required();
    app->add_option("--family", model.family, "general or pt5-three-param");
    model.add_mu(app);
    lambda_opt = app->add_option("--lambda", lambda, "Dyson exponent (PT1, PT2)");
    output.add(app, false);
  }

  Json three_param(Json report) const {
    for (int i : {0, 1, 4, 5, 7, 8})
      if (model.given(i))
        throw ConfigError("mu" + std::to_string(i + 1) +
                          " is fixed in the three-parameter PT5 family");
    if (lambda_opt->count()) throw ConfigError("lambda is determined by the couplings for PT5");
    const double mu3 = model.mu[2], mu4 = model.mu[3], mu7 = model.mu[6];
    report["family"] = "pt5-three-param";
    report["free"] = {{"mu3", mu3}, {"mu4", mu4}, {"mu7", mu7}};
    const ThreeParamReduction r = reduce_pt5_three_param(mu3, mu4, mu7);
    Json res;
    res["alpha"] = r.alpha;
    res["beta"] = r.beta;
    res["gamma"] = r.gamma;
    res["lambda"] = r.lambda;
    res["rho"] = r.rho;
    res["tau"] = 0.0;
    res["coth_rhs"] = r.coth_rhs;
    res["H"] = to_json(r.H);
    res["h"] = to_json(r.h);
    res["residual"] = hermiticity_residual(r.h);
    report["result"] = res;
    return report;
  }

  Json run() const {
    const PtSymmetry s = parse_pt_symmetry(model.symmetry);
    const Family fam = parse_family(model.family);
    Json report;
    report["config"] = {{"command", "transform"}, {"symmetry", model.symmetry},
                        {"family", model.family}, {"mu", model.mu}, {"lambda", lambda}};
    report["symmetry"] = model.symmetry;
    if (fam == Family::Pt5ComplexMathieu) throw ConfigError("transform has no complex Mathieu mode");
    if (fam == Family::Pt5ThreeParam || (s == PtSymmetry::PT5 && model.given(2))) {
      if (s != PtSymmetry::PT5) throw ConfigError("the three-parameter family belongs to PT5");
      return three_param(report);
    }
    NamedParams free;
    const auto names = hermitize_parameter_names(s);
    const auto optional = hermitize_optional_names(s);
    auto allowed = [&](const std::string& n) {
      return std::find(names.begin(), names.end(), n) != names.end() ||
             std::find(optional.begin(), optional.end(), n) != optional.end();
    };
    for (int i = 0; i < 9; ++i) {
      const std::string n = "mu" + std::to_string(i + 1);
      if (model.given(i) && !allowed(n))
        throw ConfigError(n + " is not a free parameter of " + model.symmetry);
    }
    if (lambda_opt->count() && !allowed("lambda"))
      throw ConfigError("lambda is not a free parameter of " + model.symmetry);
    for (const auto& n : names) free[n] = n == "lambda" ? lambda : model.mu[n[2] - '1'];
    for (const auto& n : optional)
      if (model.given(n[2] - '1')) free[n] = model.mu[n[2] - '1'];
    Json jfree = Json::object();
    for (const auto& [k, v] : free) jfree[k] = v;
    report["free"] = jfree;
    const HermitizationResult r = hermitize(s, free);
    report["result"] = to_json(r);
    if (r.original_hermitian)
      report["notice"] =
          "the constrained H is Hermitian already; the Dyson map only rewrites it";
    return report;
  }
};

// ---------------------------------------------------------------- spectrum / ep

struct SweepCmd {
  ModelOptions model;
  std::string sweep_spec;
  std::size_t levels = 7;
  unsigned workers = 0;
  double ep_tol = 1e-6;
  Output output;

  void add(CLI::App* app, bool ep) {
    model.add(app);
    app->add_option("--sweep", sweep_spec, "axis:lo:hi:steps, axis one of mu1..mu9, s")
        ->required();
    app->add_option("--levels", levels, "number of tracked levels");
    app->add_option("--workers", workers, "worker threads (0: all cores)");
    if (ep) app->add_option("--ep-tol", ep_tol, "bisection tolerance in the parameter");
    output.add(app, !ep);
  }

  SweepOptions options() const {
    if (levels < 1) throw ConfigError("--levels must be positive");
    SweepOptions o;
    o.levels = levels;
    o.workers = workers;
    return o;
  }

  std::string spectrum() const {
    const HamiltonianTemplate t = model.make();
    const SweepAxis axis = parse_sweep_axis(sweep_spec);
    std::string csv = "axis_value,level_index,re_E,im_E\n";
    auto row = [&](double x, std::size_t l, cplx e) {
      csv += num(x) + "," + std::to_string(l) + "," + num(e.real()) + "," + num(e.imag()) + "\n";
    };
    if (axis.name == "s") {
      // Bands: raw sorted E(s) without level tracking.
      for (int i = 0; i <= axis.steps; ++i) {
        const double s = axis.lo + (axis.hi - axis.lo) * i / axis.steps;
        const Spectrum sp = eigen_spectrum(t.with("s", s).problem());
        for (std::size_t l = 0; l < std::min(levels, sp.trusted); ++l) row(s, l, sp.eigenvalues[l]);
      }
    } else {
      const SweepResult r = sweep(t, axis, options());
      for (std::size_t i = 0; i < r.axis_values.size(); ++i)
        for (std::size_t l = 0; l < r.levels[i].size(); ++l) row(r.axis_values[i], l, r.levels[i][l]);
    }
    output.script(spectrum_script(axis.name));
    return csv;
  }

  Json ep() const {
    const HamiltonianTemplate t = model.make();
    const SweepAxis axis = parse_sweep_axis(sweep_spec);
    if (axis.name == "s") throw ConfigError("exceptional points need a coupling axis");
    if (!(ep_tol > 0.0)) throw ConfigError("--ep-tol must be positive");
    Json report;
    report["config"] = model.echo();
    report["config"]["command"] = "ep";
    report["config"]["sweep"] = {{"axis", axis.name}, {"lo", axis.lo}, {"hi", axis.hi},
                                 {"steps", axis.steps}};
    report["config"]["levels"] = levels;
    report["config"]["ep_tol"] = ep_tol;
    const SweepResult r = sweep(t, axis, options());
    Json list = Json::array();
    for (const auto& e : find_exceptional_points(r, ep_tol)) list.push_back(to_json(e));
    report["exceptional_points"] = list;
    if (t.family == Family::Pt5ThreeParam &&
        (axis.name == "mu3" || axis.name == "mu4" || axis.name == "mu7")) {
      const Pt5Axis a = axis.name == "mu3" ? Pt5Axis::Mu3
                        : axis.name == "mu4" ? Pt5Axis::Mu4
                                             : Pt5Axis::Mu7;
      Json pred = Json::array();
      for (double x : ep_predictions_pt5(t.mu[2], t.mu[3], t.mu[6], a))
        if (x >= axis.lo && x <= axis.hi) pred.push_back(x);
      report["predictions"] = pred;
    }
    return report;
  }
};

// ---------------------------------------------------------------- intensity

struct IntensityCmd {
  ModelOptions model;
  std::string sweep_spec;
  std::string pair = "1,2";
  std::string frame;
  int grid = 201;
  Output output;

  void add(CLI::App* app) {
    model.add(app);
    app->add_option("--sweep", sweep_spec, "optional axis:lo:hi:steps");
    app->add_option("--pair", pair, "two levels a,b sorted by real part");
    app->add_option("--frame", frame,
                    "mathieu (three-parameter family only) or hamiltonian");
    app->add_option("--grid", grid, "theta points on [-pi, pi]");
    output.add(app, true);
  }

  std::string run() const {
    const HamiltonianTemplate t = model.make();
    std::string fr = frame;
    if (fr.empty()) fr = t.family == Family::Pt5ThreeParam ? "mathieu" : "hamiltonian";
    if (fr != "mathieu" && fr != "hamiltonian") throw ConfigError("unknown frame '" + fr + "'");
    if (fr == "mathieu" && t.family != Family::Pt5ThreeParam)
      throw ConfigError("the Mathieu frame exists for the three-parameter family only");
    if (grid < 2) throw ConfigError("--grid needs at least two points");
    const auto [la, lb] = parse_pair(pair);
    const auto theta = uniform_grid(-M_PI, M_PI, grid);

    auto problem = [&](const HamiltonianTemplate& h) {
      if (fr == "hamiltonian") return h.problem();
      const MathieuFrame m = pt5_three_param_mathieu_frame(h.mu[2], h.mu[3], h.mu[6]);
      return SpectralProblem{m.element(), h.sector, h.truncation};
    };
    std::string csv;
    auto rows = [&](const std::string& prefix, const IntensityPair& r) {
      for (std::size_t i = 0; i < theta.size(); ++i)
        csv += prefix + num(theta[i]) + "," + num(r.a[i]) + "," + num(r.b[i]) + "," +
               num(r.sum[i]) + "\n";
    };
    if (sweep_spec.empty()) {
      csv = "theta,I_a,I_b,I_sum\n";
      rows("", intensity_pair(problem(t), la, lb, theta));
      output.script(intensity_script(false, ""));
      return csv;
    }
    const SweepAxis axis = parse_sweep_axis(sweep_spec);
    csv = "axis_value,theta,I_a,I_b,I_sum\n";
    for (int i = 0; i <= axis.steps; ++i) {
      const double x = axis.lo + (axis.hi - axis.lo) * i / axis.steps;
      rows(num(x) + ",", intensity_pair(problem(t.with(axis.name, x)), la, lb, theta));
    }
    output.script(intensity_script(true, axis.name));
    return csv;
  }
};

// ---------------------------------------------------------------- mathieu

struct MathieuCharCmd {
  std::string q = "0,0";
  std::string cls = "even-pi";
  int count = 8;
  int trunc = 0;
  Output output;

  void add(CLI::App* app) {
    app->add_option("--q", q, "complex parameter re,im");
    app->add_option("--class", cls, "even-pi, odd-pi, even-2pi or odd-2pi");
    app->add_option("--count", count, "number of characteristic values");
    app->add_option("--trunc", trunc, "recurrence size (0: automatic)");
    output.add(app, true);
  }

  std::string run() const {
    const cplx qv = parse_complex(q);
    const MathieuClass c = parse_mathieu_class(cls);
    if (count < 1) throw ConfigError("--count must be positive");
    int n = trunc;
    if (n == 0) n = std::max(count + 30, 40 + static_cast<int>(2.0 * std::abs(qv)));
    if (n < count + 8) throw ConfigError("--trunc must be at least count + 8");
    std::string csv = "order,re_a,im_a\n";
    const auto a = characteristic_values(qv, c, count, n);
    for (int k = 0; k < count; ++k)
      csv += std::to_string(mathieu_order(c, k)) + "," + num(a[k].real()) + "," +
             num(a[k].imag()) + "\n";
    output.script(mathieu_script());
    return csv;
  }
};

struct MathieuEpsCmd {
  double max_q = 20.0;
  std::string cls = "even-pi";
  MathieuEpOptions opt;
  Output output;

  void add(CLI::App* app) {
    app->add_option("--max-q", max_q, "scan q = i t for t in (0, max-q]");
    app->add_option("--class", cls, "even-pi, odd-pi, even-2pi or odd-2pi");
    app->add_option("--count", opt.count, "characteristic values watched");
    app->add_option("--step", opt.step, "scan step in t");
    app->add_option("--tol", opt.tol, "bisection tolerance in t");
    app->add_option("--trunc", opt.trunc, "recurrence size (0: automatic)");
    output.add(app, false);
  }

  std::string run() const {
    if (!(max_q > 0.0)) throw ConfigError("--max-q must be positive");
    if (!(opt.step > 0.0) || !(opt.tol > 0.0)) throw ConfigError("--step and --tol must be positive");
    std::string csv = "t,re_a,energy\n";
    for (const auto& ep : complex_mathieu_eps(max_q, parse_mathieu_class(cls), opt))
      csv += num(ep.t) + "," + num(ep.a_merge.real()) + "," + num(0.25 * ep.a_merge.real()) + "\n";
    return csv;
  }
};

// ---------------------------------------------------------------- e3-adjoint

struct E3Cmd {
  DysonParamsE3 p;
  std::array<double, 9> mu{};
  std::array<CLI::Option*, 9> mu_opt{};
  Output output;

  void add(CLI::App* app) {
    app->add_option("--lambda-z", p.lambda_z);
    app->add_option("--lambda-plus", p.lambda_plus);
    app->add_option("--lambda-minus", p.lambda_minus);
    app->add_option("--kappa-z", p.kappa_z);
    app->add_option("--kappa-plus", p.kappa_plus);
    app->add_option("--kappa-minus", p.kappa_minus);
    for (int i = 0; i < 9; ++i)
      mu_opt[i] = app->add_option("--mu" + std::to_string(i + 1), mu[i],
                                  "coupling of the PT1 Hamiltonian to transform");
    output.add(app, false);
  }

  Json run() const {
    Json report;
    report["config"] = {{"command", "e3-adjoint"},
                        {"lambda_z", p.lambda_z},
                        {"lambda_plus", p.lambda_plus},
                        {"lambda_minus", p.lambda_minus},
                        {"kappa_z", p.kappa_z},
                        {"kappa_plus", p.kappa_plus},
                        {"kappa_minus", p.kappa_minus}};
    report["table"] = to_json(e3_adjoint(p));
    bool any = false;
    for (auto* o : mu_opt) any = any || o->count() > 0;
    if (any) {
      report["config"]["mu"] = mu;
      const E3Element H = build_h_tilde_pt1(mu);
      const E3Element h = transform_h_tilde(p, H);
      report["H"] = to_json(H);
      report["h"] = to_json(h);
      report["residual"] = hermiticity_residual(h);
    }
    return report;
  }
};

std::string dump(const Json& j) { return fixed_json(j).dump(2) + "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"PT-symmetric Euclidean-algebra Hamiltonians: Dyson maps, spectra, EPs"};
  app.name("euclidpt");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string config_path;
  auto with_config = [&](CLI::App* sub) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--config", config_path, "JSON file of option values; flags override");
    return sub;
  };

  TransformCmd transform;
  SweepCmd spectrum, ep;
  IntensityCmd inten;
  MathieuCharCmd mchar;
  MathieuEpsCmd meps;
  E3Cmd e3;

  auto* s_transform = with_config(app.add_subcommand("transform", "hermitize a PT Hamiltonian"));
  auto* s_spectrum = with_config(app.add_subcommand("spectrum", "tracked spectrum along a sweep"));
  auto* s_ep = with_config(app.add_subcommand("ep", "exceptional points along a sweep"));
  auto* s_int = with_config(app.add_subcommand("intensity", "intensities of a level pair"));
  auto* s_mathieu = app.add_subcommand("mathieu", "Mathieu characteristic values");
  s_mathieu->require_subcommand(1);
  auto* s_mchar = with_config(s_mathieu->add_subcommand("char", "characteristic values"));
  auto* s_meps = with_config(s_mathieu->add_subcommand("eps", "collisions along q = i t"));
  auto* s_e3 = with_config(app.add_subcommand("e3-adjoint", "E3 Dyson adjoint table"));
  transform.add(s_transform);
  spectrum.add(s_spectrum, false);
  ep.add(s_ep, true);
  inten.add(s_int);
  mchar.add(s_mchar);
  meps.add(s_meps);
  e3.add(s_e3);

  try {
    std::vector<std::string> full = args;
    // Locate --config and the subcommand it belongs to, then splice in its values.
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size())
        path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0)
        path = args[i].substr(9);
      else
        continue;
      CLI::App* sub = nullptr;
      std::size_t at = 0;
      for (std::size_t k = 0; k < i && !sub; ++k) {
        if (args[k] == "mathieu" && k + 1 < i) {
          sub = s_mathieu->get_subcommand_no_throw(args[k + 1]);
          at = k + 2;
        } else if (auto* c = app.get_subcommand_no_throw(args[k]); c && c != s_mathieu) {
          sub = c;
          at = k + 1;
        }
      }
      if (!sub) throw ConfigError("--config must follow a subcommand");
      auto extra = config_args(path, sub);
      full.insert(full.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
      break;
    }
    std::vector<std::string> rev(full.rbegin(), full.rend());
    app.parse(rev);

    if (s_transform->parsed()) {
      transform.output.write(dump(transform.run()), out);
    } else if (s_spectrum->parsed()) {
      spectrum.output.write(spectrum.spectrum(), out);
    } else if (s_ep->parsed()) {
      ep.output.write(dump(ep.ep()), out);
    } else if (s_int->parsed()) {
      inten.output.write(inten.run(), out);
    } else if (s_mchar->parsed()) {
      mchar.output.write(mchar.run(), out);
    } else if (s_meps->parsed()) {
      meps.output.write(meps.run(), out);
    } else if (s_e3->parsed()) {
      e3.output.write(dump(e3.run()), out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const MapUndefined& e) {
    Json report;
    report["status"] = "map-undefined";
    report["coth_rhs"] = e.rhs();
    out << dump(report);
    err << "error: " << e.what() << " (coth rhs = " << num(e.rhs()) << ")\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateCouplings& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace euclidpt

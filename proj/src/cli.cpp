#include "wandering/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "wandering/basin.hpp"
#include "wandering/core_maps.hpp"
#include "wandering/error.hpp"
#include "wandering/experiments.hpp"
#include "wandering/io.hpp"
#include "wandering/lemma_verifier.hpp"
#include "wandering/metrics.hpp"
#include "wandering/real_dynamics.hpp"

namespace wandering {
namespace {

const std::string kAuto = "auto";

// Numeric aliases accepted by --lemma.
const std::vector<std::pair<std::string, std::string>> kLemmaAliases = {
    {"3.2", "halfplane-drift"}, {"3.4", "disc-inclusion"}, {"3.6", "circle-expansion"},
    {"6.2", "g-convergence"},   {"6.4", "phi-approx"},     {"7.3", "ordering"},
    {"7.2", "monotone"},
};

const std::vector<std::string> kLemmaNames = {"halfplane-drift", "disc-inclusion",
                                              "circle-expansion", "g-convergence",
                                              "phi-approx",      "ordering",
                                              "monotone"};

std::string default_t0() { return format_double(18.0 * kPi + 1.0); }
std::string default_y0() { return format_double(10.0 * kPi + 1.0 / (60.0 * kPi)); }

std::vector<SubcommandDef> build_table() {
  const FlagDef n0{"n0", "5", "first index with proven disc inclusion f(D>_n) in D>_{n+1}; must be >= 5"};
  return {
      {"fixed-points",
       "real fixed points per window (2n pi, 2(n+1) pi), multipliers, and a negative escaping orbit",
       {{"windows", "1..100", "window indices n, as a..b or a,b,c"},
        {"scan", "10000", "uniform scan samples per window before bisection"},
        {"delta", "0.1", "escape search starts in (-delta, 0)"},
        {"max-n", "1000", "iteration cap for the escape search"},
        {"output", "", "optional report file"}}},
      {"verify-lemmas",
       "dense-sampling checks of the inequalities behind the construction",
       {{"lemma", "all",
         "all, or one of halfplane-drift, disc-inclusion, circle-expansion, g-convergence, "
         "phi-approx, ordering, monotone"},
        {"n", kAuto, "index range n; auto picks the per-check default"},
        {"m", kAuto, "index range m for circle-expansion, g-convergence (max m), ordering, monotone"},
        {"samples", kAuto, "samples per index; auto picks the per-check default"},
        {"r", kAuto, "disc radius for g-convergence (auto 1) and phi-approx (auto 0.5)"},
        {"epsilon", "0.05", "target sup deviation for phi-approx"},
        {"y0", kAuto, "starting point of the ordering orbit (auto 2 m pi + 1/(12 m pi))"},
        {"steps", "50", "orbit length for ordering"},
        n0,
        {"output", "", "optional report file"}}},
      {"render-cauliflower",
       "classify the parabolic basin of q(z) = z - pi z^2 on [-2/pi, 2/pi]^2",
       {{"res", "1024", "pixels per side"},
        {"max-iter", "5000", "iteration cap before a pixel is Undecided"},
        {"output", "cauliflower.ppm", "PPM (P3) image, or run-length text when ending in .rle"}}},
      {"render-figure1",
       "overview window with several components U_n plus a zoom on U_2",
       {{"res-x", "1024", "horizontal pixels"},
        {"res-y", "512", "vertical pixels"},
        {"max-iter", "200", "iteration cap per pixel"},
        {"output", "figure1.ppm", "main image; the zoom goes to <stem>_u2.ppm"}}},
      {"estimate-component",
       "classify U_n on its default grid and report size, symmetry and diameter",
       {{"n", "10", "component index, must be >= n0"},
        {"res", "1024", "pixels per side"},
        {"max-steps", "1000", "iteration cap before a pixel is Undecided"},
        n0,
        {"output", "component.ppm", "PPM (P3) image, or run-length text when ending in .rle"}}},
      {"hausdorff-convergence",
       "Hausdorff distance between the rescaled U_n and the cauliflower",
       {{"n", "10,20,40,80", "component indices in [5, 500]"},
        {"res", "1024", "pixels per side for every grid"},
        {"max-iter", "5000", "cauliflower iteration cap"},
        {"max-steps", "1000", "component iteration cap"},
        {"output", "convergence.csv", "CSV n,d_H,undecided_fraction,pixel_size"}}},
      {"diameter-check",
       "measured diam(U_n) against 2/(n pi) plus one pixel diagonal",
       {{"n", "10,20,40,80", "component indices >= 5"},
        {"res", "1024", "pixels per side"},
        {"max-steps", "1000", "component iteration cap"},
        {"output", "", "optional report file"}}},
      {"contraction",
       "hyperbolic distances along w-orbits and along orbit pairs in the components",
       {{"m", "5", "starting index, >= 5"},
        {"t0", default_t0(), "real start in H_{3(m+1)pi}"},
        {"steps", "1000", "orbit length"},
        {"y0", default_y0(), "real start of the orbit pair, in D>_m"},
        {"ordering-steps", "50", "length of the ordering check from y0"},
        {"epsilon", "0.01", "required final distance and final bound"},
        {"output", "", "optional CSV n,t_n,d_n,bound"}}},
      {"explore-lambda",
       "heuristic components of f_lambda next to the bounded-orbit set of q_lambda",
       {{"lambda", "siegel", "preset (zero, third, siegel) or re,im"},
        {"n", "5,10,200", "increasing indices >= 5"},
        {"res", "256", "pixels per side"},
        {"max-iter", "1000", "steps before a bounded orbit counts as Inside"},
        {"r-explore", "1", "escape radius around 2(n+k)pi"},
        {"output", "lambda_out", "output directory"}}},
  };
}

const SubcommandDef& find_subcommand(const std::string& name) {
  for (const auto& s : subcommands())
    if (s.name == name) return s;
  fail(ErrorKind::Usage, "unknown subcommand '" + name + "'");
}

std::string quote(const std::string& s) {
  if (!s.empty() && s.find_first_of(" \t'\"") == std::string::npos) return s;
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// ---------------------------------------------------------------------------
// Typed access to the string parameters.

class Params {
 public:
  explicit Params(const RunConfig& c) : c_(c) {
    const auto& def = find_subcommand(c.subcommand);
    std::set<std::string> known;
    for (const auto& f : def.flags) known.insert(f.name);
    for (const auto& [k, v] : c.parameters)
      require(known.count(k) > 0, ErrorKind::Usage, "unknown parameter '" + k + "'");
  }

  const std::string& str(const std::string& key) const {
    const auto it = c_.parameters.find(key);
    require(it != c_.parameters.end(), ErrorKind::Usage, "missing parameter '" + key + "'");
    return it->second;
  }
  bool is_auto(const std::string& key) const { return str(key) == kAuto; }

  long integer(const std::string& key) const {
    const std::string& s = str(key);
    long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && p == s.data() + s.size(), ErrorKind::Usage,
            "--" + key + " expects an integer, got '" + s + "'");
    return v;
  }

  int positive(const std::string& key) const {
    const long v = integer(key);
    require(v >= 1 && v <= 1'000'000'000L, ErrorKind::Usage, "--" + key + " must be positive");
    return static_cast<int>(v);
  }

  double real(const std::string& key) const {
    const std::string& s = str(key);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && p == s.data() + s.size() && std::isfinite(v), ErrorKind::Usage,
            "--" + key + " expects a number, got '" + s + "'");
    return v;
  }

  std::vector<int> list(const std::string& key) const {
    try {
      return parse_index_list(str(key));
    } catch (const Error& e) {
      fail(ErrorKind::Usage, "--" + key + ": " + e.what());
    }
  }

 private:
  const RunConfig& c_;
};

// Collects report lines and the overall verdict.
class Sink {
 public:
  explicit Sink(std::ostream& out) : out_(out) {}

  void line(const std::string& s) {
    out_ << s << '\n';
    text_ += s + '\n';
  }
  void check(bool ok, const std::string& what) {
    line(std::string(ok ? "pass  " : "fail  ") + what);
    if (!ok) {
      if (pass_) first_failure_ = what;
      pass_ = false;
    }
  }
  void report(const VerificationReport& r) {
    line(r.to_line());
    if (!r.pass) {
      if (pass_) first_failure_ = r.lemma_id + " " + r.parameter_range;
      pass_ = false;
    }
  }
  void save(const std::string& path) const {
    if (!path.empty()) write_file_atomic(path, text_);
  }
  bool pass() const { return pass_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  std::ostream& out_;
  std::string text_;
  bool pass_ = true;
  std::string first_failure_;
};

void save_grid(const ClassifiedGrid& grid, const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".rle") == 0)
    write_file_atomic(path, run_length_dump(grid));
  else
    write_ppm(grid, path);
}

bool mirror_symmetric(const ClassifiedGrid& g) {
  for (int j = 0; j < g.spec.ny / 2; ++j)
    for (int i = 0; i < g.spec.nx; ++i)
      if (g.at(i, j).verdict != g.at(i, g.spec.ny - 1 - j).verdict) return false;
  return true;
}

// ---------------------------------------------------------------------------

int run_fixed_points(const Params& p, Sink& s) {
  const int scan = p.positive("scan");
  for (int n : p.list("windows")) {
    require(n >= 1, ErrorKind::Usage, "--windows indices must be >= 1");
    const auto roots = find_real_fixed_points(n, scan);
    for (const auto& r : roots) {
      const double residual = std::abs(eval_f(Complex{r.x, 0.0}).real() - r.x);
      std::ostringstream os;
      os << "window=" << n << " x=" << format_double(r.x)
         << " multiplier=" << format_double(r.multiplier) << " residual=" << format_double(residual)
         << " eta=" << format_double(r.eta);
      s.check(residual < 1e-10 && std::abs(r.multiplier) > kTwoPi - 1.0, os.str());
    }
  }
  const double delta = p.real("delta");
  require(delta > 0.0 && delta < kPi / 2, ErrorKind::Usage, "--delta must lie in (0, pi/2)");
  const EscapeWitness w = find_escaping_negative(delta, p.positive("max-n"));
  s.check(verify_escape_witness(w), "escape x0=" + format_double(w.x0) + " n=" + std::to_string(w.n) +
                                        " f^n(x0)=" + format_double(w.value));
  return s.pass() ? 0 : 1;
}

std::string resolve_lemma(const std::string& name) {
  for (const auto& [alias, id] : kLemmaAliases)
    if (name == alias) return id;
  for (const auto& id : kLemmaNames)
    if (name == id) return id;
  fail(ErrorKind::Usage, "unknown --lemma '" + name + "'");
}

int run_verify_lemmas(const Params& p, Sink& s) {
  const long n0 = p.integer("n0");
  require(n0 >= kN0, ErrorKind::Usage, "--n0 below 5 has no proven disc inclusion");
  const std::string sel = p.str("lemma");
  std::vector<std::string> lemmas;
  if (sel == "all")
    lemmas = kLemmaNames;
  else
    lemmas.push_back(resolve_lemma(sel));

  auto indices = [&](const std::string& key, std::vector<int> fallback) {
    return p.is_auto(key) ? fallback : p.list(key);
  };
  auto range = [](int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
  };
  auto samples = [&](int fallback) { return p.is_auto("samples") ? fallback : p.positive("samples"); };
  auto radius = [&](double fallback) { return p.is_auto("r") ? fallback : p.real("r"); };
  auto span = [](const std::vector<int>& v) {
    return std::to_string(*std::min_element(v.begin(), v.end())) + ".." +
           std::to_string(*std::max_element(v.begin(), v.end()));
  };

  for (const auto& id : lemmas) {
    if (id == "halfplane-drift") {
      const auto ns = indices("n", range(1, 20));
      const int k = samples(10000);
      std::vector<VerificationReport> rs;
      for (int n : ns) rs.push_back(check_halfplane_drift(n, k));
      s.report(combine_reports(rs, id, "n=" + span(ns)));
    } else if (id == "disc-inclusion") {
      const auto ns = indices("n", range(static_cast<int>(n0), 200));
      for (int n : ns)
        require(n >= n0, ErrorKind::Usage, "disc-inclusion indices must be >= n0");
      const int k = samples(4096);
      std::vector<VerificationReport> rs;
      for (int n : ns) rs.push_back(check_disc_inclusion(n, k));
      s.report(combine_reports(rs, id, "n=" + span(ns)));
    } else if (id == "circle-expansion") {
      const auto ms = indices("m", range(1, 20));
      const auto ns = indices("n", range(0, 20));
      const int k = samples(4096);
      std::vector<VerificationReport> rs;
      for (int m : ms)
        for (int n : ns) rs.push_back(check_circle_expansion(m, n, k));
      s.report(combine_reports(
          rs, id, "m=" + span(ms) + " n=" + span(ns)));
    } else if (id == "g-convergence") {
      const auto ms = indices("m", {200});
      const int m_max = *std::max_element(ms.begin(), ms.end());
      s.report(check_g_uniform_convergence(radius(1.0), m_max).report);
    } else if (id == "phi-approx") {
      const auto ns = indices("n", {1, 2, 3});
      const double r = radius(0.5);
      const double eps = p.real("epsilon");
      const auto grid = disc_grid(r, 20, 64);
      for (int n : ns) {
        const int m = check_phi_approximates_qn(n, r, eps);
        // Re-check at 2M, reporting the worst grid point there.
        std::size_t worst = 0;
        double again = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double d = std::abs(iterate_q(n, grid[i]) - compose_phi(2 * m, n, grid[i]));
          if (d > again) {
            again = d;
            worst = i;
          }
        }
        VerificationReport rep;
        rep.lemma_id = id;
        rep.parameter_range = "n=" + std::to_string(n) + " M=" + std::to_string(m) +
                              " recheck=2M epsilon=" + format_double(eps) + " r=" + format_double(r);
        rep.samples = static_cast<long>(grid.size());
        rep.worst_margin = eps - again;
        rep.pass = rep.worst_margin > 0.0;
        rep.witness = Witness{grid[worst], 2 * m, n, ""};
        s.report(rep);
      }
    } else if (id == "ordering") {
      const auto ms = indices("m", {5});
      const int steps = p.positive("steps");
      for (int m : ms) {
        const double y0 = p.is_auto("y0") ? m * kTwoPi + 1.0 / (12.0 * m * kPi) : p.real("y0");
        const OrderingResult r = check_ordering_sequences(m, y0, steps);
        s.report(r.report);
        for (std::size_t item = 0; item < r.item_margin.size(); ++item)
          s.line(std::string("  ") + kOrderingItemNames[item] + "  " +
                 format_double(r.item_margin[item]));
        VerificationReport base;
        base.lemma_id = "ordering-identity";
        base.parameter_range = "|T(x0)-y1| tolerance=1e-12 m=" + std::to_string(m);
        base.samples = 1;
        base.worst_margin = 1e-12 - r.base_identity_error;
        base.pass = base.worst_margin > 0.0;
        base.witness = Witness{Complex{y0, 0.0}, m, 0, ""};
        s.report(base);
      }
    } else if (id == "monotone") {
      const auto ms = indices("m", range(kN0, 50));
      const int k = samples(1000);
      std::vector<VerificationReport> rs;
      for (int m : ms) rs.push_back(check_monotone_increasing_on_discs(m, k));
      s.report(combine_reports(rs, id, "m=" + span(ms)));
    }
  }
  return s.pass() ? 0 : 1;
}

int run_render_cauliflower(const Params& p, Sink& s, const std::string& output) {
  const int res = p.positive("res");
  require(res >= 2, ErrorKind::Usage, "--res must be >= 2");
  const ClassifiedGrid g = classify_grid(cauliflower_grid(res), CauliflowerClassifier{}, p.positive("max-iter"));
  save_grid(g, output);
  s.line("inside=" + std::to_string(g.count(Verdict::Inside)) +
         " outside=" + std::to_string(g.count(Verdict::Outside)) +
         " undecided=" + std::to_string(g.count(Verdict::Undecided)) + " file=" + output);
  s.check(mirror_symmetric(g), "mirror symmetry about the real axis");
  return s.pass() ? 0 : 1;
}

int run_render_figure1(const Params& p, Sink& s, const std::string& output) {
  Figure1Config cfg;
  cfg.window.nx = p.positive("res-x");
  cfg.window.ny = p.positive("res-y");
  cfg.max_iter = p.positive("max-iter");
  const Figure1Result r = run_figure1(output, cfg);
  s.line("main=" + r.main_path + " inside=" + std::to_string(r.main.count(Verdict::Inside)));
  s.line("inset=" + r.inset_path + " inside=" + std::to_string(r.inset.count(Verdict::Inside)));
  s.check(mirror_symmetric(r.main) && mirror_symmetric(r.inset), "mirror symmetry about the real axis");
  return s.pass() ? 0 : 1;
}

int run_estimate_component(const Params& p, Sink& s, const std::string& output) {
  const long n0 = p.integer("n0");
  require(n0 >= kN0, ErrorKind::Usage, "--n0 below 5 has no proven disc inclusion");
  const long n = p.integer("n");
  require(n >= n0 && n <= 100000, ErrorKind::Usage,
          "--n " + std::to_string(n) + " is below n0 = " + std::to_string(n0) +
              "; sound classification needs n >= n0");
  const int res = p.positive("res");
  require(res >= 2, ErrorKind::Usage, "--res must be >= 2");
  const Discretization d = discretize_component(static_cast<int>(n), res, p.positive("max-steps"));
  save_grid(d.grid, output);
  s.line("n=" + std::to_string(n) + " inside=" + std::to_string(d.grid.count(Verdict::Inside)) +
         " undecided_fraction=" + format_double(d.grid.undecided_fraction()) + " file=" + output);
  s.check(mirror_symmetric(d.grid), "mirror symmetry about the real axis");
  const DiameterRow row = measure_diameter(d, static_cast<int>(n));
  s.check(row.pass, "diameter=" + format_double(row.diameter) + " bound=" + format_double(row.bound));
  return s.pass() ? 0 : 1;
}

int run_hausdorff(const Params& p, Sink& s, const std::string& output) {
  ConvergenceConfig cfg;
  cfg.n_list = p.list("n");
  cfg.resolution = p.positive("res");
  cfg.cauliflower_max_iter = p.positive("max-iter");
  cfg.wandering_max_steps = p.positive("max-steps");
  for (int n : cfg.n_list)
    require(n >= kN0 && n <= 500, ErrorKind::Usage, "--n indices must lie in [5, 500]");
  const ConvergenceReport r = run_hausdorff_convergence(cfg);
  const std::string csv = convergence_csv(r.rows);
  write_file_atomic(output, csv);
  for (const auto& row : r.rows)
    s.line("n=" + std::to_string(row.n) + " d_H=" + format_double(row.d_H) +
           " undecided_fraction=" + format_double(row.undecided_fraction) +
           " pixel_size=" + format_double(row.pixel_size));
  s.line("cauliflower undecided_fraction=" + format_double(r.cauliflower_undecided_fraction));
  s.line(std::string("trend strictly_decreasing=") + (r.strictly_decreasing ? "yes" : "no") +
         " (empirical)");
  s.check(r.max_rescaled_modulus <= r.rescaled_radius_bound,
          "rescaled |v| max=" + format_double(r.max_rescaled_modulus) +
              " bound=" + format_double(r.rescaled_radius_bound));
  s.check(r.reverify_failures == 0, "inside re-verification " +
                                        std::to_string(r.reverified - r.reverify_failures) + "/" +
                                        std::to_string(r.reverified));
  for (const auto& d : r.diameters)
    s.check(d.pass, "diameter n=" + std::to_string(d.n) + " " + format_double(d.diameter) +
                        " <= " + format_double(d.bound));
  return s.pass() ? 0 : 1;
}

int run_diameter(const Params& p, Sink& s) {
  const auto ns = p.list("n");
  for (int n : ns) require(n >= kN0, ErrorKind::Usage, "--n indices must be >= 5");
  for (const auto& d : run_diameter_check(ns, p.positive("res"), p.positive("max-steps")))
    s.check(d.pass, "diameter n=" + std::to_string(d.n) + " " + format_double(d.diameter) +
                        " <= " + format_double(d.bound) +
                        " rescaled=" + format_double(d.rescaled_diameter));
  return s.pass() ? 0 : 1;
}

int run_contraction(const Params& p, Sink& s, const std::string& output) {
  const long m = p.integer("m");
  require(m >= kN0 && m <= 1'000'000, ErrorKind::Usage, "--m must be >= 5");
  const int steps = p.positive("steps");
  const double eps = p.real("epsilon");
  const ContractionResult c = contraction_experiment(static_cast<int>(m), p.real("t0"), steps);
  bool under_bound = true;
  for (std::size_t n = 1; n < c.distances.size(); ++n) under_bound = under_bound && c.distances[n] <= c.bounds[n];
  s.check(c.strictly_increasing, "t_n strictly increasing");
  s.check(c.inside_halfplanes, "t_n in H_{3(m+n+1)pi}");
  std::string over;
  for (std::size_t n = 0; n + 1 < c.t.size(); ++n)
    if (!(c.t[n + 1] - c.t[n] < (11.0 / 8.0) * (static_cast<double>(m) + n) * kPi))
      over += (over.empty() ? " violated at n=" : ",") + std::to_string(n);
  s.check(c.step_bounded, "t_{n+1} - t_n < (11/8)(m+n)pi" + over);
  s.check(under_bound, "d_n <= bound for n >= 1");
  s.check(c.distances.back() < eps, "final d=" + format_double(c.distances.back()));

  const double y0 = p.real("y0");
  const OrderingResult o = check_ordering_sequences(static_cast<int>(m), y0, p.positive("ordering-steps"));
  s.report(o.report);
  const WanderingContractionResult w = wandering_contraction(static_cast<int>(m), y0, steps);
  s.check(w.comparison_holds, "disc distance of (x_n, y_n) below the bound");
  s.check(w.bounds.back() < eps, "final pair bound=" + format_double(w.bounds.back()));

  if (!output.empty()) {
    std::string csv = "n,t_n,d_n,bound\n";
    for (std::size_t n = 0; n < c.distances.size(); ++n)
      csv += std::to_string(n) + "," + format_double(c.t[n]) + "," + format_double(c.distances[n]) +
             "," + format_double(c.bounds[n]) + "\n";
    write_file_atomic(output, csv);
  }
  return s.pass() ? 0 : 1;
}

Complex parse_lambda(const std::string& text) {
  require(!text.empty(), ErrorKind::Usage, "--lambda must not be empty");
  if (text.find_first_of("0123456789") != 0 && text[0] != '-' && text[0] != '.')
    return lambda_preset(text);
  const auto comma = text.find(',');
  auto num = [&](const std::string& t) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    require(ec == std::errc{} && ptr == t.data() + t.size() && std::isfinite(v), ErrorKind::Usage,
            "--lambda expects a preset or re,im; got '" + text + "'");
    return v;
  };
  if (comma == std::string::npos) return {num(text), 0.0};
  return {num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

int run_explore_lambda(const Params& p, Sink& s, const std::string& output) {
  LambdaRunConfig cfg;
  cfg.lambda.lambda = parse_lambda(p.str("lambda"));
  cfg.n_list = p.list("n");
  cfg.resolution = p.positive("res");
  cfg.max_iter = p.positive("max-iter");
  cfg.r_explore = p.real("r-explore");
  try {
    cfg.validate();
  } catch (const Error& e) {
    fail(ErrorKind::Usage, e.what());
  }
  const LambdaReport r = run_lambda_explore(cfg, output);
  s.line("HEURISTIC lambda=" + format_double(cfg.lambda.lambda.real()) + "," +
         format_double(cfg.lambda.lambda.imag()) + " c=" + format_double(r.mandelbrot_c.real()) +
         "," + format_double(r.mandelbrot_c.imag()) + " linear_coefficient=" +
         format_double(r.linear_coefficient.real()) + "," +
         format_double(r.linear_coefficient.imag()));
  for (const auto& row : r.rows)
    s.line("n=" + std::to_string(row.n) + " inside=" + std::to_string(row.inside) +
           " d_H=" + (row.d_H < 0 ? std::string("n/a") : format_double(row.d_H)) +
           " image=" + row.image);
  s.line("metadata=" + r.metadata_path);
  return 0;
}

}  // namespace

const std::vector<SubcommandDef>& subcommands() {
  static const std::vector<SubcommandDef> table = build_table();
  return table;
}

std::vector<int> parse_index_list(const std::string& text) {
  auto to_int = [&](std::string_view t) {
    long v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    require(ec == std::errc{} && p == t.data() + t.size() && v >= 0 && v <= 1'000'000,
            ErrorKind::Usage, "malformed index list '" + text + "'");
    return static_cast<int>(v);
  };
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int a = to_int(std::string_view(text).substr(0, dots));
    const int b = to_int(std::string_view(text).substr(dots + 2));
    require(a <= b && b - a <= 1'000'000, ErrorKind::Usage, "empty index range '" + text + "'");
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
  }
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(to_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string RunConfig::command_line() const {
  std::string line = "wandering_lab " + subcommand;
  for (const auto& [k, v] : parameters) line += " --" + k + " " + (v.empty() ? "''" : quote(v));
  return line;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  require(!args.empty(), ErrorKind::Usage, "no subcommand given (try --help)");
  CLI::App app{"numerical laboratory for the wandering domains of z cos z + 2 pi", "wandering_lab"};
  app.require_subcommand(1);
  app.footer("Environment: WANDERING_LAB_THREADS caps the worker count.");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const auto& def : subcommands()) {
    CLI::App* sub = app.add_subcommand(def.name, def.help);
    auto& store = values[def.name];
    for (const auto& f : def.flags) {
      store[f.name] = f.default_value;
      sub->add_option("--" + f.name, store[f.name], f.help)
          ->default_str(f.default_value.empty() ? "''" : f.default_value);
    }
    subs.emplace_back(def.name, sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    fail(ErrorKind::Usage, e.what());
  }

  RunConfig config;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) {
      config.subcommand = name;
      config.parameters = values[name];
    }
  }
  require(!config.subcommand.empty(), ErrorKind::Usage, "no subcommand given");
  config.output_path = config.parameters["output"];
  return config;
}

int execute(const RunConfig& config, std::ostream& out) {
  const Params p(config);
  Sink s(out);
  const std::string& output = config.output_path;
  int status = 0;
  const std::string& sub = config.subcommand;
  if (sub == "fixed-points") {
    status = run_fixed_points(p, s);
    s.save(output);
  } else if (sub == "verify-lemmas") {
    status = run_verify_lemmas(p, s);
    s.save(output);
  } else if (sub == "render-cauliflower") {
    status = run_render_cauliflower(p, s, output);
  } else if (sub == "render-figure1") {
    status = run_render_figure1(p, s, output);
  } else if (sub == "estimate-component") {
    status = run_estimate_component(p, s, output);
  } else if (sub == "hausdorff-convergence") {
    status = run_hausdorff(p, s, output);
  } else if (sub == "diameter-check") {
    status = run_diameter(p, s);
    s.save(output);
  } else if (sub == "contraction") {
    status = run_contraction(p, s, output);
  } else if (sub == "explore-lambda") {
    status = run_explore_lambda(p, s, output);
  } else {
    fail(ErrorKind::Usage, "unknown subcommand '" + sub + "'");
  }
  if (status != 0) out << "FAIL subcommand=" << sub << " check=" << quote(s.first_failure()) << '\n';
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const Error& e) {
    err << "FAIL kind=" << kind_name(e.kind()) << " detail=" << quote(e.what()) << '\n';
    return 2;
  }
  out << "# config: " << config.command_line() << '\n';
  out.flush();
  try {
    return execute(config, out);
  } catch (const Error& e) {
    err << "FAIL subcommand=" << config.subcommand << " kind=" << kind_name(e.kind())
        << " detail=" << quote(e.what()) << '\n';
    return e.kind() == ErrorKind::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "FAIL subcommand=" << config.subcommand << " kind=Internal detail=" << quote(e.what())
        << '\n';
    return 1;
  }
}

}  // namespace wandering

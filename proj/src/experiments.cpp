#include "wandering/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "json.hpp"

#include "wandering/error.hpp"
#include "wandering/io.hpp"

namespace wandering {
namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

std::string coefficient_text(Complex a) {
  std::string s = format_double(a.real());
  if (a.imag() != 0.0) s = "(" + s + (a.imag() < 0 ? "" : "+") + format_double(a.imag()) + "i)";
  return s + "*z - pi*z^2";
}

}  // namespace

GridSpec cauliflower_grid(int resolution) {
  return {Complex{0.0, 0.0}, 2.0 / kPi, 2.0 / kPi, resolution, resolution};
}

GridSpec component_grid(int n, int resolution) {
  const double s = 1.0 / (n * kPi);
  return {Complex{n * kTwoPi + s, 0.0}, 2.2 * s, 2.2 * s, resolution, resolution};
}

Discretization discretize_cauliflower(int resolution, int max_iter) {
  Discretization d{classify_grid(cauliflower_grid(resolution), CauliflowerClassifier{}, max_iter),
                   {}};
  if (d.grid.count(Verdict::Inside) > 0) d.inside = extract_inside_points(d.grid);
  return d;
}

Discretization discretize_component(int n, int resolution, int max_steps) {
  Discretization d{
      classify_grid(component_grid(n, resolution), WanderingClassifier{n}, max_steps), {}};
  if (d.grid.count(Verdict::Inside) > 0) d.inside = extract_inside_points(d.grid);
  return d;
}

// ---------------------------------------------------------------------------

double point_set_diameter(const std::vector<Complex>& points) {
  require(!points.empty(), ErrorKind::EmptySet, "diameter of an empty set");
  const std::vector<Complex> hull = convex_hull(points);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j) best = std::max(best, std::abs(hull[i] - hull[j]));
  return best;
}

DiameterRow measure_diameter(const Discretization& component, int n) {
  require(!component.inside.points.empty(), ErrorKind::EmptySet,
          "component at index " + std::to_string(n) + " has no Inside pixel");
  DiameterRow row;
  row.n = n;
  row.diameter = point_set_diameter(component.inside.points);
  row.rescaled_diameter = point_set_diameter(rescale_component(component.inside, n).points);
  row.pixel_diagonal = component.grid.spec.pixel_diagonal();
  row.bound = 2.0 / (n * kPi) + row.pixel_diagonal;
  row.pass = row.diameter <= row.bound;
  return row;
}

std::vector<DiameterRow> run_diameter_check(const std::vector<int>& n_list, int resolution,
                                            int max_steps) {
  std::vector<DiameterRow> rows;
  for (int n : n_list) {
    require(n >= kN0, ErrorKind::PreconditionViolated, "diameter check needs n >= 5");
    rows.push_back(measure_diameter(discretize_component(n, resolution, max_steps), n));
  }
  return rows;
}

ConvergenceReport run_hausdorff_convergence(const ConvergenceConfig& config) {
  for (int n : config.n_list)
    require(n >= kN0 && n <= 500, ErrorKind::PreconditionViolated,
            "convergence indices must lie in [5, 500]");
  require(config.resolution >= 2, ErrorKind::PreconditionViolated, "resolution must be >= 2");

  ConvergenceReport report;
  const Discretization cauli = discretize_cauliflower(config.resolution, config.cauliflower_max_iter);
  require(!cauli.inside.points.empty(), ErrorKind::EmptySet, "cauliflower discretization is empty");
  report.cauliflower_undecided_fraction = cauli.grid.undecided_fraction();
  report.cauliflower_points = cauli.inside.points.size();
  const double cauli_diag = cauli.grid.spec.pixel_diagonal();

  for (int n : config.n_list) {
    const Discretization comp = discretize_component(n, config.resolution, config.wandering_max_steps);
    require(!comp.inside.points.empty(), ErrorKind::EmptySet,
            "component at index " + std::to_string(n) + " is empty; raise the resolution");

    // Soundness spot check on a fixed pseudo-random sample of Inside pixels.
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::vector<std::size_t> inside_idx;
    for (std::size_t k = 0; k < comp.grid.verdicts.size(); ++k)
      if (comp.grid.verdicts[k].verdict == Verdict::Inside) inside_idx.push_back(k);
    std::uniform_int_distribution<std::size_t> pick(0, inside_idx.size() - 1);
    for (int s = 0; s < config.reverify_samples; ++s) {
      const std::size_t k = inside_idx[pick(rng)];
      const int i = static_cast<int>(k % comp.grid.spec.nx);
      const int j = static_cast<int>(k / comp.grid.spec.nx);
      ++report.reverified;
      if (!reverify_wandering_inside(comp.grid.spec.pixel_center(i, j), n,
                                     comp.grid.verdicts[k].decided_at))
        ++report.reverify_failures;
    }

    const PointSet v = rescale_component(comp.inside, n);
    const double v_diag = n * comp.grid.spec.pixel_diagonal();
    for (Complex p : v.points) report.max_rescaled_modulus = std::max(report.max_rescaled_modulus, std::abs(p));
    report.rescaled_radius_bound = std::max(report.rescaled_radius_bound, 2.0 / kPi + v_diag);

    ConvergenceRow row;
    row.n = n;
    row.d_H = hausdorff_distance(v, cauli.inside).distance;
    row.undecided_fraction = comp.grid.undecided_fraction();
    row.pixel_size = std::max(v_diag, cauli_diag);
    if (!report.rows.empty() && !(row.d_H < report.rows.back().d_H)) report.strictly_decreasing = false;
    report.rows.push_back(row);
    report.diameters.push_back(measure_diameter(comp, n));
  }
  return report;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,d_H,undecided_fraction,pixel_size\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + "," + format_double(r.d_H) + "," +
           format_double(r.undecided_fraction) + "," + format_double(r.pixel_size) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

std::string inset_path_for(const std::string& output) {
  const std::filesystem::path p(output);
  std::filesystem::path inset = p.parent_path() / (p.stem().string() + "_u2" + p.extension().string());
  return inset.string();
}

Figure1Result run_figure1(const std::string& output, const Figure1Config& config) {
  Figure1Result r{classify_grid(config.window, FigureClassifier{}, config.max_iter),
                  classify_grid(config.inset, FigureClassifier{}, config.max_iter), output,
                  inset_path_for(output)};
  write_ppm(r.main, r.main_path);
  write_ppm(r.inset, r.inset_path);
  return r;
}

// ---------------------------------------------------------------------------

void LambdaRunConfig::validate() const {
  require(!n_list.empty(), ErrorKind::PreconditionViolated, "n_list must not be empty");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    require(n_list[i] >= kN0, ErrorKind::PreconditionViolated, "lambda indices must be >= 5");
    if (i > 0)
      require(n_list[i] > n_list[i - 1], ErrorKind::PreconditionViolated,
              "n_list must be increasing");
  }
  require(resolution >= 2 && max_iter >= 1 && r_explore > 0.0 && half_size_scale > 0.0,
          ErrorKind::PreconditionViolated, "lambda run parameters must be positive");
  require(is_finite(lambda.lambda), ErrorKind::PreconditionViolated, "lambda must be finite");
}

GridSpec lambda_component_grid(const LambdaRunConfig& config, int n) {
  const double s = 1.0 / (n * kPi);
  const Complex offset = (1.0 + config.lambda.lambda) * (0.5 * s);
  return {Complex{n * kTwoPi + offset.real(), offset.imag()}, config.half_size_scale * s,
          config.half_size_scale * s, config.resolution, config.resolution};
}

GridSpec lambda_quadratic_grid(const LambdaRunConfig& config) {
  const double s = 1.0 / kPi;
  return {(1.0 + config.lambda.lambda) * (0.5 * s), config.half_size_scale * s,
          config.half_size_scale * s, config.resolution, config.resolution};
}

LambdaReport run_lambda_explore(const LambdaRunConfig& config, const std::string& output_dir) {
  config.validate();
  const std::filesystem::path dir(output_dir);
  LambdaReport report;
  report.mandelbrot_c = mandelbrot_param(config.lambda);
  report.linear_coefficient = 1.0 + config.lambda.lambda;

  const ClassifiedGrid quad =
      classify_grid(lambda_quadratic_grid(config), QuadraticBoundedClassifier{config.lambda},
                    config.max_iter);
  report.quadratic_image = (dir / "lambda_quadratic.ppm").string();
  write_ppm(quad, report.quadratic_image);
  PointSet quad_points;
  if (quad.count(Verdict::Inside) > 0) quad_points = extract_inside_points(quad);

  nlohmann::json rows = nlohmann::json::array();
  for (int n : config.n_list) {
    const LambdaHeuristicClassifier c{config.lambda, n, config.r_explore};
    const ClassifiedGrid grid = classify_grid(lambda_component_grid(config, n), c, config.max_iter);
    LambdaRow row;
    row.n = n;
    row.inside = grid.count(Verdict::Inside);
    row.image = (dir / ("lambda_n" + std::to_string(n) + ".ppm")).string();
    write_ppm(grid, row.image);
    if (row.inside > 0 && !quad_points.points.empty())
      row.d_H = hausdorff_distance(rescale_component(extract_inside_points(grid), n), quad_points)
                    .distance;
    rows.push_back({{"n", n},
                    {"inside_pixels", row.inside},
                    {"d_H", row.d_H < 0 ? nlohmann::json(nullptr) : nlohmann::json(row.d_H)},
                    {"image", row.image}});
    report.rows.push_back(row);
  }

  nlohmann::json meta = {
      {"HEURISTIC", true},
      {"classifier", "orbit stays within |z - 2(n+k)pi| <= r_explore for max_iter steps"},
      {"lambda", complex_json(config.lambda.lambda)},
      {"mandelbrot_param", complex_json(report.mandelbrot_c)},
      {"linear_coefficient", complex_json(report.linear_coefficient)},
      {"limiting_quadratic", coefficient_text(report.linear_coefficient)},
      {"r_explore", config.r_explore},
      {"max_iter", config.max_iter},
      {"resolution", config.resolution},
      {"half_size_scale", config.half_size_scale},
      {"n_list", config.n_list},
      {"quadratic_image", report.quadratic_image},
      {"quadratic_inside_pixels", quad.count(Verdict::Inside)},
      {"rows", rows},
  };
  report.metadata_path = (dir / "lambda_meta.json").string();
  write_file_atomic(report.metadata_path, meta.dump(2) + "\n");
  return report;
}

Complex lambda_preset(const std::string& name) {
  if (name == "zero") return {0.0, 0.0};
  if (name == "third") return {1.0 / 3.0, 0.0};
  if (name == "siegel") return std::exp(Complex{0.0, 2.0 * std::sqrt(2.0) * kPi}) - 1.0;
  fail(ErrorKind::Usage, "unknown lambda preset '" + name + "' (zero, third, siegel)");
}

HeuristicComparison compare_heuristic_to_sound(int n, const GridSpec& grid, int max_iter) {
  const ClassifiedGrid sound = classify_grid(grid, WanderingClassifier{n}, max_iter);
  const ClassifiedGrid heur =
      classify_grid(grid, LambdaHeuristicClassifier{FamilyParam{}, n, 1.0}, max_iter);
  HeuristicComparison out;
  for (std::size_t k = 0; k < sound.verdicts.size(); ++k) {
    const bool s = sound.verdicts[k].verdict == Verdict::Inside;
    const bool h = heur.verdicts[k].verdict == Verdict::Inside;
    out.sound_inside += s;
    out.heuristic_inside += h;
    out.violations += s && !h;
  }
  return out;
}

}  // namespace wandering

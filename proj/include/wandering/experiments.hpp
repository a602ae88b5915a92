#pragma once

// End-to-end drivers: convergence of the rescaled components to the
// cauliflower, the diameter bound, the overview picture and the lambda
// family exploration.

#include <string>
#include <vector>

#include "wandering/basin.hpp"
#include "wandering/metrics.hpp"

namespace wandering {

inline constexpr int kCauliflowerMaxIter = 5000;
inline constexpr int kWanderingMaxSteps = 1000;
inline constexpr int kDefaultResolution = 1024;

/// [-2/pi, 2/pi]^2 at resolution x resolution.
GridSpec cauliflower_grid(int resolution);

/// Centre 2 n pi + 1/(n pi), half-sizes 2.2/(n pi).
GridSpec component_grid(int n, int resolution);

struct Discretization {
  ClassifiedGrid grid;
  /// Inside pixel centres; empty if the grid has none.
  PointSet inside;
};

Discretization discretize_cauliflower(int resolution, int max_iter = kCauliflowerMaxIter);
Discretization discretize_component(int n, int resolution, int max_steps = kWanderingMaxSteps);

// ---------------------------------------------------------------------------

struct ConvergenceRow {
  int n = 0;
  double d_H = 0.0;
  double undecided_fraction = 0.0;
  /// Larger of the rescaled component pixel diagonal and the cauliflower
  /// pixel diagonal: the discretization error scale of d_H.
  double pixel_size = 0.0;
};

struct DiameterRow {
  int n = 0;
  double diameter = 0.0;
  /// Diameter of the rescaled set, n * diameter up to rounding.
  double rescaled_diameter = 0.0;
  double bound = 0.0;  // 2/(n pi) + pixel diagonal
  double pixel_diagonal = 0.0;
  bool pass = false;
};

struct ConvergenceConfig {
  std::vector<int> n_list{10, 20, 40, 80};
  int resolution = kDefaultResolution;
  int cauliflower_max_iter = kCauliflowerMaxIter;
  int wandering_max_steps = kWanderingMaxSteps;
  /// Inside pixels per component re-checked with an independent orbit.
  int reverify_samples = 100;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::vector<DiameterRow> diameters;
  double cauliflower_undecided_fraction = 0.0;
  std::size_t cauliflower_points = 0;
  /// Largest |v| over every rescaled component and its allowed radius
  /// 2/pi + pixel diagonal.
  double max_rescaled_modulus = 0.0;
  double rescaled_radius_bound = 0.0;
  int reverified = 0;
  int reverify_failures = 0;
  bool strictly_decreasing = true;
};

/// Throws PreconditionViolated for n outside [5, 500] and EmptySet if a
/// discretization has no Inside pixel.
ConvergenceReport run_hausdorff_convergence(const ConvergenceConfig& config);

/// Header `n,d_H,undecided_fraction,pixel_size`.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

/// Largest distance between two points of the set (convex hull, then all
/// hull pairs).
double point_set_diameter(const std::vector<Complex>& points);

DiameterRow measure_diameter(const Discretization& component, int n);

std::vector<DiameterRow> run_diameter_check(const std::vector<int>& n_list, int resolution,
                                            int max_steps = kWanderingMaxSteps);

// ---------------------------------------------------------------------------

struct Figure1Config {
  /// Real range [-1.5, 4 pi + 1.5]: U_0, U_1, U_2 and their preimages.
  GridSpec window{Complex{2.0 * kPi, 0.0}, 2.0 * kPi + 1.5, kPi + 0.75, 1024, 512};
  /// Zoom on U_2 written next to the main image with suffix `_u2`.
  GridSpec inset{Complex{4.0 * kPi + 1.0 / (2.0 * kPi), 0.0}, 2.2 / (2.0 * kPi),
                 2.2 / (2.0 * kPi), 512, 512};
  int max_iter = 200;
};

struct Figure1Result {
  ClassifiedGrid main;
  ClassifiedGrid inset;
  std::string main_path;
  std::string inset_path;
};

/// `output` names the main PPM; the inset goes to `<stem>_u2<ext>`.
Figure1Result run_figure1(const std::string& output, const Figure1Config& config = {});

std::string inset_path_for(const std::string& output);

// ---------------------------------------------------------------------------

struct LambdaRunConfig {
  FamilyParam lambda;
  std::vector<int> n_list{5, 10, 200};
  int resolution = 256;
  int max_iter = 1000;
  double r_explore = 1.0;
  /// Grid half-size at index n is half_size_scale / (n pi).
  double half_size_scale = 2.2;

  /// Throws PreconditionViolated unless n_list is increasing with every
  /// entry >= 5 and the numeric fields are positive.
  void validate() const;
};

/// Grid near 2 n pi centred on the expected component, (1+lambda)/(2 n pi)
/// from 2 n pi.
GridSpec lambda_component_grid(const LambdaRunConfig& config, int n);

/// Grid for the filled bounded-orbit set of q_lambda, centred at
/// (1+lambda)/(2 pi) with half-sizes half_size_scale / pi.
GridSpec lambda_quadratic_grid(const LambdaRunConfig& config);

struct LambdaRow {
  int n = 0;
  std::size_t inside = 0;
  /// d_H between the rescaled heuristic component and the q_lambda set;
  /// negative when either set is empty.
  double d_H = -1.0;
  std::string image;
};

struct LambdaReport {
  Complex mandelbrot_c;
  Complex linear_coefficient;  // 1 + lambda
  std::vector<LambdaRow> rows;
  std::string quadratic_image;
  std::string metadata_path;
};

/// Writes lambda_n<n>.ppm per index, lambda_quadratic.ppm and
/// lambda_meta.json (flagged HEURISTIC) into output_dir.
LambdaReport run_lambda_explore(const LambdaRunConfig& config, const std::string& output_dir);

/// Named parameter presets: "zero", "third" (1/3) and "siegel"
/// (e^{2 sqrt2 pi i} - 1). Throws Usage for other names.
Complex lambda_preset(const std::string& name);

struct HeuristicComparison {
  std::size_t sound_inside = 0;
  std::size_t heuristic_inside = 0;
  /// Pixels Inside for the sound classifier but not for the heuristic one.
  std::size_t violations = 0;
};

/// Runs the sound wandering classifier and the lambda = 0 heuristic on the
/// same grid.
HeuristicComparison compare_heuristic_to_sound(int n, const GridSpec& grid, int max_iter);

}  // namespace wandering

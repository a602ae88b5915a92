#pragma once

// Pixel-grid classification of the parabolic basin of q and of the
// wandering components U_n, using trap discs for Inside and proven
// enclosures for Outside.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wandering/core_maps.hpp"
#include "wandering/metrics.hpp"

namespace wandering {

struct GridSpec {
  Complex center;
  double half_width = 0.0;
  double half_height = 0.0;
  int nx = 0;
  int ny = 0;

  /// Throws PreconditionViolated unless nx, ny >= 2 and both half-sizes are
  /// positive and finite.
  void validate() const;

  /// Offset of pixel (i, j) from the centre. Row 0 is the top row. Rows j
  /// and ny-1-j have exactly opposite imaginary offsets.
  Complex pixel_offset(int i, int j) const {
    return {(2.0 * i + 1.0 - nx) / nx * half_width,
            (ny - 1.0 - 2.0 * j) / ny * half_height};
  }
  Complex pixel_center(int i, int j) const { return center + pixel_offset(i, j); }

  double pixel_width() const { return 2.0 * half_width / nx; }
  double pixel_height() const { return 2.0 * half_height / ny; }
  double pixel_diagonal() const;
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
};

enum class Verdict : std::uint8_t { Inside, Outside, Undecided };

struct PixelVerdict {
  Verdict verdict = Verdict::Undecided;
  int decided_at = 0;

  bool operator==(const PixelVerdict&) const = default;
};

// ---------------------------------------------------------------------------
// Classifiers.

/// q(z) = z - pi z^2: Inside on entering D(1/(6pi), 1/(6pi)), Outside once
/// |z| > 2/pi.
struct CauliflowerClassifier {};

/// f near U_n, n >= 5. Orbits are tracked in the local frame
/// zeta_k = f^k(z) - 2(n+k)pi.
struct WanderingClassifier {
  int n = kN0;
};

/// f_lambda near 2 n pi. Heuristic: Outside once |zeta_k| > r_explore,
/// otherwise Inside after max_iter steps. Never Undecided.
struct LambdaHeuristicClassifier {
  FamilyParam p;
  int n = kN0;
  double r_explore = 1.0;
};

/// Bounded orbits of q_lambda. Outside once |z| > (2 + |1+lambda|)/pi, which
/// certifies escape; Inside after max_iter steps (heuristic).
struct QuadraticBoundedClassifier {
  FamilyParam p;
};

/// Absolute-frame rendering classifier for wide windows: Inside once the
/// orbit of f enters some D▷_j with j >= 5; Outside otherwise (including
/// when max_iter runs out). Best effort, with no Outside certificate.
struct FigureClassifier {};

using Classifier = std::variant<CauliflowerClassifier, WanderingClassifier,
                                LambdaHeuristicClassifier, QuadraticBoundedClassifier,
                                FigureClassifier>;

std::string describe(const Classifier& c);

PixelVerdict classify_cauliflower(Complex z, int max_iter);

/// `z` is an absolute point near 2 n pi.
PixelVerdict classify_wandering(Complex z, int n, int max_steps);

/// `zeta` is the offset z - 2 n pi.
PixelVerdict classify_wandering_local(Complex zeta, int n, int max_steps);

PixelVerdict classify_lambda_heuristic(Complex zeta, const LambdaHeuristicClassifier& c,
                                       int max_iter);
PixelVerdict classify_quadratic_bounded(Complex z, const FamilyParam& p, int max_iter);
PixelVerdict classify_figure(Complex z, int max_iter);

// ---------------------------------------------------------------------------

struct ClassifiedGrid {
  GridSpec spec;
  Classifier classifier;
  int max_iter = 0;
  std::string map_id;
  /// Row-major, verdicts[j * nx + i].
  std::vector<PixelVerdict> verdicts;

  const PixelVerdict& at(int i, int j) const {
    return verdicts[static_cast<std::size_t>(j) * spec.nx + i];
  }
  std::size_t count(Verdict v) const;
  double undecided_fraction() const;
};

/// Classifies every pixel centre. For the wandering and lambda classifiers
/// the local offset is formed as (center - 2 n pi) + pixel_offset, so the
/// large translation is subtracted once.
ClassifiedGrid classify_grid(const GridSpec& spec, const Classifier& classifier,
                             int max_iter);

/// Pixel centres with verdict Inside. Throws EmptySet if there are none.
PointSet extract_inside_points(const ClassifiedGrid& grid);

/// p -> n (p - 2 n pi).
PointSet rescale_component(const PointSet& points, int n);

/// Re-runs the orbit of an Inside pixel of the wandering classifier with
/// the unreduced local map (zeta + 2 k pi) cos zeta - 2 k pi and checks that
/// it lies in D_{n+k} at step k = decided_at.
bool reverify_wandering_inside(Complex z, int n, int decided_at);

// ---------------------------------------------------------------------------
// Serialization.

/// Plain PPM (P3): Inside (255,220,0), Outside (20,20,40),
/// Undecided (128,128,128).
std::string to_ppm(const ClassifiedGrid& grid);
void write_ppm(const ClassifiedGrid& grid, const std::string& path);

/// First line "nx ny", then one line per row of runs such as "I12 O3 U1".
std::string run_length_dump(const ClassifiedGrid& grid);

}  // namespace wandering

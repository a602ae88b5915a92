#pragma once

// Hausdorff distance between finite planar point sets, and hyperbolic
// distances between real points of half-planes and discs centred on the
// real axis.

#include <string>
#include <variant>
#include <vector>

#include "wandering/core_maps.hpp"

namespace wandering {

struct PointSet {
  std::vector<Complex> points;
  std::string provenance;
};

struct DirectedWitness {
  Complex point;
  /// Distance from `point` to the nearest point of the other set.
  double nearest = 0.0;
};

struct HausdorffResult {
  double distance = 0.0;
  DirectedWitness a_to_b;  // the point of A farthest from B
  DirectedWitness b_to_a;  // the point of B farthest from A
};

enum class HausdorffMethod { BruteForce, Bucketed };

/// Exact max-min over the two finite sets. Both methods compare the same
/// squared distances and return identical results; the bucketed one hashes
/// the target set into a uniform grid and searches rings outward.
/// Throws EmptySet if either set is empty.
HausdorffResult hausdorff_distance(const PointSet& a, const PointSet& b,
                                   HausdorffMethod method = HausdorffMethod::Bucketed);

/// sup over `from` of the distance to the nearest point of `to`.
DirectedWitness directed_hausdorff(const std::vector<Complex>& from,
                                   const std::vector<Complex>& to,
                                   HausdorffMethod method);

// ---------------------------------------------------------------------------

/// H_a = { Re z > a }; density 1 / (Re z - a).
struct HalfPlaneFrame {
  double a = 0.0;
};

/// Disc with real centre. Distances are computed by moving the left endpoint
/// of the real diameter to 0 and applying t = 1/z, which carries D(R, R)
/// onto H_{1/(2R)}; both steps are hyperbolic isometries.
struct DiscFrame {
  Complex center;
  double radius = 0.0;
};

using HyperbolicFrame = std::variant<HalfPlaneFrame, DiscFrame>;

/// Image of a real point of the disc in the reciprocal half-plane frame.
double disc_to_halfplane(const DiscFrame& disc, double x);
HalfPlaneFrame reciprocal_frame(const DiscFrame& disc);

/// Distance between real points on the frame's real geodesic.
/// Symmetric in (x1, x2). Throws OutsideFrame unless both are interior, and
/// PreconditionViolated for a disc whose centre is off the real axis.
double hyperbolic_distance_real(const HyperbolicFrame& frame, double x1, double x2);

// ---------------------------------------------------------------------------

struct ContractionResult {
  /// t_0..t_N with t_{n+1} = w_{m+n}(t_n).
  std::vector<double> t;
  /// d_n = distance in H_{3(m+n+1)pi} between t_n and t_{n+1}, n = 0..N-1.
  std::vector<double> distances;
  /// (11/8)(m+n)pi / ((pi/3) n (2m+n-1)) for n >= 1; +inf at n = 0.
  std::vector<double> bounds;
  bool strictly_increasing = true;
  /// Every t_n lies beyond 3(m+n+1)pi.
  bool inside_halfplanes = true;
  /// Every step satisfies t_{n+1} - t_n < (11/8)(m+n)pi.
  bool step_bounded = true;
};

/// Requires m >= 5 and real t0 > 3(m+1)pi; propagates DegenerateInput.
ContractionResult contraction_experiment(int m, double t0, int steps);

struct WanderingContractionResult {
  /// bounds[n-1] = distance in D▷_{m+n} between x_n and T(x_{n-1}),
  /// an upper bound on the distance between x_n and y_n in U_{m+n}.
  std::vector<double> bounds;
  /// Same quantity through H_{3(m+n)pi} with t_n = 1 / (x_n - 2(m+n)pi).
  std::vector<double> halfplane_route;
  /// distance in D▷_{m+n} between x_n and y_n.
  std::vector<double> disc_distance_xy;
  /// disc_distance_xy[k] <= bounds[k] for every k.
  bool comparison_holds = true;
};

/// Requires y0 in D▷_m ∩ R; throws PreconditionViolated.
WanderingContractionResult wandering_contraction(int m, double y0, int steps);

}  // namespace wandering

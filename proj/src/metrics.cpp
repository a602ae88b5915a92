#include "wandering/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "wandering/error.hpp"
#include "wandering/lemma_verifier.hpp"
#include "wandering/parallel.hpp"

namespace wandering {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double squared_distance(Complex a, Complex b) {
  const double dx = a.real() - b.real();
  const double dy = a.imag() - b.imag();
  return dx * dx + dy * dy;
}

// Uniform bucket grid over the bounding box of a point set.
class BucketGrid {
 public:
  explicit BucketGrid(const std::vector<Complex>& pts) : points_(pts) {
    double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
    for (Complex p : pts) {
      x0 = std::min(x0, p.real());
      x1 = std::max(x1, p.real());
      y0 = std::min(y0, p.imag());
      y1 = std::max(y1, p.imag());
    }
    origin_ = Complex{x0, y0};
    const double extent = std::max({x1 - x0, y1 - y0, 1e-300});
    // About two points per occupied cell for area-filling sets.
    const double cells_per_side =
        std::clamp(std::sqrt(static_cast<double>(pts.size()) / 2.0), 1.0, 4096.0);
    cell_ = extent / cells_per_side;
    if (!(cell_ > 0.0)) cell_ = 1.0;
    nx_ = static_cast<long>(std::floor((x1 - x0) / cell_)) + 1;
    ny_ = static_cast<long>(std::floor((y1 - y0) / cell_)) + 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto [cx, cy] = cell_of(pts[i]);
      buckets_[key(cx, cy)].push_back(i);
    }
  }

  double nearest_squared(Complex q) const {
    auto [qx, qy] = cell_of(q);
    qx = std::clamp(qx, 0L, nx_ - 1);
    qy = std::clamp(qy, 0L, ny_ - 1);
    double best = kInf;
    const long max_ring = std::max(nx_, ny_);
    for (long ring = 0; ring <= max_ring; ++ring) {
      for (long cx = qx - ring; cx <= qx + ring; ++cx) {
        if (cx < 0 || cx >= nx_) continue;
        const bool edge_x = (cx == qx - ring || cx == qx + ring);
        for (long cy = qy - ring; cy <= qy + ring; ++cy) {
          if (cy < 0 || cy >= ny_) continue;
          if (!edge_x && cy != qy - ring && cy != qy + ring) continue;
          const auto it = buckets_.find(key(cx, cy));
          if (it == buckets_.end()) continue;
          for (std::size_t idx : it->second)
            best = std::min(best, squared_distance(q, points_[idx]));
        }
      }
      if (best == kInf) continue;
      // Cells outside the scanned block form up to four rectangles; stop once
      // none of them can hold a closer point. The shrink absorbs rounding in
      // the cell assignment.
      const long x0 = qx - ring - 1, x1 = qx + ring + 1, y0 = qy - ring - 1, y1 = qy + ring + 1;
      const long bx0 = std::max(0L, qx - ring), bx1 = std::min(nx_ - 1, qx + ring);
      double reach = kInf;
      if (x0 >= 0) reach = std::min(reach, rect_distance_squared(q, 0, x0, 0, ny_ - 1));
      if (x1 < nx_) reach = std::min(reach, rect_distance_squared(q, x1, nx_ - 1, 0, ny_ - 1));
      if (y0 >= 0) reach = std::min(reach, rect_distance_squared(q, bx0, bx1, 0, y0));
      if (y1 < ny_) reach = std::min(reach, rect_distance_squared(q, bx0, bx1, y1, ny_ - 1));
      if (best <= reach * (1.0 - 1e-9)) break;
    }
    return best;
  }

 private:
  std::pair<long, long> cell_of(Complex p) const {
    return {static_cast<long>(std::floor((p.real() - origin_.real()) / cell_)),
            static_cast<long>(std::floor((p.imag() - origin_.imag()) / cell_))};
  }

  // Squared distance from q to the union of cells [cx0, cx1] x [cy0, cy1].
  double rect_distance_squared(Complex q, long cx0, long cx1, long cy0, long cy1) const {
    const double bx0 = origin_.real() + static_cast<double>(cx0) * cell_;
    const double bx1 = origin_.real() + static_cast<double>(cx1 + 1) * cell_;
    const double by0 = origin_.imag() + static_cast<double>(cy0) * cell_;
    const double by1 = origin_.imag() + static_cast<double>(cy1 + 1) * cell_;
    const double dx = std::max({bx0 - q.real(), 0.0, q.real() - bx1});
    const double dy = std::max({by0 - q.imag(), 0.0, q.imag() - by1});
    return dx * dx + dy * dy;
  }

  static long long key(long cx, long cy) {
    return (static_cast<long long>(cx) << 32) ^ static_cast<long long>(cy & 0xffffffffL);
  }

  const std::vector<Complex>& points_;
  Complex origin_;
  double cell_ = 1.0;
  long nx_ = 1;
  long ny_ = 1;
  std::unordered_map<long long, std::vector<std::size_t>> buckets_;
};

}  // namespace

DirectedWitness directed_hausdorff(const std::vector<Complex>& from,
                                   const std::vector<Complex>& to,
                                   HausdorffMethod method) {
  require(!from.empty() && !to.empty(), ErrorKind::EmptySet,
          "Hausdorff distance needs non-empty sets");
  std::vector<double> nearest(from.size(), kInf);
  if (method == HausdorffMethod::BruteForce) {
    parallel_for(from.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        double best = kInf;
        for (Complex q : to) best = std::min(best, squared_distance(from[i], q));
        nearest[i] = best;
      }
    });
  } else {
    const BucketGrid grid(to);
    parallel_for(from.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) nearest[i] = grid.nearest_squared(from[i]);
    });
  }
  std::size_t worst = 0;
  for (std::size_t i = 1; i < nearest.size(); ++i)
    if (nearest[i] > nearest[worst]) worst = i;
  return {from[worst], std::sqrt(nearest[worst])};
}

HausdorffResult hausdorff_distance(const PointSet& a, const PointSet& b,
                                   HausdorffMethod method) {
  require(!a.points.empty() && !b.points.empty(), ErrorKind::EmptySet,
          "Hausdorff distance needs non-empty sets");
  HausdorffResult r;
  r.a_to_b = directed_hausdorff(a.points, b.points, method);
  r.b_to_a = directed_hausdorff(b.points, a.points, method);
  r.distance = std::max(r.a_to_b.nearest, r.b_to_a.nearest);
  return r;
}

// ---------------------------------------------------------------------------

HalfPlaneFrame reciprocal_frame(const DiscFrame& disc) {
  return {1.0 / (2.0 * disc.radius)};
}

double disc_to_halfplane(const DiscFrame& disc, double x) {
  const double left = disc.center.real() - disc.radius;
  return 1.0 / (x - left);
}

double hyperbolic_distance_real(const HyperbolicFrame& frame, double x1, double x2) {
  if (const auto* hp = std::get_if<HalfPlaneFrame>(&frame)) {
    require(x1 > hp->a && x2 > hp->a, ErrorKind::OutsideFrame,
            "point outside the half-plane");
    return std::abs(std::log((x2 - hp->a) / (x1 - hp->a)));
  }
  const auto& disc = std::get<DiscFrame>(frame);
  require(disc.radius > 0.0, ErrorKind::PreconditionViolated, "disc radius must be > 0");
  require(disc.center.imag() == 0.0, ErrorKind::PreconditionViolated,
          "disc centre must be real");
  require(std::abs(x1 - disc.center.real()) < disc.radius &&
              std::abs(x2 - disc.center.real()) < disc.radius,
          ErrorKind::OutsideFrame, "point outside the disc");
  const HalfPlaneFrame hp = reciprocal_frame(disc);
  return hyperbolic_distance_real(hp, disc_to_halfplane(disc, x1),
                                  disc_to_halfplane(disc, x2));
}

// ---------------------------------------------------------------------------

ContractionResult contraction_experiment(int m, double t0, int steps) {
  require(m >= kN0, ErrorKind::PreconditionViolated, "contraction needs m >= 5");
  require(steps >= 1, ErrorKind::PreconditionViolated, "steps must be >= 1");
  require(t0 > 3.0 * (m + 1) * kPi, ErrorKind::PreconditionViolated,
          "t0 must exceed 3(m+1)pi");
  ContractionResult r;
  r.t.reserve(static_cast<std::size_t>(steps) + 1);
  r.t.push_back(t0);
  for (int n = 0; n < steps; ++n)
    r.t.push_back(eval_w(m + n, Complex{r.t.back(), 0.0}).real());

  r.distances.resize(static_cast<std::size_t>(steps));
  r.bounds.resize(static_cast<std::size_t>(steps));
  for (int n = 0; n < steps; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const double a = 3.0 * (m + n + 1) * kPi;
    const double tn = r.t[i];
    const double tn1 = r.t[i + 1];
    if (!(tn1 > tn)) r.strictly_increasing = false;
    if (!(tn > a) || !(tn1 > a)) r.inside_halfplanes = false;
    if (!(tn1 - tn < (11.0 / 8.0) * (m + n) * kPi)) r.step_bounded = false;
    r.distances[i] = (tn > a && tn1 > a)
                         ? hyperbolic_distance_real(HalfPlaneFrame{a}, tn, tn1)
                         : kInf;
    r.bounds[i] = n == 0 ? kInf
                         : (11.0 / 8.0) * (m + n) * kPi /
                               ((kPi / 3.0) * n * (2.0 * m + n - 1));
  }
  return r;
}

WanderingContractionResult wandering_contraction(int m, double y0, int steps) {
  require(steps >= 1, ErrorKind::PreconditionViolated, "steps must be >= 1");
  const OrderingOrbit orbit = build_ordering_orbit(m, y0, steps);
  WanderingContractionResult r;
  for (int n = 1; n <= steps; ++n) {
    const auto i = static_cast<std::size_t>(n);
    // D▷_{m+n} is D_{m+n} moved by T^{m+n}; measure in the local copy.
    const DiscSpec disc = DiscSpec::base(m + n);
    const DiscFrame frame{disc.center, disc.radius};
    const double xn = orbit.x_local[i];
    const double t_prev = orbit.x_local[i - 1];  // T(x_{n-1}) in frame m+n
    const double yn = orbit.y_local[i];
    const double bound = hyperbolic_distance_real(frame, xn, t_prev);
    const double via_halfplane = hyperbolic_distance_real(
        HalfPlaneFrame{3.0 * (m + n) * kPi}, 1.0 / xn, 1.0 / t_prev);
    const double xy = hyperbolic_distance_real(frame, xn, yn);
    r.bounds.push_back(bound);
    r.halfplane_route.push_back(via_halfplane);
    r.disc_distance_xy.push_back(xy);
    if (!(xy <= bound)) r.comparison_holds = false;
  }
  return r;
}

}  // namespace wandering

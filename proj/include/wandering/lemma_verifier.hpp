#pragma once

// Dense-sampling checks of the quantitative inequalities behind the
// wandering-domain construction. Every check reports its worst margin and
// the sample achieving it; pass iff the margin is strictly positive.
//
// Sampling is deterministic: uniform angles (offset by half a step) on
// circles, log-spaced rectangles in half-planes, fixed polar grids on discs.

#include <array>
#include <string>
#include <vector>

#include "wandering/core_maps.hpp"

namespace wandering {

struct DiscSpec {
  Complex center;
  double radius = 0.0;

  /// D_n = D(1/(6 n pi), 1/(6 n pi)).
  static DiscSpec base(int n);
  /// D▷_n = D_n translated by 2 n pi.
  static DiscSpec translated(int n);

  bool contains(Complex z) const { return std::abs(z - center) < radius; }
};

struct HalfPlaneSpec {
  double a = 0.0;

  bool contains(Complex z) const { return z.real() > a; }
};

/// Circle |z| = radius, optionally moved by T^translate.
struct CircleSpec {
  double radius = 0.0;
  int translate = 0;

  /// C_n: radius 2/(n pi), centred at the origin.
  static CircleSpec enclosing(int n) { return {2.0 / (n * kPi), 0}; }

  Complex center() const { return eval_T(Complex{}, translate); }
  bool strictly_inside(Complex z) const {
    return std::abs(z - center()) < radius;
  }
};

struct Witness {
  Complex point;
  int m = -1;
  int n = -1;
  std::string note;
};

struct VerificationReport {
  std::string lemma_id;
  std::string parameter_range;
  long samples = 0;
  bool pass = false;
  double worst_margin = 0.0;
  Witness witness;

  /// `lemma_id  pass|fail  worst_margin  witness_re  witness_im  params...`
  std::string to_line() const;
};

/// Collapses a sweep into one report: the worst margin wins, ties keep the
/// earliest report.
VerificationReport combine_reports(const std::vector<VerificationReport>& reports,
                                   const std::string& lemma_id,
                                   const std::string& parameter_range);

// ---------------------------------------------------------------------------
// Half-plane drift: Re t + (2/3) n pi < Re w_n(t) < Re t + (11/8) n pi on
// H_{3 n pi}.

struct DriftSides {
  double lower;  // Re w_n(t) - Re t - (2/3) n pi
  double upper;  // Re t + (11/8) n pi - Re w_n(t)
};

DriftSides halfplane_drift_sides(int n, Complex t);
double halfplane_drift_margin(int n, Complex t);

/// Samples t with Re t in [3 n pi (1 + 1e-6), 1e4] and Im t in [-1e3, 1e3]
/// on a log-spaced lattice (the half-plane is truncated there; margins grow
/// with Re t).
VerificationReport check_halfplane_drift(int n, int samples);

// ---------------------------------------------------------------------------
// Disc inclusion: f(D▷_n) inside D▷_{n+1}, n >= 5.
//
// Evaluated in the local frame, where it reads h_n(D_n) inside D_{n+1}; the
// two are the same statement under T^n. Boundary sampling suffices by the
// maximum principle. Both discs touch 0, which h_n fixes, so the margin
// vanishes at the tangency point and the grid avoids theta = pi.

/// r_{n+1} - |h_n(zeta) - c_{n+1}| for a point zeta in the local frame.
double disc_inclusion_margin(int n, Complex zeta);

VerificationReport check_disc_inclusion(int n, int boundary_samples);

// ---------------------------------------------------------------------------
// Circle expansion: |h_{m+n}(z)| > 2/(m pi) on C_m.

double circle_expansion_margin(int m, int n, Complex z);
VerificationReport check_circle_expansion(int m, int n, int samples);

// ---------------------------------------------------------------------------
// Uniform convergence g_m -> q on |z| <= r with rate mu / m.

/// Polar grid on the closed disc |z| <= r: `rings` radii r k / rings and
/// `spokes` angles, including the boundary circle and theta = pi.
std::vector<Complex> disc_grid(double r, int rings, int spokes);

/// sup over `grid` of |g_m(z) - q(z)|, with the maximising point.
double g_sup_deviation(int m, const std::vector<Complex>& grid,
                       Complex* argmax = nullptr);

struct GConvergenceResult {
  VerificationReport report;
  double mu = 0.0;
  /// sup_deviation[m-1] = s_m.
  std::vector<double> sup_deviation;
};

/// mu = s_1; pass iff s_m <= mu/m (1 + 1e-6) for every m <= m_max.
/// The grid is the 100 x 100 polar disc grid (10^4 points).
GConvergenceResult check_g_uniform_convergence(double r, int m_max);

// ---------------------------------------------------------------------------
// phi_{m,n} approximates q^n.

/// sup over `grid` of |q^n(z) - phi_{m,n}(z)|.
double phi_qn_sup_deviation(int m, int n, const std::vector<Complex>& grid);

/// Least m <= 10^6 (scanned upward) with deviation < epsilon on the polar
/// grid of |z| <= r. The result is the first m observed, not a proven
/// minimal bound. Throws NotReached.
int check_phi_approximates_qn(int n, double r, double epsilon,
                              int rings = 20, int spokes = 64);

// ---------------------------------------------------------------------------
// Ordering sequences on the real axis.

enum class OrderingItem {
  Membership = 0,       // x_n, y_n in D▷_{m+n} ∩ R
  TranslateDominates,   // T(x_n) > x_{n+1} > 2(m+n+1)pi, same for y
  Commutator,           // T∘f >= f∘T at x_n, y_n
  Gap,                  // y_n > x_n
  TranslateBound,       // T(x_n) >= y_{n+1}
  ShiftedMembership,    // x_n in T^{-1}(D▷_{m+n+1}) ∩ D▷_{m+n}
};

inline constexpr std::array<const char*, 6> kOrderingItemNames = {
    "membership", "translate-dominates", "commutator",
    "gap",        "translate-bound",     "shifted-membership"};

struct OrderingOrbit {
  int m = 0;
  /// Local offsets: x_n = 2 (m+n) pi + x_local[n], same for y.
  std::vector<double> x_local;
  std::vector<double> y_local;

  double x(int n) const { return (m + n) * kTwoPi + x_local[n]; }
  double y(int n) const { return (m + n) * kTwoPi + y_local[n]; }
};

/// y_0 given, x_0 = T^{-1}(f(y_0)), x_n = f^n(x_0), y_n = f^n(y_0), for
/// n = 0..steps. Tracked in the local frame via h_{m+n}.
OrderingOrbit build_ordering_orbit(int m, double y0, int steps);

struct OrderingResult {
  VerificationReport report;
  /// Worst gap per item; an item holds iff its margin is > 0.
  std::array<double, 6> item_margin{};
  /// |T(x_0) - y_1|, which vanishes by construction.
  double base_identity_error = 0.0;
};

/// Requires y0 in (2 m pi, 2 m pi + 1/(3 m pi)); throws PreconditionViolated.
OrderingResult check_ordering_sequences(int m, double y0, int steps);

// ---------------------------------------------------------------------------
// f increasing on D▷_m ∩ R and T(D▷_m) ∩ R.

VerificationReport check_monotone_increasing_on_discs(int m, int samples);

}  // namespace wandering

#include "wandering/lemma_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wandering/error.hpp"
#include "wandering/io.hpp"
#include "wandering/parallel.hpp"
#include "wandering/real_dynamics.hpp"

namespace wandering {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Evaluates margin(point) for every sample and returns the index of the
// smallest margin (lowest index on ties), independent of thread partitioning.
template <typename MarginFn>
std::size_t worst_sample(const std::vector<Complex>& points, MarginFn margin,
                         std::vector<double>& margins) {
  margins.assign(points.size(), kInf);
  parallel_for(points.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) margins[i] = margin(points[i]);
  });
  std::size_t worst = 0;
  for (std::size_t i = 1; i < margins.size(); ++i)
    if (margins[i] < margins[worst]) worst = i;
  return worst;
}

VerificationReport make_report(std::string lemma_id, std::string params,
                               long samples, double margin, Witness witness) {
  VerificationReport r;
  r.lemma_id = std::move(lemma_id);
  r.parameter_range = std::move(params);
  r.samples = samples;
  r.worst_margin = margin;
  r.pass = margin > 0.0;
  r.witness = std::move(witness);
  return r;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < count; ++i)
    v[static_cast<std::size_t>(i)] =
        lo * std::exp(ratio * static_cast<double>(i) / (count - 1));
  v.back() = hi;
  return v;
}

std::string n_str(int n) { return std::to_string(n); }

}  // namespace

DiscSpec DiscSpec::base(int n) {
  const double r = 1.0 / (6.0 * n * kPi);
  return {Complex{r, 0.0}, r};
}

DiscSpec DiscSpec::translated(int n) {
  const double r = 1.0 / (6.0 * n * kPi);
  return {Complex{n * kTwoPi + r, 0.0}, r};
}

std::string VerificationReport::to_line() const {
  std::string line = lemma_id;
  line += "  ";
  line += pass ? "pass" : "fail";
  line += "  " + format_double(worst_margin);
  line += "  " + format_double(witness.point.real());
  line += "  " + format_double(witness.point.imag());
  line += "  " + parameter_range;
  line += " samples=" + std::to_string(samples);
  if (witness.m >= 0) line += " witness_m=" + std::to_string(witness.m);
  if (witness.n >= 0) line += " witness_n=" + std::to_string(witness.n);
  if (!witness.note.empty()) line += " witness=" + witness.note;
  return line;
}

VerificationReport combine_reports(const std::vector<VerificationReport>& reports,
                                   const std::string& lemma_id,
                                   const std::string& parameter_range) {
  require(!reports.empty(), ErrorKind::PreconditionViolated,
          "combine_reports needs at least one report");
  const VerificationReport* worst = &reports.front();
  long samples = 0;
  for (const auto& r : reports) {
    samples += r.samples;
    if (r.worst_margin < worst->worst_margin) worst = &r;
  }
  return make_report(lemma_id, parameter_range, samples, worst->worst_margin,
                     worst->witness);
}

// ---------------------------------------------------------------------------

DriftSides halfplane_drift_sides(int n, Complex t) {
  const double w_re = eval_w(n, t).real();
  const double npi = n * kPi;
  return {w_re - t.real() - (2.0 / 3.0) * npi,
          t.real() + (11.0 / 8.0) * npi - w_re};
}

double halfplane_drift_margin(int n, Complex t) {
  const auto s = halfplane_drift_sides(n, t);
  return std::min(s.lower, s.upper);
}

VerificationReport check_halfplane_drift(int n, int samples) {
  require(n >= 1, ErrorKind::PreconditionViolated, "drift check needs n >= 1");
  require(samples >= 100, ErrorKind::PreconditionViolated,
          "drift check needs at least 100 samples");
  const double a = 3.0 * n * kPi;
  constexpr double kReMax = 1e4;
  constexpr double kImMax = 1e3;
  constexpr double kImMin = 1e-3;
  require(a * (1.0 + 1e-6) < kReMax, ErrorKind::PreconditionViolated,
          "half-plane boundary beyond the sampled window");

  const int nre = std::max(10, static_cast<int>(std::lround(std::sqrt(samples))));
  const int nim = std::max(1, samples / nre);
  std::vector<double> re_offsets = log_spaced(a * 1e-6, kReMax - a, nre);
  std::vector<double> ims;
  if (nim % 2 == 1) ims.push_back(0.0);
  for (double y : log_spaced(kImMin, kImMax, nim / 2)) {
    ims.push_back(y);
    ims.push_back(-y);
  }

  std::vector<Complex> points;
  points.reserve(re_offsets.size() * ims.size());
  for (double off : re_offsets)
    for (double y : ims) points.emplace_back(a + off, y);

  std::vector<double> margins;
  const std::size_t worst =
      worst_sample(points, [n](Complex t) { return halfplane_drift_margin(n, t); },
                   margins);
  const auto sides = halfplane_drift_sides(n, points[worst]);
  Witness w{points[worst], -1, n, sides.lower <= sides.upper ? "lower" : "upper"};
  return make_report("halfplane-drift",
                     "n=" + n_str(n) + " re=[3npi(1+1e-6),1e4] im=[-1e3,1e3]",
                     static_cast<long>(points.size()), margins[worst], w);
}

// ---------------------------------------------------------------------------

double disc_inclusion_margin(int n, Complex zeta) {
  const DiscSpec next = DiscSpec::base(n + 1);
  return next.radius - std::abs(eval_h(n, zeta) - next.center);
}

VerificationReport check_disc_inclusion(int n, int boundary_samples) {
  require(n >= 1, ErrorKind::PreconditionViolated, "disc index must be >= 1");
  require(boundary_samples >= 8, ErrorKind::PreconditionViolated,
          "disc check needs at least 8 samples");
  const DiscSpec disc = DiscSpec::base(n);
  std::vector<Complex> points(static_cast<std::size_t>(boundary_samples));
  for (int k = 0; k < boundary_samples; ++k) {
    const double theta = kTwoPi * (k + 0.5) / boundary_samples;
    points[static_cast<std::size_t>(k)] =
        disc.center + disc.radius * Complex{std::cos(theta), std::sin(theta)};
  }
  std::vector<double> margins;
  const std::size_t worst = worst_sample(
      points, [n](Complex z) { return disc_inclusion_margin(n, z); }, margins);
  Witness w{points[worst], -1, n, "local-frame"};
  std::string params = "n=" + n_str(n) +
                       " boundary-only(maximum-principle) frame=z-2npi";
  if (n < kN0) params += " below-n0";
  return make_report("disc-inclusion", params, boundary_samples, margins[worst], w);
}

// ---------------------------------------------------------------------------

double circle_expansion_margin(int m, int n, Complex z) {
  return std::abs(eval_h(m + n, z)) - 2.0 / (m * kPi);
}

VerificationReport check_circle_expansion(int m, int n, int samples) {
  require(m >= 1 && n >= 0, ErrorKind::PreconditionViolated,
          "circle expansion needs m >= 1, n >= 0");
  require(samples >= 100, ErrorKind::PreconditionViolated,
          "circle expansion needs at least 100 samples");
  const double radius = CircleSpec::enclosing(m).radius;
  std::vector<Complex> points(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double theta = kTwoPi * k / samples;
    points[static_cast<std::size_t>(k)] = std::polar(radius, theta);
  }
  std::vector<double> margins;
  const std::size_t worst = worst_sample(
      points, [m, n](Complex z) { return circle_expansion_margin(m, n, z); },
      margins);
  Witness w{points[worst], m, n, ""};
  return make_report("circle-expansion", "m=" + n_str(m) + " n=" + n_str(n),
                     samples, margins[worst], w);
}

// ---------------------------------------------------------------------------

std::vector<Complex> disc_grid(double r, int rings, int spokes) {
  std::vector<Complex> grid;
  grid.reserve(static_cast<std::size_t>(rings) * static_cast<std::size_t>(spokes));
  for (int k = 1; k <= rings; ++k) {
    const double radius = r * k / rings;
    for (int j = 0; j < spokes; ++j)
      grid.push_back(std::polar(radius, kTwoPi * j / spokes));
  }
  return grid;
}

double g_sup_deviation(int m, const std::vector<Complex>& grid, Complex* argmax) {
  std::vector<double> dev;
  const std::size_t worst = worst_sample(
      grid, [m](Complex z) { return -std::abs(eval_g(m, z) - eval_q(z)); }, dev);
  if (argmax) *argmax = grid[worst];
  return -dev[worst];
}

GConvergenceResult check_g_uniform_convergence(double r, int m_max) {
  require(r > 0.0 && r <= 5.0, ErrorKind::PreconditionViolated,
          "g convergence needs 0 < r <= 5");
  require(m_max >= 1, ErrorKind::PreconditionViolated, "m_max must be >= 1");
  const auto grid = disc_grid(r, 100, 100);
  GConvergenceResult out;
  out.sup_deviation.resize(static_cast<std::size_t>(m_max));
  std::vector<Complex> argmax(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m)
    out.sup_deviation[static_cast<std::size_t>(m - 1)] =
        g_sup_deviation(m, grid, &argmax[static_cast<std::size_t>(m - 1)]);
  out.mu = out.sup_deviation.front();

  // m = 1 is the point where mu is fitted; its margin is 1e-6 mu by construction.
  double margin = out.mu * 1e-6;
  int worst_m = 1;
  for (int m = 2; m <= m_max; ++m) {
    const double slack = out.mu / m * (1.0 + 1e-6) -
                         out.sup_deviation[static_cast<std::size_t>(m - 1)];
    if (m == 2 || slack < margin) {
      margin = slack;
      worst_m = m;
    }
  }
  Witness w{argmax[static_cast<std::size_t>(worst_m - 1)], worst_m, -1,
            "mu=" + format_double(out.mu)};
  out.report = make_report(
      "g-convergence", "r=" + format_double(r) + " m=1.." + n_str(m_max),
      static_cast<long>(grid.size()) * m_max, margin, w);
  return out;
}

// ---------------------------------------------------------------------------

double phi_qn_sup_deviation(int m, int n, const std::vector<Complex>& grid) {
  double sup = 0.0;
  for (Complex z : grid)
    sup = std::max(sup, std::abs(iterate_q(n, z) - compose_phi(m, n, z)));
  return sup;
}

int check_phi_approximates_qn(int n, double r, double epsilon, int rings,
                              int spokes) {
  require(n >= 0 && n <= 12, ErrorKind::PreconditionViolated,
          "phi/q^n check supports 0 <= n <= 12");
  require(r > 0.0 && r <= 1.0, ErrorKind::PreconditionViolated,
          "phi/q^n check supports 0 < r <= 1");
  require(epsilon > 0.0, ErrorKind::PreconditionViolated, "epsilon must be > 0");
  if (n == 0) return 1;
  constexpr int kMaxM = 1000000;
  const auto grid = disc_grid(r, rings, spokes);
  std::vector<Complex> qn(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) qn[i] = iterate_q(n, grid[i]);
  std::vector<double> dev(grid.size());
  for (int m = 1; m <= kMaxM; ++m) {
    parallel_for(grid.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        dev[i] = std::abs(qn[i] - compose_phi(m, n, grid[i]));
    });
    if (*std::max_element(dev.begin(), dev.end()) < epsilon) return m;
  }
  fail(ErrorKind::NotReached, "no m <= 10^6 brings phi_{m,n} within epsilon of q^n");
}

// ---------------------------------------------------------------------------

OrderingOrbit build_ordering_orbit(int m, double y0, int steps) {
  require(m >= kN0, ErrorKind::PreconditionViolated, "ordering needs m >= 5");
  require(steps >= 0, ErrorKind::PreconditionViolated, "steps must be >= 0");
  const double left = m * kTwoPi;
  const double width = 2.0 * DiscSpec::base(m).radius;
  require(y0 > left && y0 < left + width, ErrorKind::PreconditionViolated,
          "y0 must lie in (2 m pi, 2 m pi + 1/(3 m pi))");

  OrderingOrbit orbit;
  orbit.m = m;
  orbit.x_local.resize(static_cast<std::size_t>(steps) + 1);
  orbit.y_local.resize(static_cast<std::size_t>(steps) + 1);
  orbit.y_local[0] = y0 - left;
  // f(y0) = T^{m+1}(h_m(y0 - 2 m pi)), so x0 = T^{-1} f(y0) sits at the same
  // local offset in frame m.
  orbit.x_local[0] = eval_h(m, Complex{orbit.y_local[0], 0.0}).real();
  for (int k = 0; k < steps; ++k) {
    const auto i = static_cast<std::size_t>(k);
    orbit.x_local[i + 1] = eval_h(m + k, Complex{orbit.x_local[i], 0.0}).real();
    orbit.y_local[i + 1] = eval_h(m + k, Complex{orbit.y_local[i], 0.0}).real();
  }
  return orbit;
}

OrderingResult check_ordering_sequences(int m, double y0, int steps) {
  require(steps >= 1, ErrorKind::PreconditionViolated, "steps must be >= 1");
  const OrderingOrbit orbit = build_ordering_orbit(m, y0, steps + 1);
  const auto& a = orbit.x_local;
  const auto& b = orbit.y_local;

  OrderingResult result;
  result.item_margin.fill(kInf);
  Witness worst_witness;
  double worst = kInf;
  auto record = [&](OrderingItem item, double gap, int n, double point) {
    auto& slot = result.item_margin[static_cast<std::size_t>(item)];
    slot = std::min(slot, gap);
    if (gap < worst) {
      worst = gap;
      worst_witness = Witness{Complex{point, 0.0}, m, n,
                              kOrderingItemNames[static_cast<std::size_t>(item)]};
    }
  };

  auto commutator_gap = [](int k, double local) {
    // T(f(x)) and f(T(x)) both land in frame k+2 with these local offsets.
    const double tf = eval_h(k, Complex{local, 0.0}).real();
    const double ft = eval_h(k + 1, Complex{local, 0.0}).real();
    return tf - ft;
  };

  for (int n = 0; n <= steps; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const int k = m + n;
    const double width = 2.0 * DiscSpec::base(k).radius;
    const double next_width = 2.0 * DiscSpec::base(k + 1).radius;

    record(OrderingItem::Membership, a[i], n, orbit.x(n));
    record(OrderingItem::Membership, width - a[i], n, orbit.x(n));
    record(OrderingItem::Membership, b[i], n, orbit.y(n));
    record(OrderingItem::Membership, width - b[i], n, orbit.y(n));

    // T(x_n) - x_{n+1} and x_{n+1} - 2(m+n+1)pi, both in frame k+1.
    record(OrderingItem::TranslateDominates, a[i] - a[i + 1], n, orbit.x(n));
    record(OrderingItem::TranslateDominates, a[i + 1], n, orbit.x(n));
    record(OrderingItem::TranslateDominates, b[i] - b[i + 1], n, orbit.y(n));
    record(OrderingItem::TranslateDominates, b[i + 1], n, orbit.y(n));

    record(OrderingItem::Commutator, commutator_gap(k, a[i]), n, orbit.x(n));
    record(OrderingItem::Commutator, commutator_gap(k, b[i]), n, orbit.y(n));

    record(OrderingItem::Gap, b[i] - a[i], n, orbit.y(n));

    if (n == 0) {
      result.base_identity_error = std::abs(a[0] - b[1]);
    } else {
      record(OrderingItem::TranslateBound, a[i] - b[i + 1], n, orbit.x(n));
    }

    record(OrderingItem::ShiftedMembership, a[i], n, orbit.x(n));
    record(OrderingItem::ShiftedMembership, next_width - a[i], n, orbit.x(n));
  }

  result.report =
      make_report("ordering", "m=" + n_str(m) + " y0=" + format_double(y0) +
                                  " N=" + n_str(steps) + " frame=local",
                  static_cast<long>(steps) + 1, worst, worst_witness);
  return result;
}

// ---------------------------------------------------------------------------

VerificationReport check_monotone_increasing_on_discs(int m, int samples) {
  require(m >= kN0, ErrorKind::PreconditionViolated, "monotone check needs m >= 5");
  require(samples >= 2, ErrorKind::PreconditionViolated,
          "monotone check needs at least 2 samples");
  const double width = 2.0 * DiscSpec::base(m).radius;
  const int per_interval = samples / 2;
  std::vector<Complex> points;
  points.reserve(static_cast<std::size_t>(2 * per_interval));
  for (int shift = 0; shift <= 1; ++shift) {
    const double left = (m + shift) * kTwoPi;
    for (int k = 0; k < per_interval; ++k)
      points.emplace_back(left + width * (k + 0.5) / per_interval, 0.0);
  }
  std::vector<double> margins;
  const std::size_t worst = worst_sample(
      points, [](Complex x) { return multiplier(x.real()); }, margins);
  Witness w{points[worst], m, -1, worst < static_cast<std::size_t>(per_interval)
                                      ? "disc"
                                      : "translated-disc"};
  return make_report("monotone", "m=" + n_str(m), static_cast<long>(points.size()),
                     margins[worst], w);
}

}  // namespace wandering

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wandering/basin.hpp"
#include "wandering/core_maps.hpp"
#include "wandering/experiments.hpp"
#include "wandering/lemma_verifier.hpp"
#include "wandering/metrics.hpp"
#include "wandering/real_dynamics.hpp"

using namespace wandering;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void fixed_points() {
  bool ok = true;
  double worst_residual = 0.0, min_mult = 1e300;
  for (int n = 1; n <= 100; ++n) {
    const auto fps = find_real_fixed_points(n);
    ok &= fps.size() == 2;
    for (const auto& fp : fps) {
      const long double x = fp.x;
      const double residual = static_cast<double>(std::fabs(x * std::cos(x) + 2.0L * oracle::kPiL - x));
      const double mult = static_cast<double>(std::cos(x) - x * std::sin(x));
      worst_residual = std::max(worst_residual, residual);
      min_mult = std::min(min_mult, std::abs(mult));
      ok &= fp.x > 2.0 * n * kPi && fp.x < 2.0 * (n + 1) * kPi;
    }
  }
  ok &= worst_residual < 1e-10 && min_mult > kTwoPi - 1.0;
  const double e_pi = std::abs(eval_f(kPi) - kPi);
  const double e_mult = std::abs(multiplier(kPi) + 1.0);
  const double e_43 = std::abs(eval_f(4.0 * kPi / 3.0) - 4.0 * kPi / 3.0);
  ok &= e_pi <= 1e-12 && e_mult <= 1e-12 && e_43 <= 1e-12;
  report(1, ok,
         fmt("200 fixed points, max residual %.3g, min |f'| %.6f; |f(pi)-pi| %.2g, |f'(pi)+1| %.2g, "
             "|f(4pi/3)-4pi/3| %.2g",
             worst_residual, min_mult, e_pi, e_mult, e_43));
}

void escape_witness() {
  const EscapeWitness w = find_escaping_negative(0.1, 1000);
  long double x = w.x0;
  for (int k = 0; k < w.n; ++k) x = x * std::cos(x) + 2.0L * oracle::kPiL;
  const bool oracle_ok = x <= 2.0L * w.n * oracle::kPiL - oracle::kPiL / 2.0L;
  const bool ok = w.n >= 2 && w.x0 < 0.0 && w.x0 >= -0.1 && verify_escape_witness(w) && oracle_ok;
  report(2, ok, fmt("x0 = %.6g, n = %d, f^n(x0) = %.6f, threshold %.6f", w.x0, w.n, w.value,
                    2.0 * w.n * kPi - kPi / 2.0));
}

void inequalities() {
  double drift = 1e300, drift_lower = 1e300, drift_upper = 1e300, incl = 1e300, expn = 1e300;
  bool doubling = true;
  for (int n = 1; n <= 20; ++n) {
    const auto r = check_halfplane_drift(n, 10000);
    drift = std::min(drift, r.worst_margin);
    const auto s = halfplane_drift_sides(n, r.witness.point);
    drift_lower = std::min(drift_lower, s.lower);
    drift_upper = std::min(drift_upper, s.upper);
    doubling &= !r.pass || check_halfplane_drift(n, 20000).pass;
  }
  for (int n = 5; n <= 200; ++n) {
    const auto r = check_disc_inclusion(n, 4096);
    incl = std::min(incl, r.worst_margin);
    doubling &= !r.pass || check_disc_inclusion(n, 8192).pass;
  }
  for (int m = 1; m <= 20; ++m)
    for (int n = 0; n <= 20; ++n) {
      const auto r = check_circle_expansion(m, n, 4096);
      expn = std::min(expn, r.worst_margin);
      doubling &= !r.pass || check_circle_expansion(m, n, 8192).pass;
    }
  const bool ok = drift > 0.0 && incl > 0.0 && expn > 0.0 && doubling;
  report(3, ok,
         fmt("drift worst %.4g (at witness: lower %.4g, upper %.4g), inclusion worst %.4g, "
             "expansion worst %.4g, doubling %s",
             drift, drift_lower, drift_upper, incl, expn, doubling ? "stable" : "flipped"));
}

void composition() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick_m(1, 50), pick_n(0, 20);
  double worst_psi = 0.0, worst_phi = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = pick_m(rng), n = pick_n(rng);
    const DiscSpec d = DiscSpec::base(m);
    const Complex z = oracle::point_in_disc(rng, d.center, d.radius);
    const Complex psi_want = oracle::psi(m, n, z);
    worst_psi = std::max(worst_psi, oracle::rel_err(compose_psi(m, n, z), psi_want));
    const Complex phi_want = static_cast<double>(m + n) * oracle::psi(m, n, z / static_cast<double>(m));
    worst_phi = std::max(worst_phi, oracle::rel_err(compose_phi(m, n, z), phi_want));
  }
  report(4, worst_psi <= 1e-9 && worst_phi <= 1e-9,
         fmt("1000 triples, worst relative error psi %.3g, phi %.3g", worst_psi, worst_phi));
}

void quadratic_limit() {
  const auto g = check_g_uniform_convergence(1.0, 200);
  double worst = 0.0;
  for (std::size_t i = 1; i < g.sup_deviation.size(); ++i)
    worst = std::max(worst, (i + 1) * g.sup_deviation[i] / g.mu);
  bool ok = g.report.pass && worst <= 1.0 + 1e-6;
  std::ostringstream ms;
  const auto grid = disc_grid(0.5, 20, 64);
  for (int n : {1, 2, 3}) {
    const int m = check_phi_approximates_qn(n, 0.5, 0.05);
    const double at2m = phi_qn_sup_deviation(2 * m, n, grid);
    ok &= phi_qn_sup_deviation(m, n, grid) < 0.05 && at2m < 0.05;
    ms << " n=" << n << ":M=" << m;
  }
  report(5, ok, fmt("mu = %.6f, max m s_m / mu = %.8f; phi M", g.mu, worst) + ms.str());
}

void convergence_and_diameter() {
  // Pipeline outputs of the first verified run at resolution 1024.
  const double golden[] = {0.0315054822548072, 0.01684907511374847, 0.009098496313303093,
                           0.004877069138038302};
  ConvergenceConfig cfg;  // defaults: n = 10, 20, 40, 80 at 1024
  const auto rep = run_hausdorff_convergence(cfg);
  bool ok = rep.rows.size() == 4 && rep.strictly_decreasing;
  std::ostringstream d;
  double worst_golden = 0.0, worst_undecided = rep.cauliflower_undecided_fraction;
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    const auto& r = rep.rows[k];
    ok &= k == 0 || r.d_H < rep.rows[k - 1].d_H;
    worst_undecided = std::max(worst_undecided, r.undecided_fraction);
    worst_golden = std::max(worst_golden, std::abs(r.d_H - golden[k]) / golden[k]);
    d << " " << r.n << ":" << r.d_H;
  }
  ok &= rep.rows.back().d_H < 0.5 * rep.rows.front().d_H;
  ok &= worst_undecided < 0.05 && worst_golden <= 1e-9 && rep.reverify_failures == 0;
  report(6, ok,
         "d_H" + d.str() +
             fmt("; max undecided %.4f, golden rel dev %.2g, reverify %d/%d", worst_undecided,
                 worst_golden, rep.reverified - rep.reverify_failures, rep.reverified));

  bool diam_ok = rep.diameters.size() == 4;
  std::ostringstream dd;
  for (const auto& r : rep.diameters) {
    diam_ok &= r.diameter <= 2.0 / (r.n * kPi) + r.pixel_diagonal;
    dd << fmt(" n=%d: %.5g vs %.5g (n*diam %.4f)", r.n, r.diameter, r.bound, r.rescaled_diameter);
  }
  report(7, diam_ok, "diam vs 2/(n pi) + pixel diagonal;" + dd.str());
}

void contraction() {
  const int m = 5, steps = 1000;
  const auto c = contraction_experiment(m, 18.0 * kPi + 1.0, steps);
  bool below = true;
  for (int n = 1; n < steps; ++n) below &= c.distances[n] <= c.bounds[n];
  // Independent replay of the orbit.
  long double t = 18.0L * oracle::kPiL + 1.0L;
  double orbit_dev = 0.0;
  for (int n = 0; n < 200; ++n) {
    t = oracle::w(m + n, Complex(static_cast<double>(t), 0.0)).real();
    orbit_dev = std::max(orbit_dev, static_cast<double>(std::fabs(t - c.t[n + 1])) /
                                        std::max(1.0, c.t[n + 1]));
  }
  const double y0 = 10.0 * kPi + 1.0 / (60.0 * kPi);
  const auto ord = check_ordering_sequences(m, y0, 50);
  int items = 0;
  for (double x : ord.item_margin) items += x > 0.0;
  const bool ok = c.strictly_increasing && below && c.distances[steps - 1] < 0.01 && ord.report.pass &&
                  items == static_cast<int>(ord.item_margin.size()) && orbit_dev < 1e-9;
  report(8, ok,
         fmt("t_n increasing %s, d_n <= bound for n >= 1 %s, d_999 = %.4g, orbit replay dev %.2g, "
             "orderings %d/%zu",
             c.strictly_increasing ? "yes" : "no", below ? "yes" : "no", c.distances[steps - 1],
             orbit_dev, items, ord.item_margin.size()));
}

void metric_axioms() {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> size(1, 200);
  auto random_set = [&] {
    PointSet s;
    s.points.resize(static_cast<std::size_t>(size(rng)));
    const double scale = std::exp(g(rng));
    const Complex shift{g(rng), g(rng)};
    for (auto& p : s.points) p = shift + scale * Complex{g(rng), g(rng)};
    return s;
  };
  bool agree = true, axioms = true;
  double oracle_dev = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet a = random_set(), b = random_set(), c = random_set();
    const double ab = hausdorff_distance(a, b).distance;
    agree &= ab == hausdorff_distance(a, b, HausdorffMethod::BruteForce).distance;
    agree &= hausdorff_distance(b, c).distance ==
             hausdorff_distance(b, c, HausdorffMethod::BruteForce).distance;
    oracle_dev = std::max(oracle_dev, std::abs(ab - oracle::hausdorff(a.points, b.points)) /
                                          std::max(1.0, ab));
    const double ba = hausdorff_distance(b, a).distance;
    const double bc = hausdorff_distance(b, c).distance;
    const double ac = hausdorff_distance(a, c).distance;
    axioms &= ab == ba && hausdorff_distance(a, a).distance == 0.0;
    axioms &= ac <= (ab + bc) * (1.0 + 1e-15);
  }
  double iso_dev = 0.0;
  std::uniform_real_distribution<double> u(-1.0, 1.0), logr(-4.0, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double R = std::pow(10.0, logr(rng));
    const double c = 2.0 * R * u(rng);
    const double x1 = c + 0.99 * R * u(rng), x2 = c + 0.99 * R * u(rng);
    const DiscFrame disc{Complex{c, 0.0}, R};
    const double via_disc = hyperbolic_distance_real(disc, x1, x2);
    const double via_half = hyperbolic_distance_real(reciprocal_frame(disc), disc_to_halfplane(disc, x1),
                                                     disc_to_halfplane(disc, x2));
    const double closed = oracle::disc_distance(c, R, x1, x2);
    iso_dev = std::max(iso_dev, std::abs(via_disc - via_half) / std::max(1.0, via_disc));
    iso_dev = std::max(iso_dev, std::abs(via_disc - closed) / std::max(1.0, closed));
  }
  report(9, agree && axioms && oracle_dev < 1e-14 && iso_dev <= 1e-12,
         fmt("kernels agree %s, axioms %s, oracle dev %.2g, isometry dev %.2g", agree ? "exactly" : "NO",
             axioms ? "hold" : "violated", oracle_dev, iso_dev));
}

void lambda_family() {
  const Complex c0 = mandelbrot_param(FamilyParam{});
  const Complex cs = mandelbrot_param(FamilyParam{lambda_preset("siegel")});
  const Complex siegel_ref{-0.547, 0.477};
  std::size_t violations = 0, sound = 0, heur = 0;
  for (int n : {5, 10, 40}) {
    const auto h = compare_heuristic_to_sound(n, component_grid(n, 256), 1000);
    violations += h.violations;
    sound += h.sound_inside;
    heur += h.heuristic_inside;
  }
  const bool ok = c0 == Complex{0.25, 0.0} && std::abs(cs - siegel_ref) < 5e-3 && violations == 0 && sound > 0;
  report(10, ok,
         fmt("c(0) = %.17g%+gi, c(siegel) = %.7f%+.7fi, heuristic %zu >= sound %zu inside, %zu violations",
             c0.real(), c0.imag(), cs.real(), cs.imag(), heur, sound, violations));
}

}  // namespace

int main() {
  fixed_points();
  escape_witness();
  inequalities();
  composition();
  quadratic_limit();
  convergence_and_diameter();
  contraction();
  metric_axioms();
  lambda_family();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wandering/error.hpp"
#include "wandering/lemma_verifier.hpp"
#include "wandering/real_dynamics.hpp"

using namespace wandering;

TEST_CASE("disc and circle specs") {
  for (int n : {1, 5, 37}) {
    const DiscSpec d = DiscSpec::base(n);
    CHECK(d.center == Complex{1.0 / (6.0 * n * kPi), 0.0});
    CHECK(d.radius == 1.0 / (6.0 * n * kPi));
    const DiscSpec t = DiscSpec::translated(n);
    CHECK(std::abs(t.center - (n * kTwoPi + d.center)) < 1e-15 * n);
    CHECK(t.radius == d.radius);
    CHECK(CircleSpec::enclosing(n).radius == 2.0 / (n * kPi));
  }
  CHECK(DiscSpec::base(5).contains(DiscSpec::base(5).center));
  CHECK_FALSE(DiscSpec::base(5).contains(0.0));
}

TEST_CASE("report line and combination") {
  VerificationReport a{"x", "n=1", 10, true, 0.5, {Complex{1.0, 2.0}, -1, 1, ""}};
  VerificationReport b{"x", "n=2", 10, false, -0.25, {Complex{3.0, 0.0}, -1, 2, "upper"}};
  const auto c = combine_reports({a, b}, "x", "n=1..2");
  CHECK_FALSE(c.pass);
  CHECK(c.worst_margin == -0.25);
  CHECK(c.samples == 20);
  CHECK(c.witness.n == 2);
  CHECK(c.to_line().rfind("x  fail  -0.25", 0) == 0);
  const auto d = combine_reports({a, a}, "x", "n=1");
  CHECK(d.pass);
  CHECK(d.to_line().rfind("x  pass  0.5", 0) == 0);
}

TEST_CASE("drift: lower side holds across the truncated half-plane") {
  for (int n = 1; n <= 20; ++n) {
    const double a = 3.0 * n * kPi;
    double worst = 1e300;
    for (int i = 0; i < 60; ++i) {
      const double re = a + (1e4 - a) * std::pow(1e-6, 1.0 - i / 59.0);
      for (double im : {0.0, 1e-3, -0.5, 3.0, -40.0, 999.0}) {
        const Complex t{re, im};
        const double lower = halfplane_drift_sides(n, t).lower;
        const double oracle_lower = oracle::w(n, t).real() - re - 2.0 / 3.0 * n * kPi;
        CHECK(std::abs(lower - oracle_lower) < 1e-9 * re);
        worst = std::min(worst, lower);
      }
    }
    CHECK(worst > 0.0);
  }
}

TEST_CASE("drift: upper side fails next to the boundary line") {
  // Measured: Re w_n(t) - Re t tends to (3/2) n pi as t -> 3 n pi, above
  // the (11/8) n pi ceiling. The check therefore reports fail.
  for (int n : {1, 20}) {
    const auto r = check_halfplane_drift(n, 10000);
    CHECK_FALSE(r.pass);
    CHECK(r.worst_margin < 0.0);
    CHECK(r.witness.note == "upper");
    const Complex t = r.witness.point;
    CHECK(oracle::w(n, t).real() - t.real() > 11.0 / 8.0 * n * kPi);
    CHECK(halfplane_drift_margin(n, t) == doctest::Approx(r.worst_margin).epsilon(1e-12));
  }
  for (int n = 1; n <= 20; ++n) {
    const double t = 3.0 * n * kPi + 1.0;
    const auto s = halfplane_drift_sides(n, t);
    CHECK(s.lower > 0.0);
    CHECK(s.upper < 0.0);
  }
}

TEST_CASE("drift: upper side holds from Re t = 4 n pi on") {
  for (int n = 1; n <= 20; ++n) {
    const double a = 4.0 * n * kPi;
    for (int i = 0; i < 60; ++i) {
      const double re = a + (1e4 - a) * std::pow(1e-6, 1.0 - i / 59.0);
      for (double im : {0.0, 1e-3, 0.5, -3.0, 40.0, -999.0})
        CHECK(halfplane_drift_sides(n, Complex{re, im}).upper > 0.0);
    }
  }
}

TEST_CASE("disc inclusion") {
  const auto r5 = check_disc_inclusion(5, 4096);
  CHECK(r5.pass);
  CHECK(r5.worst_margin > 0.0);
  CHECK(disc_inclusion_margin(5, r5.witness.point) == r5.worst_margin);
  CHECK(check_disc_inclusion(200, 4096).pass);

  // Outside the proven range the check still runs and reports.
  const auto r1 = check_disc_inclusion(1, 4096);
  CHECK(r1.parameter_range.find("below-n0") != std::string::npos);

  // The oracle reproduces the image of the boundary in the absolute frame.
  const DiscSpec next = DiscSpec::translated(6);
  for (int k = 0; k < 64; ++k) {
    const Complex zeta =
        DiscSpec::base(5).center + std::polar(DiscSpec::base(5).radius, kTwoPi * (k + 0.5) / 64);
    const oracle::LComplex image = oracle::f(oracle::widen(zeta) + 10.0L * oracle::kPiL);
    const double oracle_margin =
        next.radius - static_cast<double>(std::abs(image - oracle::widen(next.center)));
    CHECK(std::abs(disc_inclusion_margin(5, zeta) - oracle_margin) < 1e-12);
  }
}

TEST_CASE("disc inclusion: margins relative to the target radius grow with n") {
  // The absolute margin is set by the sample nearest the tangency at 0 and
  // shrinks like the radius; relative to r_{n+1} it increases.
  double previous = 0.0;
  for (int n : {5, 10, 20, 50}) {
    const double rel = check_disc_inclusion(n, 4096).worst_margin / DiscSpec::base(n + 1).radius;
    CHECK(rel > previous);
    previous = rel;
  }
}

TEST_CASE("doubling samples keeps every pass") {
  for (int n : {5, 6, 17, 100, 200}) {
    CHECK(check_disc_inclusion(n, 4096).pass);
    CHECK(check_disc_inclusion(n, 8192).pass);
  }
  for (int m : {1, 7, 20})
    for (int n : {0, 9, 20}) {
      CHECK(check_circle_expansion(m, n, 4096).pass);
      CHECK(check_circle_expansion(m, n, 8192).pass);
    }
}

TEST_CASE("circle expansion") {
  const auto r = check_circle_expansion(1, 0, 4096);
  CHECK(r.pass);
  CHECK(circle_expansion_margin(1, 0, r.witness.point) == r.worst_margin);
  CHECK(check_circle_expansion(10, 50, 4096).pass);
  for (int m = 1; m <= 20; ++m)
    for (int n = 0; n <= 20; ++n) {
      const double x = 2.0 / (m * kPi);
      CHECK(std::abs(oracle::h(m + n, x)) > x);
    }
}

TEST_CASE("g_m converges to q at rate mu/m") {
  const auto res = check_g_uniform_convergence(1.0, 200);
  CHECK(res.report.pass);
  CHECK(res.mu == res.sup_deviation.front());
  for (std::size_t i = 1; i < res.sup_deviation.size(); ++i) {
    CHECK(res.sup_deviation[i] < res.sup_deviation[i - 1]);
    CHECK((i + 1) * res.sup_deviation[i] <= res.mu * (1.0 + 1e-6));
  }
  // mu against the oracle on the same grid.
  double mu = 0.0;
  for (Complex z : disc_grid(1.0, 100, 100))
    mu = std::max(mu, std::abs(oracle::g(1, z) - (z - kPi * z * z)));
  CHECK(res.mu == doctest::Approx(mu).epsilon(1e-12));
  CHECK_THROWS_AS(check_g_uniform_convergence(6.0, 10), Error);
}

TEST_CASE("phi_{m,n} approximates q^n") {
  CHECK(check_phi_approximates_qn(0, 1.0, 0.01) == 1);

  const auto grid1 = disc_grid(1.0, 20, 64);
  const int m1 = check_phi_approximates_qn(1, 1.0, 0.01);
  CHECK(m1 > 1);
  CHECK(phi_qn_sup_deviation(m1, 1, grid1) < 0.01);
  CHECK(phi_qn_sup_deviation(m1 - 1, 1, grid1) >= 0.01);
  CHECK(phi_qn_sup_deviation(2 * m1, 1, grid1) < 0.01);

  const auto grid = disc_grid(0.5, 20, 64);
  for (int n : {1, 2, 3}) {
    const int m = check_phi_approximates_qn(n, 0.5, 0.05);
    CHECK(phi_qn_sup_deviation(m, n, grid) < 0.05);
    CHECK(phi_qn_sup_deviation(2 * m, n, grid) < 0.05);
  }
  CHECK_THROWS_AS(check_phi_approximates_qn(13, 0.5, 0.05), Error);
}

TEST_CASE("ordering sequences") {
  const int m = 5;
  const double y0 = 10.0 * kPi + 1.0 / (60.0 * kPi);
  const auto res = check_ordering_sequences(m, y0, 50);
  CHECK(res.report.pass);
  for (double margin : res.item_margin) CHECK(margin > 0.0);
  CHECK(res.base_identity_error < 1e-15);

  const auto orbit = build_ordering_orbit(m, y0, 50);
  oracle::LComplex x = oracle::f(oracle::LComplex(y0)) - 2.0L * oracle::kPiL;
  oracle::LComplex y = y0;
  for (int n = 0; n <= 50; ++n) {
    CHECK(std::abs(static_cast<double>(x.real()) - orbit.x(n)) < 1e-9);
    CHECK(std::abs(static_cast<double>(y.real()) - orbit.y(n)) < 1e-9);
    CHECK(orbit.y_local[static_cast<std::size_t>(n)] > orbit.x_local[static_cast<std::size_t>(n)]);
    x = oracle::f(x);
    y = oracle::f(y);
  }

  CHECK_THROWS_AS(check_ordering_sequences(m, 10.0 * kPi - 0.01, 50), Error);
  CHECK_THROWS_AS(check_ordering_sequences(m, 10.0 * kPi + 1.0 / (15.0 * kPi), 50), Error);
}

TEST_CASE("f is increasing on the real slices of the discs") {
  CHECK(check_monotone_increasing_on_discs(5, 1000).pass);
  CHECK(check_monotone_increasing_on_discs(100, 1000).pass);
  CHECK(multiplier(10.0 * kPi + 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(check_monotone_increasing_on_discs(4, 1000), Error);
}

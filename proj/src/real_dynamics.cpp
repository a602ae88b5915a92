#include "wandering/real_dynamics.hpp"

#include <cmath>
#include <string>

#include "wandering/core_maps.hpp"
#include "wandering/error.hpp"

namespace wandering {
namespace {

double fixed_point_equation(double x) { return std::cos(x) - 1.0 + kTwoPi / x; }

double fixed_point_residual(double x) {
  return std::abs(eval_f(Complex{x, 0.0}).real() - x);
}

double bisect(double lo, double hi) {
  double f_lo = fixed_point_equation(lo);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = fixed_point_equation(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return fixed_point_residual(lo) <= fixed_point_residual(hi) ? lo : hi;
}

}  // namespace

double multiplier(double x) { return std::cos(x) - x * std::sin(x); }

std::vector<FixedPointRecord> find_real_fixed_points(int window_index,
                                                     int scan_samples) {
  require(window_index >= 1, ErrorKind::PreconditionViolated,
          "fixed-point windows start at n = 1");
  require(scan_samples >= 4, ErrorKind::PreconditionViolated,
          "scan needs at least 4 samples");
  const double left = window_index * kTwoPi;
  const double right = (window_index + 1) * kTwoPi;
  const double step = (right - left) / scan_samples;

  std::vector<FixedPointRecord> records;
  double prev_x = left + 0.5 * step;
  double prev_v = fixed_point_equation(prev_x);
  for (int i = 1; i < scan_samples; ++i) {
    const double x = left + (i + 0.5) * step;
    const double v = fixed_point_equation(x);
    if ((v > 0.0) != (prev_v > 0.0) || v == 0.0) {
      const double root = v == 0.0 ? x : bisect(prev_x, x);
      FixedPointRecord rec;
      rec.x = root;
      rec.multiplier = multiplier(root);
      rec.interval_index = window_index;
      rec.eta = std::min(root - left, right - root);
      records.push_back(rec);
    }
    prev_x = x;
    prev_v = v;
  }
  if (records.size() != 2)
    fail(ErrorKind::BracketFailure,
         "expected 2 sign changes in window " + std::to_string(window_index) +
             ", found " + std::to_string(records.size()));
  for (const auto& rec : records) {
    if (!(fixed_point_residual(rec.x) <= 1e-10))
      fail(ErrorKind::BracketFailure,
           "fixed-point residual above 1e-10 in window " +
               std::to_string(window_index));
  }
  return records;
}

EscapeWitness find_escaping_negative(double delta, int max_n) {
  require(delta > 0.0 && delta < 0.5 * kPi, ErrorKind::PreconditionViolated,
          "delta must lie in (0, pi/2)");
  require(max_n >= 2, ErrorKind::PreconditionViolated, "max_n must be >= 2");
  for (int j = 0; j <= 40; ++j) {
    const double x0 = -delta * std::ldexp(1.0, -j);
    double offset = x0;  // f^k(x0) - 2 k pi
    for (int k = 0; k < max_n; ++k) {
      const double s = std::sin(0.5 * offset);
      offset -= (k * kTwoPi + offset) * 2.0 * s * s;
      const int n = k + 1;
      if (n >= 2 && offset <= -0.5 * kPi) {
        EscapeWitness w;
        w.x0 = x0;
        w.n = n;
        w.value = n * kTwoPi + offset;
        return w;
      }
    }
  }
  fail(ErrorKind::NotFound, "no escaping negative point within max_n = " +
                                std::to_string(max_n));
}

bool verify_escape_witness(const EscapeWitness& witness) {
  if (witness.n < 2 || !(witness.x0 < 0.0)) return false;
  double x = witness.x0;
  for (int k = 0; k < witness.n; ++k) x = eval_f(Complex{x, 0.0}).real();
  return x <= witness.n * kTwoPi - 0.5 * kPi;
}

std::vector<double> eta_sequence(int max_index) {
  std::vector<double> etas;
  if (max_index < 2) return etas;
  for (int window = 1; 2 * window <= max_index; ++window) {
    const auto records = find_real_fixed_points(window);
    etas.push_back(records[0].eta);
    if (2 * window + 1 <= max_index) etas.push_back(records[1].eta);
  }
  return etas;
}

double eta_trend(double x) { return std::acos(1.0 - kTwoPi / x); }

}  // namespace wandering

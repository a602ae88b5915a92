#pragma once

// Dynamics of f(x) = x cos x + 2 pi restricted to the real axis.

#include <vector>

namespace wandering {

struct FixedPointRecord {
  double x = 0.0;
  double multiplier = 0.0;
  /// The window (2 n pi, 2 (n+1) pi) that contains x.
  int interval_index = 0;
  /// Distance from x to the nearer window endpoint.
  double eta = 0.0;
};

struct EscapeWitness {
  double x0 = 0.0;
  int n = 0;
  /// f^n(x0).
  double value = 0.0;
};

/// The two fixed points in (2 n pi, 2 (n+1) pi), ordered by x. Roots of
/// cos x - 1 + 2 pi / x bracketed on a uniform scan and bisected to
/// machine precision. Throws BracketFailure unless exactly two sign changes
/// are found or a root misses |f(x) - x| <= 1e-10.
std::vector<FixedPointRecord> find_real_fixed_points(int window_index,
                                                     int scan_samples = 10000);

/// f'(x) = cos x - x sin x.
double multiplier(double x);

/// Scans x0 = -delta 2^{-j}, j = 0..40, iterating each up to max_n steps;
/// returns the first (x0, n >= 2) with f^n(x0) <= 2 n pi - pi/2.
/// Orbits are tracked through the offset x_k = f^k(x0) - 2 k pi, which obeys
/// x_{k+1} = x_k + (2 k pi + x_k)(cos x_k - 1). Throws NotFound.
EscapeWitness find_escaping_negative(double delta, int max_n);

/// Re-iterates f directly from x0 and re-checks the escape inequality.
bool verify_escape_witness(const EscapeWitness& witness);

/// eta_2, eta_3, ..., eta_{max_index}: eta_{2n} is the left and eta_{2n+1}
/// the right gap of window n.
std::vector<double> eta_sequence(int max_index);

/// Leading-order gap predicted from cos(eta) = 1 - 2 pi / x.
double eta_trend(double x);

}  // namespace wandering

#pragma once

// Independent reference computations for the tests. Everything here is
// written from the defining formulas in long double, without calling the
// library's local-frame or cancellation-free forms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using LComplex = std::complex<long double>;
inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

inline LComplex widen(std::complex<double> z) { return {z.real(), z.imag()}; }
inline std::complex<double> narrow(LComplex z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// f(z) = z cos z + 2 pi, absolute frame.
inline LComplex f(LComplex z) { return z * std::cos(z) + 2.0L * kPiL; }

inline LComplex f_lambda(LComplex z, LComplex lambda) {
  return z * std::cos(z) + lambda * std::sin(z) + 2.0L * kPiL;
}

inline LComplex f_iterate(LComplex z, int k) {
  for (int i = 0; i < k; ++i) z = f(z);
  return z;
}

/// T^{-(m+n)} f^n T^m (z) by direct iteration of f.
inline std::complex<double> psi(int m, int n, std::complex<double> z) {
  LComplex w = widen(z) + 2.0L * m * kPiL;
  w = f_iterate(w, n);
  return narrow(w - 2.0L * (m + n) * kPiL);
}

/// T^{-(n+1)} f T^n (z).
inline std::complex<double> h(int n, std::complex<double> z) { return psi(n, 1, z); }

inline std::complex<double> g(int n, std::complex<double> z) {
  return static_cast<double>(n + 1) * h(n, z / static_cast<double>(n));
}

inline std::complex<double> w(int n, std::complex<double> t) {
  const LComplex z = 1.0L / widen(t);
  const LComplex v = z + 2.0L * n * kPiL;
  return narrow(1.0L / (f(v) - 2.0L * (n + 1) * kPiL));
}

inline std::complex<double> q_iterate(int n, std::complex<double> z) {
  LComplex v = widen(z);
  for (int i = 0; i < n; ++i) v = v - kPiL * v * v;
  return narrow(v);
}

/// Plain double loop over every pair, with |a - b| rather than squared
/// distances.
inline double hausdorff(const std::vector<std::complex<double>>& a,
                        const std::vector<std::complex<double>>& b) {
  auto directed = [](const auto& from, const auto& to) {
    double sup = 0.0;
    for (const auto& p : from) {
      double inf = std::numeric_limits<double>::infinity();
      for (const auto& r : to) inf = std::min(inf, std::abs(p - r));
      sup = std::max(sup, inf);
    }
    return sup;
  };
  return std::max(directed(a, b), directed(b, a));
}

/// Half-plane Re z > a with density 1/(Re z - a).
inline double halfplane_distance(double a, double x1, double x2) {
  return std::fabs(std::log((x2 - a) / (x1 - a)));
}

/// Disc D(c, R) with the density matched to the half-plane convention,
/// 2 R / (R^2 - |z - c|^2): along the real diameter the distance is
/// 2 |artanh(u2) - artanh(u1)| with u = (x - c)/R.
inline double disc_distance(double c, double R, double x1, double x2) {
  return 2.0 * std::fabs(std::atanh((x2 - c) / R) - std::atanh((x1 - c) / R));
}

/// Uniform point in the disc D(c, r) by rejection.
template <class Rng>
std::complex<double> point_in_disc(Rng& rng, std::complex<double> c, double r) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double x = u(rng), y = u(rng);
    if (x * x + y * y < 1.0) return c + r * std::complex<double>{x, y};
  }
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace oracle

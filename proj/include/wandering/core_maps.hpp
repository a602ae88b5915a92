#pragma once

// Maps of the family f(z) = z cos z + 2 pi, its changes of variable and the
// quadratic limit q(z) = z - pi z^2.
//
// Index conventions:
//   T^k(z)        = z + 2 k pi
//   h_n(z)        = T^{-(n+1)} o f o T^n (z)            ("local frame" map)
//   w_n(t)        = 1 / h_n(1/t)                        (reciprocal frame)
//   g_n(z)        = (n+1) h_n(z/n)                      (scaled frame)
//   psi_{m,n}(z)  = h_{m+n-1} o ... o h_m (z)
//   phi_{m,n}(z)  = (m+n) psi_{m,n}(z/m) = g_{m+n-1} o ... o g_m (z)
//
// All functions are pure and thread-safe.

#include <cmath>
#include <complex>
#include <numbers>

namespace wandering {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// First index from which the disc D▷_n is known to map into D▷_{n+1}.
inline constexpr int kN0 = 5;

struct FamilyParam {
  Complex lambda{0.0, 0.0};

  bool is_base() const { return lambda == Complex{0.0, 0.0}; }
};

enum class MapKind { h, w, g, psi, phi };

/// Names one member of the indexed map families. `m` is ignored for the
/// single-index kinds (h, w, g), which use `n`.
struct IndexedMapId {
  MapKind kind = MapKind::h;
  int m = 0;
  int n = 0;

  /// Throws PreconditionViolated if the indices are outside the family's range.
  void validate() const;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Complex eval_f(Complex z);
Complex eval_f_lambda(Complex z, const FamilyParam& p);

inline Complex eval_T(Complex z, long k) {
  return z + static_cast<double>(k) * kTwoPi;
}

/// Evaluated as z cos z - 4 n pi sin^2(z/2), algebraically equal to
/// (z + 2 n pi) cos z - 2 n pi but free of the cancellation in cos z - 1.
Complex eval_h(int n, Complex z);

/// Local-frame map of f_lambda: h_n(z) + lambda sin z.
Complex eval_h_lambda(int n, Complex z, const FamilyParam& p);

/// Throws DegenerateInput when t = 0 or h_n(1/t) = 0.
Complex eval_w(int n, Complex t);

Complex eval_g(int n, Complex z);

Complex compose_psi(int m, int n, Complex z);
Complex compose_phi(int m, int n, Complex z);

/// phi_{m,n} computed as the chain g_{m+n-1} o ... o g_m, the second route
/// to compose_phi.
Complex compose_g_chain(int m, int n, Complex z);

/// Dispatches on the map kind; `z` is t for the w family.
Complex evaluate(const IndexedMapId& id, Complex z);

inline Complex eval_q(Complex z) { return z - kPi * z * z; }

inline Complex eval_q_lambda(Complex z, const FamilyParam& p) {
  if (p.is_base()) return eval_q(z);
  return z * (1.0 + p.lambda) - kPi * z * z;
}

/// q^n(z).
Complex iterate_q(int n, Complex z);

/// Parameter c of z^2 + c conjugate to q_lambda.
inline Complex mandelbrot_param(const FamilyParam& p) {
  const Complex a = 1.0 + p.lambda;
  return 0.5 * a - 0.25 * a * a;
}

}  // namespace wandering

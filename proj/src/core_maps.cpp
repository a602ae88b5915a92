#include "wandering/core_maps.hpp"

#include <string>

#include "wandering/error.hpp"

namespace wandering {

void IndexedMapId::validate() const {
  switch (kind) {
    case MapKind::h:
      require(n >= 0, ErrorKind::PreconditionViolated, "h_n requires n >= 0");
      break;
    case MapKind::w:
    case MapKind::g:
      require(n >= 1, ErrorKind::PreconditionViolated,
              "w_n and g_n require n >= 1");
      break;
    case MapKind::psi:
      require(m >= 0 && n >= 0, ErrorKind::PreconditionViolated,
              "psi_{m,n} requires m, n >= 0");
      require(n == 0 || m >= 1, ErrorKind::PreconditionViolated,
              "psi_{m,n} requires m >= 1 when n >= 1");
      break;
    case MapKind::phi:
      require(m >= 1 && n >= 0, ErrorKind::PreconditionViolated,
              "phi_{m,n} requires m >= 1, n >= 0");
      break;
  }
}

Complex eval_f(Complex z) { return z * std::cos(z) + kTwoPi; }

Complex eval_f_lambda(Complex z, const FamilyParam& p) {
  if (p.is_base()) return eval_f(z);
  return z * std::cos(z) + p.lambda * std::sin(z) + kTwoPi;
}

Complex eval_h(int n, Complex z) {
  const Complex s = std::sin(0.5 * z);
  return z * std::cos(z) - (2.0 * n * kTwoPi) * (s * s);
}

Complex eval_h_lambda(int n, Complex z, const FamilyParam& p) {
  if (p.is_base()) return eval_h(n, z);
  return eval_h(n, z) + p.lambda * std::sin(z);
}

Complex eval_w(int n, Complex t) {
  if (t == Complex{0.0, 0.0})
    fail(ErrorKind::DegenerateInput, "w_n(t) undefined at t = 0");
  const Complex h = eval_h(n, 1.0 / t);
  if (h == Complex{0.0, 0.0})
    fail(ErrorKind::DegenerateInput,
         "w_n(t) has a pole: h_n(1/t) = 0 for n = " + std::to_string(n));
  return 1.0 / h;
}

Complex eval_g(int n, Complex z) {
  require(n >= 1, ErrorKind::PreconditionViolated, "g_n requires n >= 1");
  const double nn = static_cast<double>(n);
  return (nn + 1.0) * eval_h(n, z / nn);
}

Complex compose_psi(int m, int n, Complex z) {
  require(m >= 0 && n >= 0, ErrorKind::PreconditionViolated,
          "psi_{m,n} requires m, n >= 0");
  for (int k = m; k < m + n; ++k) z = eval_h(k, z);
  return z;
}

Complex compose_phi(int m, int n, Complex z) {
  require(m >= 1 && n >= 0, ErrorKind::PreconditionViolated,
          "phi_{m,n} requires m >= 1");
  if (n == 0) return z;
  return static_cast<double>(m + n) *
         compose_psi(m, n, z / static_cast<double>(m));
}

Complex compose_g_chain(int m, int n, Complex z) {
  require(m >= 1 && n >= 0, ErrorKind::PreconditionViolated,
          "g chain requires m >= 1");
  for (int k = m; k < m + n; ++k) z = eval_g(k, z);
  return z;
}

Complex evaluate(const IndexedMapId& id, Complex z) {
  id.validate();
  switch (id.kind) {
    case MapKind::h: return eval_h(id.n, z);
    case MapKind::w: return eval_w(id.n, z);
    case MapKind::g: return eval_g(id.n, z);
    case MapKind::psi: return compose_psi(id.m, id.n, z);
    case MapKind::phi: return compose_phi(id.m, id.n, z);
  }
  return z;
}

Complex iterate_q(int n, Complex z) {
  for (int k = 0; k < n; ++k) z = eval_q(z);
  return z;
}

}  // namespace wandering

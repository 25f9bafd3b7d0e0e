#pragma once

#include <complex>
#include <map>
#include <vector>

#include "troploc/arc.hpp"

namespace troploc::detail {

inline bool is_zero(const Rational& c, double) { return c == 0; }
inline bool is_zero(const Complex& c, double tol) { return std::abs(c) <= tol; }

template <class K>
K from_rational(const Rational& c);
template <>
inline Rational from_rational<Rational>(const Rational& c) { return c; }
template <>
inline Complex from_rational<Complex>(const Rational& c) { return Complex(c.get_d(), 0.0); }

inline long saturating_add(long a, long b) {
  if (a >= kExact || b >= kExact) return kExact;
  return a + b;
}

/// Dense power series a_0 + a_1 t + ..., truncated to `len` terms when len >= 0.
template <class K>
std::vector<K> mul_trunc(const std::vector<K>& a, const std::vector<K>& b, long len) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size() + b.size() - 1;
  if (len >= 0 && static_cast<std::size_t>(len) < n) n = static_cast<std::size_t>(len);
  std::vector<K> out(n, K(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == K(0)) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Inverse of a unit series modulo t^len.
template <class K>
std::vector<K> inverse_trunc(const std::vector<K>& u, long len) {
  std::vector<K> inv(static_cast<std::size_t>(len), K(0));
  if (len == 0) return inv;
  K u0inv = K(1) / u[0];
  inv[0] = u0inv;
  for (long n = 1; n < len; ++n) {
    K s(0);
    for (long k = 1; k <= n && k < static_cast<long>(u.size()); ++k) s += u[k] * inv[n - k];
    inv[n] = -s * u0inv;
  }
  return inv;
}

/// u^k modulo t^len (len < 0: exact, only for k >= 0).
template <class K>
std::vector<K> power_trunc(const std::vector<K>& u, long k, long len) {
  std::vector<K> base = k >= 0 ? u : inverse_trunc(u, len);
  if (k < 0) k = -k;
  std::vector<K> out{K(1)};
  while (k > 0) {
    if (k & 1) out = mul_trunc(out, base, len);
    k >>= 1;
    if (k > 0) base = mul_trunc(base, base, len);
  }
  return out;
}

/// Sparse Laurent product.
template <class K>
std::map<long, K> mul_sparse(const std::map<long, K>& a, const std::map<long, K>& b) {
  std::map<long, K> out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out[i + j] += x * y;
  }
  return out;
}

}  // namespace troploc::detail

#pragma once

// Pointwise evaluation of f = y^a - z^b x^c - x^d, its gradient, projections
// onto tangent/normal spaces and the regularity quantities. Templated on the
// scalar so one implementation serves double, long double and mpfr_float.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "strat/core.hpp"

namespace strat {

class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class InadmissiblePair : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Pair window |q - q'| <= dist(q, Oz) / (2 gamma).
inline constexpr int kGamma = 2;

template <class T>
struct Point3 {
  T x, y, z;
};

template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<Vec3<T>, 3>;

template <class T>
T ipow(T v, std::int64_t k) {
  T out(1);
  while (k > 0) {
    if (k & 1) out *= v;
    k >>= 1;
    if (k) v *= v;
  }
  return out;
}

namespace detail {
using std::abs;
using std::sqrt;
using std::pow;

template <class T>
T norm2(const T& u, const T& v) {
  return sqrt(u * u + v * v);
}
template <class T>
T norm(const Vec3<T>& v) {
  return sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}
template <class T>
bool is_zero(const T& v) {
  return v == T(0);
}
}  // namespace detail

template <class T>
T eval_f(const SurfaceParams& p, const T& x, const T& y, const T& z) {
  return ipow(y, p.a) - ipow(z, p.b) * ipow(x, p.c) - ipow(x, p.d);
}

template <class T>
Vec3<T> gradient(const SurfaceParams& p, const T& x, const T& y, const T& z) {
  const T fx = -T(p.c) * ipow(z, p.b) * ipow(x, p.c - 1) - T(p.d) * ipow(x, p.d - 1);
  const T fy = T(p.a) * ipow(y, p.a - 1);
  const T fz = -T(p.b) * ipow(z, p.b - 1) * ipow(x, p.c);
  return {fx, fy, fz};
}

template <class T>
Vec3<T> gradient(const SurfaceParams& p, const Point3<T>& q) {
  return gradient(p, q.x, q.y, q.z);
}

// Real roots of y^a = z^b x^c + x^d, in increasing order.
template <class T>
std::vector<T> y_branches_real(const SurfaceParams& p, const T& x, const T& z) {
  using detail::abs;
  using detail::pow;
  const T rhs = ipow(z, p.b) * ipow(x, p.c) + ipow(x, p.d);
  if (rhs == T(0)) return {T(0)};
  const T mag = pow(abs(rhs), T(1) / T(p.a));
  if (p.a % 2 == 1) return {rhs < T(0) ? T(-mag) : mag};
  if (rhs < T(0)) return {};
  return {T(-mag), mag};
}

// All a complex roots (floating spot checks only).
std::vector<std::complex<double>> y_branches_complex(const SurfaceParams& p,
                                                     std::complex<double> x,
                                                     std::complex<double> z);

// A = |f_z| / |(f_x, f_y)|.
template <class T>
T quantity_a(const SurfaceParams& p, const Point3<T>& q) {
  const auto g = gradient(p, q);
  const T den = detail::norm2(g[0], g[1]);
  if (detail::is_zero(den)) throw DegenerateDenominator("quantity_a: (f_x, f_y) vanishes");
  using detail::abs;
  return abs(g[2]) / den;
}

// B_pi = |x f_x + y f_y| / (|(x, y)| |grad f|).
template <class T>
T quantity_bpi(const SurfaceParams& p, const Point3<T>& q) {
  const auto g = gradient(p, q);
  const T den = detail::norm2(q.x, q.y) * detail::norm(g);
  if (detail::is_zero(den)) throw DegenerateDenominator("quantity_bpi: zero denominator");
  using detail::abs;
  return abs(q.x * g[0] + q.y * g[1]) / den;
}

// Z'(x, z), transcribed as printed.
template <class T>
T quantity_w(const SurfaceParams& p, const T& x, const T& z) {
  using detail::abs;
  using detail::pow;
  using std::max;
  const T r = abs(ipow(z, p.b) * ipow(x, p.c) + ipow(x, p.d));
  const T t1 = abs(T(p.c) * ipow(x, p.c - 1) * ipow(z, p.b) + T(p.d) * ipow(x, p.d - 1));
  const T r_hi = pow(r, T(p.a - 1) / T(p.a));
  const T r_lo = pow(r, T(1) / T(p.a));
  const T ax = abs(x);
  const T s1 = max(t1, r_hi);
  const T s2 = max(ax, r_lo);
  const T den = s1 * s2;
  if (detail::is_zero(den)) throw DegenerateDenominator("quantity_w: both sup arguments vanish");
  return abs(ipow(z, p.b - 1) * ipow(x, p.c)) / den;
}

// Z = |f_z| / (|grad f| |(x, y)|).
template <class T>
T quantity_w_projective(const SurfaceParams& p, const Point3<T>& q) {
  const auto g = gradient(p, q);
  const T den = detail::norm(g) * detail::norm2(q.x, q.y);
  if (detail::is_zero(den)) throw DegenerateDenominator("quantity_w_projective: zero denominator");
  using detail::abs;
  return abs(g[2]) / den;
}

template <class T>
struct Projection {
  Mat3<T> tangent;  // P
  Mat3<T> normal;   // P-perp
};

template <class T>
Projection<T> tangent_projection(const SurfaceParams& p, const Point3<T>& q) {
  const auto g = gradient(p, q);
  const T n2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
  if (detail::is_zero(n2)) throw DegenerateDenominator("tangent_projection: gradient vanishes");
  Projection<T> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.normal[i][j] = g[i] * g[j] / n2;
      out.tangent[i][j] = (i == j ? T(1) : T(0)) - out.normal[i][j];
    }
  }
  return out;
}

template <class T>
T distance(const Point3<T>& q, const Point3<T>& r) {
  using detail::sqrt;
  const T dx = q.x - r.x, dy = q.y - r.y, dz = q.z - r.z;
  return sqrt(dx * dx + dy * dy + dz * dz);
}

template <class T>
T distance_to_axis(const Point3<T>& q) {
  return detail::norm2(q.x, q.y);
}

namespace detail {
// |(P_q - P_q') e_col|; P and P-perp differences agree up to sign.
template <class T>
T column_gap(const Projection<T>& l, const Projection<T>& r, int col) {
  const T u = l.normal[0][col] - r.normal[0][col];
  const T v = l.normal[1][col] - r.normal[1][col];
  const T w = l.normal[2][col] - r.normal[2][col];
  return sqrt(u * u + v * v + w * w);
}

template <class T>
T checked_separation(const Point3<T>& q, const Point3<T>& r) {
  const T sep = distance(q, r);
  if (sep * T(2 * kGamma) > distance_to_axis(q)) {
    throw InadmissiblePair("pair outside the |q-q'| <= dist(q,Oz)/4 window");
  }
  return sep;
}
}  // namespace detail

// |(P_q - P_q') e_z| / |q - q'|.
template <class T>
T quantity_L2(const SurfaceParams& p, const Point3<T>& q, const Point3<T>& r) {
  const T sep = detail::checked_separation(q, r);
  if (detail::is_zero(sep)) return T(0);
  const auto pq = tangent_projection(p, q);
  const auto pr = tangent_projection(p, r);
  return detail::column_gap(pq, pr, 2) / sep;
}

// max_i |(P_q - P_q') e_i| dist(q, Oz) / |q - q'|.
template <class T>
T quantity_L3(const SurfaceParams& p, const Point3<T>& q, const Point3<T>& r) {
  using std::max;
  const T sep = detail::checked_separation(q, r);
  if (detail::is_zero(sep)) return T(0);
  const auto pq = tangent_projection(p, q);
  const auto pr = tangent_projection(p, r);
  const T gap = max(detail::column_gap(pq, pr, 0),
                    max(detail::column_gap(pq, pr, 1), detail::column_gap(pq, pr, 2)));
  return gap * distance_to_axis(q) / sep;
}

// Exact arithmetic on V: rational x, z and y a formal root of y^a = R,
// i.e. elements of Q[y]/(y^a - R) with R = z^b x^c + x^d.
class SurfaceElement {
 public:
  SurfaceElement(std::int64_t a, mpq_class r);
  static SurfaceElement constant(std::int64_t a, const mpq_class& r, const mpq_class& v);
  static SurfaceElement y_power(std::int64_t a, const mpq_class& r, std::int64_t k);

  SurfaceElement operator+(const SurfaceElement& o) const;
  SurfaceElement operator-(const SurfaceElement& o) const;
  SurfaceElement operator*(const SurfaceElement& o) const;
  bool is_zero() const;
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

 private:
  std::int64_t a_;
  mpq_class r_;
  std::vector<mpq_class> coeffs_;  // degree < a
};

// Residual of x f_x + y f_y - ((a-c) z^b x^c + (a-d) x^d) on V, exactly.
SurfaceElement euler_identity_residual(const SurfaceParams& p, const mpq_class& x,
                                       const mpq_class& z);

// Exact B_pi numerator from the on-surface identity.
mpq_class bpi_numerator_exact(const SurfaceParams& p, const mpq_class& x, const mpq_class& z);

}  // namespace strat

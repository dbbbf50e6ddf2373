#include "strat/geometry.hpp"

#include <numbers>

namespace strat {

std::vector<std::complex<double>> y_branches_complex(const SurfaceParams& p,
                                                     std::complex<double> x,
                                                     std::complex<double> z) {
  const std::complex<double> rhs = ipow(z, p.b) * ipow(x, p.c) + ipow(x, p.d);
  if (rhs == 0.0) return {0.0};
  const double mag = std::pow(std::abs(rhs), 1.0 / static_cast<double>(p.a));
  const double arg = std::arg(rhs);
  std::vector<std::complex<double>> out;
  for (std::int64_t k = 0; k < p.a; ++k) {
    const double theta = (arg + 2 * std::numbers::pi * static_cast<double>(k)) / static_cast<double>(p.a);
    out.push_back(std::polar(mag, theta));
  }
  return out;
}

SurfaceElement::SurfaceElement(std::int64_t a, mpq_class r)
    : a_(a), r_(std::move(r)), coeffs_(static_cast<std::size_t>(a)) {}

SurfaceElement SurfaceElement::constant(std::int64_t a, const mpq_class& r, const mpq_class& v) {
  SurfaceElement out(a, r);
  out.coeffs_[0] = v;
  return out;
}

SurfaceElement SurfaceElement::y_power(std::int64_t a, const mpq_class& r, std::int64_t k) {
  SurfaceElement out(a, r);
  mpq_class scale = 1;
  for (std::int64_t i = 0; i < k / a; ++i) scale *= r;
  out.coeffs_[static_cast<std::size_t>(k % a)] = scale;
  return out;
}

SurfaceElement SurfaceElement::operator+(const SurfaceElement& o) const {
  SurfaceElement out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

SurfaceElement SurfaceElement::operator-(const SurfaceElement& o) const {
  SurfaceElement out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
  return out;
}

SurfaceElement SurfaceElement::operator*(const SurfaceElement& o) const {
  SurfaceElement out(a_, r_);
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class t = coeffs_[i] * o.coeffs_[j];
      if (i + j >= n) {
        out.coeffs_[i + j - n] += t * r_;  // y^a = R
      } else {
        out.coeffs_[i + j] += t;
      }
    }
  }
  return out;
}

bool SurfaceElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

namespace {
mpq_class qpow(const mpq_class& v, std::int64_t k) {
  mpq_class out = 1;
  for (std::int64_t i = 0; i < k; ++i) out *= v;
  return out;
}
}  // namespace

SurfaceElement euler_identity_residual(const SurfaceParams& p, const mpq_class& x,
                                       const mpq_class& z) {
  const mpq_class zb = qpow(z, p.b);
  const mpq_class r = zb * qpow(x, p.c) + qpow(x, p.d);
  auto k = [&](const mpq_class& v) { return SurfaceElement::constant(p.a, r, v); };
  const SurfaceElement y = SurfaceElement::y_power(p.a, r, 1);
  const SurfaceElement fx = k(-mpq_class(p.c) * zb * qpow(x, p.c - 1) - mpq_class(p.d) * qpow(x, p.d - 1));
  const SurfaceElement fy = k(mpq_class(p.a)) * SurfaceElement::y_power(p.a, r, p.a - 1);
  const SurfaceElement lhs = k(x) * fx + y * fy;
  const SurfaceElement rhs = k(mpq_class(p.a - p.c) * zb * qpow(x, p.c) + mpq_class(p.a - p.d) * qpow(x, p.d));
  return lhs - rhs;
}

mpq_class bpi_numerator_exact(const SurfaceParams& p, const mpq_class& x, const mpq_class& z) {
  return mpq_class(p.a - p.c) * qpow(z, p.b) * qpow(x, p.c) + mpq_class(p.a - p.d) * qpow(x, p.d);
}

}  // namespace strat

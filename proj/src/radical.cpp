#include "strat/radical.hpp"

#include <stdexcept>

namespace strat {

Radical Radical::root_of(const mpq_class& m, std::int64_t a) {
  if (m <= 0 || a < 1) throw std::domain_error("Radical::root_of needs m > 0, a >= 1");
  // Largest g | a with m a perfect g-th power.
  for (std::int64_t g = a; g >= 1; --g) {
    if (a % g) continue;
    if (auto r = exact_root(m, static_cast<unsigned long>(g))) return Radical{a / g, *r};
  }
  return Radical{a, m};
}

Interval Radical::value() const {
  return Interval(s).root(static_cast<unsigned long>(n));
}

RadicalSeries::RadicalSeries(Radical r) : rad_(std::move(r)), parts_(static_cast<std::size_t>(rad_.n)) {}

RadicalSeries::RadicalSeries(Radical r, const PuiseuxSeries& rational_part) : RadicalSeries(std::move(r)) {
  parts_[0] = rational_part;
}

RadicalSeries RadicalSeries::rho_power_times(Radical r, std::int64_t k, const PuiseuxSeries& s) {
  RadicalSeries out(std::move(r));
  mpq_class scale = 1;
  for (std::int64_t i = 0; i < k / out.rad_.n; ++i) scale *= out.rad_.s;
  out.parts_[static_cast<std::size_t>(k % out.rad_.n)] = s.scaled(Coeff(scale));
  return out;
}

bool RadicalSeries::is_certified_zero() const {
  for (const auto& p : parts_) {
    if (!p.is_certified_zero()) return false;
  }
  return true;
}

RadicalSeries RadicalSeries::operator-() const {
  RadicalSeries out = *this;
  for (auto& p : out.parts_) p = -p;
  return out;
}

RadicalSeries operator+(const RadicalSeries& l, const RadicalSeries& r) {
  if (!(l.rad_ == r.rad_)) throw std::logic_error("mixing different radicals");
  RadicalSeries out = l;
  for (std::size_t i = 0; i < out.parts_.size(); ++i) out.parts_[i] = out.parts_[i] + r.parts_[i];
  return out;
}

RadicalSeries operator-(const RadicalSeries& l, const RadicalSeries& r) { return l + (-r); }

RadicalSeries operator*(const RadicalSeries& l, const RadicalSeries& r) {
  if (!(l.rad_ == r.rad_)) throw std::logic_error("mixing different radicals");
  const std::size_t n = l.parts_.size();
  RadicalSeries out(l.rad_);
  const Coeff s(l.rad_.s);
  for (std::size_t i = 0; i < n; ++i) {
    if (l.parts_[i].is_certified_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (r.parts_[j].is_certified_zero()) continue;
      PuiseuxSeries t = l.parts_[i] * r.parts_[j];
      if (i + j >= n) {
        out.parts_[i + j - n] = out.parts_[i + j - n] + t.scaled(s);
      } else {
        out.parts_[i + j] = out.parts_[i + j] + t;
      }
    }
  }
  return out;
}

RadicalSeries RadicalSeries::scaled(const mpq_class& c) const {
  RadicalSeries out = *this;
  for (auto& p : out.parts_) p = p.scaled(Coeff(c));
  return out;
}

RadicalSeries pow(const RadicalSeries& s, unsigned k) {
  RadicalSeries out(s.radical(), PuiseuxSeries::constant(Coeff(1L)));
  RadicalSeries base = s;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return out;
}

OrderCertificate RadicalSeries::order() const {
  OrderCertificate cert;
  std::optional<Rational> first;
  for (const auto& p : parts_) {
    if (!p.terms().empty() && (!first || p.terms().front().exponent < *first)) {
      first = p.terms().front().exponent;
    }
  }
  std::optional<Rational> trunc;
  for (const auto& p : parts_) {
    if (p.truncation() && (!trunc || *p.truncation() < *trunc)) trunc = p.truncation();
  }
  if (!first) {
    cert.order = trunc;
    cert.status = trunc ? OrderCertificate::Status::Indeterminate : OrderCertificate::Status::Infinite;
    if (trunc) cert.issue = OrderCertificate::Issue::Truncation;
    return cert;
  }
  cert.order = first;
  if (trunc && *trunc <= *first) {
    cert.status = OrderCertificate::Status::Indeterminate;
    cert.issue = OrderCertificate::Issue::Truncation;
    cert.order = trunc;
    return cert;
  }
  // Leading value sum_k c_k rho^k; exact when only the rational part is present.
  bool only_rational = true;
  Coeff lead_exact;
  Interval lead;
  const Interval rho = rad_.value();
  Interval rho_k(mpq_class(1));
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    for (const auto& t : parts_[k].terms()) {
      if (t.exponent != *first) continue;
      if (k == 0) {
        lead_exact = t.coefficient;
      } else {
        only_rational = false;
      }
      lead = lead + t.coefficient.enclosure() * rho_k;
      break;
    }
    rho_k = rho_k * rho;
  }
  if (only_rational) {
    cert.status = OrderCertificate::Status::Finite;
    cert.leading = lead_exact;
    return cert;
  }
  if (lead.contains_zero()) {
    cert.status = OrderCertificate::Status::Indeterminate;
    cert.issue = OrderCertificate::Issue::Straddle;
    return cert;
  }
  cert.status = OrderCertificate::Status::Finite;
  cert.leading = Coeff(lead);
  return cert;
}

PuiseuxSeries RadicalSeries::collapse() const {
  PuiseuxSeries out;
  const Interval rho = rad_.value();
  Interval rho_k(mpq_class(1));
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    out = out + (k == 0 ? parts_[k] : parts_[k].scaled(Coeff(rho_k)));
    rho_k = rho_k * rho;
  }
  return out;
}

}  // namespace strat

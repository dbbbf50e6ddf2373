#include "strat/puiseux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace strat {

namespace {

bool overlaps(const Coeff& l, const Coeff& r) {
  if (l.is_exact() && r.is_exact()) return l.exact() == r.exact();
  const Interval a = l.enclosure();
  const Interval b = r.enclosure();
  return mpfr_cmp(a.hi(), b.lo()) >= 0 && mpfr_cmp(b.hi(), a.lo()) >= 0;
}

std::optional<Rational> min_opt(const std::optional<Rational>& l, const std::optional<Rational>& r) {
  if (!l) return r;
  if (!r) return l;
  return min(*l, *r);
}

// Product, dropping everything at or above `cap` (when set).
PuiseuxSeries multiply(const PuiseuxSeries& s, const PuiseuxSeries& t,
                       const std::optional<Rational>& cap) {
  const auto vs = s.valuation_bound();
  const auto vt = t.valuation_bound();
  if (!vs || !vt) return PuiseuxSeries();
  std::optional<Rational> trunc;
  if (s.truncation()) trunc = *s.truncation() + *vt;
  if (t.truncation()) trunc = min_opt(trunc, *t.truncation() + *vs);
  trunc = min_opt(trunc, cap);
  std::map<Rational, Coeff> acc;
  for (const auto& a : s.terms()) {
    for (const auto& b : t.terms()) {
      Rational e = a.exponent + b.exponent;
      if (trunc && e >= *trunc) break;
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, a.coefficient * b.coefficient);
      } else {
        it->second = it->second + a.coefficient * b.coefficient;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) out.push_back({e, std::move(c)});
  return PuiseuxSeries(std::move(out), trunc);
}

mpq_class binomial(const Rational& r, unsigned k) {
  mpq_class out = 1;
  const mpq_class rq = r.to_mpq();
  for (unsigned i = 0; i < k; ++i) {
    out *= (rq - i);
    out /= (i + 1);
  }
  return out;
}

// Splits s = m u^e (1 + h). Throws unless m is certified nonzero.
struct Factored {
  Coeff m;
  Rational e;
  PuiseuxSeries h;
};

Factored factor_leading(const PuiseuxSeries& s, const char* op) {
  if (s.terms().empty()) {
    throw IndeterminateLeading(std::string(op) + ": no known leading term");
  }
  const Term& lead = s.terms().front();
  if (!lead.coefficient.excludes_zero()) {
    throw IndeterminateLeading(std::string(op) + ": leading coefficient straddles zero");
  }
  std::vector<Term> rest;
  rest.reserve(s.terms().size() - 1);
  for (std::size_t i = 1; i < s.terms().size(); ++i) {
    rest.push_back({s.terms()[i].exponent - lead.exponent, s.terms()[i].coefficient / lead.coefficient});
  }
  std::optional<Rational> trunc;
  if (s.truncation()) trunc = *s.truncation() - lead.exponent;
  return {lead.coefficient, lead.exponent, PuiseuxSeries(std::move(rest), trunc)};
}

// sum_k coef(k) h^k truncated at `limit` (h has positive valuation).
PuiseuxSeries power_sum(const PuiseuxSeries& h, const Rational& limit,
                        const std::function<mpq_class(unsigned)>& coef) {
  std::vector<Term> one{{Rational(0), Coeff(coef(0))}};
  PuiseuxSeries acc(std::move(one), limit);
  const auto vh = h.valuation_bound();
  if (!vh) return acc;
  PuiseuxSeries hk = PuiseuxSeries::constant(Coeff(1L));
  for (unsigned k = 1;; ++k) {
    if (Rational(static_cast<std::int64_t>(k)) * *vh >= limit) break;
    hk = multiply(hk, h, limit);
    const mpq_class ck = coef(k);
    if (ck != 0) acc = acc + hk.scaled(Coeff(ck));
  }
  return acc.truncated(limit);
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(std::vector<Term> terms, std::optional<Rational> truncation)
    : truncation_(truncation) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& l, const Term& r) { return l.exponent < r.exponent; });
  for (auto& t : terms) {
    if (truncation_ && t.exponent >= *truncation_) break;
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coefficient = terms_.back().coefficient + t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient.is_certified_zero(); });
}

PuiseuxSeries PuiseuxSeries::monomial(const Coeff& c, const Rational& exponent) {
  return PuiseuxSeries({{exponent, c}});
}

PuiseuxSeries PuiseuxSeries::unknown(const Rational& truncation) {
  return PuiseuxSeries({}, truncation);
}

bool PuiseuxSeries::all_exact_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coefficient.is_exact(); });
}

std::optional<Rational> PuiseuxSeries::valuation_bound() const {
  if (!terms_.empty()) return terms_.front().exponent;
  return truncation_;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& at) const {
  return PuiseuxSeries(terms_, min_opt(truncation_, at));
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& e) const {
  PuiseuxSeries out = *this;
  for (auto& t : out.terms_) t.exponent += e;
  if (out.truncation_) *out.truncation_ += e;
  return out;
}

PuiseuxSeries PuiseuxSeries::scaled(const Coeff& c) const {
  if (c.is_certified_zero()) return PuiseuxSeries();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.exponent, t.coefficient * c});
  return PuiseuxSeries(std::move(out), truncation_);
}

PuiseuxSeries PuiseuxSeries::substitute_power(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
  PuiseuxSeries out = *this;
  for (auto& t : out.terms_) t.exponent *= Rational(k);
  if (out.truncation_) *out.truncation_ *= Rational(k);
  return out;
}

Interval PuiseuxSeries::evaluate_dyadic(long k) const {
  Interval acc;
  for (const auto& t : terms_) {
    const Rational x = -(Rational(k) * t.exponent);
    acc = acc + t.coefficient.enclosure() * Interval(x.to_mpq()).exp2();
  }
  return acc;
}

std::string PuiseuxSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << t.coefficient.to_string() << ")*u^" << t.exponent.to_string();
  }
  if (truncation_) {
    if (!first) os << " + ";
    first = false;
    os << "O(u^" << truncation_->to_string() << ')';
  }
  if (first) os << '0';
  return os.str();
}

bool operator==(const PuiseuxSeries& l, const PuiseuxSeries& r) {
  if (l.truncation_ != r.truncation_ || l.terms_.size() != r.terms_.size()) return false;
  for (std::size_t i = 0; i < l.terms_.size(); ++i) {
    if (l.terms_[i].exponent != r.terms_[i].exponent) return false;
    if (!(l.terms_[i].coefficient == r.terms_[i].coefficient)) return false;
  }
  return true;
}

PuiseuxSeries operator-(const PuiseuxSeries& s) { return s.scaled(Coeff(-1L)); }

PuiseuxSeries operator+(const PuiseuxSeries& s, const PuiseuxSeries& t) {
  std::vector<Term> all = s.terms();
  all.insert(all.end(), t.terms().begin(), t.terms().end());
  return PuiseuxSeries(std::move(all), min_opt(s.truncation(), t.truncation()));
}

PuiseuxSeries operator-(const PuiseuxSeries& s, const PuiseuxSeries& t) { return s + (-t); }

PuiseuxSeries operator*(const PuiseuxSeries& s, const PuiseuxSeries& t) {
  return multiply(s, t, std::nullopt);
}

PuiseuxSeries pow(const PuiseuxSeries& s, unsigned k) {
  PuiseuxSeries out = PuiseuxSeries::constant(Coeff(1L));
  PuiseuxSeries base = s;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return out;
}

PuiseuxSeries div(const PuiseuxSeries& s, const PuiseuxSeries& t, const Rational& depth) {
  if (s.is_certified_zero()) return PuiseuxSeries();
  Factored f = factor_leading(t, "div");
  Rational limit = depth;
  if (f.h.truncation()) limit = min(limit, *f.h.truncation());
  PuiseuxSeries inv;
  if (f.h.is_certified_zero()) {
    inv = PuiseuxSeries::constant(Coeff(1L));
  } else {
    inv = power_sum(f.h, limit, [](unsigned k) { return mpq_class(k % 2 ? -1 : 1); });
  }
  inv = inv.scaled(Coeff(1L) / f.m).shifted(-f.e);
  return s * inv;
}

PuiseuxSeries rpow(const PuiseuxSeries& s, const Rational& r, const Rational& depth) {
  if (r.is_integer() && r.num() >= 0) return pow(s, static_cast<unsigned>(r.num()));
  if (s.is_certified_zero()) {
    if (r.sign() > 0) return PuiseuxSeries();
    throw IndeterminateLeading("rpow: zero to a non-positive power");
  }
  Factored f = factor_leading(s, "rpow");
  if (f.m.certified_sign() != std::optional<int>(1)) {
    throw IndeterminateLeading("rpow: leading coefficient not certified positive");
  }
  Rational limit = depth;
  if (f.h.truncation()) limit = min(limit, *f.h.truncation());
  PuiseuxSeries body;
  if (f.h.is_certified_zero()) {
    body = PuiseuxSeries::constant(Coeff(1L));
  } else {
    body = power_sum(f.h, limit, [&r](unsigned k) { return binomial(r, k); });
  }
  return body.scaled(positive_rpow(f.m, r)).shifted(f.e * r);
}

OrderCertificate order_of(const PuiseuxSeries& s) {
  OrderCertificate cert;
  bool straddled = false;
  for (const auto& t : s.terms()) {
    if (t.coefficient.excludes_zero()) {
      cert.order = t.exponent;
      if (straddled) {
        cert.status = OrderCertificate::Status::Indeterminate;
        cert.issue = OrderCertificate::Issue::Straddle;
      } else {
        cert.status = OrderCertificate::Status::Finite;
        cert.leading = t.coefficient;
      }
      return cert;
    }
    straddled = true;
  }
  cert.order = s.truncation();
  if (straddled) {
    cert.status = OrderCertificate::Status::Indeterminate;
    cert.issue = OrderCertificate::Issue::Straddle;
  } else if (s.truncation()) {
    cert.status = OrderCertificate::Status::Indeterminate;
    cert.issue = OrderCertificate::Issue::Truncation;
  } else {
    cert.status = OrderCertificate::Status::Infinite;
  }
  return cert;
}

OrderCertificate order_with_escalation(const std::function<PuiseuxSeries()>& build, unsigned cap) {
  OrderCertificate cert;
  for (unsigned bits = kDefaultPrecision; bits <= cap; bits *= 2) {
    PrecisionScope scope(bits);
    try {
      cert = order_of(build());
    } catch (const IndeterminateLeading&) {
      cert = OrderCertificate{};
      cert.issue = OrderCertificate::Issue::Straddle;
      continue;
    }
    if (cert.issue != OrderCertificate::Issue::Straddle) return cert;
  }
  return cert;
}

bool agrees_to_truncation(const PuiseuxSeries& s, const PuiseuxSeries& t) {
  const auto limit = min_opt(s.truncation(), t.truncation());
  std::size_t i = 0, j = 0;
  const auto& a = s.terms();
  const auto& b = t.terms();
  const Coeff zero;
  while (i < a.size() || j < b.size()) {
    const bool take_a = j >= b.size() || (i < a.size() && a[i].exponent <= b[j].exponent);
    const bool take_b = i >= a.size() || (j < b.size() && b[j].exponent <= a[i].exponent);
    const Rational e = take_a ? a[i].exponent : b[j].exponent;
    if (limit && e >= *limit) break;
    const Coeff& ca = take_a ? a[i].coefficient : zero;
    const Coeff& cb = take_b ? b[j].coefficient : zero;
    if (!overlaps(ca, cb)) return false;
    if (take_a) ++i;
    if (take_b) ++j;
  }
  return true;
}

}  // namespace strat

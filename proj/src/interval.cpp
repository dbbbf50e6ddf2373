#include "strat/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace strat {

namespace {

thread_local unsigned g_precision = kDefaultPrecision;

unsigned joint_precision(const Interval& l, const Interval& r) {
  return std::max({l.precision(), r.precision(), working_precision()});
}

}  // namespace

unsigned working_precision() { return g_precision; }

PrecisionScope::PrecisionScope(unsigned bits) : saved_(g_precision) { g_precision = bits; }
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Interval::Interval(unsigned prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval() : Interval(working_precision()) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const mpq_class& q) : Interval(working_precision()) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& lo, const mpq_class& hi) : Interval(working_precision()) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::from_double(double v) {
  Interval out(std::max(working_precision(), 53u));
  mpfr_set_d(out.lo_, v, MPFR_RNDD);
  mpfr_set_d(out.hi_, v, MPFR_RNDU);
  return out;
}

Interval::Interval(const Interval& o) : Interval(o.precision()) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.precision()) {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.precision());
    mpfr_set_prec(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::is_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }
bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint() const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double v = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return v;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double v = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return v;
}

Interval Interval::operator-() const {
  Interval out(precision());
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& l, const Interval& r) {
  Interval out(joint_precision(l, r));
  mpfr_add(out.lo_, l.lo_, r.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, l.hi_, r.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& l, const Interval& r) {
  Interval out(joint_precision(l, r));
  mpfr_sub(out.lo_, l.lo_, r.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, l.hi_, r.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& l, const Interval& r) {
  const unsigned prec = joint_precision(l, r);
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr ls[2] = {l.lo_, l.hi_};
  mpfr_srcptr rs[2] = {r.lo_, r.hi_};
  bool first = true;
  for (auto a : ls) {
    for (auto b : rs) {
      mpfr_mul(t, a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval operator/(const Interval& l, const Interval& r) {
  if (r.contains_zero()) throw std::domain_error("interval division by an interval containing 0");
  const unsigned prec = joint_precision(l, r);
  Interval inv(prec);
  mpfr_ui_div(inv.lo_, 1, r.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, r.lo_, MPFR_RNDU);
  return l * inv;
}

Interval Interval::square() const {
  Interval out(precision());
  if (contains_zero()) {
    mpfr_set_zero(out.lo_, 1);
    mpfr_t a;
    mpfr_init2(a, precision());
    mpfr_mul(out.hi_, lo_, lo_, MPFR_RNDU);
    mpfr_mul(a, hi_, hi_, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, a, MPFR_RNDU);
    mpfr_clear(a);
  } else if (is_positive()) {
    mpfr_mul(out.lo_, lo_, lo_, MPFR_RNDD);
    mpfr_mul(out.hi_, hi_, hi_, MPFR_RNDU);
  } else {
    mpfr_mul(out.lo_, hi_, hi_, MPFR_RNDD);
    mpfr_mul(out.hi_, lo_, lo_, MPFR_RNDU);
  }
  return out;
}

Interval Interval::abs() const {
  if (is_negative()) return -*this;
  if (is_positive()) return *this;
  Interval out(precision());
  mpfr_set_zero(out.lo_, 1);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::root(unsigned long k) const {
  if (k == 0) throw std::domain_error("zeroth root");
  if (k % 2 == 0 && is_negative()) throw std::domain_error("even root of a negative interval");
  Interval out(precision());
  if (k % 2 == 0 && mpfr_sgn(lo_) < 0) {
    mpfr_set_zero(out.lo_, 1);
  } else {
    mpfr_rootn_ui(out.lo_, lo_, k, MPFR_RNDD);
  }
  mpfr_rootn_ui(out.hi_, hi_, k, MPFR_RNDU);
  return out;
}

Interval Interval::pow(long k) const {
  if (k < 0) {
    Interval one(precision());
    mpfr_set_ui(one.lo_, 1, MPFR_RNDD);
    mpfr_set_ui(one.hi_, 1, MPFR_RNDU);
    return one / pow(-k);
  }
  Interval out(precision());
  mpfr_set_ui(out.lo_, 1, MPFR_RNDD);
  mpfr_set_ui(out.hi_, 1, MPFR_RNDU);
  Interval base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  // Even powers of a sign-straddling base go through square() to keep lo >= 0.
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base.square();
  }
  return out;
}

Interval Interval::exp2() const {
  Interval out(precision());
  mpfr_exp2(out.lo_, lo_, MPFR_RNDD);
  mpfr_exp2(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval max(const Interval& l, const Interval& r) {
  Interval out(joint_precision(l, r));
  mpfr_max(out.lo_, l.lo_, r.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, l.hi_, r.hi_, MPFR_RNDU);
  return out;
}

Interval hull(const Interval& l, const Interval& r) {
  Interval out(joint_precision(l, r));
  mpfr_min(out.lo_, l.lo_, r.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, l.hi_, r.hi_, MPFR_RNDU);
  return out;
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "[" << lower() << ", " << upper() << "]";
  return os.str();
}

}  // namespace strat

#include "strat/coeff.hpp"

#include <stdexcept>

namespace strat {

Interval Coeff::enclosure() const {
  if (is_exact()) return Interval(exact());
  return std::get<Interval>(value_);
}

bool Coeff::is_certified_zero() const {
  if (is_exact()) return sgn(exact()) == 0;
  return std::get<Interval>(value_).is_zero();
}

bool Coeff::excludes_zero() const {
  if (is_exact()) return sgn(exact()) != 0;
  return std::get<Interval>(value_).excludes_zero();
}

std::optional<int> Coeff::certified_sign() const {
  if (is_exact()) return sgn(exact());
  const auto& i = std::get<Interval>(value_);
  if (i.is_zero()) return 0;
  if (i.is_positive()) return 1;
  if (i.is_negative()) return -1;
  return std::nullopt;
}

Coeff Coeff::operator-() const {
  if (is_exact()) return Coeff(mpq_class(-exact()));
  return Coeff(-std::get<Interval>(value_));
}

Coeff operator+(const Coeff& l, const Coeff& r) {
  if (l.is_exact() && r.is_exact()) return Coeff(mpq_class(l.exact() + r.exact()));
  if (l.is_certified_zero()) return r;
  if (r.is_certified_zero()) return l;
  return Coeff(l.enclosure() + r.enclosure());
}

Coeff operator-(const Coeff& l, const Coeff& r) { return l + (-r); }

Coeff operator*(const Coeff& l, const Coeff& r) {
  if (l.is_exact() && r.is_exact()) return Coeff(mpq_class(l.exact() * r.exact()));
  if (l.is_certified_zero() || r.is_certified_zero()) return Coeff();
  if (l.is_exact() && l.exact() == 1) return r;
  if (r.is_exact() && r.exact() == 1) return l;
  return Coeff(l.enclosure() * r.enclosure());
}

Coeff operator/(const Coeff& l, const Coeff& r) {
  if (r.is_exact()) {
    if (sgn(r.exact()) == 0) throw std::domain_error("coefficient division by zero");
    if (l.is_exact()) return Coeff(mpq_class(l.exact() / r.exact()));
  }
  if (!r.excludes_zero()) throw std::domain_error("coefficient division by an indeterminate value");
  return Coeff(l.enclosure() / r.enclosure());
}

Coeff Coeff::abs() const {
  if (is_exact()) return Coeff(mpq_class(::abs(exact())));
  return Coeff(std::get<Interval>(value_).abs());
}

Coeff Coeff::square() const {
  if (is_exact()) return Coeff(mpq_class(exact() * exact()));
  return Coeff(std::get<Interval>(value_).square());
}

bool operator==(const Coeff& l, const Coeff& r) {
  return l.is_exact() && r.is_exact() && l.exact() == r.exact();
}

std::string Coeff::to_string() const {
  if (is_exact()) return exact().get_str();
  return std::get<Interval>(value_).to_string();
}

std::optional<mpq_class> exact_root(const mpq_class& m, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (sgn(m) < 0 && k % 2 == 0) return std::nullopt;
  const int s = sgn(m);
  mpz_class n = ::abs(m.get_num());
  mpz_class d = m.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
  mpq_class out(rn, rd);
  out.canonicalize();
  return s < 0 ? mpq_class(-out) : out;
}

Coeff positive_rpow(const Coeff& m, const Rational& r) {
  const auto sign = m.certified_sign();
  if (!sign || *sign <= 0) throw std::domain_error("rational power needs a certified positive base");
  const long n = r.num();
  const unsigned long k = static_cast<unsigned long>(r.den());
  if (m.is_exact()) {
    if (auto root = exact_root(m.exact(), k)) {
      mpq_class out(1);
      mpq_class base = n >= 0 ? *root : mpq_class(1 / *root);
      for (long i = 0; i < (n >= 0 ? n : -n); ++i) out *= base;
      return Coeff(out);
    }
  }
  return Coeff(m.enclosure().root(k).pow(n));
}

Coeff abs_max(const Coeff& l, const Coeff& r) {
  const Coeff al = l.abs();
  const Coeff ar = r.abs();
  if (al.is_exact() && ar.is_exact()) return al.exact() >= ar.exact() ? al : ar;
  return Coeff(max(al.enclosure(), ar.enclosure()));
}

}  // namespace strat

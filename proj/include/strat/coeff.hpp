#pragma once

// Series coefficients: exact rationals while an expression stays in Q, and
// MPFR intervals once an irrational value (a non-perfect root) enters.

#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "strat/interval.hpp"
#include "strat/rational.hpp"

namespace strat {

class Coeff {
 public:
  Coeff() : value_(mpq_class(0)) {}
  Coeff(const mpq_class& q) : value_(q) {  // NOLINT(implicit)
    std::get<mpq_class>(value_).canonicalize();
  }
  Coeff(long v) : value_(mpq_class(v)) {}   // NOLINT(implicit)
  Coeff(const Rational& r) : value_(r.to_mpq()) {}  // NOLINT(implicit)
  Coeff(Interval i) : value_(std::move(i)) {}       // NOLINT(implicit)

  bool is_exact() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& exact() const { return std::get<mpq_class>(value_); }
  Interval enclosure() const;

  bool is_certified_zero() const;
  bool excludes_zero() const;
  // +1 / -1 when the sign is certain, 0 when certified zero, nullopt otherwise.
  std::optional<int> certified_sign() const;

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& l, const Coeff& r);
  friend Coeff operator-(const Coeff& l, const Coeff& r);
  friend Coeff operator*(const Coeff& l, const Coeff& r);
  friend Coeff operator/(const Coeff& l, const Coeff& r);

  Coeff abs() const;
  Coeff square() const;

  // Exact comparison; intervals compare equal only as identical exact values.
  friend bool operator==(const Coeff& l, const Coeff& r);

  std::string to_string() const;

 private:
  std::variant<mpq_class, Interval> value_;
};

// m^(1/k), exact when m is a perfect k-th power of a rational.
std::optional<mpq_class> exact_root(const mpq_class& m, unsigned long k);
// m^r for m > 0 (certified), r rational; exact when possible.
Coeff positive_rpow(const Coeff& m, const Rational& r);
// max(|l|, |r|) as an enclosure (exact when both exact).
Coeff abs_max(const Coeff& l, const Coeff& r);

}  // namespace strat

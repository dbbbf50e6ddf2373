#pragma once

// Truncated Puiseux series in one parameter u with exact rational exponents.
//
// A series is a finite list of terms with strictly increasing exponents and
// an optional truncation order T: every exponent below T is known (the
// coefficient intervals enclose the true values); nothing is known at or
// above T. A series without a truncation order is exact (a finite sum).

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strat/coeff.hpp"
#include "strat/rational.hpp"

namespace strat {

// Relative depth kept by operations that produce infinite expansions.
inline const Rational kDefaultDepth{8};

struct Term {
  Rational exponent;
  Coeff coefficient;
};

class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;  // the exact zero series
  explicit PuiseuxSeries(std::vector<Term> terms,
                         std::optional<Rational> truncation = std::nullopt);

  static PuiseuxSeries monomial(const Coeff& c, const Rational& exponent);
  static PuiseuxSeries constant(const Coeff& c) { return monomial(c, Rational(0)); }
  // Nothing known below `truncation` except that it is the truncation point.
  static PuiseuxSeries unknown(const Rational& truncation);

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Rational>& truncation() const { return truncation_; }
  bool is_exact() const { return !truncation_.has_value(); }
  bool is_certified_zero() const { return terms_.empty() && is_exact(); }
  bool all_exact_coefficients() const;

  // Lowest exponent that may carry a nonzero coefficient; nullopt for zero.
  std::optional<Rational> valuation_bound() const;

  PuiseuxSeries truncated(const Rational& at) const;
  PuiseuxSeries shifted(const Rational& e) const;        // times u^e
  PuiseuxSeries scaled(const Coeff& c) const;            // times c
  PuiseuxSeries substitute_power(std::int64_t k) const;  // u -> u^k, k >= 1

  // Enclosure of the known partial sum at u = 2^(-k).
  Interval evaluate_dyadic(long k) const;

  std::string to_string() const;

  // Identical term lists (exact coefficients) and truncation orders.
  friend bool operator==(const PuiseuxSeries& l, const PuiseuxSeries& r);

 private:
  std::vector<Term> terms_;
  std::optional<Rational> truncation_;
};

PuiseuxSeries operator-(const PuiseuxSeries& s);
PuiseuxSeries operator+(const PuiseuxSeries& s, const PuiseuxSeries& t);
PuiseuxSeries operator-(const PuiseuxSeries& s, const PuiseuxSeries& t);
PuiseuxSeries operator*(const PuiseuxSeries& s, const PuiseuxSeries& t);

PuiseuxSeries pow(const PuiseuxSeries& s, unsigned k);

class IndeterminateLeading : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// s / t. Requires a certified nonzero leading coefficient of t.
PuiseuxSeries div(const PuiseuxSeries& s, const PuiseuxSeries& t,
                  const Rational& depth = kDefaultDepth);
// s^r. Requires a certified positive leading coefficient (or s = 0, r > 0).
PuiseuxSeries rpow(const PuiseuxSeries& s, const Rational& r,
                   const Rational& depth = kDefaultDepth);

struct OrderCertificate {
  enum class Status { Finite, Infinite, Indeterminate };
  enum class Issue { None, Straddle, Truncation };

  Status status = Status::Indeterminate;
  Issue issue = Issue::None;
  // Finite: the order. Indeterminate: the candidate (first solid exponent,
  // or the truncation order when no solid term is known).
  std::optional<Rational> order;
  std::optional<Coeff> leading;

  bool finite() const { return status == Status::Finite; }
  bool infinite() const { return status == Status::Infinite; }
  bool indeterminate() const { return status == Status::Indeterminate; }
};

OrderCertificate order_of(const PuiseuxSeries& s);

// Runs `build` at 64, 128, ... bits up to `cap` until the order of the
// resulting series no longer hinges on a zero-straddling coefficient.
OrderCertificate order_with_escalation(const std::function<PuiseuxSeries()>& build,
                                       unsigned cap = kPrecisionCap);

// The two series agree on every exponent below both truncation orders.
bool agrees_to_truncation(const PuiseuxSeries& s, const PuiseuxSeries& t);

}  // namespace strat

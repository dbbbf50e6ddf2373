#pragma once

// Small exact rationals for series exponents and arc coefficients.
//
// Values are kept normalized (gcd(num, den) = 1, den > 0). Arithmetic is
// checked: any int64 overflow throws std::overflow_error instead of wrapping.

#include <cstdint>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace strat {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  mpq_class to_mpq() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

  friend bool operator==(const Rational& l, const Rational& r) = default;
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r);

  // "n" or "n/d".
  std::string to_string() const;
  // Accepts "n", "-n", "n/d".
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);
Rational pow(const Rational& r, int k);
Rational min(const Rational& l, const Rational& r);
Rational max(const Rational& l, const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace strat

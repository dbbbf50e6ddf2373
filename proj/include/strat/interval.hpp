#pragma once

// Closed real intervals with MPFR endpoints and outward rounding.
//
// The working precision is a thread-local setting (see PrecisionScope); every
// interval remembers the precision it was created at and binary operations
// run at the larger of the two.

#include <mpfr.h>

#include <string>

#include <gmpxx.h>

namespace strat {

inline constexpr unsigned kDefaultPrecision = 64;
inline constexpr unsigned kPrecisionCap = 1024;

unsigned working_precision();

// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

class Interval {
 public:
  Interval();  // [0, 0]
  explicit Interval(const mpq_class& q);
  Interval(const mpq_class& lo, const mpq_class& hi);
  static Interval from_double(double v);  // point interval, exact conversion

  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(lo_)); }

  bool contains_zero() const;
  bool excludes_zero() const { return !contains_zero(); }
  bool is_zero() const;  // the point interval [0, 0]
  bool is_positive() const;
  bool is_negative() const;
  bool contains(double v) const;
  bool contains(const mpq_class& v) const;

  double lower() const;  // rounded down
  double upper() const;  // rounded up
  double midpoint() const;
  double width() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& l, const Interval& r);
  friend Interval operator-(const Interval& l, const Interval& r);
  friend Interval operator*(const Interval& l, const Interval& r);
  // Throws std::domain_error if the divisor contains zero.
  friend Interval operator/(const Interval& l, const Interval& r);

  Interval square() const;
  Interval abs() const;
  // Enclosure of x^(1/k) for x > 0 (lower endpoint clamped at 0 for k even).
  Interval root(unsigned long k) const;
  Interval pow(long k) const;
  // 2^x, monotone enclosure.
  Interval exp2() const;

  friend Interval max(const Interval& l, const Interval& r);
  friend Interval hull(const Interval& l, const Interval& r);

  std::string to_string() const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

 private:
  explicit Interval(unsigned prec);
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace strat

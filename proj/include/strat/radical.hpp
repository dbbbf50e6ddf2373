#pragma once

// Series whose coefficients live in Q(rho), rho = s^(1/n), stored as
// n rational series: sum_k rho^k * part[k]. With s chosen so that
// X^n - s is irreducible, a coefficient vanishes iff every part's
// coefficient does, which makes cancellation checks exact.

#include <cstdint>
#include <vector>

#include "strat/puiseux.hpp"

namespace strat {

struct Radical {
  std::int64_t n = 1;
  mpq_class s = 1;

  // m^(1/a) for m > 0, reduced to an irreducible presentation.
  static Radical root_of(const mpq_class& m, std::int64_t a);
  Interval value() const;  // enclosure of rho at the working precision
  friend bool operator==(const Radical& l, const Radical& r) { return l.n == r.n && l.s == r.s; }
};

class RadicalSeries {
 public:
  RadicalSeries() : RadicalSeries(Radical{}) {}
  explicit RadicalSeries(Radical r);
  RadicalSeries(Radical r, const PuiseuxSeries& rational_part);
  // rho^k * s for exact rational s.
  static RadicalSeries rho_power_times(Radical r, std::int64_t k, const PuiseuxSeries& s);

  const Radical& radical() const { return rad_; }
  const std::vector<PuiseuxSeries>& parts() const { return parts_; }
  bool is_certified_zero() const;

  RadicalSeries operator-() const;
  friend RadicalSeries operator+(const RadicalSeries& l, const RadicalSeries& r);
  friend RadicalSeries operator-(const RadicalSeries& l, const RadicalSeries& r);
  friend RadicalSeries operator*(const RadicalSeries& l, const RadicalSeries& r);
  RadicalSeries scaled(const mpq_class& c) const;

  // Order and leading coefficient; Straddle only if the enclosure of a
  // (provably nonzero) leading value still contains 0 at this precision.
  OrderCertificate order() const;
  // The same series with interval coefficients.
  PuiseuxSeries collapse() const;

 private:
  Radical rad_;
  std::vector<PuiseuxSeries> parts_;
};

RadicalSeries pow(const RadicalSeries& s, unsigned k);

}  // namespace strat

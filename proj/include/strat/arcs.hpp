#pragma once

// Monomial arcs x = sigma kappa u^p, z = lambda u^q on V, arc pairs, and
// certified limit behaviour of the regularity quantities along them.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strat/core.hpp"
#include "strat/geometry.hpp"
#include "strat/radical.hpp"

namespace strat {

enum class Quantity { A, Bpi, W, Z, L2, L3 };
std::string to_string(Quantity q);
Quantity parse_quantity(const std::string& s);

struct MonomialArc {
  std::int64_t p = 1;
  std::int64_t q = 1;
  int sigma_x = 1;
  Rational kappa{1};   // |x coefficient|, > 0
  Rational lambda{1};  // z coefficient; for root arcs the value of z^b
  int branch = 1;      // sign of y when a is even
  // Complex mode: z is any b-th root of lambda. Only |z| and z^b enter the
  // quantities, so the choice of root does not matter.
  bool root = false;

  friend bool operator==(const MonomialArc&, const MonomialArc&) = default;
  std::string to_string() const;
};

// q'(u): x' = x (1 + delta u^e), same z, y' on the given branch.
struct ArcPair {
  MonomialArc base;
  Rational delta{1};
  Rational e{1};
  int branch = 1;

  friend bool operator==(const ArcPair&, const ArcPair&) = default;
};

void to_json(json& j, const MonomialArc& a);
void from_json(const json& j, MonomialArc& a);
void to_json(json& j, const ArcPair& a);
void from_json(const json& j, ArcPair& a);

class InfeasibleArc : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Over R every arc needs a real y: a even forces a nonnegative right-hand side.
bool feasible(const SurfaceParams& p, const MonomialArc& arc);

struct Substitution {
  PuiseuxSeries x, z, rhs;
  RadicalSeries y;
};
// Real arcs only. Throws InfeasibleArc.
Substitution substitute(const SurfaceParams& p, const MonomialArc& arc,
                        const Rational& depth = kDefaultDepth);
// y^a - (z^b x^c + x^d); certified zero up to the truncation of y.
RadicalSeries surface_residual(const SurfaceParams& p, const Substitution& s);

enum class LimitClass { TendsToZero, BoundedNonzero, Unbounded, Indeterminate };
std::string to_string(LimitClass c);

struct LimitBehavior {
  LimitClass cls = LimitClass::Indeterminate;
  std::optional<Rational> order;  // nullopt: identically zero (or unknown when indeterminate)
  std::optional<Interval> leading;
  std::string note;
};

// The class as a function of (order, leading): order > 0 or identically
// zero tends to 0, order 0 with nonzero leading is bounded away from 0.
LimitClass limit_class(const std::optional<Rational>& order, bool identically_zero);

struct LimitOptions {
  Rational depth = kDefaultDepth;
  unsigned precision_cap = kPrecisionCap;
  unsigned depth_doublings = 3;
};

// Quantities A, Bpi, W (= Z' as printed) and Z. Throws InfeasibleArc;
// DegenerateDenominator when the arc runs inside the denominator's zero set.
LimitBehavior limit_along_arc(const SurfaceParams& p, Quantity quantity, const MonomialArc& arc,
                              const LimitOptions& options = {});
// Quantities L2 and L3. Also throws InadmissiblePair.
LimitBehavior limit_along_pair(const SurfaceParams& p, Quantity quantity, const ArcPair& pair,
                               const LimitOptions& options = {});
// {L2, L3} from one shared evaluation.
std::array<LimitBehavior, 2> limits_along_pair(const SurfaceParams& p, const ArcPair& pair,
                                               const LimitOptions& options = {});

struct CriticalCoefficient {
  Rational kappa;
  Rational lambda;
  std::string family;  // "rhs": z^b x^c + x^d cancels; "fx": f_x cancels
};

struct CriticalSet {
  bool on_critical_slope = false;  // q b = p (d - c)
  bool rhs_family_solvable = false;
  bool fx_family_solvable = false;
  std::vector<CriticalCoefficient> values;
};

// Coefficients making the two monomials of z^b x^c + x^d, or of f_x, cancel
// along exponents (p, q). Over C (root arcs) the z^b value is returned.
CriticalSet critical_lambdas(const SurfaceParams& p, std::int64_t px, std::int64_t qz, int sigma_x,
                             Field field);

}  // namespace strat

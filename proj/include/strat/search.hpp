#pragma once

// Fault-witness search over monomial arcs and arc pairs, plus a floating
// oracle (re-certification and dyadic shell sampling) independent of the
// series kernel.

#include <chrono>
#include <optional>
#include <vector>

#include "strat/arcs.hpp"

namespace strat {

struct SearchBudget {
  std::int64_t max_height = 64;       // p+q, and num+den of the generic lambdas
  std::int64_t max_arcs = 200000;     // evaluation cap per find_fault call
  std::chrono::milliseconds per_tuple_time{1000};
  std::int64_t max_pair_height = 6;   // p+q of base arcs used for (L2)/(L3) pairs
  Rational depth{kDefaultDepth};
  unsigned precision_cap = kPrecisionCap;
};
void to_json(json& j, const SearchBudget& b);

struct FaultWitness {
  SurfaceParams params;
  Field field = Field::Real;
  Condition condition = Condition::WhitneyA;
  MonomialArc arc;
  std::optional<ArcPair> pair;
  Quantity quantity = Quantity::A;
  LimitBehavior behavior;
};
void to_json(json& j, const FaultWitness& w);

struct NoneFound {
  SearchBudget budget;
  std::size_t evaluated = 0;
  std::size_t indeterminate = 0;
  std::size_t rejected = 0;  // certified candidates that failed float re-certification
  bool timed_out = false;
  bool arc_cap_hit = false;
};
void to_json(json& j, const NoneFound& n);

struct SearchResult {
  std::optional<FaultWitness> witness;
  NoneFound record;  // filled in either case
};

// Arcs in increasing p+q, slope order within a height, then sigma, lambda.
// Complex mode yields root arcs carrying z^b directly. With one_per_class,
// slopes off qb = p(d-c) keep only their first feasible arc: there no two
// monomials share an exponent, so every single-arc order is the same for all
// sigma and lambda.
std::vector<MonomialArc> enumerate_arcs(const SurfaceParams& p, const SearchBudget& budget,
                                        Field field = Field::Real, bool one_per_class = false);
std::vector<ArcPair> enumerate_pairs(const SurfaceParams& p, const SearchBudget& budget);

// Quantities scanned for a condition; (L) adds L2/L3 on pairs.
std::vector<Quantity> quantities_for(Condition c);
// Whether a certified class counts as a fault for the condition.
bool is_fault(Condition c, LimitClass cls);

SearchResult find_fault(const SurfaceParams& p, Field field, Condition condition, const SearchBudget& budget = {});
SearchResult find_fault_serial(const SurfaceParams& p, Field field, Condition condition,
                               const SearchBudget& budget = {});

// Floating value of a quantity at parameter u (wide MPFR floats).
std::optional<double> numeric_log_value(const SurfaceParams& p, Quantity q, const MonomialArc& arc,
                                        const std::optional<ArcPair>& pair, int log2_u);
// Three-point check at u = 2^-10, 2^-16, 2^-22 against the claimed class.
bool recertify(const FaultWitness& w);

struct GridSpec {
  int k_min = 10;
  int k_max = 30;
  double alpha_min = 0.125;  // x = +-u^alpha on the shell |z| = u
  double alpha_max = 8.0;
  int alpha_steps = 97;
};

struct GridReport {
  Quantity quantity = Quantity::W;
  std::vector<std::pair<int, double>> shell_max;  // (k, max value on shell u = 2^-k)
  std::optional<double> fitted_exponent;          // slope of log max against log u
  std::size_t feasible_points = 0;
};
void to_json(json& j, const GridReport& r);

GridReport sample_grid(const SurfaceParams& p, Quantity q, const GridSpec& spec = {});

}  // namespace strat

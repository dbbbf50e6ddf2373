#pragma once

// The eight printed classification trees, frozen as data, plus the derived
// predicates (C^1 smoothness, quasi-homogeneous weights).

#include <string>
#include <vector>

#include "strat/core.hpp"
#include "strat/rational.hpp"

namespace strat {

using LeafTrace = std::vector<std::string>;

struct Classification {
  Verdict verdict = Verdict::Undecided;
  LeafTrace trace;      // guards from root to leaf, then the verdict tag
  std::string leaf_id;  // "D<diagram>.<leaf>" in printed order
  std::string trace_string() const;  // guards joined with " > "
};

Classification classify(const SurfaceParams& p, Field field, Condition condition);
RegularityProfile profile(const SurfaceParams& p);

// Number of the printed diagram used for (field, condition).
int diagram_number(Field field, Condition condition);

// Flat description of a diagram for coverage bookkeeping.
struct LeafInfo {
  std::string id;
  std::vector<std::string> guards;
  Verdict verdict;
};
std::vector<LeafInfo> diagram_leaves(int diagram);
// Ids of every leaf whose full guard path is satisfied; exactly one for a
// well-formed tree.
std::vector<std::string> matching_leaves(const SurfaceParams& p, int diagram);

// y is C^1 in (x, z) near the origin (a <= b counts as clearing the threshold).
bool c1_smooth(const SurfaceParams& p);

struct QuasiWeights {
  Rational w_x, w_y, w_z, degree;
};
// Requires c < d; throws ParamError otherwise.
QuasiWeights quasi_weights(const SurfaceParams& p);
// Weighted degrees of the monomials y^a, z^b x^c, x^d under `w`.
std::vector<Rational> monomial_degrees(const SurfaceParams& p, const QuasiWeights& w);

// The equality set of the real (w) tree where w => b fails as printed:
// a>1, d>c, b even, d = c mod 2, d>a and a(d-c) = b|d-a|.
bool on_w_equality_boundary(const SurfaceParams& p);

}  // namespace strat

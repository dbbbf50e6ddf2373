#include "strat/classifier.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace strat {

namespace {

struct Ex {
  mpz_class a, b, c, d;
  explicit Ex(const SurfaceParams& p)
      : a(static_cast<long>(p.a)), b(static_cast<long>(p.b)), c(static_cast<long>(p.c)),
        d(static_cast<long>(p.d)) {}
};

bool even(const mpz_class& v) { return mpz_even_p(v.get_mpz_t()) != 0; }
mpz_class absz(const mpz_class& v) { return v < 0 ? mpz_class(-v) : v; }

using Pred = bool (*)(const Ex&);
struct Guard {
  const char* label;
  Pred test;
};

// d < ac/(a-b), only meaningful with a > b.
bool below_threshold(const Ex& e) { return e.a > e.b && e.d * (e.a - e.b) < e.a * e.c; }
bool above_threshold(const Ex& e) { return e.a > e.b && e.d * (e.a - e.b) >= e.a * e.c; }
mpz_class w_lhs(const Ex& e) { return e.a * (e.d - e.c); }
mpz_class w_rhs(const Ex& e) { return e.b * absz(e.d - e.a); }

const Guard a_is_1{"a=1", [](const Ex& e) { return e.a == 1; }};
const Guard a_gt_1{"a>1", [](const Ex& e) { return e.a > 1; }};
const Guard d_le_c{"d<=c", [](const Ex& e) { return e.d <= e.c; }};
const Guard d_gt_c{"d>c", [](const Ex& e) { return e.d > e.c; }};
const Guard c_lt_d_lt_bc{"c<d<b+c", [](const Ex& e) { return e.c < e.d && e.d < e.b + e.c; }};
const Guard d_ge_bc{"d>=b+c", [](const Ex& e) { return e.d >= e.b + e.c; }};
const Guard bc_le_d{"b+c<=d", [](const Ex& e) { return e.d >= e.b + e.c; }};
const Guard d_lt_bc{"d<b+c", [](const Ex& e) { return e.d < e.b + e.c; }};
const Guard a_le_b{"a<=b", [](const Ex& e) { return e.a <= e.b; }};
const Guard a_gt_b{"a>b", [](const Ex& e) { return e.a > e.b; }};
const Guard b_lt_a{"b<a", [](const Ex& e) { return e.b < e.a; }};
const Guard thr_lt{"d<ac/(a-b)", below_threshold};
const Guard thr_ge{"d>=ac/(a-b)", above_threshold};
const Guard b_even{"b even", [](const Ex& e) { return even(e.b); }};
const Guard b_odd{"b odd", [](const Ex& e) { return !even(e.b); }};
const Guard d_eq_c{"d=c mod 2", [](const Ex& e) { return even(e.d - e.c); }};
const Guard d_ne_c{"d=c+1 mod 2", [](const Ex& e) { return !even(e.d - e.c); }};
const Guard b_lt_a_lt_bc{"b<a<b+c", [](const Ex& e) { return e.b < e.a && e.a < e.b + e.c; }};
const Guard bc_le_a{"b+c<=a", [](const Ex& e) { return e.a >= e.b + e.c; }};
const Guard d_lt_a{"d<a", [](const Ex& e) { return e.d < e.a; }};
const Guard a_le_d{"a<=d", [](const Ex& e) { return e.a <= e.d; }};
const Guard d_ge_a{"d>=a", [](const Ex& e) { return e.d >= e.a; }};
const Guard a_gt_c{"a>c", [](const Ex& e) { return e.a > e.c; }};
const Guard a_le_c{"a<=c", [](const Ex& e) { return e.a <= e.c; }};
const Guard w_le{"a(d-c)<=b|d-a|", [](const Ex& e) { return w_lhs(e) <= w_rhs(e); }};
const Guard w_gt{"a(d-c)>b|d-a|", [](const Ex& e) { return w_lhs(e) > w_rhs(e); }};
const Guard dc_even{"d,c even", [](const Ex& e) { return even(e.d) && even(e.c); }};
const Guard dc_odd{"d,c odd", [](const Ex& e) { return !even(e.d) && !even(e.c); }};
const Guard b_lt_2dc{"b<2(d-c)", [](const Ex& e) { return e.b < 2 * (e.d - e.c); }};
const Guard b_ge_2dc{"b>=2(d-c)", [](const Ex& e) { return e.b >= 2 * (e.d - e.c); }};
const Guard a_even{"a even", [](const Ex& e) { return even(e.a); }};
const Guard a_odd{"a odd", [](const Ex& e) { return !even(e.a); }};
const Guard c_lt_a{"c<a", [](const Ex& e) { return e.c < e.a; }};
const Guard c_ge_a{"c>=a", [](const Ex& e) { return e.c >= e.a; }};
const Guard b_ge_a{"b>=a", [](const Ex& e) { return e.b >= e.a; }};
const Guard l_da_le{"a(d-c)<=d-a", [](const Ex& e) { return w_lhs(e) <= e.d - e.a; }};
const Guard l_da_gt{"a(d-c)>d-a", [](const Ex& e) { return w_lhs(e) > e.d - e.a; }};
const Guard l_db_gt{"2a(d-c)>db", [](const Ex& e) { return 2 * w_lhs(e) > e.d * e.b; }};
const Guard l_db_le{"2a(d-c)<=db", [](const Ex& e) { return 2 * w_lhs(e) <= e.d * e.b; }};
const Guard b_ge_2a{"b>=2a", [](const Ex& e) { return e.b >= 2 * e.a; }};
const Guard b_lt_2a{"b<2a", [](const Ex& e) { return e.b < 2 * e.a; }};
const Guard l_d_le{"a(d-c)<=d", [](const Ex& e) { return w_lhs(e) <= e.d; }};
const Guard l_d_gt{"a(d-c)>d", [](const Ex& e) { return w_lhs(e) > e.d; }};

struct Leaf {
  std::vector<Guard> path;
  Verdict verdict;
};

constexpr Verdict H = Verdict::Holds;
constexpr Verdict F = Verdict::Fails;
constexpr Verdict U = Verdict::Undecided;

// Leaves in printed order; each carries its full root-to-leaf path.
const std::vector<Leaf>& tree(int diagram) {
  static const std::vector<Leaf> d1 = {
      {{a_is_1}, H},
      {{a_gt_1, d_le_c}, H},
      {{a_gt_1, d_gt_c, d_ge_bc}, F},
      {{a_gt_1, d_gt_c, d_lt_bc, a_le_b}, H},
      {{a_gt_1, d_gt_c, d_lt_bc, a_gt_b, thr_lt}, H},
      {{a_gt_1, d_gt_c, d_lt_bc, a_gt_b, thr_ge}, F},
  };
  static const std::vector<Leaf> d2 = {
      {{a_is_1}, H},
      {{a_gt_1, d_le_c}, H},
      {{a_gt_1, c_lt_d_lt_bc, a_le_b}, H},
      {{a_gt_1, c_lt_d_lt_bc, b_lt_a, thr_lt}, H},
      {{a_gt_1, c_lt_d_lt_bc, b_lt_a, thr_ge, b_even, d_eq_c}, H},
      {{a_gt_1, c_lt_d_lt_bc, b_lt_a, thr_ge, b_even, d_ne_c}, F},
      {{a_gt_1, c_lt_d_lt_bc, b_lt_a, thr_ge, b_odd}, F},
      {{a_gt_1, bc_le_d, b_odd}, F},
      {{a_gt_1, bc_le_d, b_even, d_ne_c}, F},
      {{a_gt_1, bc_le_d, b_even, d_eq_c, a_le_b}, H},
      {{a_gt_1, bc_le_d, b_even, d_eq_c, b_lt_a_lt_bc, thr_lt}, H},
      {{a_gt_1, bc_le_d, b_even, d_eq_c, b_lt_a_lt_bc, thr_ge}, F},
      {{a_gt_1, bc_le_d, b_even, d_eq_c, bc_le_a}, F},
  };
  // Diagrams 3, 5 and 7 share this tree.
  static const std::vector<Leaf> cx = {
      {{a_is_1}, H},
      {{a_gt_1, d_le_c}, H},
      {{a_gt_1, d_gt_c}, F},
  };
  static const std::vector<Leaf> d4 = {
      {{a_is_1}, H},
      {{a_gt_1, d_le_c}, H},
      {{a_gt_1, d_gt_c, b_odd}, F},
      {{a_gt_1, d_gt_c, b_even, d_ne_c}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, d_lt_a, d_lt_bc}, H},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, d_lt_a, d_ge_bc}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, a_le_d, a_gt_c}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, a_le_d, a_le_c, d_lt_bc}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, a_le_d, a_le_c, d_ge_bc, a_le_b}, H},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, a_le_d, a_le_c, d_ge_bc, a_gt_b, thr_lt}, H},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, a_le_d, a_le_c, d_ge_bc, a_gt_b, thr_ge}, F},
  };
  static const std::vector<Leaf> d6 = {
      {{a_is_1}, H},
      {{a_gt_1, d_le_c}, H},
      {{a_gt_1, d_gt_c, b_odd}, F},
      {{a_gt_1, d_gt_c, b_even, d_ne_c}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le}, H},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_gt}, F},
  };
  // The second printed page (d >= a) is fused in under the w_le branch.
  static const std::vector<Leaf> d8 = {
      {{a_is_1}, H},
      {{a_gt_1, d_le_c}, H},
      {{a_gt_1, d_gt_c, b_odd}, F},
      {{a_gt_1, d_gt_c, b_even, d_ne_c}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_even}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_odd, c_lt_a}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_odd, c_ge_a, b_lt_a, l_da_le}, H},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_odd, c_ge_a, b_lt_a, l_da_gt, l_db_gt}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_odd, c_ge_a, b_lt_a, l_da_gt, l_db_le}, U},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_odd, c_ge_a, b_ge_a, b_ge_2a}, H},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_odd, c_ge_a, b_ge_a, b_lt_2a, l_d_le}, H},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_odd, c_ge_a, b_ge_a, b_lt_2a, l_d_gt, l_db_gt}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_ge_a, a_odd, c_ge_a, b_ge_a, b_lt_2a, l_d_gt, l_db_le}, U},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_lt_a, dc_even}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_lt_a, dc_odd, b_lt_2dc}, F},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_le, d_lt_a, dc_odd, b_ge_2dc}, U},
      {{a_gt_1, d_gt_c, b_even, d_eq_c, w_gt}, F},
  };
  switch (diagram) {
    case 1: return d1;
    case 2: return d2;
    case 3: case 5: case 7: return cx;
    case 4: return d4;
    case 6: return d6;
    case 8: return d8;
    default: throw std::invalid_argument("no diagram " + std::to_string(diagram));
  }
}

bool satisfied(const Leaf& leaf, const Ex& e) {
  for (const auto& g : leaf.path) {
    if (!g.test(e)) return false;
  }
  return true;
}

std::string leaf_id(int diagram, std::size_t index) {
  return "D" + std::to_string(diagram) + "." + std::to_string(index + 1);
}

}  // namespace

std::string Classification::trace_string() const {
  std::string out;
  for (const auto& s : trace) {
    if (!out.empty()) out += " > ";
    out += s;
  }
  return out;
}

int diagram_number(Field field, Condition condition) {
  return 2 * static_cast<int>(condition) + (field == Field::Real ? 2 : 1);
}

Classification classify(const SurfaceParams& p, Field field, Condition condition) {
  const int n = diagram_number(field, condition);
  const auto& leaves = tree(n);
  const Ex e(p);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (!satisfied(leaves[i], e)) continue;
    Classification out;
    out.verdict = leaves[i].verdict;
    out.leaf_id = leaf_id(n, i);
    for (const auto& g : leaves[i].path) out.trace.emplace_back(g.label);
    out.trace.push_back(to_string(out.verdict));
    return out;
  }
  throw std::logic_error("diagram " + std::to_string(n) + " has no leaf for " + p.to_string());
}

RegularityProfile profile(const SurfaceParams& p) {
  RegularityProfile out(p);
  for (Field f : kFields) {
    for (Condition c : kConditions) {
      const Classification cl = classify(p, f, c);
      out.set(f, c, Outcome{cl.verdict, cl.leaf_id + ": " + cl.trace_string()});
    }
  }
  return out;
}

std::vector<LeafInfo> diagram_leaves(int diagram) {
  std::vector<LeafInfo> out;
  const auto& leaves = tree(diagram);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    LeafInfo info{leaf_id(diagram, i), {}, leaves[i].verdict};
    for (const auto& g : leaves[i].path) info.guards.emplace_back(g.label);
    out.push_back(std::move(info));
  }
  return out;
}

std::vector<std::string> matching_leaves(const SurfaceParams& p, int diagram) {
  std::vector<std::string> out;
  const auto& leaves = tree(diagram);
  const Ex e(p);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (satisfied(leaves[i], e)) out.push_back(leaf_id(diagram, i));
  }
  return out;
}

bool c1_smooth(const SurfaceParams& p) {
  if (p.a == 1 || p.d <= p.c) return true;
  const Ex e(p);
  return e.a <= e.c && even(e.b) && even(e.d - e.c) && (e.a <= e.b || below_threshold(e));
}

QuasiWeights quasi_weights(const SurfaceParams& p) {
  if (p.c >= p.d) throw ParamError("quasi_weights requires c < d");
  QuasiWeights w;
  w.w_x = Rational(p.a);
  w.w_y = Rational(p.d);
  w.w_z = Rational(p.a) * Rational(p.d - p.c) / Rational(p.b);
  w.degree = Rational(p.a) * Rational(p.d);
  return w;
}

std::vector<Rational> monomial_degrees(const SurfaceParams& p, const QuasiWeights& w) {
  return {Rational(p.a) * w.w_y, Rational(p.b) * w.w_z + Rational(p.c) * w.w_x,
          Rational(p.d) * w.w_x};
}

bool on_w_equality_boundary(const SurfaceParams& p) {
  const Ex e(p);
  return e.a > 1 && e.d > e.c && even(e.b) && even(e.d - e.c) && e.d > e.a && w_lhs(e) == w_rhs(e);
}

}  // namespace strat

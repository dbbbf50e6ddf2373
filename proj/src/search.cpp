#include "strat/search.hpp"

#include <omp.h>

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace strat {

namespace {

// Wide floats for the oracle: deep arcs cancel many leading bits in x f_x + y f_y.
using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<500>>;

Big big(const Rational& r) { return Big(r.num()) / Big(r.den()); }

const std::array<Rational, 6> kGenericLambdas{Rational(1), Rational(-1), Rational(2),
                                              Rational(-2), Rational(1, 2), Rational(-1, 2)};

std::string arc_key(const SurfaceParams& p, const MonomialArc& a) {
  mpq_class zb = a.lambda.to_mpq(), mod = abs(zb);
  if (!a.root) {
    mpq_class v = 1;
    for (std::int64_t i = 0; i < p.b; ++i) v *= zb;
    zb = v;
  }
  const int sc = (a.sigma_x < 0 && p.c % 2 == 1) ? -1 : 1;
  const int sd = (a.sigma_x < 0 && p.d % 2 == 1) ? -1 : 1;
  return std::to_string(a.p) + ":" + std::to_string(a.q) + ":" + a.kappa.to_string() + ":" + std::to_string(sc) +
         std::to_string(sd) + ":" + zb.get_str() + ":" + mod.get_str() + (a.root ? "r" : "");
}

enum class Verdict3 { NoFault, Fault, Indeterminate, Rejected, Skipped };

struct Task {
  MonomialArc arc;
  std::optional<ArcPair> pair;
  Quantity quantity;
};

struct TaskOutcome {
  Verdict3 kind = Verdict3::Skipped;
  LimitBehavior behavior;
  Quantity quantity = Quantity::A;
};

LimitOptions options_of(const SearchBudget& b) {
  LimitOptions o;
  o.depth = b.depth;
  o.precision_cap = b.precision_cap;
  return o;
}

TaskOutcome run_task(const SurfaceParams& p, Field field, Condition cond, const Task& t,
                     const SearchBudget& budget) {
  TaskOutcome out;
  try {
    const LimitOptions opt = options_of(budget);
    Quantity quantity = t.quantity;
    if (t.pair) {
      // One evaluation gives both; L2 is reported first when both fail.
      const auto both = limits_along_pair(p, *t.pair, opt);
      const bool l2_fault = is_fault(cond, both[0].cls);
      quantity = l2_fault || !is_fault(cond, both[1].cls) ? Quantity::L2 : Quantity::L3;
      out.behavior = both[quantity == Quantity::L2 ? 0 : 1];
      if (!l2_fault && both[0].cls == LimitClass::Indeterminate && !is_fault(cond, both[1].cls)) {
        out.behavior = both[0];
      }
    } else {
      out.behavior = limit_along_arc(p, t.quantity, t.arc, opt);
    }
    if (out.behavior.cls == LimitClass::Indeterminate) {
      out.kind = Verdict3::Indeterminate;
      return out;
    }
    if (!is_fault(cond, out.behavior.cls)) {
      out.kind = Verdict3::NoFault;
      return out;
    }
    // Z' overestimates Z where f_z dominates; a (w) fault needs Z itself unbounded.
    if (t.quantity == Quantity::W &&
        limit_along_arc(p, Quantity::Z, t.arc, opt).cls != LimitClass::Unbounded) {
      out.kind = Verdict3::Rejected;
      return out;
    }
    FaultWitness w{p, field, cond, t.arc, t.pair, quantity, out.behavior};
    out.quantity = quantity;
    out.kind = recertify(w) ? Verdict3::Fault : Verdict3::Rejected;
  } catch (const InfeasibleArc&) {
    out.kind = Verdict3::Skipped;
  } catch (const InadmissiblePair&) {
    out.kind = Verdict3::Skipped;
  } catch (const DegenerateDenominator&) {
    out.kind = Verdict3::Skipped;
  } catch (const std::overflow_error&) {
    out.kind = Verdict3::Indeterminate;
  }
  return out;
}

std::vector<Task> build_tasks(const SurfaceParams& p, Field field, Condition cond, const SearchBudget& budget) {
  std::vector<Task> tasks;
  const auto arcs = enumerate_arcs(p, budget, field, true);
  for (Quantity q : quantities_for(cond)) {
    if (q == Quantity::L2 || q == Quantity::L3) continue;
    for (const auto& a : arcs) tasks.push_back({a, std::nullopt, q});
  }
  if (cond == Condition::MostowskiL) {
    for (const auto& pr : enumerate_pairs(p, budget)) {
      tasks.push_back({pr.base, pr, Quantity::L2});
    }
  }
  return tasks;
}

void tally(NoneFound& rec, const TaskOutcome& o) {
  ++rec.evaluated;
  if (o.kind == Verdict3::Indeterminate) ++rec.indeterminate;
  if (o.kind == Verdict3::Rejected) ++rec.rejected;
}

FaultWitness make_witness(const SurfaceParams& p, Field field, Condition cond, const Task& t, Quantity q,
                          const LimitBehavior& lb) {
  return FaultWitness{p, field, cond, t.arc, t.pair, q, lb};
}

SearchResult search(const SurfaceParams& p, Field field, Condition cond, const SearchBudget& budget, bool parallel) {
  SearchResult res;
  res.record.budget = budget;
  const auto start = std::chrono::steady_clock::now();
  const auto tasks = build_tasks(p, field, cond, budget);
  const std::size_t limit = std::min<std::size_t>(tasks.size(), static_cast<std::size_t>(budget.max_arcs));
  res.record.arc_cap_hit = limit < tasks.size();
  const std::size_t chunk = parallel ? 64 : 1;

  for (std::size_t begin = 0; begin < limit; begin += chunk) {
    if (std::chrono::steady_clock::now() - start > budget.per_tuple_time) {
      res.record.timed_out = true;
      return res;
    }
    const std::size_t end = std::min(limit, begin + chunk);
    std::vector<TaskOutcome> outcomes(end - begin);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t i = begin; i < end; ++i) outcomes[i - begin] = run_task(p, field, cond, tasks[i], budget);
    } else {
      for (std::size_t i = begin; i < end; ++i) outcomes[i - begin] = run_task(p, field, cond, tasks[i], budget);
    }
    // Lowest enumeration index wins regardless of finishing order.
    for (std::size_t i = begin; i < end; ++i) {
      const TaskOutcome& o = outcomes[i - begin];
      tally(res.record, o);
      if (o.kind == Verdict3::Fault) {
        res.witness = make_witness(p, field, cond, tasks[i], o.quantity, o.behavior);
        return res;
      }
    }
  }
  return res;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  const double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
  const double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::optional<Point3<Big>> real_point(const SurfaceParams& p, const Big& x, const Big& z, int branch) {
  const auto ys = y_branches_real(p, x, z);
  if (ys.empty()) return std::nullopt;
  return Point3<Big>{x, branch > 0 ? ys.back() : ys.front(), z};
}

// Root arcs: z^b = Lambda u^(qb) is real, so every quantity reduces to real magnitudes.
std::optional<Big> root_arc_value(const SurfaceParams& p, Quantity q, const MonomialArc& a, const Big& u) {
  using boost::multiprecision::pow;
  const Big x = big(a.kappa) * a.sigma_x * pow(u, a.p);
  const Big zb = big(a.lambda) * pow(u, a.q * p.b);
  const Big zabs = pow(abs(big(a.lambda)), Big(1) / p.b) * pow(u, a.q);
  const Big r = zb * pow(x, p.c) + pow(x, p.d);
  const Big yabs = pow(abs(r), Big(1) / p.a);
  const Big fx = -(p.c * zb * pow(x, p.c - 1) + p.d * pow(x, p.d - 1));
  const Big fy = p.a * pow(yabs, p.a - 1);
  const Big fz = p.b * pow(zabs, p.b - 1) * pow(abs(x), p.c);
  const Big grad = sqrt(fx * fx + fy * fy + fz * fz);
  const Big dist = sqrt(x * x + yabs * yabs);
  switch (q) {
    case Quantity::A: return fz / sqrt(fx * fx + fy * fy);
    case Quantity::Bpi: return abs(x * fx + p.a * r) / (dist * grad);
    case Quantity::Z: return fz / (grad * dist);
    case Quantity::W: {
      const Big num = pow(zabs, p.b - 1) * pow(abs(x), p.c);
      const Big s1 = std::max(Big(abs(fx)), Big(pow(abs(r), Big(p.a - 1) / p.a)));
      return num / (s1 * std::max(Big(abs(x)), yabs));
    }
    default: return std::nullopt;
  }
}

}  // namespace

void to_json(json& j, const SearchBudget& b) {
  j = json{{"max_height", b.max_height},
           {"max_arcs", b.max_arcs},
           {"per_tuple_time_ms", b.per_tuple_time.count()},
           {"max_pair_height", b.max_pair_height},
           {"truncation", b.depth.to_string()},
           {"precision_cap", b.precision_cap}};
}

void to_json(json& j, const FaultWitness& w) {
  j = json{{"params", w.params}, {"field", to_string(w.field)}, {"condition", to_string(w.condition)}};
  j["arc"] = w.pair ? json(*w.pair) : json(w.arc);
  j["order"] = w.behavior.order ? json(w.behavior.order->to_string()) : json(nullptr);
  j["class"] = to_string(w.behavior.cls);
  j["quantity"] = to_string(w.quantity);
}

void to_json(json& j, const NoneFound& n) {
  j = json{{"none_found", true},          {"budget", n.budget},       {"evaluated", n.evaluated},
           {"indeterminate", n.indeterminate}, {"rejected", n.rejected}, {"timed_out", n.timed_out},
           {"arc_cap_hit", n.arc_cap_hit}};
}

void to_json(json& j, const GridReport& r) {
  j = json{{"quantity", to_string(r.quantity)}, {"feasible_points", r.feasible_points}};
  json shells = json::array();
  for (const auto& [k, v] : r.shell_max) shells.push_back({{"k", k}, {"max", v}});
  j["shells"] = shells;
  j["fitted_exponent"] = r.fitted_exponent ? json(*r.fitted_exponent) : json(nullptr);
}

std::vector<MonomialArc> enumerate_arcs(const SurfaceParams& p, const SearchBudget& budget, Field field,
                                        bool one_per_class) {
  std::vector<MonomialArc> out;
  std::set<std::string> seen;
  const bool root = field == Field::Complex;
  auto push = [&](MonomialArc a) {
    if (!root && !feasible(p, a)) return;
    if (seen.insert(arc_key(p, a)).second) out.push_back(a);
  };
  for (std::int64_t h = 2; h <= budget.max_height; ++h) {
    for (std::int64_t px = 1; px < h; ++px) {
      const std::int64_t qz = h - px;
      if (std::gcd(px, qz) != 1) continue;
      const bool critical = p.d > p.c && qz * p.b == px * (p.d - p.c);
      const std::size_t before = out.size();
      for (int sx : {1, -1}) {
        if (one_per_class && !critical && out.size() > before) break;
        MonomialArc a;
        a.p = px;
        a.q = qz;
        a.sigma_x = sx;
        a.root = root;
        for (const Rational& lam : kGenericLambdas) {
          if (one_per_class && !critical && out.size() > before) break;
          if (std::abs(lam.num()) + lam.den() > budget.max_height) continue;
          a.lambda = lam;
          a.kappa = 1;
          push(a);
        }
        for (const auto& cv : critical_lambdas(p, px, qz, sx, field).values) {
          a.kappa = cv.kappa;
          a.lambda = cv.lambda;
          push(a);
        }
      }
    }
  }
  return out;
}

std::vector<ArcPair> enumerate_pairs(const SurfaceParams& p, const SearchBudget& budget) {
  SearchBudget small = budget;
  small.max_height = budget.max_pair_height;
  std::vector<ArcPair> out;
  const std::vector<int> branches = p.a % 2 == 0 ? std::vector<int>{1, -1} : std::vector<int>{1};
  for (const auto& base : enumerate_arcs(p, small, Field::Real)) {
    for (int br : branches) {
      for (const Rational& delta : {Rational(1), Rational(-1)}) {
        for (const Rational& e : {Rational(1, 2), Rational(1), Rational(2)}) {
          out.push_back(ArcPair{base, delta, e, br});
        }
      }
    }
  }
  return out;
}

std::vector<Quantity> quantities_for(Condition c) {
  switch (c) {
    case Condition::WhitneyA: return {Quantity::A};
    case Condition::WhitneyB: return {Quantity::A, Quantity::Bpi};
    case Condition::KuoVerdierW: return {Quantity::W};
    case Condition::MostowskiL: return {Quantity::W, Quantity::L2, Quantity::L3};
  }
  return {};
}

bool is_fault(Condition c, LimitClass cls) {
  if (c == Condition::WhitneyA || c == Condition::WhitneyB)
    return cls == LimitClass::BoundedNonzero || cls == LimitClass::Unbounded;
  return cls == LimitClass::Unbounded;
}

SearchResult find_fault(const SurfaceParams& p, Field field, Condition condition, const SearchBudget& budget) {
  return search(p, field, condition, budget, true);
}

SearchResult find_fault_serial(const SurfaceParams& p, Field field, Condition condition,
                               const SearchBudget& budget) {
  return search(p, field, condition, budget, false);
}

std::optional<double> numeric_log_value(const SurfaceParams& p, Quantity q, const MonomialArc& arc,
                                        const std::optional<ArcPair>& pair, int log2_u) {
  using boost::multiprecision::pow;
  const Big u = pow(Big(2), log2_u);
  try {
    std::optional<Big> v;
    if (arc.root) {
      v = root_arc_value(p, q, arc, u);
    } else {
      const Big x = big(arc.kappa) * arc.sigma_x * pow(u, arc.p);
      const Big z = big(arc.lambda) * pow(u, arc.q);
      const auto pt = real_point(p, x, z, arc.branch);
      if (!pt) return std::nullopt;
      switch (q) {
        case Quantity::A: v = quantity_a(p, *pt); break;
        case Quantity::Bpi: v = quantity_bpi(p, *pt); break;
        case Quantity::W: v = quantity_w(p, x, z); break;
        case Quantity::Z: v = quantity_w_projective(p, *pt); break;
        case Quantity::L2:
        case Quantity::L3: {
          if (!pair) return std::nullopt;
          const Big x2 = x * (1 + big(pair->delta) * pow(u, big(pair->e)));
          const auto pt2 = real_point(p, x2, z, pair->branch);
          if (!pt2) return std::nullopt;
          v = q == Quantity::L2 ? quantity_L2(p, *pt, *pt2) : quantity_L3(p, *pt, *pt2);
          break;
        }
      }
    }
    if (!v || *v == 0) return std::nullopt;
    return static_cast<double>(log(abs(*v)));
  } catch (const DegenerateDenominator&) {
    return std::nullopt;
  } catch (const InadmissiblePair&) {
    return std::nullopt;
  }
}

bool recertify(const FaultWitness& w) {
  std::array<double, 3> l{};
  const std::array<int, 3> ks{-10, -16, -22};
  for (int i = 0; i < 3; ++i) {
    const auto v = numeric_log_value(w.params, w.quantity, w.arc, w.pair, ks[i]);
    if (!v) return false;
    l[i] = *v;
  }
  switch (w.behavior.cls) {
    case LimitClass::Unbounded:
      return l[2] > l[1] && l[1] > l[0];
    case LimitClass::BoundedNonzero: {
      if (!w.behavior.leading) return false;
      const double target = std::log(w.behavior.leading->midpoint());
      const double far = std::abs(l[0] - target), near = std::abs(l[2] - target);
      return near <= far + 1e-9 && near < 0.1;
    }
    case LimitClass::TendsToZero:
      return l[2] < l[1] && l[1] < l[0];
    case LimitClass::Indeterminate:
      return false;
  }
  return false;
}

GridReport sample_grid(const SurfaceParams& p, Quantity q, const GridSpec& spec) {
  if (spec.k_min < 1 || spec.k_max < spec.k_min || spec.alpha_min <= 0 || spec.alpha_max < spec.alpha_min ||
      spec.alpha_steps < 1) {
    throw std::invalid_argument("sample_grid: grid bounds must be positive and ordered");
  }
  if (q == Quantity::L2 || q == Quantity::L3) throw std::invalid_argument("sample_grid: pair quantities need pairs");
  using boost::multiprecision::pow;
  using Grid = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>>;
  GridReport rep;
  rep.quantity = q;
  std::vector<double> xs, ys;
  const double step = spec.alpha_steps > 1 ? std::log(spec.alpha_max / spec.alpha_min) / (spec.alpha_steps - 1) : 0;
  for (int k = spec.k_min; k <= spec.k_max; ++k) {
    const Grid u = pow(Grid(2), -k);
    std::optional<double> best;
    for (int s = 0; s < spec.alpha_steps; ++s) {
      const Grid alpha = Grid(spec.alpha_min * std::exp(step * s));
      for (int sx : {1, -1}) {
        for (int sz : {1, -1}) {
          const Grid x = sx * pow(u, alpha);
          const Grid z = sz * u;
          const auto ys_ = y_branches_real(p, x, z);
          if (ys_.empty()) continue;
          try {
            for (const auto& y : ys_) {
              const Point3<Grid> pt{x, y, z};
              Grid v;
              switch (q) {
                case Quantity::A: v = quantity_a(p, pt); break;
                case Quantity::Bpi: v = quantity_bpi(p, pt); break;
                case Quantity::W: v = quantity_w(p, x, z); break;
                default: v = quantity_w_projective(p, pt); break;
              }
              ++rep.feasible_points;
              const double lv = static_cast<double>(log(v));
              if (!best || lv > *best) best = lv;
            }
          } catch (const DegenerateDenominator&) {
          }
        }
      }
    }
    if (!best) continue;
    rep.shell_max.emplace_back(k, std::exp(*best));
    xs.push_back(-k * std::log(2.0));
    ys.push_back(*best);
  }
  if (xs.size() >= 2) rep.fitted_exponent = fit_slope(xs, ys);
  return rep;
}

}  // namespace strat

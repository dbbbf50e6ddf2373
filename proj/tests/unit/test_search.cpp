#include <cmath>

#include "doctest.h"
#include "strat/search.hpp"

using namespace strat;

namespace {

SurfaceParams P(int a, int b, int c, int d) { return make_params(a, b, c, d); }

SearchBudget quick(std::int64_t height = 64) {
  SearchBudget b;
  b.max_height = height;
  b.per_tuple_time = std::chrono::milliseconds(60000);
  return b;
}

MonomialArc arc(std::int64_t p, std::int64_t q) {
  MonomialArc m;
  m.p = p;
  m.q = q;
  return m;
}

}  // namespace

TEST_CASE("enumeration order by height then slope") {
  SearchBudget b = quick(2);
  auto arcs = enumerate_arcs(P(3, 1, 1, 2), b);
  REQUIRE(!arcs.empty());
  for (const auto& a : arcs) CHECK(a.p + a.q == 2);
  b.max_height = 3;
  arcs = enumerate_arcs(P(3, 1, 1, 2), b);
  std::vector<std::pair<std::int64_t, std::int64_t>> slopes;
  for (const auto& a : arcs)
    if (slopes.empty() || slopes.back() != std::pair{a.p, a.q}) slopes.push_back({a.p, a.q});
  CHECK(slopes == std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {1, 2}, {2, 1}});
  b.max_height = 12;
  arcs = enumerate_arcs(P(3, 1, 1, 2), b);
  for (std::size_t i = 1; i < arcs.size(); ++i) CHECK(arcs[i - 1].p + arcs[i - 1].q <= arcs[i].p + arcs[i].q);
  for (const auto& a : arcs) CHECK(std::gcd(a.p, a.q) == 1);
}

TEST_CASE("critical slope carries the cancellation candidates") {
  SearchBudget b = quick(6);
  // (2,4,1,3): 4q = 2p. Over R both families need lambda^4 < 0; over C they appear as root arcs.
  CHECK(critical_lambdas(P(2, 4, 1, 3), 2, 1, 1, Field::Real).on_critical_slope);
  bool found = false;
  for (const auto& a : enumerate_arcs(P(2, 4, 1, 3), b, Field::Complex))
    if (a.p == 2 && a.q == 1 && a.root && a.lambda == Rational(-1)) found = true;
  CHECK(found);
  // (2,3,1,4): 3q = 3p, b odd: lambda = -1 (rhs family) is enumerated for x > 0.
  found = false;
  for (const auto& a : enumerate_arcs(P(2, 3, 1, 4), b))
    if (a.p == 1 && a.q == 1 && a.sigma_x == 1 && a.lambda == Rational(-1)) found = true;
  CHECK(found);
}

TEST_CASE("infeasible arcs are never enumerated") {
  const auto p = P(2, 2, 1, 3);
  for (const auto& a : enumerate_arcs(p, quick(10))) CHECK(feasible(p, a));
  bool negative = false;
  for (const auto& a : enumerate_arcs(p, quick(10))) negative = negative || a.sigma_x < 0;
  CHECK_FALSE(negative);  // x < 0 makes z^2 x + x^3 negative
}

TEST_CASE("worked witnesses") {
  auto r = find_fault(P(2, 4, 1, 3), Field::Real, Condition::KuoVerdierW, quick());
  REQUIRE(r.witness);
  CHECK(r.witness->arc.p == 3);
  CHECK(r.witness->arc.q == 1);
  CHECK(*r.witness->behavior.order == Rational(-1, 2));
  CHECK(r.witness->behavior.cls == LimitClass::Unbounded);
  CHECK(r.witness->quantity == Quantity::W);

  r = find_fault(P(3, 2, 3, 5), Field::Real, Condition::KuoVerdierW, quick());
  REQUIRE(r.witness);
  CHECK(r.witness->behavior.cls == LimitClass::Unbounded);
  const auto slope78 = limit_along_arc(P(3, 2, 3, 5), Quantity::W, arc(7, 8));
  CHECK(*slope78.order == Rational(-4, 3));

  r = find_fault(P(2, 2, 1, 3), Field::Real, Condition::WhitneyB, quick());
  REQUIRE(r.witness);
  CHECK(r.witness->behavior.cls != LimitClass::TendsToZero);
  const auto bpi = limit_along_arc(P(2, 2, 1, 3), Quantity::Bpi, arc(2, 1));
  CHECK(bpi.cls == LimitClass::BoundedNonzero);

  for (Condition c : kConditions) CHECK_FALSE(find_fault(P(1, 5, 5, 9), Field::Real, c, quick()).witness);
}

TEST_CASE("witness json shape") {
  const auto r = find_fault(P(2, 4, 1, 3), Field::Real, Condition::KuoVerdierW, quick());
  REQUIRE(r.witness);
  const json j = *r.witness;
  CHECK(j.at("field") == "real");
  CHECK(j.at("condition") == "w");
  CHECK(j.at("order") == "-1/2");
  CHECK(j.at("class") == "unbounded");
  CHECK(j.at("quantity") == "W");
  CHECK(j.at("arc").at("p") == 3);
  CHECK(j.at("arc").at("pair").is_null());
}

TEST_CASE("parallel and serial searches agree and are deterministic") {
  for (const auto& p : {P(2, 4, 1, 3), P(3, 2, 3, 5), P(2, 2, 1, 3), P(4, 4, 1, 3), P(2, 2, 2, 6)}) {
    for (Condition c : kConditions) {
      const auto x = find_fault(p, Field::Real, c, quick(24));
      const auto y = find_fault_serial(p, Field::Real, c, quick(24));
      const auto z = find_fault(p, Field::Real, c, quick(24));
      INFO(p.to_string() << " " << to_string(c));
      REQUIRE(x.witness.has_value() == y.witness.has_value());
      if (x.witness) {
        CHECK(json(*x.witness).dump() == json(*y.witness).dump());
        CHECK(json(*x.witness).dump() == json(*z.witness).dump());
      }
    }
  }
}

TEST_CASE("pair witness for (2,2,2,6) L") {
  const auto r = find_fault(P(2, 2, 2, 6), Field::Real, Condition::MostowskiL, quick());
  REQUIRE(r.witness);
  REQUIRE(r.witness->pair);
  CHECK((r.witness->quantity == Quantity::L2 || r.witness->quantity == Quantity::L3));
  CHECK(r.witness->behavior.cls == LimitClass::Unbounded);
  CHECK(recertify(*r.witness));
  // w holds there: no W witness
  CHECK_FALSE(find_fault(P(2, 2, 2, 6), Field::Real, Condition::KuoVerdierW, quick()).witness);
}

TEST_CASE("pair orders agree with float slopes") {
  int checked = 0;
  for (const auto& p : {P(2, 2, 2, 6), P(3, 2, 5, 7), P(2, 2, 1, 3), P(3, 1, 2, 4)}) {
    for (const auto& pr : enumerate_pairs(p, quick(4))) {
      LimitBehavior lb;
      std::array<LimitBehavior, 2> both;
      try {
        both = limits_along_pair(p, pr);
      } catch (const InadmissiblePair&) {
        continue;
      } catch (const InfeasibleArc&) {
        continue;
      }
      for (int k = 0; k < 2; ++k) {
        if (!both[k].order) continue;
        const Quantity q = k == 0 ? Quantity::L2 : Quantity::L3;
        const auto v1 = numeric_log_value(p, q, pr.base, pr, -18);
        const auto v2 = numeric_log_value(p, q, pr.base, pr, -26);
        if (!v1 || !v2) continue;
        const double slope = (*v2 - *v1) / (-8 * std::log(2.0));
        INFO(p.to_string() << " " << json(pr).dump() << " " << to_string(q) << " " << both[k].order->to_string());
        CHECK(std::abs(slope - both[k].order->to_double()) < 0.1);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("recertification rejects a contradicted class") {
  auto r = find_fault(P(2, 4, 1, 3), Field::Real, Condition::KuoVerdierW, quick());
  REQUIRE(r.witness);
  CHECK(recertify(*r.witness));
  FaultWitness fake = *r.witness;
  fake.behavior.cls = LimitClass::TendsToZero;
  CHECK_FALSE(recertify(fake));
  fake.arc = arc(8, 1);  // W tends to zero along x = u^8, z = u
  fake.behavior.cls = LimitClass::Unbounded;
  CHECK_FALSE(recertify(fake));
}

TEST_CASE("complex root arcs") {
  // Over C the rhs z^2 x + x^3 cancels on z^2 = -x^2, which real arcs cannot reach.
  MonomialArc m = arc(1, 1);
  m.root = true;
  m.lambda = -1;
  const auto lb = limit_along_arc(P(3, 2, 3, 5), Quantity::A, m);
  CHECK(lb.cls == LimitClass::BoundedNonzero);
  const auto r = find_fault(P(3, 2, 3, 5), Field::Complex, Condition::WhitneyA, quick());
  REQUIRE(r.witness);
  CHECK(r.witness->arc.root);
  const auto v = numeric_log_value(P(3, 2, 3, 5), Quantity::A, m, std::nullopt, -20);
  REQUIRE(v);
  CHECK(std::exp(*v) == doctest::Approx(lb.leading->midpoint()).epsilon(1e-4));
}

TEST_CASE("sample grid shells") {
  const auto bounded = sample_grid(P(2, 2, 2, 6), Quantity::W);
  REQUIRE(!bounded.shell_max.empty());
  for (const auto& [k, v] : bounded.shell_max) CHECK(v <= 1.0 + 1e-9);

  GridSpec along;
  along.alpha_min = along.alpha_max = 3.0;
  along.alpha_steps = 1;
  const auto witness_dir = sample_grid(P(2, 4, 1, 3), Quantity::W, along);
  REQUIRE(witness_dir.fitted_exponent);
  CHECK(std::abs(*witness_dir.fitted_exponent + 0.5) < 0.05);
  // Over all directions the worst shell point sits on x = u^4, z = u, order -1.
  const auto all = sample_grid(P(2, 4, 1, 3), Quantity::W);
  CHECK(std::abs(*all.fitted_exponent + 1.0) < 0.05);

  const auto decaying = sample_grid(P(3, 2, 5, 7), Quantity::W);
  CHECK(*decaying.fitted_exponent > 0);
  GridSpec bad;
  bad.k_min = 0;
  CHECK_THROWS_AS(sample_grid(P(2, 2, 2, 6), Quantity::W, bad), std::invalid_argument);
}

TEST_CASE("quantities per condition") {
  CHECK(quantities_for(Condition::WhitneyA) == std::vector<Quantity>{Quantity::A});
  CHECK(quantities_for(Condition::WhitneyB) == std::vector<Quantity>{Quantity::A, Quantity::Bpi});
  CHECK(is_fault(Condition::WhitneyA, LimitClass::BoundedNonzero));
  CHECK_FALSE(is_fault(Condition::KuoVerdierW, LimitClass::BoundedNonzero));
  CHECK(is_fault(Condition::MostowskiL, LimitClass::Unbounded));
}

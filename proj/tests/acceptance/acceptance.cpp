// One PASS/FAIL line per acceptance criterion. Takes the CLI binary path as
// its only argument (criterion 6 drives the real executable).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "leaf_cases.hpp"
#include "oracle.hpp"
#include "strat/classifier.hpp"
#include "strat/geometry.hpp"
#include "strat/puiseux.hpp"
#include "strat/report.hpp"
#include "strat/search.hpp"

using namespace strat;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SurfaceParams P(int a, int b, int c, int d) { return make_params(a, b, c, d); }

std::vector<SurfaceParams> box(int n) {
  std::vector<SurfaceParams> out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) out.push_back(P(a, b, c, d));
  return out;
}

std::string join(const std::vector<std::string>& v, std::size_t limit = 8) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? " " : "") + v[i];
  if (v.size() > limit) s += " ...";
  return s;
}

void historical(Result& r) {
  double worst = 0;
  for (const auto& p : {P(3, 2, 3, 5), P(4, 2, 5, 7), P(4, 4, 1, 3)}) {
    const auto t0 = Clock::now();
    const auto b = classify(p, Field::Real, Condition::WhitneyB);
    const auto w = classify(p, Field::Real, Condition::KuoVerdierW);
    worst = std::max(worst, seconds_since(t0));
    if (b.verdict != Verdict::Holds || w.verdict != Verdict::Fails) r.fail(p.to_string() + " b/w mismatch");
  }
  if (worst >= 1e-3) r.fail("classification took " + std::to_string(worst * 1e3) + " ms");
  if (r.pass) r.detail << "b holds, w fails on all three; slowest pair " << worst * 1e6 << " us";
}

void leaf_coverage(Result& r) {
  std::set<std::string> covered;
  for (const auto& lc : testing::kLeafCases) {
    const auto [f, c] = testing::slot_of(std::stoi(std::string(lc.leaf).substr(1)));
    const auto cl = classify(P(lc.a, lc.b, lc.c, lc.d), f, c);
    if (cl.leaf_id != lc.leaf || cl.verdict != lc.printed) r.fail(std::string(lc.leaf) + " reached " + cl.leaf_id);
    covered.insert(lc.leaf);
  }
  std::size_t total = 0, undecided = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& leaf : diagram_leaves(n)) {
      ++total;
      if (!covered.count(leaf.id)) r.fail(leaf.id + " uncovered");
    }
  for (const auto& lc : testing::kLeafCases) undecided += lc.printed == Verdict::Undecided;
  if (undecided != 3) r.fail("expected three undecided leaves");
  if (classify(P(3, 2, 5, 7), Field::Real, Condition::MostowskiL).verdict != Verdict::Undecided)
    r.fail("(3,2,5,7) L not undecided");
  if (classify(P(2, 2, 2, 6), Field::Real, Condition::MostowskiL).verdict != Verdict::Fails ||
      classify(P(2, 2, 2, 6), Field::Real, Condition::KuoVerdierW).verdict != Verdict::Holds)
    r.fail("(2,2,2,6) L/w mismatch");
  if (r.pass) r.detail << total << " printed leaves covered with their printed verdicts";
}

void implication_sweep(Result& r) {
  const auto t0 = Clock::now();
  SweepOptions opt;
  opt.n = 8;
  const auto rep = sweep(opt);
  const double secs = seconds_since(t0);
  std::map<std::string, std::vector<std::string>> bad;
  std::size_t on_set = 0;
  for (const auto& v : rep.violations) {
    if (v.rule == "w=>b" && v.on_boundary) {
      ++on_set;
      continue;
    }
    bad[v.rule].push_back(v.params.to_string());
  }
  // Every equality-set tuple whose printed verdicts break w=>b must be reported.
  std::size_t expected_on_set = 0;
  for (const auto& rec : rep.records) {
    const auto& pr = rec.profile;
    if (on_w_equality_boundary(rec.params) && pr.verdict(Field::Real, Condition::KuoVerdierW) == Verdict::Holds &&
        pr.verdict(Field::Real, Condition::WhitneyB) == Verdict::Fails)
      ++expected_on_set;
  }
  if (rep.records.size() != 4096) r.fail("record count " + std::to_string(rep.records.size()));
  for (const auto& [rule, tuples] : bad)
    r.fail(std::to_string(tuples.size()) + " " + rule + " violations e.g. " + join(tuples, 4));
  if (on_set != expected_on_set) r.fail("equality-set violations under-reported");
  if (secs >= 10) r.fail("sweep took " + std::to_string(secs) + " s");
  if (r.pass) r.detail << "4096 tuples, " << on_set << " w=>b violations all on the equality set, " << secs << " s";
  else r.detail << " (" << on_set << " on-set w=>b violations reported, " << secs << " s)";
}

void completeness(Result& r) {
  std::vector<std::string> miss_w, miss_a, slow;
  std::size_t nw = 0, na = 0;
  double worst = 0;
  for (const auto& p : box(5)) {
    for (Condition c : {Condition::KuoVerdierW, Condition::WhitneyA}) {
      if (classify(p, Field::Real, c).verdict != Verdict::Fails) continue;
      const auto t0 = Clock::now();
      const auto res = find_fault(p, Field::Real, c);
      const double secs = seconds_since(t0);
      worst = std::max(worst, secs);
      if (secs > 1.0) slow.push_back(p.to_string());
      bool ok = res.witness.has_value();
      if (c == Condition::KuoVerdierW) {
        ++nw;
        ok = ok && res.witness->behavior.cls == LimitClass::Unbounded;
        if (!ok) miss_w.push_back(p.to_string());
      } else {
        ++na;
        ok = ok && res.witness->behavior.order && *res.witness->behavior.order <= Rational(0);
        if (!ok) miss_a.push_back(p.to_string());
      }
    }
  }
  if (!miss_w.empty()) r.fail("w misses " + join(miss_w));
  if (!miss_a.empty()) r.fail("a misses " + join(miss_a));
  if (!slow.empty()) r.fail("over 1 s: " + join(slow));
  r.detail << " [w " << nw - miss_w.size() << "/" << nw << ", a " << na - miss_a.size() << "/" << na
           << ", slowest " << worst << " s]";
}

void soundness(Result& r) {
  std::vector<std::string> bad;
  std::size_t searched = 0;
  for (const auto& p : box(5)) {
    if (on_w_equality_boundary(p)) continue;
    for (Condition c : kConditions) {
      if (classify(p, Field::Real, c).verdict != Verdict::Holds) continue;
      ++searched;
      const auto res = find_fault(p, Field::Real, c);
      if (res.witness) bad.push_back(p.to_string() + ":" + to_string(c));
    }
  }
  if (!bad.empty()) r.fail(std::to_string(bad.size()) + " certified witnesses on Holds tuples: " + join(bad));
  r.detail << " [" << searched << " Holds searches]";
}

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  const int st = pclose(pipe);
  res.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return res;
}

void boundary(Result& r, const std::string& cli) {
  const auto v = run(cli + " verify --a 2 --b 4 --c 1 --d 3 --field real --condition w --json");
  if (v.code != 3) r.fail("(2,4,1,3) exit " + std::to_string(v.code));
  try {
    const auto w = json::parse(v.out).at("results").at(0).at("witness");
    const auto& arc = w.at("arc");
    if (w.at("order") != "-1/2" || arc.at("p") != 3 || arc.at("q") != 1 || w.at("class") != "unbounded")
      r.fail("(2,4,1,3) witness " + w.dump());
  } catch (const std::exception& e) {
    r.fail(std::string("(2,4,1,3) output unreadable: ") + e.what());
  }
  // Shells pinned to the witness curve x = u^3.
  GridSpec pinned;
  pinned.alpha_min = pinned.alpha_max = 3;
  pinned.alpha_steps = 1;
  const auto g = sample_grid(P(2, 4, 1, 3), Quantity::W, pinned);
  if (!g.fitted_exponent || std::abs(*g.fitted_exponent + 0.5) > 0.05) r.fail("grid exponent on x=u^3 off -0.5");
  const auto full = sample_grid(P(2, 4, 1, 3), Quantity::W);
  for (const auto& p : {P(6, 4, 1, 3), P(2, 2, 2, 6)}) {
    const auto o = run(cli + " verify --a " + std::to_string(p.a) + " --b " + std::to_string(p.b) + " --c " +
                       std::to_string(p.c) + " --d " + std::to_string(p.d) + " --field real --condition w --json");
    try {
      if (!json::parse(o.out).at("results").at(0).at("witness").is_null()) r.fail(p.to_string() + " found a witness");
    } catch (const std::exception& e) {
      r.fail(p.to_string() + " output unreadable");
    }
    if (o.code != 0) r.fail(p.to_string() + " exit " + std::to_string(o.code));
  }
  r.detail << " [pinned exponent " << (g.fitted_exponent ? *g.fitted_exponent : NAN) << ", full-grid exponent "
           << (full.fitted_exponent ? *full.fitted_exponent : NAN) << "]";
}

PuiseuxSeries random_series(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), num(-6, 6), den(1, 3), coef(-5, 5);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) terms.push_back({Rational(num(rng), den(rng)), Coeff(mpq_class(coef(rng), den(rng)))});
  return PuiseuxSeries(std::move(terms));
}

void kernel(Result& r) {
  std::mt19937 rng(4242);
  int ring_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_series(rng), b = random_series(rng), c = random_series(rng);
    ring_bad += !((a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                  a * (b + c) == a * b + a * c);
  }
  int roundtrip_bad = 0, hom_bad = 0, hom_checked = 0, rt_checked = 0;
  for (int i = 0; i < 1000; ++i) {
    auto s = random_series(rng);
    const auto t = random_series(rng);
    const auto os = order_of(s), ot = order_of(t), ost = order_of(s * t);
    if (os.finite() && ot.finite()) {
      ++hom_checked;
      hom_bad += !(ost.order && *ost.order == *os.order + *ot.order);
    }
    if (s.terms().empty() || s.terms()[0].coefficient.certified_sign() != 1) continue;
    ++rt_checked;
    roundtrip_bad += !agrees_to_truncation(pow(rpow(s, Rational(1, 2)), 2), s);
    roundtrip_bad += !agrees_to_truncation(pow(rpow(s, Rational(1, 3)), 3), s);
  }
  if (ring_bad) r.fail(std::to_string(ring_bad) + " ring-axiom failures");
  if (roundtrip_bad) r.fail(std::to_string(roundtrip_bad) + " rpow round-trip failures");
  if (hom_bad) r.fail(std::to_string(hom_bad) + " order homomorphism failures");
  if (r.pass)
    r.detail << "1000 ring cases, " << rt_checked << " round trips, " << hom_checked << " homomorphism cases";
}

void oracle(Result& r) {
  std::mt19937 rng(909);
  int agree = 0, indeterminate = 0, total = 0;
  std::vector<std::string> off;
  while (total < 100) {
    auto u = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const auto p = P(u(1, 6), u(1, 6), u(1, 6), u(1, 8));
    MonomialArc m;
    m.p = u(1, 5);
    m.q = u(1, 5);
    m.sigma_x = u(0, 1) ? 1 : -1;
    m.lambda = Rational(u(1, 2) * (u(0, 1) ? 1 : -1));
    if (!feasible(p, m)) continue;
    const Quantity q = std::array{Quantity::A, Quantity::Bpi, Quantity::W, Quantity::Z}[u(0, 3)];
    const auto lb = limit_along_arc(p, q, m);
    ++total;
    if (lb.cls == LimitClass::Indeterminate) {
      ++indeterminate;
      continue;
    }
    if (!lb.order) {
      const auto v = testing::sample(p, q, m, pow(testing::Big(2), -12));
      if (v && abs(*v) < testing::Big(1e-30)) ++agree;
      else off.push_back(p.to_string() + m.to_string());
      continue;
    }
    const auto slope = testing::fitted_slope(p, q, m);
    if (slope && std::abs(*slope - lb.order->to_double()) < 0.05) ++agree;
    else off.push_back(p.to_string() + m.to_string() + ":" + to_string(q));
  }
  if (!off.empty()) r.fail(std::to_string(off.size()) + " disagreements: " + join(off, 3));
  if (indeterminate >= 5) r.fail(std::to_string(indeterminate) + "% indeterminate");
  r.detail << " [" << agree << " agree, " << indeterminate << " indeterminate of " << total << "]";
}

void geometry(Result& r) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> e(1, 7), num(-9, 9), den(1, 9);
  int exact_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = P(e(rng), e(rng), e(rng), e(rng));
    mpq_class x(num(rng), den(rng)), z(num(rng), den(rng));
    x.canonicalize();
    z.canonicalize();
    exact_bad += !euler_identity_residual(p, x, z).is_zero();
  }
  double proj_err = 0, fd_err = 0;
  std::uniform_real_distribution<double> coord(-1.0, 1.0), pos(0.2, 1.3);
  std::uniform_int_distribution<int> ex(1, 6);
  for (int n = 0; n < 500; ++n) {
    const auto p = P(ex(rng), ex(rng), ex(rng), ex(rng));
    const double x = coord(rng), z = coord(rng);
    const auto ys = y_branches_real(p, x, z);
    if (ys.empty()) continue;
    const Point3<double> q{x, ys.back(), z};
    const auto g = gradient(p, q);
    const double gn = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    if (gn == 0) continue;
    const auto pr = tangent_projection(p, q);
    for (int i = 0; i < 3; ++i) {
      double pg = 0;
      for (int j = 0; j < 3; ++j) {
        double pp = 0;
        for (int k = 0; k < 3; ++k) pp += pr.tangent[i][k] * pr.tangent[k][j];
        proj_err = std::max(proj_err, std::abs(pp - pr.tangent[i][j]));
        proj_err = std::max(proj_err, std::abs(pr.tangent[i][j] + pr.normal[i][j] - (i == j)));
        pg += pr.tangent[i][j] * g[j];
      }
      proj_err = std::max(proj_err, std::abs(pg) / std::max(1.0, gn));
    }
    const double px = pos(rng), py = pos(rng), pz = pos(rng), h = 1e-6;
    const auto gg = gradient(p, px, py, pz);
    const double fd[3] = {(eval_f(p, px + h, py, pz) - eval_f(p, px - h, py, pz)) / (2 * h),
                          (eval_f(p, px, py + h, pz) - eval_f(p, px, py - h, pz)) / (2 * h),
                          (eval_f(p, px, py, pz + h) - eval_f(p, px, py, pz - h)) / (2 * h)};
    for (int i = 0; i < 3; ++i) fd_err = std::max(fd_err, std::abs(fd[i] - gg[i]) / std::max(1.0, std::abs(gg[i])));
  }
  if (exact_bad) r.fail(std::to_string(exact_bad) + " exact identity failures");
  if (proj_err > 1e-10) r.fail("projection error " + std::to_string(proj_err));
  if (fd_err > 1e-6) r.fail("finite-difference error " + std::to_string(fd_err));
  if (r.pass)
    r.detail << "1000 exact points, projection error " << proj_err << ", finite-difference error " << fd_err;
}

void gap(Result& r) {
  const auto g6 = gap_scan(6), g8 = gap_scan(8), g10 = gap_scan(10);
  for (const auto& p : {P(3, 2, 3, 5), P(4, 2, 5, 7), P(4, 4, 1, 3)})
    if (std::find(g8.begin(), g8.end(), p) == g8.end()) r.fail(p.to_string() + " missing");
  if (!(g6.size() < g8.size() && g8.size() < g10.size())) r.fail("counts not strictly growing");
  r.detail << (r.pass ? "" : " ") << "[counts " << g6.size() << " < " << g8.size() << " < " << g10.size() << "]";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <strat-regularity binary>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Result&)>>> criteria = {
      {"historical examples", historical},
      {"diagram leaf coverage", leaf_coverage},
      {"implication sweep", implication_sweep},
      {"witness completeness", completeness},
      {"witness soundness", soundness},
      {"boundary adjudication", [&](Result& r) { boundary(r, cli); }},
      {"kernel properties", kernel},
      {"oracle agreement", oracle},
      {"geometry identities", geometry},
      {"gap scan", gap},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(r);
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    failed += !r.pass;
    std::string detail = r.detail.str();
    if (!detail.empty() && detail[0] == ' ') detail.erase(0, 1);
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << detail
              << " (" << seconds_since(t0) << " s)" << std::endl;
  }
  return failed ? 1 : 0;
}

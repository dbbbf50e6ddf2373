#include "strat/report.hpp"

#include <omp.h>

#include <sstream>

namespace strat {

namespace {

bool holds(const RegularityProfile& pr, Field f, Condition c) { return pr.verdict(f, c) == Verdict::Holds; }
bool fails(const RegularityProfile& pr, Field f, Condition c) { return pr.verdict(f, c) == Verdict::Fails; }

std::string leaf_of(const Outcome& o) { return o.note.substr(0, o.note.find(':')); }

void implication(std::vector<Violation>& out, const RegularityProfile& pr, Field f, Condition strong,
                 Condition weak, const std::string& rule) {
  if (holds(pr, f, strong) && fails(pr, f, weak)) {
    out.push_back({pr.params(), rule, to_string(f),
                   to_string(strong) + " holds (" + leaf_of(pr.outcome(f, strong)) + ") but " + to_string(weak) +
                       " fails (" + leaf_of(pr.outcome(f, weak)) + ")",
                   on_w_equality_boundary(pr.params())});
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void to_json(json& j, const Violation& v) {
  j = json{{"params", v.params}, {"rule", v.rule},       {"field", v.field},
           {"detail", v.detail}, {"on_boundary", v.on_boundary}};
}

std::vector<Violation> consistency_check(const RegularityProfile& pr) {
  std::vector<Violation> out;
  const SurfaceParams& p = pr.params();
  for (Field f : kFields) {
    implication(out, pr, f, Condition::MostowskiL, Condition::KuoVerdierW, "L=>w");
    implication(out, pr, f, Condition::KuoVerdierW, Condition::WhitneyB, "w=>b");
    implication(out, pr, f, Condition::WhitneyB, Condition::WhitneyA, "b=>a");
  }
  const Verdict cb = pr.verdict(Field::Complex, Condition::WhitneyB);
  if (pr.verdict(Field::Complex, Condition::KuoVerdierW) != cb || pr.verdict(Field::Complex, Condition::MostowskiL) != cb) {
    out.push_back({p, "complex-triple", "complex", "complex b, w, L verdicts differ", on_w_equality_boundary(p)});
  }
  for (Condition c : kConditions) {
    if (holds(pr, Field::Complex, c) && fails(pr, Field::Real, c)) {
      out.push_back({p, "complex=>real", "both", to_string(c) + " holds over C but fails over R",
                     on_w_equality_boundary(p)});
    }
  }
  if (p.b == 1) {
    const Verdict va = pr.verdict(Field::Real, Condition::WhitneyA), vb = pr.verdict(Field::Real, Condition::WhitneyB);
    if (va != Verdict::Undecided && vb != Verdict::Undecided && va != vb) {
      out.push_back({p, "b=1", "real", "b = 1 but a and b verdicts differ", on_w_equality_boundary(p)});
    }
  }
  if (c1_smooth(p)) {
    for (Condition c : {Condition::WhitneyA, Condition::WhitneyB}) {
      if (fails(pr, Field::Real, c)) {
        out.push_back({p, "C1=>a,b", "real",
                       "surface is C^1 but " + to_string(c) + " fails (" + leaf_of(pr.outcome(Field::Real, c)) + ")",
                       on_w_equality_boundary(p)});
      }
    }
  }
  return out;
}

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Consistent: return "CONSISTENT";
    case VerifyStatus::Discrepancy: return "DISCREPANCY";
    case VerifyStatus::EvidenceOnly: return "EVIDENCE-ONLY";
  }
  return "?";
}

VerifyStatus verify_status(Verdict verdict, bool witness_found) {
  if (verdict == Verdict::Holds) return witness_found ? VerifyStatus::Discrepancy : VerifyStatus::Consistent;
  if (verdict == Verdict::Fails && witness_found) return VerifyStatus::Consistent;
  return VerifyStatus::EvidenceOnly;
}

void to_json(json& j, const Verification& v) {
  j = json{{"params", v.params},
           {"field", to_string(v.field)},
           {"condition", to_string(v.condition)},
           {"verdict", to_string(v.classification.verdict)},
           {"leaf", v.classification.leaf_id},
           {"leaf_trace", v.classification.trace_string()},
           {"status", to_string(v.status)}};
  j["witness"] = v.search.witness ? json(*v.search.witness) : json(nullptr);
  j["search"] = v.search.record;
  if (v.search.witness) j["search"]["none_found"] = false;
}

Verification verify(const SurfaceParams& p, Field field, Condition condition, const SearchBudget& budget,
                    bool parallel) {
  Verification v;
  v.params = p;
  v.field = field;
  v.condition = condition;
  v.classification = classify(p, field, condition);
  v.search = parallel ? find_fault(p, field, condition, budget) : find_fault_serial(p, field, condition, budget);
  v.status = verify_status(v.classification.verdict, v.search.witness.has_value());
  return v;
}

SweepReport sweep(const SweepOptions& opt) {
  if (opt.n < 1) throw ParamError("sweep bound N must be >= 1");
  SweepReport rep;
  rep.n = opt.n;
  const std::int64_t n = opt.n;
  const std::int64_t total = n * n * n * n;
  rep.records.resize(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < total; ++i) {
    const std::int64_t a = i / (n * n * n) + 1, b = (i / (n * n)) % n + 1, c = (i / n) % n + 1, d = i % n + 1;
    SweepRecord& r = rep.records[static_cast<std::size_t>(i)];
    r.params = make_params(a, b, c, d);
    r.profile = profile(r.params);
    if (!opt.verify) continue;
    const bool boundary = on_w_equality_boundary(r.params);
    for (Field f : opt.fields) {
      for (Condition cond : opt.conditions) {
        const Verdict v = r.profile.verdict(f, cond);
        if (v == Verdict::Fails || (boundary && f == Field::Real)) {
          r.evidence.push_back(verify(r.params, f, cond, opt.budget, false));
        }
      }
    }
  }
  std::size_t counts[2][4][3] = {};
  for (const auto& r : rep.records) {
    for (auto& v : consistency_check(r.profile)) rep.violations.push_back(std::move(v));
    for (const auto& e : r.evidence) {
      if (e.status == VerifyStatus::Discrepancy ||
          (e.classification.verdict == Verdict::Fails && !e.search.witness)) {
        rep.discrepancies.push_back(e);
      }
    }
    for (Field f : kFields)
      for (Condition c : kConditions)
        ++counts[static_cast<int>(f)][static_cast<int>(c)][static_cast<int>(r.profile.verdict(f, c))];
  }
  json s = json::object();
  s["tuples"] = rep.records.size();
  for (Field f : opt.fields) {
    for (Condition c : opt.conditions) {
      s["verdicts"][to_string(f)][to_string(c)] = {
          {"holds", counts[static_cast<int>(f)][static_cast<int>(c)][0]},
          {"fails", counts[static_cast<int>(f)][static_cast<int>(c)][1]},
          {"undecided", counts[static_cast<int>(f)][static_cast<int>(c)][2]}};
    }
  }
  std::size_t off = 0;
  for (const auto& v : rep.violations) off += v.on_boundary ? 0 : 1;
  s["violations"] = rep.violations.size();
  s["violations_off_boundary"] = off;
  s["discrepancies"] = rep.discrepancies.size();
  rep.summary = s;
  return rep;
}

json sweep_json(const SweepReport& rep, const SweepOptions& opt) {
  json results = json::array();
  for (const auto& r : rep.records) {
    json rec = {{"params", r.params}};
    json verdicts = json::object();
    for (Field f : opt.fields) {
      for (Condition c : opt.conditions) {
        const Classification cl = classify(r.params, f, c);
        verdicts[to_string(f)][to_string(c)] = {
            {"verdict", to_string(cl.verdict)}, {"leaf", cl.leaf_id}, {"leaf_trace", cl.trace_string()}};
      }
    }
    rec["verdicts"] = verdicts;
    if (!r.evidence.empty()) rec["evidence"] = r.evidence;
    results.push_back(std::move(rec));
  }
  json out = envelope(std::move(results));
  out["n"] = rep.n;
  out["summary"] = rep.summary;
  out["violations"] = rep.violations;
  out["discrepancies"] = rep.discrepancies;
  return out;
}

std::string sweep_csv(const SweepReport& rep, const SweepOptions& opt) {
  std::ostringstream os;
  os << "a,b,c,d,field,condition,verdict,leaf_trace,witness_json,order,class\n";
  for (const auto& r : rep.records) {
    for (Field f : opt.fields) {
      for (Condition c : opt.conditions) {
        const Classification cl = classify(r.params, f, c);
        std::string wj, order, cls;
        for (const auto& e : r.evidence) {
          if (e.field != f || e.condition != c || !e.search.witness) continue;
          wj = json(*e.search.witness).at("arc").dump();
          const auto& b = e.search.witness->behavior;
          order = b.order ? b.order->to_string() : "";
          cls = to_string(b.cls);
        }
        os << r.params.a << ',' << r.params.b << ',' << r.params.c << ',' << r.params.d << ',' << to_string(f) << ','
           << to_string(c) << ',' << to_string(cl.verdict) << ',' << csv_field(cl.trace_string()) << ','
           << csv_field(wj) << ',' << order << ',' << cls << '\n';
      }
    }
  }
  return os.str();
}

std::vector<SurfaceParams> gap_scan(std::int64_t n) {
  if (n < 1) throw ParamError("gap scan bound N must be >= 1");
  std::vector<SurfaceParams> out;
  for (std::int64_t a = 1; a <= n; ++a)
    for (std::int64_t b = 1; b <= n; ++b)
      for (std::int64_t c = 1; c <= n; ++c)
        for (std::int64_t d = 1; d <= n; ++d) {
          const auto p = make_params(a, b, c, d);
          if (classify(p, Field::Real, Condition::WhitneyB).verdict == Verdict::Holds &&
              classify(p, Field::Real, Condition::KuoVerdierW).verdict == Verdict::Fails) {
            out.push_back(p);
          }
        }
  return out;
}

json envelope(json results) {
  return json{{"tool", kToolName}, {"version", kToolVersion}, {"results", std::move(results)}};
}

}  // namespace strat

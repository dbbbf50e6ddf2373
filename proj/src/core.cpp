#include "strat/core.hpp"

namespace strat {

std::string SurfaceParams::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d) + ")";
}

SurfaceParams make_params(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const std::pair<const char*, std::int64_t> fields[] = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
  for (const auto& [name, v] : fields) {
    if (v < 1) throw ParamError(std::string(name) + " must be ≥ 1");
  }
  return SurfaceParams{a, b, c, d};
}

std::string to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

std::string to_string(Condition c) {
  switch (c) {
    case Condition::WhitneyA: return "a";
    case Condition::WhitneyB: return "b";
    case Condition::KuoVerdierW: return "w";
    case Condition::MostowskiL: return "L";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

Field parse_field(const std::string& s) {
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  throw std::invalid_argument("unknown field '" + s + "'");
}

Condition parse_condition(const std::string& s) {
  if (s == "a") return Condition::WhitneyA;
  if (s == "b") return Condition::WhitneyB;
  if (s == "w") return Condition::KuoVerdierW;
  if (s == "L") return Condition::MostowskiL;
  throw std::invalid_argument("unknown condition '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
  if (s == "holds") return Verdict::Holds;
  if (s == "fails") return Verdict::Fails;
  if (s == "undecided") return Verdict::Undecided;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

void to_json(json& j, const SurfaceParams& p) {
  j = json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

void from_json(const json& j, SurfaceParams& p) {
  p = make_params(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>(),
                  j.at("c").get<std::int64_t>(), j.at("d").get<std::int64_t>());
}

void to_json(json& j, const RegularityProfile& p) {
  j = json::object();
  j["params"] = p.params();
  json verdicts = json::object();
  for (Field f : kFields) {
    json per = json::object();
    for (Condition c : kConditions) {
      const Outcome& o = p.outcome(f, c);
      per[to_string(c)] = json{{"verdict", o.verdict}, {"note", o.note}};
    }
    verdicts[to_string(f)] = per;
  }
  j["verdicts"] = verdicts;
}

void from_json(const json& j, RegularityProfile& p) {
  p = RegularityProfile(j.at("params").get<SurfaceParams>());
  for (Field f : kFields) {
    for (Condition c : kConditions) {
      const json& o = j.at("verdicts").at(to_string(f)).at(to_string(c));
      p.set(f, c, Outcome{o.at("verdict").get<Verdict>(), o.at("note").get<std::string>()});
    }
  }
}

}  // namespace strat

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "strat/report.hpp"

using namespace strat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDiscrepancy = 3;

struct TupleArgs {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  void add(CLI::App* app, bool required = true) {
    for (auto [name, ref] : {std::pair{"--a", &a}, {"--b", &b}, {"--c", &c}, {"--d", &d}}) {
      auto* opt = app->add_option(name, *ref, "positive integer exponent");
      if (required) opt->required();
    }
  }
  bool given() const { return a || b || c || d; }
  SurfaceParams params() const { return make_params(a, b, c, d); }
};

struct BudgetArgs {
  std::int64_t max_height = 64;
  std::int64_t truncation = 8;
  unsigned precision = kPrecisionCap;
  std::int64_t pair_height = SearchBudget{}.max_pair_height;
  std::int64_t time_ms = 1000;
  void add(CLI::App* app) {
    app->add_option("--max-height", max_height, "bound on p+q and lambda height")->check(CLI::PositiveNumber);
    app->add_option("--truncation", truncation, "relative series depth")->check(CLI::PositiveNumber);
    app->add_option("--precision", precision, "interval precision cap in bits")->check(CLI::Range(64u, 1u << 16));
    app->add_option("--pair-height", pair_height, "bound on p+q for (L) arc pairs")->check(CLI::PositiveNumber);
    app->add_option("--time-ms", time_ms, "time budget per tuple and condition")->check(CLI::PositiveNumber);
  }
  SearchBudget budget() const {
    SearchBudget b;
    b.max_height = max_height;
    b.depth = Rational(truncation);
    b.precision_cap = precision;
    b.max_pair_height = pair_height;
    b.per_tuple_time = std::chrono::milliseconds(time_ms);
    return b;
  }
};

const std::map<std::string, Field> kFieldNames{{"real", Field::Real}, {"complex", Field::Complex}};
const std::map<std::string, Condition> kConditionNames{{"a", Condition::WhitneyA},
                                                       {"b", Condition::WhitneyB},
                                                       {"w", Condition::KuoVerdierW},
                                                       {"L", Condition::MostowskiL}};

std::vector<Field> fields_of(const std::string& s) {
  if (s == "all") return {kFields.begin(), kFields.end()};
  return {kFieldNames.at(s)};
}

std::vector<Condition> conditions_of(const std::string& s) {
  if (s == "all") return {kConditions.begin(), kConditions.end()};
  return {kConditionNames.at(s)};
}

json classification_json(const SurfaceParams& p, Field f, Condition c, const Classification& cl) {
  return json{{"params", p},
              {"field", to_string(f)},
              {"condition", to_string(c)},
              {"verdict", to_string(cl.verdict)},
              {"leaf", cl.leaf_id},
              {"leaf_trace", cl.trace_string()}};
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

void print_violations(const std::vector<Violation>& vs) {
  for (const auto& v : vs) {
    std::cout << v.params.to_string() << " " << v.rule << " [" << v.field << "] " << v.detail
              << (v.on_boundary ? " (flagged boundary)" : "") << "\n";
  }
}

std::vector<RegularityProfile> profiles_from(const json& j) {
  std::vector<RegularityProfile> out;
  const json& body = j.contains("results") ? j.at("results") : j;
  if (body.is_array()) {
    for (const auto& item : body) out.push_back(item.get<RegularityProfile>());
  } else {
    out.push_back(body.get<RegularityProfile>());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity verdicts and fault witnesses for y^a = z^b x^c + x^d along the z-axis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  TupleArgs tuple;
  BudgetArgs budget;
  std::string field = "real", condition, format = "json", out, report_path;
  std::int64_t n = 8;
  bool as_json = false, do_verify = false, serial = false;
  std::string quantity = "W";
  GridSpec grid;

  auto* classify_cmd = app.add_subcommand("classify", "verdict and leaf trace for one tuple");
  tuple.add(classify_cmd);
  classify_cmd->add_option("--field", field)->check(CLI::IsMember({"real", "complex"}));
  classify_cmd->add_option("--condition", condition)->required()->check(CLI::IsMember({"a", "b", "w", "L"}));
  classify_cmd->add_flag("--json", as_json);

  auto* profile_cmd = app.add_subcommand("profile", "all eight verdicts for one tuple");
  tuple.add(profile_cmd);
  profile_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "classifier verdict against a fault-witness search");
  tuple.add(verify_cmd);
  verify_cmd->add_option("--field", field)->check(CLI::IsMember({"real", "complex"}));
  verify_cmd->add_option("--condition", condition)->required()->check(CLI::IsMember({"a", "b", "w", "L"}));
  budget.add(verify_cmd);
  verify_cmd->add_flag("--json", as_json);
  verify_cmd->add_flag("--serial", serial, "use the serial reference search");

  auto* sweep_cmd = app.add_subcommand("sweep", "classify every tuple in [1,N]^4");
  sweep_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--field", field)->check(CLI::IsMember({"real", "complex", "all"}));
  sweep_cmd->add_option("--condition", condition)->check(CLI::IsMember({"a", "b", "w", "L", "all"}));
  sweep_cmd->add_flag("--verify", do_verify, "search for witnesses on Fails verdicts and boundary tuples");
  sweep_cmd->add_option("--out", out, "report file (default stdout)");
  sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  budget.add(sweep_cmd);

  auto* gap_cmd = app.add_subcommand("gap", "tuples with real (b) holding and real (w) failing");
  gap_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
  gap_cmd->add_flag("--json", as_json);

  auto* check_cmd = app.add_subcommand("check", "implication and consistency checks");
  tuple.add(check_cmd, false);
  check_cmd->add_option("--n", n, "check every tuple in [1,N]^4")->check(CLI::PositiveNumber);
  check_cmd->add_option("--report", report_path, "JSON file holding one or more profiles")->check(CLI::ExistingFile);
  check_cmd->add_flag("--json", as_json);

  auto* grid_cmd = app.add_subcommand("grid", "floating shell sampling of a quantity");
  tuple.add(grid_cmd);
  grid_cmd->add_option("--quantity", quantity)->check(CLI::IsMember({"A", "Bpi", "W", "Z"}));
  grid_cmd->add_option("--k-min", grid.k_min)->check(CLI::PositiveNumber);
  grid_cmd->add_option("--k-max", grid.k_max)->check(CLI::PositiveNumber);
  grid_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      const auto p = tuple.params();
      const Field f = kFieldNames.at(field);
      const Condition c = kConditionNames.at(condition);
      const auto cl = classify(p, f, c);
      if (as_json) {
        std::cout << envelope(json::array({classification_json(p, f, c, cl)})).dump(2) << "\n";
      } else {
        std::cout << to_string(cl.verdict) << "\n" << cl.leaf_id << ": " << cl.trace_string() << "\n";
      }
      return kExitOk;
    }
    if (profile_cmd->parsed()) {
      const auto p = tuple.params();
      if (as_json) {
        std::cout << envelope(json::array({json(profile(p))})).dump(2) << "\n";
        return kExitOk;
      }
      for (Field f : kFields) {
        for (Condition c : kConditions) {
          const auto cl = classify(p, f, c);
          std::cout << to_string(f) << " " << to_string(c) << " " << to_string(cl.verdict) << "  " << cl.leaf_id
                    << ": " << cl.trace_string() << "\n";
        }
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto p = tuple.params();
      const auto v = verify(p, kFieldNames.at(field), kConditionNames.at(condition), budget.budget(), !serial);
      if (as_json) {
        std::cout << envelope(json::array({json(v)})).dump(2) << "\n";
      } else {
        std::cout << "classifier: " << to_string(v.classification.verdict) << " (" << v.classification.leaf_id
                  << ": " << v.classification.trace_string() << ")\n";
        if (v.search.witness) {
          const auto& w = *v.search.witness;
          std::cout << "verifier: witness on " << (w.pair ? "pair from " : "") << w.arc.to_string() << ", "
                    << to_string(w.quantity) << " order " << (w.behavior.order ? w.behavior.order->to_string() : "-")
                    << " (" << to_string(w.behavior.cls) << ")\n";
          std::cout << "witness: " << json(w).dump() << "\n";
        } else {
          std::cout << "verifier: no witness (" << v.search.record.evaluated << " evaluations"
                    << (v.search.record.timed_out ? ", timed out" : "") << ")\n";
        }
        std::cout << "status: " << to_string(v.status) << "\n";
      }
      return v.status == VerifyStatus::Discrepancy ? kExitDiscrepancy : kExitOk;
    }
    if (sweep_cmd->parsed()) {
      SweepOptions opt;
      opt.n = n;
      opt.fields = fields_of(field == "real" && sweep_cmd->count("--field") == 0 ? "all" : field);
      opt.conditions = conditions_of(condition.empty() ? "all" : condition);
      opt.verify = do_verify;
      opt.budget = budget.budget();
      const auto rep = sweep(opt);
      write_out(out, format == "csv" ? sweep_csv(rep, opt) : sweep_json(rep, opt).dump(2) + "\n");
      if (!out.empty()) std::cout << rep.summary.dump(2) << "\n";
      for (const auto& d : rep.discrepancies)
        if (d.status == VerifyStatus::Discrepancy) return kExitDiscrepancy;
      return kExitOk;
    }
    if (gap_cmd->parsed()) {
      const auto tuples = gap_scan(n);
      if (as_json) {
        std::cout << envelope(json(tuples)).dump(2) << "\n";
      } else {
        for (const auto& p : tuples) std::cout << p.to_string() << "\n";
      }
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      std::vector<RegularityProfile> profiles;
      if (!report_path.empty()) {
        std::ifstream is(report_path);
        profiles = profiles_from(json::parse(is));
      } else if (tuple.given()) {
        profiles.push_back(profile(tuple.params()));
      } else {
        for (std::int64_t a = 1; a <= n; ++a)
          for (std::int64_t b = 1; b <= n; ++b)
            for (std::int64_t c = 1; c <= n; ++c)
              for (std::int64_t d = 1; d <= n; ++d) profiles.push_back(profile(make_params(a, b, c, d)));
      }
      std::vector<Violation> all;
      for (const auto& pr : profiles)
        for (auto& v : consistency_check(pr)) all.push_back(std::move(v));
      if (as_json) {
        std::cout << envelope(json(all)).dump(2) << "\n";
      } else {
        print_violations(all);
        std::cout << profiles.size() << " profiles, " << all.size() << " violations\n";
      }
      return all.empty() ? kExitOk : kExitDiscrepancy;
    }
    if (grid_cmd->parsed()) {
      const auto rep = sample_grid(tuple.params(), parse_quantity(quantity), grid);
      if (as_json) {
        std::cout << envelope(json::array({json(rep)})).dump(2) << "\n";
      } else {
        for (const auto& [k, v] : rep.shell_max) std::cout << "k=" << k << " max=" << v << "\n";
        if (rep.fitted_exponent) std::cout << "fitted exponent " << *rep.fitted_exponent << "\n";
      }
      return kExitOk;
    }
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: bad report: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#pragma once

// Sweeps, gap scans, implication checks and verification status: the
// aggregation layer behind the command-line tool.

#include <optional>
#include <string>
#include <vector>

#include "strat/classifier.hpp"
#include "strat/search.hpp"

namespace strat {

inline constexpr const char* kToolName = "strat-regularity";
inline constexpr const char* kToolVersion = "1.0.0";

struct Violation {
  SurfaceParams params;
  std::string rule;      // "L=>w", "w=>b", "b=>a", "complex-triple", "complex=>real", "b=1", "C1=>a,b"
  std::string field;     // "real", "complex" or "both"
  std::string detail;
  bool on_boundary = false;  // inside the flagged (w) equality set
};
void to_json(json& j, const Violation& v);

std::vector<Violation> consistency_check(const RegularityProfile& profile);

enum class VerifyStatus { Consistent, Discrepancy, EvidenceOnly };
std::string to_string(VerifyStatus s);

struct Verification {
  SurfaceParams params;
  Field field = Field::Real;
  Condition condition = Condition::WhitneyA;
  Classification classification;
  SearchResult search;
  VerifyStatus status = VerifyStatus::EvidenceOnly;
};
void to_json(json& j, const Verification& v);

// Holds + witness is a discrepancy; Holds + none and Fails + witness agree;
// anything else is evidence only.
VerifyStatus verify_status(Verdict verdict, bool witness_found);
Verification verify(const SurfaceParams& p, Field field, Condition condition, const SearchBudget& budget,
                    bool parallel = true);

struct SweepOptions {
  std::int64_t n = 8;
  std::vector<Field> fields{kFields.begin(), kFields.end()};
  std::vector<Condition> conditions{kConditions.begin(), kConditions.end()};
  bool verify = false;
  SearchBudget budget{};
};

struct SweepRecord {
  SurfaceParams params;
  RegularityProfile profile;
  std::vector<Verification> evidence;
};

struct SweepReport {
  std::int64_t n = 0;
  std::vector<SweepRecord> records;  // lexicographic in (a,b,c,d)
  std::vector<Violation> violations;
  std::vector<Verification> discrepancies;  // Holds with a witness, or Fails without one
  json summary;
};

SweepReport sweep(const SweepOptions& options);
json sweep_json(const SweepReport& report, const SweepOptions& options);
std::string sweep_csv(const SweepReport& report, const SweepOptions& options);

// Tuples in [1,N]^4 with real (b) Holds and real (w) Fails, lexicographic.
std::vector<SurfaceParams> gap_scan(std::int64_t n);

// {"tool":..., "version":..., "results": results}
json envelope(json results);

}  // namespace strat

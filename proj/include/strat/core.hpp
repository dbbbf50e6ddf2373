#pragma once

// Parameters, fields, conditions and verdicts shared by every module.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace strat {

using json = nlohmann::ordered_json;

class ParamError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Germ of y^a = z^b x^c + x^d along the z-axis.
struct SurfaceParams {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t c = 1;
  std::int64_t d = 1;

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
  friend auto operator<=>(const SurfaceParams&, const SurfaceParams&) = default;
  std::string to_string() const;  // "(a,b,c,d)"
};

// Throws ParamError naming the first offending field.
SurfaceParams make_params(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

enum class Field { Real, Complex };
enum class Condition { WhitneyA, WhitneyB, KuoVerdierW, MostowskiL };
enum class Verdict { Holds, Fails, Undecided };

inline constexpr std::array<Field, 2> kFields{Field::Real, Field::Complex};
inline constexpr std::array<Condition, 4> kConditions{Condition::WhitneyA, Condition::WhitneyB,
                                                      Condition::KuoVerdierW, Condition::MostowskiL};

std::string to_string(Field f);
std::string to_string(Condition c);
std::string to_string(Verdict v);
Field parse_field(const std::string& s);
Condition parse_condition(const std::string& s);
Verdict parse_verdict(const std::string& s);

// A verdict plus where it came from (leaf path or verifier budget).
struct Outcome {
  Verdict verdict = Verdict::Undecided;
  std::string note;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

class RegularityProfile {
 public:
  RegularityProfile() = default;
  explicit RegularityProfile(SurfaceParams p) : params_(p) {}

  const SurfaceParams& params() const { return params_; }
  const Outcome& outcome(Field f, Condition c) const { return slots_[index(f, c)]; }
  Verdict verdict(Field f, Condition c) const { return outcome(f, c).verdict; }
  void set(Field f, Condition c, Outcome o) { slots_[index(f, c)] = std::move(o); }

  friend bool operator==(const RegularityProfile&, const RegularityProfile&) = default;

 private:
  static std::size_t index(Field f, Condition c) {
    return static_cast<std::size_t>(f) * 4 + static_cast<std::size_t>(c);
  }
  SurfaceParams params_;
  std::array<Outcome, 8> slots_{};
};

void to_json(json& j, const SurfaceParams& p);
void from_json(const json& j, SurfaceParams& p);
void to_json(json& j, const RegularityProfile& p);
void from_json(const json& j, RegularityProfile& p);

}  // namespace strat

namespace nlohmann {
// Enums serialize as their lowercase tags.
template <>
struct adl_serializer<strat::Field> {
  static void to_json(ordered_json& j, strat::Field f) { j = strat::to_string(f); }
  static void from_json(const ordered_json& j, strat::Field& f) {
    f = strat::parse_field(j.get<std::string>());
  }
};
template <>
struct adl_serializer<strat::Condition> {
  static void to_json(ordered_json& j, strat::Condition c) { j = strat::to_string(c); }
  static void from_json(const ordered_json& j, strat::Condition& c) {
    c = strat::parse_condition(j.get<std::string>());
  }
};
template <>
struct adl_serializer<strat::Verdict> {
  static void to_json(ordered_json& j, strat::Verdict v) { j = strat::to_string(v); }
  static void from_json(const ordered_json& j, strat::Verdict& v) {
    v = strat::parse_verdict(j.get<std::string>());
  }
};
}  // namespace nlohmann

#pragma once

// JSON documents: generalized Seifert systems and bound fixture records.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitsig/bounds.hpp"
#include "splitsig/ccomplex.hpp"

namespace splitsig {

/// Malformed document: wrong types, ragged rows, unknown keys in "matrices".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structure only; run validate() for the mathematical invariants.
GeneralizedSeifertSystem gss_from_json(const nlohmann::json& doc);
nlohmann::json gss_to_json(const GeneralizedSeifertSystem& gss);
GeneralizedSeifertSystem load_gss_file(const std::filesystem::path& path);

enum class FixtureKind { kLevineTristram, kMultivariable, kRank };

struct FixtureRecord {
  std::string name;
  FixtureKind kind = FixtureKind::kLevineTristram;
  int mu = 1;
  std::optional<TorusPoint> omega;
  std::optional<InvariantValue> link;
  std::optional<std::int64_t> total_lk;
  std::optional<int> total_lk_parity;
  std::optional<IntMatrix> linking;
  ComponentInvariants components;
  std::optional<int> beta_est;
  std::vector<RankSample> samples;
  std::optional<int> expected;
  std::string note;

  /// total_lk if known, else total_lk_parity.
  std::optional<int> linking_parity() const;
};

FixtureRecord fixture_from_json(const nlohmann::json& doc);
FixtureRecord load_fixture_file(const std::filesystem::path& path);

std::string to_string(FixtureKind kind);

/// Evaluates the formula named by the record's kind.
BoundReport evaluate_fixture(const FixtureRecord& record);

/// Plain-text rendering used by the command-line tool.
std::string format_report(const BoundReport& report);

}  // namespace splitsig

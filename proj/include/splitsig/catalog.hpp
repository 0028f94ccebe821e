#pragma once

// Built-in systems and bound fixtures shipped with the toolkit. The JSON
// files under fixtures/ are compiled into the library.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitsig/ccomplex.hpp"
#include "splitsig/io.hpp"

namespace splitsig {

struct EmbeddedFile {
  std::string_view path;  // relative to fixtures/
  std::string_view text;
};

std::span<const EmbeddedFile> embedded_fixture_files();

class Catalog {
 public:
  static const Catalog& builtin();

  /// Parses "systems/*.json" as systems and "bounds/*.json" as fixture records.
  static Catalog from_files(std::span<const EmbeddedFile> files);

  const std::map<std::string, GeneralizedSeifertSystem>& systems() const { return systems_; }
  const std::vector<FixtureRecord>& fixtures() const { return fixtures_; }

  /// Named entry, or any supported Conway form written "C(4,3,2)".
  std::optional<GeneralizedSeifertSystem> find_system(std::string_view name) const;
  const FixtureRecord* find_fixture(std::string_view name) const;

  /// Empty when every fixture re-evaluates to its recorded value and every
  /// system is valid (and matches its two-bridge construction, if it has one).
  std::vector<std::string> self_check() const;

 private:
  std::map<std::string, GeneralizedSeifertSystem> systems_;
  std::vector<FixtureRecord> fixtures_;
};

}  // namespace splitsig

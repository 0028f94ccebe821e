#include "splitsig/catalog.hpp"

#include "splitsig/twobridge.hpp"

namespace splitsig {

namespace {

std::optional<ConwayForm> conway_from_name(std::string_view name) {
  if (name.size() < 3 || !name.starts_with("C(") || !name.ends_with(")")) return std::nullopt;
  return ConwayForm::parse(name.substr(2, name.size() - 3));
}

}  // namespace

const Catalog& Catalog::builtin() {
  static const Catalog catalog = from_files(embedded_fixture_files());
  return catalog;
}

Catalog Catalog::from_files(std::span<const EmbeddedFile> files) {
  Catalog catalog;
  for (const EmbeddedFile& file : files) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(file.text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string(file.path) + ": " + e.what());
    }
    if (file.path.starts_with("systems/")) {
      GeneralizedSeifertSystem gss = gss_from_json(doc);
      std::string name = gss.name;
      catalog.systems_.emplace(std::move(name), std::move(gss));
    } else if (file.path.starts_with("bounds/")) {
      catalog.fixtures_.push_back(fixture_from_json(doc));
    }
  }
  return catalog;
}

std::optional<GeneralizedSeifertSystem> Catalog::find_system(std::string_view name) const {
  if (auto it = systems_.find(std::string(name)); it != systems_.end()) return it->second;
  if (auto form = conway_from_name(name)) return build_gss(*form);
  return std::nullopt;
}

const FixtureRecord* Catalog::find_fixture(std::string_view name) const {
  for (const FixtureRecord& rec : fixtures_) {
    if (rec.name == name) return &rec;
  }
  return nullptr;
}

std::vector<std::string> Catalog::self_check() const {
  std::vector<std::string> failures;
  for (const auto& [name, gss] : systems_) {
    const auto violations = validate(gss);
    for (const auto& v : violations) failures.push_back(name + ": " + v);
    if (!violations.empty()) continue;
    std::optional<ConwayForm> form;
    try {
      form = conway_from_name(name);
    } catch (const std::invalid_argument&) {
    }
    if (!form) continue;
    const GeneralizedSeifertSystem built = build_gss(*form);
    if (built.rank != gss.rank || built.matrices != gss.matrices) {
      failures.push_back(name + ": stored matrices differ from the two-bridge construction");
    }
  }
  for (const FixtureRecord& rec : fixtures_) {
    if (!rec.expected) continue;
    try {
      const int value = evaluate_fixture(rec).value;
      if (value != *rec.expected) {
        failures.push_back(rec.name + ": evaluates to " + std::to_string(value) + ", recorded " +
                           std::to_string(*rec.expected));
      }
    } catch (const std::exception& e) {
      failures.push_back(rec.name + ": " + e.what());
    }
  }
  return failures;
}

}  // namespace splitsig

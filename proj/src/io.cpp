#include "splitsig/io.hpp"

#include <fstream>
#include <sstream>

namespace splitsig {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::int64_t as_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) throw ParseError(what + " must be an integer");
  return value.get<std::int64_t>();
}

int as_small_int(const json& value, const std::string& what) {
  const std::int64_t v = as_int(value, what);
  if (v < INT32_MIN || v > INT32_MAX) throw ParseError(what + " is out of range");
  return static_cast<int>(v);
}

IntMatrix parse_matrix(const json& value, const std::string& what) {
  if (!value.is_array()) throw ParseError(what + " must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(value.size());
  if (rows == 0) return IntMatrix(0, 0);
  if (!value.front().is_array()) throw ParseError(what + " must be an array of rows");
  const auto cols = static_cast<Eigen::Index>(value.front().size());
  IntMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = value[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(what + " has ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = as_int(row[static_cast<std::size_t>(c)], what + " entry");
    }
  }
  return m;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

TorusPoint parse_omega(const json& value) {
  try {
    if (value.is_string()) return TorusPoint::parse(value.get<std::string>());
    if (!value.is_array()) throw ParseError("omega must be an array of \"p/q\" strings");
    std::vector<Fraction> fractions;
    for (const json& q : value) {
      if (!q.is_string()) throw ParseError("omega entries must be \"p/q\" strings");
      fractions.push_back(Fraction::parse(q.get<std::string>()));
    }
    return TorusPoint(std::move(fractions));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("omega: ") + e.what());
  }
}

ComponentInvariants parse_components(const json& value) {
  if (!value.is_array()) throw ParseError("components must be an array");
  ComponentInvariants out;
  for (const json& c : value) {
    if (!c.is_object()) throw ParseError("component entries must be objects");
    ComponentInvariant ci;
    ci.sigma = c.contains("sigma") ? as_small_int(c.at("sigma"), "component sigma") : 0;
    ci.eta = c.contains("eta") ? as_small_int(c.at("eta"), "component eta") : 0;
    if (ci.eta < 0) throw ParseError("component eta must be >= 0");
    out.push_back(ci);
  }
  return out;
}

json components_to_json(const ComponentInvariants& components) {
  json out = json::array();
  for (const auto& c : components) out.push_back({{"sigma", c.sigma}, {"eta", c.eta}});
  return out;
}

InvariantValue parse_link_values(const json& doc) {
  InvariantValue v;
  v.sigma = as_small_int(require(doc, "sigma_L"), "sigma_L");
  v.eta = as_small_int(require(doc, "eta_L"), "eta_L");
  if (v.eta < 0) throw ParseError("eta_L must be >= 0");
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

}  // namespace

GeneralizedSeifertSystem gss_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("system document must be a JSON object");
  GeneralizedSeifertSystem gss;
  gss.mu = as_small_int(require(doc, "mu"), "mu");
  gss.rank = as_small_int(require(doc, "rank"), "rank");
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ParseError("name must be a string");
    gss.name = doc.at("name").get<std::string>();
  }
  const json& matrices = require(doc, "matrices");
  if (!matrices.is_object()) throw ParseError("matrices must be an object keyed by sign pattern");
  for (const auto& [key, value] : matrices.items()) {
    SignPattern eps;
    try {
      eps = SignPattern::parse(key);
    } catch (const std::invalid_argument& e) {
      throw ParseError("matrices key \"" + key + "\": " + e.what());
    }
    if (gss.matrices.contains(eps)) throw ParseError("duplicate pattern " + eps.str());
    gss.matrices.emplace(eps, parse_matrix(value, "matrix " + key));
  }
  if (doc.contains("linking") && !doc.at("linking").is_null()) {
    gss.linking = parse_matrix(doc.at("linking"), "linking");
  }
  if (doc.contains("components") && !doc.at("components").is_null()) {
    gss.components = parse_components(doc.at("components"));
  }
  return gss;
}

json gss_to_json(const GeneralizedSeifertSystem& gss) {
  json doc;
  if (!gss.name.empty()) doc["name"] = gss.name;
  doc["mu"] = gss.mu;
  doc["rank"] = gss.rank;
  json matrices = json::object();
  for (const auto& [eps, m] : gss.matrices) matrices[eps.str()] = matrix_to_json(m);
  doc["matrices"] = std::move(matrices);
  if (gss.linking) doc["linking"] = matrix_to_json(*gss.linking);
  if (gss.components) doc["components"] = components_to_json(*gss.components);
  return doc;
}

GeneralizedSeifertSystem load_gss_file(const std::filesystem::path& path) {
  return gss_from_json(parse_json_text(read_file(path), path.string()));
}

std::optional<int> FixtureRecord::linking_parity() const {
  if (total_lk) return static_cast<int>(((*total_lk % 2) + 2) % 2);
  return total_lk_parity;
}

std::string to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::kLevineTristram: return "lt";
    case FixtureKind::kMultivariable: return "multi";
    case FixtureKind::kRank: return "rank";
  }
  return "?";
}

FixtureRecord fixture_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("fixture document must be a JSON object");
  FixtureRecord rec;
  rec.name = doc.value("name", std::string{});
  rec.mu = as_small_int(require(doc, "mu"), "mu");
  if (rec.mu < 1) throw ParseError("mu must be >= 1");

  const std::string kind = doc.value("kind", std::string("lt"));
  if (kind == "lt") {
    rec.kind = FixtureKind::kLevineTristram;
  } else if (kind == "multi") {
    rec.kind = FixtureKind::kMultivariable;
  } else if (kind == "rank") {
    rec.kind = FixtureKind::kRank;
  } else {
    throw ParseError("kind must be \"lt\", \"multi\" or \"rank\", got \"" + kind + "\"");
  }

  if (doc.contains("omega")) rec.omega = parse_omega(doc.at("omega"));
  if (doc.contains("sigma_L") || doc.contains("eta_L")) rec.link = parse_link_values(doc);
  if (doc.contains("total_lk")) rec.total_lk = as_int(doc.at("total_lk"), "total_lk");
  if (doc.contains("total_lk_parity")) {
    rec.total_lk_parity = as_small_int(doc.at("total_lk_parity"), "total_lk_parity");
  }
  if (doc.contains("linking")) rec.linking = parse_matrix(doc.at("linking"), "linking");
  if (doc.contains("components")) rec.components = parse_components(doc.at("components"));
  if (doc.contains("beta_est")) rec.beta_est = as_small_int(doc.at("beta_est"), "beta_est");
  if (doc.contains("expected")) rec.expected = as_small_int(doc.at("expected"), "expected");
  rec.note = doc.value("note", std::string{});

  if (doc.contains("samples")) {
    const json& samples = doc.at("samples");
    if (!samples.is_array()) throw ParseError("samples must be an array");
    for (const json& s : samples) {
      RankSample rs;
      rs.omega = parse_omega(require(s, "omega"));
      rs.link = parse_link_values(s);
      rs.components = parse_components(require(s, "components"));
      rec.samples.push_back(std::move(rs));
    }
  }

  if (rec.omega && rec.omega->mu() != rec.mu) {
    throw ParseError("omega has " + std::to_string(rec.omega->mu()) + " coordinates, mu is " +
                     std::to_string(rec.mu));
  }
  if (rec.kind == FixtureKind::kLevineTristram && rec.omega) {
    for (const Fraction& q : rec.omega->fractions()) {
      if (!(q == rec.omega->fractions().front())) {
        throw ParseError("Levine-Tristram fixture needs a diagonal omega");
      }
    }
  }
  if (rec.linking && rec.linking->rows() != rec.mu) throw ParseError("linking must be mu x mu");
  if (rec.linking && !rec.total_lk) {
    std::int64_t total = 0;
    for (Eigen::Index i = 0; i < rec.linking->rows(); ++i) {
      for (Eigen::Index j = i + 1; j < rec.linking->cols(); ++j) total += (*rec.linking)(i, j);
    }
    rec.total_lk = total;
  }
  return rec;
}

FixtureRecord load_fixture_file(const std::filesystem::path& path) {
  return fixture_from_json(parse_json_text(read_file(path), path.string()));
}

BoundReport evaluate_fixture(const FixtureRecord& rec) {
  const std::string label = rec.name.empty() ? std::string("fixture") : rec.name;
  BoundReport report;
  switch (rec.kind) {
    case FixtureKind::kLevineTristram:
      if (!rec.link) throw ParseError(label + ": sigma_L/eta_L required");
      if (!rec.total_lk) throw ParseError(label + ": total_lk required for the Levine-Tristram bound");
      report = splitting_bound_lt(rec.mu, *rec.link, *rec.total_lk, rec.components);
      break;
    case FixtureKind::kMultivariable:
      if (!rec.link) throw ParseError(label + ": sigma_L/eta_L required");
      report = splitting_bound_multivariable(rec.mu, *rec.link, rec.components, rec.total_lk);
      break;
    case FixtureKind::kRank:
      if (!rec.beta_est) throw ParseError(label + ": beta_est required");
      report = rank_obstruction(rec.mu, *rec.beta_est, rec.samples, rec.linking_parity());
      break;
  }
  report.omega = rec.omega;
  if (!rec.note.empty()) report.notes.push_back(rec.note);
  return report;
}

std::string format_report(const BoundReport& report) {
  std::ostringstream out;
  out << "bound: " << report.bound_name << '\n';
  out << "value: " << report.value << '\n';
  if (report.raw) out << "raw: " << *report.raw << '\n';
  out << "formula: " << report.formula << '\n';
  if (report.omega) out << "omega: " << report.omega->str() << '\n';
  if (!report.inputs.empty()) {
    out << "inputs:";
    for (const auto& [k, v] : report.inputs) out << ' ' << k << '=' << v;
    out << '\n';
  }
  if (report.parity_of_total_linking) {
    out << "total linking parity: " << *report.parity_of_total_linking;
    if (report.parity_consistent) {
      out << (*report.parity_consistent ? " (bound has matching parity)" : " (bound parity differs)");
    }
    out << '\n';
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace splitsig

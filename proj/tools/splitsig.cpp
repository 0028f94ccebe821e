// splitsig: signatures, nullities and splitting-number bounds of colored links.
//
// Exit codes: 0 success, 2 input error, 3 data-invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitsig/bounds.hpp"
#include "splitsig/catalog.hpp"
#include "splitsig/ccomplex.hpp"
#include "splitsig/invariants.hpp"
#include "splitsig/io.hpp"
#include "splitsig/twobridge.hpp"

namespace fs = std::filesystem;
using namespace splitsig;

namespace {

constexpr int kInputError = 2;
constexpr int kInvariantError = 3;

struct ExitError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw ExitError{code, std::move(message)}; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    fail(kInputError, what + ": expected an integer, got '" + text + "'");
  }
}

GeneralizedSeifertSystem resolve_system(const std::string& source) {
  std::optional<GeneralizedSeifertSystem> gss;
  try {
    if (fs::is_regular_file(source)) {
      gss = load_gss_file(source);
    } else {
      gss = Catalog::builtin().find_system(source);
    }
  } catch (const ParseError& e) {
    fail(kInputError, e.what());
  } catch (const std::invalid_argument& e) {
    fail(kInputError, e.what());
  }
  if (!gss) fail(kInputError, "no such file or catalog entry: " + source);
  const auto violations = validate(*gss);
  if (!violations.empty()) {
    std::string msg = "invalid generalized Seifert system " + source;
    for (const auto& v : violations) msg += "\n  " + v;
    fail(kInvariantError, msg);
  }
  return *gss;
}

TorusPoint parse_point(const std::string& text) {
  try {
    return TorusPoint::parse(text);
  } catch (const std::exception& e) {
    fail(kInputError, std::string("--omega: ") + e.what());
  }
}

ComponentInvariants parse_components(const std::vector<std::string>& items, int mu) {
  if (items.empty()) return ComponentInvariants(static_cast<std::size_t>(mu));
  ComponentInvariants out;
  for (const auto& item : items) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) fail(kInputError, "--comp expects SIGMA:ETA, got '" + item + "'");
    out.push_back({parse_int(parts[0], "--comp"), parse_int(parts[1], "--comp")});
  }
  if (static_cast<int>(out.size()) != mu) {
    fail(kInputError, "--comp given " + std::to_string(out.size()) + " times, expected mu = " +
                          std::to_string(mu));
  }
  return out;
}

// Upper triangle, row-major: "l12,l13,...,l23,...".
IntMatrix parse_linking(const std::string& text, std::optional<int> mu) {
  const auto parts = split(text, ',');
  const auto k = static_cast<int>(parts.size());
  int m = 1;
  while (m * (m - 1) / 2 < k) ++m;
  if (m * (m - 1) / 2 != k) fail(kInputError, "--lk needs mu(mu-1)/2 values (upper triangle)");
  if (mu && *mu != m) fail(kInputError, "--lk has " + std::to_string(k) + " values, which does not match mu");
  IntMatrix lk = IntMatrix::Zero(m, m);
  int idx = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      lk(i, j) = lk(j, i) = parse_int(parts[static_cast<std::size_t>(idx++)], "--lk");
    }
  }
  return lk;
}

std::pair<int, int> parse_pair(const std::string& text, int mu) {
  const auto parts = split(text, '-');
  if (parts.size() != 2) fail(kInputError, "pair must be written I-J, got '" + text + "'");
  int i = parse_int(parts[0], "pair") - 1;
  int j = parse_int(parts[1], "pair") - 1;
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= mu || i == j) fail(kInputError, "pair '" + text + "' out of range");
  return {i, j};
}

struct BoundOptions {
  std::string kind;
  std::string source;
  std::optional<int> mu;
  std::optional<int> sigma;
  std::optional<int> eta;
  std::optional<std::string> lk;
  std::vector<std::string> comps;
  std::optional<int> beta;
  std::optional<int> parity;
  std::vector<std::string> samples;
  std::vector<std::string> nonsplit;
  std::vector<std::string> split_pairs;
  std::optional<std::string> omega;
};

std::optional<FixtureRecord> resolve_fixture(const std::string& source) {
  if (source.empty()) return std::nullopt;
  try {
    if (fs::is_regular_file(source)) return load_fixture_file(source);
  } catch (const ParseError& e) {
    fail(kInputError, e.what());
  }
  if (const FixtureRecord* rec = Catalog::builtin().find_fixture(source)) return *rec;
  fail(kInputError, "no such fixture file or catalog entry: " + source);
}

IntMatrix linking_from(const BoundOptions& opt, const std::optional<FixtureRecord>& fixture, int mu) {
  if (opt.lk) return parse_linking(*opt.lk, mu);
  if (fixture && fixture->linking) return *fixture->linking;
  if (fixture && fixture->total_lk && mu == 2) {
    IntMatrix lk = IntMatrix::Zero(2, 2);
    lk(0, 1) = lk(1, 0) = *fixture->total_lk;
    return lk;
  }
  if (mu == 1) return IntMatrix::Zero(1, 1);
  fail(kInputError, "pairwise linking numbers required (--lk)");
}

std::int64_t total_of(const IntMatrix& lk) {
  std::int64_t t = 0;
  for (Eigen::Index i = 0; i < lk.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < lk.cols(); ++j) t += lk(i, j);
  }
  return t;
}

RankSample parse_rank_sample(const std::string& text, int mu) {
  // OMEGA|SIGMA|ETA|S1:E1,S2:E2,...
  const auto parts = split(text, '|');
  if (parts.size() != 4) fail(kInputError, "--sample expects OMEGA|SIGMA|ETA|COMPS, got '" + text + "'");
  RankSample s;
  s.omega = parse_point(parts[0]);
  s.link = {parse_int(parts[1], "--sample sigma"), parse_int(parts[2], "--sample eta")};
  s.components = parse_components(split(parts[3], ','), mu);
  return s;
}

BoundReport run_bound(const BoundOptions& opt) {
  const std::optional<FixtureRecord> fixture = resolve_fixture(opt.source);
  const std::optional<int> mu = opt.mu ? opt.mu : (fixture ? std::optional<int>(fixture->mu) : std::nullopt);

  auto need_mu = [&]() -> int {
    if (!mu) fail(kInputError, "--mu is required");
    if (*mu < 1) fail(kInputError, "--mu must be >= 1");
    return *mu;
  };
  auto link_values = [&]() -> InvariantValue {
    InvariantValue v;
    if (fixture && fixture->link) v = *fixture->link;
    if (opt.sigma) v.sigma = *opt.sigma;
    if (opt.eta) v.eta = *opt.eta;
    if (!(fixture && fixture->link) && (!opt.sigma || !opt.eta)) {
      fail(kInputError, "--sigma and --eta are required");
    }
    if (v.eta < 0) fail(kInputError, "--eta must be >= 0");
    return v;
  };
  auto components = [&](int m) -> ComponentInvariants {
    if (opt.comps.empty() && fixture && !fixture->components.empty()) return fixture->components;
    return parse_components(opt.comps, m);
  };
  auto total_lk = [&]() -> std::optional<std::int64_t> {
    if (opt.lk) {
      const auto parts = split(*opt.lk, ',');
      if (parts.size() == 1) return parse_int(parts[0], "--lk");
      return total_of(parse_linking(*opt.lk, mu));
    }
    if (fixture) return fixture->total_lk;
    return std::nullopt;
  };

  BoundReport report;
  if (opt.kind == "split-multi") {
    const int m = need_mu();
    report = splitting_bound_multivariable(m, link_values(), components(m), total_lk());
  } else if (opt.kind == "split-lt") {
    const int m = need_mu();
    const auto lk = total_lk();
    if (!lk) fail(kInputError, "--lk (total linking number) is required");
    report = splitting_bound_lt(m, link_values(), *lk, components(m));
  } else if (opt.kind == "linking") {
    IntMatrix lk;
    if (opt.lk) {
      lk = parse_linking(*opt.lk, opt.mu);
    } else {
      lk = linking_from(opt, fixture, need_mu());
    }
    const int m = static_cast<int>(lk.rows());
    PairFlags flags;
    for (const auto& p : opt.nonsplit) flags[parse_pair(p, m)] = true;
    for (const auto& p : opt.split_pairs) flags[parse_pair(p, m)] = false;
    report = linking_number_bound(lk, flags);
  } else if (opt.kind == "rank") {
    const int m = need_mu();
    std::optional<int> beta = opt.beta;
    if (!beta && fixture) beta = fixture->beta_est;
    if (!beta) fail(kInputError, "--beta is required");
    std::vector<RankSample> samples;
    if (fixture) samples = fixture->samples;
    for (const auto& s : opt.samples) samples.push_back(parse_rank_sample(s, m));
    std::optional<int> parity = opt.parity;
    if (!parity && opt.lk) parity = static_cast<int>(*total_lk() % 2);
    if (!parity && fixture) parity = fixture->linking_parity();
    report = rank_obstruction(m, *beta, samples, parity);
  } else if (opt.kind == "unlink") {
    const int m = need_mu();
    report = unlinking_bound(m, link_values(), linking_from(opt, fixture, m));
  } else {
    fail(kInputError, "unknown bound '" + opt.kind + "'");
  }

  if (opt.omega) {
    report.omega = parse_point(*opt.omega);
  } else if (fixture) {
    report.omega = fixture->omega;
  }
  if (fixture && !fixture->note.empty()) report.notes.push_back(fixture->note);
  return report;
}

void print_scan_summary(std::ostream& out, const ScanGrid& grid) {
  int min_eta = grid.samples.empty() ? 0 : grid.samples.front().eta;
  int near_zero = 0;
  for (const auto& s : grid.samples) {
    min_eta = std::min(min_eta, s.eta);
    if (s.near_zero) ++near_zero;
  }
  out << "samples=" << grid.samples.size() << " min_eta=" << min_eta << " near_zero_det=" << near_zero
      << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Signatures, nullities and splitting-number bounds of colored links"};
  app.require_subcommand(1);
  double tol = kDefaultTolerance;
  app.add_option("--tol", tol, "Relative zero-eigenvalue tolerance")->check(CLI::NonNegativeNumber);

  std::string system;
  std::string omega;
  bool lt_mode = false;
  auto* sig = app.add_subcommand("sig", "Signature and nullity at a torus point");
  sig->add_option("system", system, "System JSON file or catalog name (e.g. \"C(4,3,2)\")")->required();
  sig->add_option("--omega", omega, "Angle fractions p/q, one per color (omega = exp(2 pi i p/q))")
      ->required();
  sig->add_flag("--lt", lt_mode, "Levine-Tristram values from the diagonal point (single fraction)");

  BoundOptions bopt;
  auto* bound = app.add_subcommand("bound", "Evaluate a lower bound");
  bound->add_option("kind", bopt.kind, "split-multi | split-lt | linking | rank | unlink")
      ->required()
      ->check(CLI::IsMember({"split-multi", "split-lt", "linking", "rank", "unlink"}));
  bound->add_option("fixture", bopt.source, "Fixture JSON file or catalog fixture name");
  bound->add_option("--mu", bopt.mu, "Number of colors");
  bound->add_option("--sigma", bopt.sigma, "Link signature");
  bound->add_option("--eta", bopt.eta, "Link nullity");
  bound->add_option("--lk", bopt.lk, "Total linking number, or upper-triangle pairwise list");
  bound->add_option("--comp", bopt.comps, "Component SIGMA:ETA, once per color (default 0:0)");
  bound->add_option("--beta", bopt.beta, "Estimated Alexander module rank");
  bound->add_option("--parity", bopt.parity, "Parity of the total linking number");
  bound->add_option("--sample", bopt.samples, "Rank sample OMEGA|SIGMA|ETA|S1:E1,S2:E2");
  bound->add_option("--nonsplit", bopt.nonsplit, "Pair I-J (1-based) that is non-split");
  bound->add_option("--split", bopt.split_pairs, "Pair I-J (1-based) that is split");
  bound->add_option("--omega", bopt.omega, "Torus point to echo in the report");

  int resolution = 0;
  std::string out_path;
  bool check_regions = false;
  auto* scan = app.add_subcommand("scan", "Grid scan of the torus, CSV output");
  scan->add_option("system", system, "System JSON file or catalog name")->required();
  scan->add_option("--res", resolution, "Samples per axis")->required();
  scan->add_option("--out", out_path, "CSV path (stdout if omitted)");
  scan->add_flag("--check", check_regions, "Check that sigma changes only across det zeros");

  std::string form_text;
  auto* twobridge = app.add_subcommand("twobridge", "Two-bridge link C(2a_1,b_1,...,2a_n)");
  twobridge->add_option("form", form_text, "Comma-separated Conway coefficients, e.g. 4,3,2")->required();
  twobridge->add_option("--omega", omega, "Additional torus point to evaluate");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a system file");
  validate_cmd->add_option("file", validate_path)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in systems and fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kInputError;
  }

  const auto failures = Catalog::builtin().self_check();
  if (!failures.empty()) {
    for (const auto& f : failures) std::cerr << "catalog self-check: " << f << '\n';
    return kInvariantError;
  }

  if (sig->parsed()) {
    const GeneralizedSeifertSystem gss = resolve_system(system);
    InvariantValue v;
    if (lt_mode) {
      Fraction q;
      try {
        q = Fraction::parse(omega);
        TorusPoint::diagonal(1, q);
      } catch (const std::exception& e) {
        fail(kInputError, std::string("--omega: ") + e.what());
      }
      try {
        v = lt_signature_from_multivariable(gss, q, tol);
      } catch (const std::invalid_argument& e) {
        fail(kInputError, e.what());
      }
    } else {
      const TorusPoint point = parse_point(omega);
      if (point.mu() != gss.mu) {
        fail(kInputError, "--omega has " + std::to_string(point.mu()) + " coordinates, system has mu = " +
                              std::to_string(gss.mu));
      }
      v = signature_nullity(gss, point, tol);
    }
    std::cout << "sigma=" << v.sigma << " eta=" << v.eta << '\n';
  } else if (bound->parsed()) {
    try {
      std::cout << format_report(run_bound(bopt));
    } catch (const ParseError& e) {
      fail(kInputError, e.what());
    } catch (const std::invalid_argument& e) {
      fail(kInputError, e.what());
    }
  } else if (scan->parsed()) {
    if (resolution < 1) fail(kInputError, "--res must be >= 1");
    const GeneralizedSeifertSystem gss = resolve_system(system);
    if (gss.mu > 3) fail(kInputError, "scan supports mu <= 3, system has mu = " + std::to_string(gss.mu));
    ScanGrid grid;
    try {
      grid = torus_scan(gss, resolution, tol);
    } catch (const std::invalid_argument& e) {
      fail(kInputError, e.what());
    }
    std::ostream* summary = &std::cout;
    if (out_path.empty()) {
      write_scan_csv(std::cout, grid);
      summary = &std::cerr;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) fail(kInputError, "cannot write " + out_path);
      write_scan_csv(file, grid);
    }
    print_scan_summary(*summary, grid);
    if (check_regions) {
      const ScanBoundaryReport r = check_signature_regions(gss, grid, tol);
      *summary << "pairs=" << r.pairs_checked << " sigma_changes=" << r.sigma_changes
               << " separated=" << r.separated_changes << " unexplained=" << r.unexplained.size() << '\n';
      if (!r.unexplained.empty()) return kInvariantError;
    }
  } else if (twobridge->parsed()) {
    ConwayForm form({2});
    try {
      form = ConwayForm::parse(form_text);
    } catch (const std::invalid_argument& e) {
      fail(kInputError, e.what());
    }
    const TwoBridgeReport r = analyze(form);
    std::cout << "s=" << r.clasps << " sigma=" << r.sigma << " eta=" << r.eta << " bound=" << r.bound
              << " sp=" << r.predicted << '\n';
    std::cout << "agreement: " << (r.agrees() ? "yes" : "no") << '\n';
    if (!omega.empty()) {
      const GeneralizedSeifertSystem gss = build_gss(form);
      const TorusPoint point = parse_point(omega);
      if (point.mu() != 2) fail(kInputError, "--omega needs two coordinates");
      const InvariantValue v = signature_nullity(gss, point, tol);
      const int b = splitting_bound_multivariable(2, v, *gss.components).value;
      std::cout << "omega=" << point.str() << " sigma=" << v.sigma << " eta=" << v.eta << " bound=" << b
                << '\n';
    }
  } else if (validate_cmd->parsed()) {
    GeneralizedSeifertSystem gss;
    try {
      gss = load_gss_file(validate_path);
    } catch (const ParseError& e) {
      fail(kInputError, e.what());
    }
    const auto violations = validate(gss);
    for (const auto& v : violations) std::cout << "violation: " << v << '\n';
    if (!violations.empty()) return kInvariantError;
    std::cout << "ok\n";
  } else if (catalog_cmd->parsed()) {
    const Catalog& catalog = Catalog::builtin();
    for (const auto& [name, gss] : catalog.systems()) {
      std::cout << "system  " << name << " mu=" << gss.mu << " rank=" << gss.rank << '\n';
    }
    for (const auto& rec : catalog.fixtures()) {
      std::cout << "fixture " << rec.name << " kind=" << to_string(rec.kind);
      if (rec.expected) std::cout << " value=" << *rec.expected;
      std::cout << '\n';
    }
    std::cout << "self-check: ok\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ExitError& e) {
    std::cerr << "splitsig: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "splitsig: " << e.what() << '\n';
    return kInputError;
  }
}

#include "splitsig/twobridge.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "splitsig/bounds.hpp"
#include "splitsig/invariants.hpp"

namespace splitsig {

ConwayForm::ConwayForm(std::vector<int> coefficients) : coefficients_(std::move(coefficients)) {
  const auto problems = check(coefficients_);
  if (problems.empty()) return;
  std::string msg = "unsupported Conway form C(";
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    msg += (i ? "," : "") + std::to_string(coefficients_[i]);
  }
  msg += "): only the family C(2a_1,b_1,...,b_{n-1},2a_n) with a_i, b_i > 0 is supported";
  for (const auto& p : problems) msg += "\n  " + p;
  throw std::invalid_argument(msg);
}

std::vector<std::string> ConwayForm::check(const std::vector<int>& c) {
  std::vector<std::string> problems;
  if (c.empty()) {
    problems.emplace_back("no coefficients");
    return problems;
  }
  if (c.size() % 2 == 0) {
    problems.push_back("length " + std::to_string(c.size()) + " is even, expected odd");
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] <= 0) {
      problems.push_back("coefficient " + std::to_string(k + 1) + " is not positive");
    } else if (k % 2 == 0 && c[k] % 2 != 0) {
      problems.push_back("coefficient " + std::to_string(k + 1) + " = " + std::to_string(c[k]) +
                         " must be even");
    }
  }
  return problems;
}

ConwayForm ConwayForm::parse(std::string_view text) {
  std::vector<int> coefficients;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("Conway form must be comma-separated integers, got '" +
                                  std::string(token) + "'");
    }
    coefficients.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ConwayForm(std::move(coefficients));
}

int ConwayForm::clasps() const {
  int s = 0;
  for (int i = 0; i < n(); ++i) s += a(i);
  return s;
}

std::string ConwayForm::name() const {
  std::string out = "C(";
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coefficients_[i]);
  }
  return out + ")";
}

std::vector<int> clasp_loop_weights(const ConwayForm& form) {
  // Clasps are numbered along the diagram; twist region i holds a_i of them.
  // Loop k runs through clasps k and k + 1 and crosses the vertical twist
  // region b_i exactly when clasp k is the last clasp of region i.
  std::vector<int> weights;
  for (int i = 0; i < form.n(); ++i) {
    for (int c = 1; c < form.a(i); ++c) weights.push_back(1);
    if (i + 1 < form.n()) weights.push_back(form.b(i));
  }
  return weights;
}

GeneralizedSeifertSystem build_gss(const ConwayForm& form) {
  const std::vector<int> weights = clasp_loop_weights(form);
  const auto rank = static_cast<Eigen::Index>(weights.size());

  // A^{++}: the half twists crossed by a loop; A^{+-}: each loop links its
  // own push-off once and the next loop through their shared clasp.
  IntMatrix plus_plus = IntMatrix::Zero(rank, rank);
  IntMatrix plus_minus = IntMatrix::Zero(rank, rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    plus_plus(k, k) = 1 - weights[static_cast<std::size_t>(k)];
    plus_minus(k, k) = -1;
    if (k + 1 < rank) plus_minus(k, k + 1) = 1;
  }

  GeneralizedSeifertSystem gss;
  gss.name = form.name();
  gss.mu = 2;
  gss.rank = static_cast<int>(rank);
  gss.matrices.emplace(SignPattern::parse("++"), std::move(plus_plus));
  gss.matrices.emplace(SignPattern::parse("+-"), std::move(plus_minus));
  gss.components = ComponentInvariants{{0, 0}, {0, 0}};
  return gss;
}

IntMatrix h_minus_one_closed_form(const ConwayForm& form) {
  const std::vector<int> weights = clasp_loop_weights(form);
  const auto size = static_cast<Eigen::Index>(weights.size());
  IntMatrix t = IntMatrix::Zero(size, size);
  for (Eigen::Index k = 0; k < size; ++k) {
    t(k, k) = -2 * weights[static_cast<std::size_t>(k)];
    if (k + 1 < size) {
      t(k, k + 1) = 1;
      t(k + 1, k) = 1;
    }
  }
  return 4 * t;
}

int predicted_splitting(const ConwayForm& form) { return form.clasps(); }

TwoBridgeReport analyze(const ConwayForm& form) {
  const GeneralizedSeifertSystem gss = build_gss(form);
  const InvariantValue value = signature_nullity(gss, TorusPoint::diagonal(2, Fraction(1, 2)));
  TwoBridgeReport report;
  report.clasps = form.clasps();
  report.sigma = value.sigma;
  report.eta = value.eta;
  report.bound = splitting_bound_multivariable(2, value, *gss.components).value;
  report.predicted = predicted_splitting(form);
  return report;
}

}  // namespace splitsig

#include "splitsig/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace splitsig {

namespace {

void check_components(int mu, const ComponentInvariants& components) {
  if (mu < 1) throw std::invalid_argument("mu must be >= 1");
  if (static_cast<int>(components.size()) != mu) {
    throw std::invalid_argument("expected " + std::to_string(mu) + " component entries, got " +
                                std::to_string(components.size()));
  }
  for (const auto& c : components) {
    if (c.eta < 0) throw std::invalid_argument("component nullity must be >= 0");
  }
}

void check_linking_matrix(const IntMatrix& linking) {
  if (linking.rows() != linking.cols()) throw std::invalid_argument("linking matrix must be square");
  for (Eigen::Index i = 0; i < linking.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < linking.cols(); ++j) {
      if (linking(i, j) != linking(j, i)) throw std::invalid_argument("linking matrix must be symmetric");
    }
  }
}

int parity(std::int64_t x) { return static_cast<int>(((x % 2) + 2) % 2); }

void attach_parity(BoundReport& report, std::optional<std::int64_t> total_linking) {
  if (!total_linking) return;
  report.parity_of_total_linking = parity(*total_linking);
  report.parity_consistent = parity(report.value) == *report.parity_of_total_linking;
  report.inputs.emplace_back("total_lk", std::to_string(*total_linking));
}

std::string components_text(const ComponentInvariants& components) {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ' ';
    out += "(" + std::to_string(components[i].sigma) + "," + std::to_string(components[i].eta) + ")";
  }
  return out;
}

int splitting_lhs(int mu, int sigma_shifted, int eta, const ComponentInvariants& components) {
  int sigma_sum = 0;
  int eta_sum = 0;
  for (const auto& c : components) {
    sigma_sum += c.sigma;
    eta_sum += c.eta;
  }
  return std::abs(sigma_shifted - sigma_sum) + std::abs(mu - 1 - eta + eta_sum);
}

}  // namespace

int raise_to_parity(int v, int p) { return parity(v) == parity(p) ? v : v + 1; }

BoundReport splitting_bound_multivariable(int mu, InvariantValue link,
                                          const ComponentInvariants& components,
                                          std::optional<std::int64_t> total_linking) {
  check_components(mu, components);
  if (link.eta < 0) throw std::invalid_argument("nullity must be >= 0");
  BoundReport report;
  report.bound_name = "splitting number (multivariable signature)";
  report.formula = "|sigma_L(w) - sum sigma_i(w_i)| + |mu - 1 - eta_L(w) + sum eta_i(w_i)| <= sp(L)";
  report.value = splitting_lhs(mu, link.sigma, link.eta, components);
  report.inputs = {{"mu", std::to_string(mu)},
                   {"sigma_L", std::to_string(link.sigma)},
                   {"eta_L", std::to_string(link.eta)},
                   {"components", components_text(components)}};
  attach_parity(report, total_linking);
  return report;
}

BoundReport splitting_bound_lt(int mu, InvariantValue link_lt, std::int64_t total_linking,
                               const ComponentInvariants& components) {
  check_components(mu, components);
  if (link_lt.eta < 0) throw std::invalid_argument("nullity must be >= 0");
  BoundReport report;
  report.bound_name = "splitting number (Levine-Tristram signature)";
  report.formula = "|sigma_L(w) + sum lk - sum sigma_i(w)| + |mu - 1 - eta_L(w) + sum eta_i(w)| <= sp(L)";
  report.value = splitting_lhs(mu, link_lt.sigma + static_cast<int>(total_linking), link_lt.eta, components);
  report.inputs = {{"mu", std::to_string(mu)},
                   {"sigma_L", std::to_string(link_lt.sigma)},
                   {"eta_L", std::to_string(link_lt.eta)},
                   {"components", components_text(components)}};
  attach_parity(report, total_linking);
  return report;
}

BoundReport linking_number_bound(const IntMatrix& linking, const PairFlags& nonsplit) {
  check_linking_matrix(linking);
  BoundReport report;
  report.bound_name = "splitting number (linking numbers)";
  report.formula = "sum_{i<j} b(L_i, L_j) <= sp(L), b = 0 split / 2 non-split with lk = 0 / |lk|";
  std::int64_t total = 0;
  std::int64_t sum = 0;
  for (Eigen::Index i = 0; i < linking.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < linking.cols(); ++j) {
      const std::int64_t lk = linking(i, j);
      total += lk;
      if (lk != 0) {
        sum += std::abs(lk);
        continue;
      }
      const auto flag = nonsplit.find({static_cast<int>(i), static_cast<int>(j)});
      if (flag == nonsplit.end()) {
        throw std::invalid_argument("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") has zero linking number; specify whether it is split");
      }
      if (flag->second) sum += 2;
    }
  }
  report.value = static_cast<int>(sum);
  report.inputs.emplace_back("mu", std::to_string(linking.rows()));
  attach_parity(report, total);
  return report;
}

BoundReport rank_obstruction(int mu, int beta_est, const std::vector<RankSample>& samples,
                             std::optional<int> linking_parity) {
  if (mu < 1) throw std::invalid_argument("mu must be >= 1");
  if (beta_est < 0) throw std::invalid_argument("beta estimate must be >= 0");
  BoundReport report;
  report.bound_name = "splitting number (Alexander module rank)";
  report.formula = "mu - 1 - beta(L) <= sp(L); equality forces sigma additivity and eta_i = 0";
  const int base = mu - 1 - beta_est;
  report.raw = base;

  bool violated = false;
  for (const RankSample& s : samples) {
    check_components(mu, s.components);
    if (s.link.eta != beta_est) {
      throw std::invalid_argument("sample at " + s.omega.str() + " has eta_L = " +
                                  std::to_string(s.link.eta) + " != beta estimate " +
                                  std::to_string(beta_est));
    }
    int sigma_sum = 0;
    bool nullity = false;
    for (const auto& c : s.components) {
      sigma_sum += c.sigma;
      nullity = nullity || c.eta != 0;
    }
    if (s.link.sigma != sigma_sum) {
      violated = true;
      report.notes.push_back("signature additivity fails at " + s.omega.str() + ": " +
                             std::to_string(s.link.sigma) + " != " + std::to_string(sigma_sum));
    }
    if (nullity) {
      violated = true;
      report.notes.push_back("nonzero component nullity at " + s.omega.str());
    }
  }

  int value = violated ? base + 1 : base;
  value = std::max(value, 0);
  if (linking_parity) {
    const int raised = raise_to_parity(value, parity(*linking_parity));
    if (raised != value) report.notes.push_back("raised to " + std::to_string(raised) + " by linking parity");
    value = raised;
  }
  report.value = value;
  report.inputs = {{"mu", std::to_string(mu)},
                   {"beta_est", std::to_string(beta_est)},
                   {"samples", std::to_string(samples.size())}};
  if (linking_parity) {
    report.parity_of_total_linking = parity(*linking_parity);
    report.parity_consistent = parity(report.value) == *report.parity_of_total_linking;
  }
  return report;
}

BoundReport unlinking_bound(int mu, InvariantValue link, const IntMatrix& linking) {
  if (mu < 1) throw std::invalid_argument("mu must be >= 1");
  if (link.eta < 0) throw std::invalid_argument("nullity must be >= 0");
  check_linking_matrix(linking);
  if (linking.rows() != mu) throw std::invalid_argument("linking matrix must be mu x mu");
  std::int64_t lk_sum = 0;
  for (Eigen::Index i = 0; i < linking.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < linking.cols(); ++j) lk_sum += std::abs(linking(i, j));
  }
  BoundReport report;
  report.bound_name = "unlinking number";
  report.formula = "|sigma_L(w)| + |mu - 1 - eta_L(w)| + sum_{i<j} |lk| <= 2 u(L)";
  const int raw = std::abs(link.sigma) + std::abs(mu - 1 - link.eta) + static_cast<int>(lk_sum);
  report.raw = raw;
  report.value = (raw + 1) / 2;
  report.inputs = {{"mu", std::to_string(mu)},
                   {"sigma_L", std::to_string(link.sigma)},
                   {"eta_L", std::to_string(link.eta)},
                   {"sum_abs_lk", std::to_string(lk_sum)}};
  return report;
}

}  // namespace splitsig

#pragma once

// Two-bridge links C(2a_1, b_1, 2a_2, ..., b_{n-1}, 2a_n) and their natural
// C-complex: two discs meeting in s = a_1 + ... + a_n clasps.

#include <string>
#include <string_view>
#include <vector>

#include "splitsig/ccomplex.hpp"

namespace splitsig {

class ConwayForm {
 public:
  /// Throws std::invalid_argument unless the length is odd, odd positions
  /// (1-based) are even and positive and even positions are positive.
  explicit ConwayForm(std::vector<int> coefficients);

  /// Comma-separated positive integers, e.g. "4,3,2".
  static ConwayForm parse(std::string_view text);

  /// Empty iff the coefficients belong to the supported family.
  static std::vector<std::string> check(const std::vector<int>& coefficients);

  const std::vector<int>& coefficients() const { return coefficients_; }
  int n() const { return static_cast<int>(coefficients_.size() + 1) / 2; }
  int a(int i) const { return coefficients_[static_cast<std::size_t>(2 * i)] / 2; }
  int b(int i) const { return coefficients_[static_cast<std::size_t>(2 * i + 1)]; }
  int clasps() const;
  std::string name() const;

 private:
  std::vector<int> coefficients_;
};

/// Diagonal weights d_k >= 1 of the clasp loops: 1 for a loop through two
/// clasps of the same twist region, b_i for the loop that runs across the
/// i-th vertical twist region.
std::vector<int> clasp_loop_weights(const ConwayForm& form);

/// mu = 2 system of rank s - 1 on the basis of loops through consecutive clasps.
GeneralizedSeifertSystem build_gss(const ConwayForm& form);

/// 4 * tridiag(1, -2 d_k, 1), of size s - 1.
IntMatrix h_minus_one_closed_form(const ConwayForm& form);

/// a_1 + ... + a_n.
int predicted_splitting(const ConwayForm& form);

struct TwoBridgeReport {
  int clasps = 0;
  int sigma = 0;
  int eta = 0;
  int bound = 0;
  int predicted = 0;
  bool agrees() const { return bound == predicted; }
};

/// Evaluates (-1, -1) exactly and the splitting bound with unknotted components.
TwoBridgeReport analyze(const ConwayForm& form);

}  // namespace splitsig

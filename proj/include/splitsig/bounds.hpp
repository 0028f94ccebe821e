#pragma once

// Lower bounds on splitting and unlinking numbers evaluated from signature,
// nullity and linking data. Everything here is integer arithmetic on
// invariant values; no matrices are involved.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitsig/ccomplex.hpp"
#include "splitsig/invariants.hpp"

namespace splitsig {

struct BoundReport {
  std::string bound_name;
  std::string formula;
  int value = 0;
  /// Left-hand side before rounding or upgrading (unlinking, rank obstruction).
  std::optional<int> raw;
  std::optional<TorusPoint> omega;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<int> parity_of_total_linking;
  /// value agrees mod 2 with the total linking number.
  std::optional<bool> parity_consistent;
  std::vector<std::string> notes;
};

/// |sigma_L - sum sigma_i| + |mu - 1 - eta_L + sum eta_i|.
BoundReport splitting_bound_multivariable(int mu, InvariantValue link,
                                          const ComponentInvariants& components,
                                          std::optional<std::int64_t> total_linking = std::nullopt);

/// The same bound along the diagonal, phrased with the Levine-Tristram
/// signature: |sigma_L + lk - sum sigma_i| + |mu - 1 - eta_L + sum eta_i|.
BoundReport splitting_bound_lt(int mu, InvariantValue link_lt, std::int64_t total_linking,
                               const ComponentInvariants& components);

/// Keys are 0-based pairs (i, j), i < j; the value is true when L_i u L_j is non-split.
using PairFlags = std::map<std::pair<int, int>, bool>;

/// sum_{i<j} b(L_i, L_j) with b = 0 (split), 2 (non-split, lk = 0) or |lk|.
/// A flag is required for every pair with vanishing linking number.
BoundReport linking_number_bound(const IntMatrix& linking, const PairFlags& nonsplit);

struct RankSample {
  TorusPoint omega;
  InvariantValue link;
  ComponentInvariants components;
};

/// mu - 1 - beta <= sp, raised to mu - beta when some qualifying sample
/// (eta_L == beta_est) breaks signature additivity or has a nonzero
/// component nullity, then to the next value of the right parity when the
/// parity of the total linking number is supplied.
BoundReport rank_obstruction(int mu, int beta_est, const std::vector<RankSample>& samples,
                             std::optional<int> linking_parity = std::nullopt);

/// raw = |sigma_L| + |mu - 1 - eta_L| + sum_{i<j} |lk_ij| <= 2u; value = ceil(raw / 2).
BoundReport unlinking_bound(int mu, InvariantValue link, const IntMatrix& linking);

/// Smallest v' >= v with v' = parity (mod 2).
int raise_to_parity(int v, int parity);

}  // namespace splitsig

#pragma once

// Multivariable signature and nullity on the torus, grid scans, and the
// sampled estimate of the Alexander module rank.

#include <optional>
#include <ostream>
#include <vector>

#include "splitsig/ccomplex.hpp"

namespace splitsig {

struct InvariantValue {
  int sigma = 0;
  int eta = 0;
  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

struct InvariantSample {
  TorusPoint omega;
  int sigma = 0;
  int eta = 0;
  double abs_det = 1.0;
  /// |det H| fell under det_zero_threshold; a potential Alexander zero.
  bool near_zero = false;
};

struct ScanGrid {
  int mu = 0;
  int resolution = 0;
  /// Row-major: the last coordinate varies fastest.
  std::vector<InvariantSample> samples;

  const InvariantSample& at(const std::vector<int>& index) const;
};

/// tol * s * (n * s)^(n - 1) with s = max(1, max|H_jk|). Since n * s bounds the
/// spectral radius, any H with an eigenvalue below tol * s lands under it.
double det_zero_threshold(const ComplexMatrix& h, double tol);

/// sigma_L(omega), eta_L(omega); exact congruent diagonalization at (-1, ..., -1).
InvariantValue signature_nullity(const GeneralizedSeifertSystem& gss, const TorusPoint& omega,
                                 double tol = kDefaultTolerance);

/// Same as signature_nullity, plus |det H(omega)| and the near-zero flag.
InvariantSample sample(const GeneralizedSeifertSystem& gss, const TorusPoint& omega,
                       double tol = kDefaultTolerance);

/// Levine-Tristram signature and nullity of the underlying oriented link,
/// recovered from the diagonal point (q, ..., q) by subtracting the total
/// linking number. Requires linking data when mu > 1.
InvariantValue lt_signature_from_multivariable(const GeneralizedSeifertSystem& gss,
                                               const Fraction& q,
                                               double tol = kDefaultTolerance);

/// Samples at fractions k / (R + 1), k = 1..R, on every axis.
ScanGrid torus_scan(const GeneralizedSeifertSystem& gss, int resolution,
                    double tol = kDefaultTolerance);

/// Minimum sampled nullity. This is an upper bound for the true rank beta(L).
int estimate_beta(const GeneralizedSeifertSystem& gss, const std::vector<TorusPoint>& samples,
                  double tol = kDefaultTolerance);

/// Looks for a zero of det H on the straight segment between two torus
/// points: a det sign change is refined by bisection, otherwise the segment
/// is subsampled. Returns the first flagged point found, if any.
std::optional<InvariantSample> locate_det_zero(const GeneralizedSeifertSystem& gss,
                                               const TorusPoint& a, const TorusPoint& b,
                                               double tol = kDefaultTolerance);

struct ScanBoundaryReport {
  int pairs_checked = 0;
  int sigma_changes = 0;
  /// sigma changes with a located det zero between the two samples.
  int separated_changes = 0;
  /// Adjacent pairs whose sigma differs with no det zero found between them.
  std::vector<std::pair<TorusPoint, TorusPoint>> unexplained;
};

/// Walks every grid row and column; sigma may change between neighbours only
/// where one of them is flagged or a det zero lies between them.
ScanBoundaryReport check_signature_regions(const GeneralizedSeifertSystem& gss,
                                           const ScanGrid& grid, double tol = kDefaultTolerance);

/// Header "theta_1,...,theta_mu,sigma,eta,absdet"; reals with 12 significant digits.
void write_scan_csv(std::ostream& out, const ScanGrid& grid);

}  // namespace splitsig

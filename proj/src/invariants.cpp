#include "splitsig/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace splitsig {

namespace {

constexpr int kSubsamples = 64;
constexpr int kMaxBisections = 60;
constexpr std::int64_t kMaxScanSamples = 10'000'000;

double real_det(const ComplexMatrix& h) {
  if (h.rows() == 0) return 1.0;
  return h.partialPivLu().determinant().real();
}

int sign_of(double x) { return (x > 0) - (x < 0); }

// a + t (b - a) for fractions, exact.
Fraction lerp(const Fraction& a, const Fraction& b, const Fraction& t) {
  const __int128 num = static_cast<__int128>(a.num) * b.den * t.den +
                       (static_cast<__int128>(b.num) * a.den - static_cast<__int128>(a.num) * b.den) * t.num;
  const __int128 den = static_cast<__int128>(a.den) * b.den * t.den;
  __int128 x = num < 0 ? -num : num;
  __int128 y = den;
  while (y != 0) {
    const __int128 r = x % y;
    x = y;
    y = r;
  }
  const __int128 g = x == 0 ? 1 : x;
  const __int128 p = num / g;
  const __int128 q = den / g;
  if (p > INT64_MAX || q > INT64_MAX || p < INT64_MIN) throw std::overflow_error("fraction overflow");
  return {static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)};
}

TorusPoint lerp(const TorusPoint& a, const TorusPoint& b, const Fraction& t) {
  std::vector<Fraction> out;
  out.reserve(a.fractions().size());
  for (std::size_t i = 0; i < a.fractions().size(); ++i) {
    out.push_back(lerp(a.fractions()[i], b.fractions()[i], t));
  }
  return TorusPoint(std::move(out));
}

TorusPoint midpoint(const TorusPoint& a, const TorusPoint& b) {
  std::vector<Fraction> out;
  out.reserve(a.fractions().size());
  for (std::size_t i = 0; i < a.fractions().size(); ++i) {
    out.push_back(splitsig::midpoint(a.fractions()[i], b.fractions()[i]));
  }
  return TorusPoint(std::move(out));
}

struct SignedSample {
  InvariantSample sample;
  int det_sign = 0;
};

SignedSample signed_sample(const GeneralizedSeifertSystem& gss, const TorusPoint& omega, double tol) {
  const ComplexMatrix h = assemble_h(gss, omega);
  const InvariantValue value = signature_nullity(gss, omega, tol);
  const double det = real_det(h);
  SignedSample out;
  out.sample.omega = omega;
  out.sample.sigma = value.sigma;
  out.sample.eta = value.eta;
  out.sample.abs_det = std::abs(det);
  out.sample.near_zero = h.rows() > 0 && out.sample.abs_det <= det_zero_threshold(h, tol);
  out.det_sign = sign_of(det);
  return out;
}

std::optional<InvariantSample> bisect(const GeneralizedSeifertSystem& gss, SignedSample lo,
                                      SignedSample hi, double tol) {
  for (int iter = 0; iter < kMaxBisections; ++iter) {
    TorusPoint mid;
    try {
      mid = midpoint(lo.sample.omega, hi.sample.omega);
    } catch (const std::overflow_error&) {
      break;
    }
    SignedSample m = signed_sample(gss, mid, tol);
    if (m.sample.near_zero) return m.sample;
    if (m.det_sign == lo.det_sign) {
      lo = std::move(m);
    } else {
      hi = std::move(m);
    }
  }
  return std::nullopt;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

const InvariantSample& ScanGrid::at(const std::vector<int>& index) const {
  if (static_cast<int>(index.size()) != mu) throw std::invalid_argument("grid index has wrong length");
  std::size_t flat = 0;
  for (int i : index) {
    if (i < 0 || i >= resolution) throw std::out_of_range("grid index out of range");
    flat = flat * static_cast<std::size_t>(resolution) + static_cast<std::size_t>(i);
  }
  return samples.at(flat);
}

double det_zero_threshold(const ComplexMatrix& h, double tol) {
  const auto n = static_cast<double>(h.rows());
  if (h.rows() == 0) return 0.0;
  const double s = std::max(1.0, max_abs_entry(h));
  return tol * s * std::pow(n * s, n - 1.0);
}

InvariantValue signature_nullity(const GeneralizedSeifertSystem& gss, const TorusPoint& omega,
                                 double tol) {
  if (omega.mu() != gss.mu) {
    throw std::invalid_argument("torus point has " + std::to_string(omega.mu()) +
                                " coordinates, system has mu = " + std::to_string(gss.mu));
  }
  if (omega.is_all_minus_one()) {
    const SignatureResult r = integer_symmetric_signature(h_at_minus_ones(gss));
    return {r.signature, r.nullity};
  }
  const SignatureResult r = hermitian_signature(assemble_h(gss, omega), tol);
  return {r.signature, r.nullity};
}

InvariantSample sample(const GeneralizedSeifertSystem& gss, const TorusPoint& omega, double tol) {
  return signed_sample(gss, omega, tol).sample;
}

InvariantValue lt_signature_from_multivariable(const GeneralizedSeifertSystem& gss,
                                               const Fraction& q, double tol) {
  const InvariantValue diagonal = signature_nullity(gss, TorusPoint::diagonal(gss.mu, q), tol);
  if (gss.mu == 1) return diagonal;
  const auto total = gss.total_linking();
  if (!total) {
    throw std::invalid_argument("Levine-Tristram recovery needs pairwise linking numbers for " +
                                (gss.name.empty() ? std::string("this system") : gss.name));
  }
  return {diagonal.sigma - static_cast<int>(*total), diagonal.eta};
}

ScanGrid torus_scan(const GeneralizedSeifertSystem& gss, int resolution, double tol) {
  if (resolution < 1) throw std::invalid_argument("scan resolution must be >= 1");
  require_valid(gss);
  std::int64_t count = 1;
  for (int i = 0; i < gss.mu; ++i) {
    count *= resolution;
    if (count > kMaxScanSamples) throw std::invalid_argument("scan grid too large");
  }

  ScanGrid grid;
  grid.mu = gss.mu;
  grid.resolution = resolution;
  grid.samples.reserve(static_cast<std::size_t>(count));
  std::vector<int> index(static_cast<std::size_t>(gss.mu), 0);
  for (std::int64_t flat = 0; flat < count; ++flat) {
    std::vector<Fraction> fractions;
    fractions.reserve(index.size());
    for (int k : index) fractions.emplace_back(k + 1, resolution + 1);
    grid.samples.push_back(sample(gss, TorusPoint(std::move(fractions)), tol));
    for (int axis = gss.mu - 1; axis >= 0; --axis) {
      if (++index[static_cast<std::size_t>(axis)] < resolution) break;
      index[static_cast<std::size_t>(axis)] = 0;
    }
  }
  return grid;
}

int estimate_beta(const GeneralizedSeifertSystem& gss, const std::vector<TorusPoint>& samples,
                  double tol) {
  if (samples.empty()) throw std::invalid_argument("estimate_beta needs at least one sample");
  int best = std::numeric_limits<int>::max();
  for (const TorusPoint& omega : samples) best = std::min(best, signature_nullity(gss, omega, tol).eta);
  return best;
}

std::optional<InvariantSample> locate_det_zero(const GeneralizedSeifertSystem& gss,
                                               const TorusPoint& a, const TorusPoint& b,
                                               double tol) {
  if (a.mu() != b.mu()) throw std::invalid_argument("segment endpoints differ in dimension");
  SignedSample prev = signed_sample(gss, a, tol);
  if (prev.sample.near_zero) return prev.sample;
  for (int k = 1; k <= kSubsamples; ++k) {
    SignedSample next = signed_sample(gss, lerp(a, b, Fraction(k, kSubsamples)), tol);
    if (next.sample.near_zero) return next.sample;
    if (next.det_sign != prev.det_sign) {
      if (auto found = bisect(gss, prev, next, tol)) return found;
    }
    prev = std::move(next);
  }
  return std::nullopt;
}

ScanBoundaryReport check_signature_regions(const GeneralizedSeifertSystem& gss,
                                           const ScanGrid& grid, double tol) {
  ScanBoundaryReport report;
  const int r = grid.resolution;
  std::vector<std::size_t> stride(static_cast<std::size_t>(grid.mu), 1);
  for (int axis = grid.mu - 2; axis >= 0; --axis) {
    stride[static_cast<std::size_t>(axis)] = stride[static_cast<std::size_t>(axis) + 1] * static_cast<std::size_t>(r);
  }
  for (std::size_t flat = 0; flat < grid.samples.size(); ++flat) {
    for (int axis = 0; axis < grid.mu; ++axis) {
      const std::size_t step = stride[static_cast<std::size_t>(axis)];
      if ((flat / step) % static_cast<std::size_t>(r) == static_cast<std::size_t>(r - 1)) continue;
      const InvariantSample& here = grid.samples[flat];
      const InvariantSample& there = grid.samples[flat + step];
      ++report.pairs_checked;
      if (here.sigma == there.sigma) continue;
      ++report.sigma_changes;
      if (here.near_zero || there.near_zero || locate_det_zero(gss, here.omega, there.omega, tol)) {
        ++report.separated_changes;
      } else {
        report.unexplained.emplace_back(here.omega, there.omega);
      }
    }
  }
  return report;
}

void write_scan_csv(std::ostream& out, const ScanGrid& grid) {
  for (int i = 1; i <= grid.mu; ++i) out << "theta_" << i << ',';
  out << "sigma,eta,absdet\n";
  for (const InvariantSample& s : grid.samples) {
    for (const Fraction& q : s.omega.fractions()) out << format_real(q.value()) << ',';
    out << s.sigma << ',' << s.eta << ',' << format_real(s.abs_det) << '\n';
  }
}

}  // namespace splitsig

#pragma once

// Colored links presented by their generalized Seifert matrices A^eps, and
// the Hermitian matrix H(omega) = sum_eps prod_i (1 - conj(omega_i)^eps_i) A^eps.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitsig/hermitian.hpp"

namespace splitsig {

/// A tuple of signs in {+1, -1}, written as a string such as "+-+".
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::vector<int> signs);

  /// Accepts '+' and '-' (also U+2212 MINUS SIGN). Throws std::invalid_argument.
  static SignPattern parse(std::string_view text);

  /// All 2^mu patterns, or only the 2^(mu-1) with leading '+'.
  static std::vector<SignPattern> all(int mu);
  static std::vector<SignPattern> canonical(int mu);

  int size() const { return static_cast<int>(signs_.size()); }
  int operator[](int i) const { return signs_[static_cast<std::size_t>(i)]; }
  bool is_canonical() const { return !signs_.empty() && signs_.front() > 0; }
  SignPattern negated() const;
  std::string str() const;

  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<int> signs_;
};

/// Reduced fraction p/q with q > 0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t p, std::int64_t q);

  /// "p/q" or an integer "p". Decimal notation is rejected.
  static Fraction parse(std::string_view text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

Fraction midpoint(const Fraction& a, const Fraction& b);

/// exp(2 pi i q), exact when 4q is an integer.
std::complex<double> unit_root(const Fraction& q);

/// A point of the torus with every coordinate different from 1, given by
/// angle fractions q_i in the open interval (0, 1).
class TorusPoint {
 public:
  TorusPoint() = default;
  /// Throws std::invalid_argument if some q_i lies outside (0, 1).
  explicit TorusPoint(std::vector<Fraction> fractions);

  /// Comma-separated fractions, e.g. "1/2,1/3".
  static TorusPoint parse(std::string_view text);
  static TorusPoint diagonal(int mu, const Fraction& q);

  int mu() const { return static_cast<int>(fractions_.size()); }
  const std::vector<Fraction>& fractions() const { return fractions_; }
  std::complex<double> coordinate(int i) const;
  bool is_all_minus_one() const;
  std::string str() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  std::vector<Fraction> fractions_;
};

/// Levine-Tristram values of one colored sublink at the relevant point.
struct ComponentInvariant {
  int sigma = 0;
  int eta = 0;
  friend bool operator==(const ComponentInvariant&, const ComponentInvariant&) = default;
};

using ComponentInvariants = std::vector<ComponentInvariant>;

/// Only patterns with leading '+' are stored; A^{-eps} = (A^eps)^T supplies the rest.
struct GeneralizedSeifertSystem {
  std::string name;
  int mu = 1;
  int rank = 0;
  std::map<SignPattern, IntMatrix> matrices;
  std::optional<IntMatrix> linking;
  std::optional<ComponentInvariants> components;

  /// A^eps for any pattern. Throws std::out_of_range if the canonical partner is missing.
  IntMatrix matrix(const SignPattern& eps) const;

  /// Sum over i < j of linking(i, j); nullopt when linking data is absent.
  std::optional<std::int64_t> total_linking() const;
};

/// Empty iff every structural invariant holds; each entry names the offender.
std::vector<std::string> validate(const GeneralizedSeifertSystem& gss);

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const GeneralizedSeifertSystem& gss);

/// H(omega) summed over all 2^mu sign patterns.
ComplexMatrix assemble_h(const GeneralizedSeifertSystem& gss, const TorusPoint& omega);

/// H(-1, ..., -1) = 2^mu * sum_eps A^eps, exactly.
IntMatrix h_at_minus_ones(const GeneralizedSeifertSystem& gss);

}  // namespace splitsig

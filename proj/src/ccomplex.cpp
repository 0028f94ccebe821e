#include "splitsig/ccomplex.hpp"

#include <charconv>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace splitsig {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an exact fraction p/q: '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("fraction overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign pattern entries must be +1 or -1");
  }
}

SignPattern SignPattern::parse(std::string_view text) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::vector<int> signs;
  while (!text.empty()) {
    if (text.front() == '+') {
      signs.push_back(1);
      text.remove_prefix(1);
    } else if (text.front() == '-') {
      signs.push_back(-1);
      text.remove_prefix(1);
    } else if (text.starts_with(kUnicodeMinus)) {
      signs.push_back(-1);
      text.remove_prefix(kUnicodeMinus.size());
    } else {
      throw std::invalid_argument("sign pattern may only contain '+' and '-'");
    }
  }
  if (signs.empty()) throw std::invalid_argument("empty sign pattern");
  return SignPattern(std::move(signs));
}

std::vector<SignPattern> SignPattern::all(int mu) {
  std::vector<SignPattern> out;
  const std::uint64_t count = std::uint64_t{1} << mu;
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::vector<int> signs(static_cast<std::size_t>(mu));
    for (int i = 0; i < mu; ++i) signs[static_cast<std::size_t>(i)] = (bits >> (mu - 1 - i)) & 1U ? -1 : 1;
    out.emplace_back(std::move(signs));
  }
  return out;
}

std::vector<SignPattern> SignPattern::canonical(int mu) {
  auto patterns = all(mu);
  std::erase_if(patterns, [](const SignPattern& p) { return !p.is_canonical(); });
  return patterns;
}

SignPattern SignPattern::negated() const {
  std::vector<int> flipped(signs_);
  for (int& s : flipped) s = -s;
  return SignPattern(std::move(flipped));
}

std::string SignPattern::str() const {
  std::string out;
  for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

Fraction::Fraction(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::invalid_argument("fraction with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  num = p / g;
  den = q / g;
}

Fraction Fraction::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text, text), 1};
  return {parse_int(trim(text.substr(0, slash)), text), parse_int(trim(text.substr(slash + 1)), text)};
}

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Fraction midpoint(const Fraction& a, const Fraction& b) {
  const __int128 l = static_cast<__int128>(a.den) / std::gcd(a.den, b.den) * b.den;
  const __int128 n = static_cast<__int128>(a.num) * (l / a.den) + static_cast<__int128>(b.num) * (l / b.den);
  const __int128 d = 2 * l;
  // reduce before narrowing
  __int128 x = n < 0 ? -n : n;
  __int128 y = d;
  while (y != 0) {
    const __int128 t = x % y;
    x = y;
    y = t;
  }
  const __int128 g = x == 0 ? 1 : x;
  return {narrow(n / g), narrow(d / g)};
}

std::complex<double> unit_root(const Fraction& q) {
  std::int64_t r = q.num % q.den;
  if (r < 0) r += q.den;
  if ((4 * static_cast<__int128>(r)) % q.den == 0) {
    switch (static_cast<int>(4 * static_cast<__int128>(r) / q.den)) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q.den);
  return std::polar(1.0, angle);
}

TorusPoint::TorusPoint(std::vector<Fraction> fractions) : fractions_(std::move(fractions)) {
  if (fractions_.empty()) throw std::invalid_argument("torus point needs at least one coordinate");
  for (const Fraction& q : fractions_) {
    if (q.num <= 0 || q.num >= q.den) {
      throw std::invalid_argument("torus coordinate " + q.str() +
                                  " must lie strictly between 0 and 1 (omega_i != 1)");
    }
  }
}

TorusPoint TorusPoint::parse(std::string_view text) {
  std::vector<Fraction> fractions;
  while (true) {
    const auto comma = text.find(',');
    fractions.push_back(Fraction::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return TorusPoint(std::move(fractions));
}

TorusPoint TorusPoint::diagonal(int mu, const Fraction& q) {
  if (mu < 1) throw std::invalid_argument("diagonal point needs mu >= 1");
  return TorusPoint(std::vector<Fraction>(static_cast<std::size_t>(mu), q));
}

std::complex<double> TorusPoint::coordinate(int i) const {
  return unit_root(fractions_.at(static_cast<std::size_t>(i)));
}

bool TorusPoint::is_all_minus_one() const {
  for (const Fraction& q : fractions_) {
    if (!(q == Fraction(1, 2))) return false;
  }
  return true;
}

std::string TorusPoint::str() const {
  std::string out;
  for (std::size_t i = 0; i < fractions_.size(); ++i) {
    if (i) out += ',';
    out += fractions_[i].str();
  }
  return out;
}

IntMatrix GeneralizedSeifertSystem::matrix(const SignPattern& eps) const {
  if (eps.is_canonical()) return matrices.at(eps);
  return matrices.at(eps.negated()).transpose();
}

std::optional<std::int64_t> GeneralizedSeifertSystem::total_linking() const {
  if (!linking) return std::nullopt;
  std::int64_t total = 0;
  for (Eigen::Index i = 0; i < linking->rows(); ++i) {
    for (Eigen::Index j = i + 1; j < linking->cols(); ++j) total += (*linking)(i, j);
  }
  return total;
}

std::vector<std::string> validate(const GeneralizedSeifertSystem& gss) {
  std::vector<std::string> violations;
  if (gss.mu < 1 || gss.mu > 20) {
    violations.push_back("mu = " + std::to_string(gss.mu) + " must lie in [1, 20]");
    return violations;
  }
  if (gss.rank < 0) violations.push_back("rank = " + std::to_string(gss.rank) + " is negative");

  for (const auto& [eps, m] : gss.matrices) {
    if (eps.size() != gss.mu) {
      violations.push_back("pattern " + eps.str() + " has length " + std::to_string(eps.size()) +
                           ", expected " + std::to_string(gss.mu));
      continue;
    }
    if (!eps.is_canonical()) {
      violations.push_back("pattern " + eps.str() + " is not canonical (first sign must be +)");
    }
    if (m.rows() != gss.rank || m.cols() != gss.rank) {
      violations.push_back("matrix " + eps.str() + " is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " + std::to_string(gss.rank) +
                           "x" + std::to_string(gss.rank));
    }
  }
  for (const SignPattern& eps : SignPattern::canonical(gss.mu)) {
    if (!gss.matrices.contains(eps)) violations.push_back("missing pattern " + eps.str());
  }

  if (gss.linking) {
    const IntMatrix& lk = *gss.linking;
    if (lk.rows() != gss.mu || lk.cols() != gss.mu) {
      violations.push_back("linking matrix is " + std::to_string(lk.rows()) + "x" +
                           std::to_string(lk.cols()) + ", expected " + std::to_string(gss.mu) +
                           "x" + std::to_string(gss.mu));
    } else {
      for (Eigen::Index i = 0; i < lk.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < lk.cols(); ++j) {
          if (lk(i, j) != lk(j, i)) {
            violations.push_back("linking matrix is not symmetric at (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ")");
          }
        }
      }
    }
  }
  if (gss.components) {
    if (static_cast<int>(gss.components->size()) != gss.mu) {
      violations.push_back("component data has " + std::to_string(gss.components->size()) +
                           " entries, expected " + std::to_string(gss.mu));
    }
    for (std::size_t i = 0; i < gss.components->size(); ++i) {
      if ((*gss.components)[i].eta < 0) {
        violations.push_back("component " + std::to_string(i + 1) + " has negative nullity");
      }
    }
  }
  return violations;
}

void require_valid(const GeneralizedSeifertSystem& gss) {
  const auto violations = validate(gss);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid generalized Seifert system";
  if (!gss.name.empty()) msg << " '" << gss.name << "'";
  for (const auto& v : violations) msg << "\n  " << v;
  throw std::invalid_argument(msg.str());
}

ComplexMatrix assemble_h(const GeneralizedSeifertSystem& gss, const TorusPoint& omega) {
  require_valid(gss);
  if (omega.mu() != gss.mu) {
    throw std::invalid_argument("torus point has " + std::to_string(omega.mu()) +
                                " coordinates, system has mu = " + std::to_string(gss.mu));
  }
  const Eigen::Index n = gss.rank;
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (const SignPattern& eps : SignPattern::all(gss.mu)) {
    std::complex<double> coefficient{1.0, 0.0};
    for (int i = 0; i < gss.mu; ++i) {
      const std::complex<double> w = omega.coordinate(i);
      // conj(w)^{+1} = conj(w), conj(w)^{-1} = w on the unit circle
      coefficient *= 1.0 - (eps[i] > 0 ? std::conj(w) : w);
    }
    h += coefficient * gss.matrix(eps).cast<double>().cast<std::complex<double>>();
  }
  return h;
}

IntMatrix h_at_minus_ones(const GeneralizedSeifertSystem& gss) {
  require_valid(gss);
  IntMatrix sum = IntMatrix::Zero(gss.rank, gss.rank);
  for (const auto& [eps, m] : gss.matrices) sum += m + m.transpose();
  return sum * (std::int64_t{1} << gss.mu);
}

}  // namespace splitsig

#include "splitsig/hermitian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace splitsig {

namespace {

// Element of Q(i).
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const mpq_class norm = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
  }
};

bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
bool is_zero(const GaussianRational& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
int real_sign(const mpq_class& x) { return sgn(x); }
int real_sign(const GaussianRational& x) { return sgn(x.re); }
mpq_class conjugate(const mpq_class& x) { return x; }
GaussianRational conjugate(const GaussianRational& x) { return {x.re, -x.im}; }

// Congruent diagonalization of a Hermitian matrix stored row-major.
// 1x1 pivots are taken on any nonzero diagonal entry; when the remaining
// diagonal vanishes but some off-diagonal b survives, the block
// [[0, b], [conj(b), 0]] is eliminated as a unit and contributes one
// positive and one negative square.
template <class Scalar>
SignatureResult congruent_inertia(std::vector<Scalar> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Scalar& { return a[i * n + j]; };

  SignatureResult result;
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t{0});

  while (!active.empty()) {
    auto pivot = std::find_if(active.begin(), active.end(),
                              [&](std::size_t k) { return !is_zero(at(k, k)); });
    if (pivot != active.end()) {
      const std::size_t p = *pivot;
      active.erase(pivot);
      if (real_sign(at(p, p)) > 0) {
        ++result.positives;
      } else {
        ++result.negatives;
      }
      const Scalar d = at(p, p);
      for (std::size_t i : active) {
        if (is_zero(at(i, p))) continue;
        const Scalar factor = at(i, p) / d;
        for (std::size_t j : active) {
          if (is_zero(at(p, j))) continue;
          at(i, j) = at(i, j) - factor * at(p, j);
        }
      }
      continue;
    }

    std::size_t p = n;
    std::size_t q = n;
    for (std::size_t x = 0; x < active.size() && p == n; ++x) {
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        if (!is_zero(at(active[x], active[y]))) {
          p = active[x];
          q = active[y];
          break;
        }
      }
    }
    if (p == n) {
      result.nullity += static_cast<int>(active.size());
      break;
    }

    ++result.positives;
    ++result.negatives;
    std::erase(active, p);
    std::erase(active, q);
    // Block inverse of [[0, b], [conj(b), 0]] is [[0, 1/conj(b)], [1/b, 0]].
    const Scalar b = at(p, q);
    const Scalar b_conj = conjugate(b);
    for (std::size_t i : active) {
      const bool has_p = !is_zero(at(i, p));
      const bool has_q = !is_zero(at(i, q));
      if (!has_p && !has_q) continue;
      for (std::size_t j : active) {
        if (has_p && !is_zero(at(q, j))) at(i, j) = at(i, j) - at(i, p) * at(q, j) / b_conj;
        if (has_q && !is_zero(at(p, j))) at(i, j) = at(i, j) - at(i, q) * at(p, j) / b;
      }
    }
  }

  result.signature = result.positives - result.negatives;
  return result;
}

void require_square(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (rows != cols) {
    throw std::invalid_argument(std::string(what) + ": matrix is " + std::to_string(rows) +
                                "x" + std::to_string(cols) + ", expected square");
  }
}

}  // namespace

GaussianIntMatrix::GaussianIntMatrix(IntMatrix real)
    : re(std::move(real)), im(IntMatrix::Zero(re.rows(), re.cols())) {}

GaussianIntMatrix::GaussianIntMatrix(IntMatrix real, IntMatrix imag)
    : re(std::move(real)), im(std::move(imag)) {
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw std::invalid_argument("GaussianIntMatrix: real and imaginary parts differ in shape");
  }
}

ComplexMatrix GaussianIntMatrix::to_complex() const {
  ComplexMatrix out(re.rows(), re.cols());
  for (Eigen::Index j = 0; j < re.rows(); ++j) {
    for (Eigen::Index k = 0; k < re.cols(); ++k) {
      out(j, k) = {static_cast<double>(re(j, k)), static_cast<double>(im(j, k))};
    }
  }
  return out;
}

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

SignatureResult hermitian_signature(const ComplexMatrix& m, double tol) {
  require_square(m.rows(), m.cols(), "hermitian_signature");
  if (!(tol >= 0.0)) throw std::invalid_argument("hermitian_signature: tolerance must be >= 0");
  if (m.rows() == 0) return {};

  const double threshold = tol * std::max(1.0, max_abs_entry(m));
  const double asymmetry = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > threshold) {
    throw std::invalid_argument("hermitian_signature: matrix is not Hermitian (deviation " +
                                std::to_string(asymmetry) + ")");
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_signature: eigenvalue iteration did not converge");
  }

  SignatureResult result;
  for (double lambda : solver.eigenvalues()) {
    if (std::abs(lambda) <= threshold) {
      ++result.nullity;
    } else if (lambda > 0) {
      ++result.positives;
    } else {
      ++result.negatives;
    }
  }
  result.signature = result.positives - result.negatives;
  return result;
}

SignatureResult integer_symmetric_signature(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "integer_symmetric_signature");
  if (m != m.transpose()) {
    throw std::invalid_argument("integer_symmetric_signature: matrix is not symmetric");
  }
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<mpq_class> entries;
  entries.reserve(n * n);
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      entries.emplace_back(static_cast<long>(m(j, k)));
    }
  }
  return congruent_inertia(std::move(entries), n);
}

SignatureResult gaussian_hermitian_signature(const GaussianIntMatrix& m) {
  require_square(m.rows(), m.cols(), "gaussian_hermitian_signature");
  if (m.re != m.re.transpose() || m.im != IntMatrix(-m.im.transpose())) {
    throw std::invalid_argument("gaussian_hermitian_signature: matrix is not Hermitian");
  }
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<GaussianRational> entries;
  entries.reserve(n * n);
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      entries.push_back({mpq_class(static_cast<long>(m.re(j, k))),
                         mpq_class(static_cast<long>(m.im(j, k)))});
    }
  }
  return congruent_inertia(std::move(entries), n);
}

ComplexMatrix border(const ComplexMatrix& m, const ComplexVector& z, double lam) {
  require_square(m.rows(), m.cols(), "border");
  if (z.size() != m.rows()) {
    throw std::invalid_argument("border: vector length " + std::to_string(z.size()) +
                                " does not match dimension " + std::to_string(m.rows()));
  }
  const Eigen::Index n = m.rows();
  ComplexMatrix out(n + 1, n + 1);
  out.topLeftCorner(n, n) = m;
  out.topRightCorner(n, 1) = z;
  out.bottomLeftCorner(1, n) = z.adjoint();
  out(n, n) = lam;
  return out;
}

GaussianIntMatrix border(const GaussianIntMatrix& m, const GaussianIntVector& z,
                         std::int64_t lam) {
  require_square(m.rows(), m.cols(), "border");
  if (z.size() != m.rows() || z.im.size() != z.re.size()) {
    throw std::invalid_argument("border: vector length " + std::to_string(z.size()) +
                                " does not match dimension " + std::to_string(m.rows()));
  }
  const Eigen::Index n = m.rows();
  IntMatrix re(n + 1, n + 1);
  IntMatrix im(n + 1, n + 1);
  re.topLeftCorner(n, n) = m.re;
  im.topLeftCorner(n, n) = m.im;
  re.topRightCorner(n, 1) = z.re;
  im.topRightCorner(n, 1) = z.im;
  re.bottomLeftCorner(1, n) = z.re.transpose();
  im.bottomLeftCorner(1, n) = -z.im.transpose();
  re(n, n) = lam;
  im(n, n) = 0;
  return GaussianIntMatrix(std::move(re), std::move(im));
}

BorderDelta bordered_delta(const ComplexMatrix& m, const ComplexVector& z, double lam,
                           double tol) {
  const ComplexMatrix bordered = border(m, z, lam);
  const SignatureResult before = hermitian_signature(m, tol);
  const SignatureResult after = hermitian_signature(bordered, tol);
  return {after.signature - before.signature, after.nullity - before.nullity};
}

BorderDelta bordered_delta(const GaussianIntMatrix& m, const GaussianIntVector& z,
                           std::int64_t lam) {
  const GaussianIntMatrix bordered = border(m, z, lam);
  const SignatureResult before = gaussian_hermitian_signature(m);
  const SignatureResult after = gaussian_hermitian_signature(bordered);
  return {after.signature - before.signature, after.nullity - before.nullity};
}

}  // namespace splitsig

#pragma once

// Inertia (signature and nullity) of Hermitian matrices.
//
// Two routes are provided. The floating route classifies eigenvalues of a
// complex Hermitian matrix against a relative tolerance. The exact route
// performs congruent diagonalization over the (Gaussian) rationals and is
// restricted to integer input, which is all that is needed at the torus
// point (-1, ..., -1).

#include <complex>
#include <cstdint>
#include <Eigen/Dense>

namespace splitsig {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline constexpr double kDefaultTolerance = 1e-9;

struct SignatureResult {
  int signature = 0;
  int nullity = 0;
  int positives = 0;
  int negatives = 0;

  int dimension() const { return positives + negatives + nullity; }
  friend bool operator==(const SignatureResult&, const SignatureResult&) = default;
};

// Integer Hermitian matrix: real part symmetric, imaginary part antisymmetric.
struct GaussianIntMatrix {
  IntMatrix re;
  IntMatrix im;

  GaussianIntMatrix() = default;
  explicit GaussianIntMatrix(IntMatrix real);
  GaussianIntMatrix(IntMatrix real, IntMatrix imag);

  Eigen::Index rows() const { return re.rows(); }
  Eigen::Index cols() const { return re.cols(); }
  ComplexMatrix to_complex() const;
};

struct GaussianIntVector {
  IntVector re;
  IntVector im;

  Eigen::Index size() const { return re.size(); }
};

/// Largest absolute entry, or 0 for the empty matrix.
double max_abs_entry(const ComplexMatrix& m);

/// Eigenvalues with |lambda| <= tol * max(1, max|m_jk|) count as zero.
/// Throws std::invalid_argument for non-square input or when m differs from
/// its conjugate transpose by more than the same relative threshold.
SignatureResult hermitian_signature(const ComplexMatrix& m,
                                    double tol = kDefaultTolerance);

/// Exact inertia of a symmetric integer matrix by congruent diagonalization
/// over Q. Throws std::invalid_argument for non-square or non-symmetric input.
SignatureResult integer_symmetric_signature(const IntMatrix& m);

/// Exact inertia of an integer Hermitian matrix, by the same procedure over
/// the Gaussian rationals Q(i).
SignatureResult gaussian_hermitian_signature(const GaussianIntMatrix& m);

struct BorderDelta {
  int delta_sigma = 0;
  int delta_eta = 0;
  friend bool operator==(const BorderDelta&, const BorderDelta&) = default;
};

/// Change of (signature, nullity) from m to [[m, z], [z^*, lam]].
BorderDelta bordered_delta(const ComplexMatrix& m, const ComplexVector& z,
                           double lam, double tol = kDefaultTolerance);

/// Exact variant for integer Hermitian m, Gaussian-integer z and integer lam.
BorderDelta bordered_delta(const GaussianIntMatrix& m,
                           const GaussianIntVector& z, std::int64_t lam);

/// Builds the bordered matrix [[m, z], [z^*, lam]].
ComplexMatrix border(const ComplexMatrix& m, const ComplexVector& z, double lam);
GaussianIntMatrix border(const GaussianIntMatrix& m, const GaussianIntVector& z,
                         std::int64_t lam);

}  // namespace splitsig

#pragma once

// Finite-truncation numerics: Hermitian eigendecomposition by cyclic complex
// Jacobi, operator norms, |T|, polar decomposition and norms of restrictions
// to subspaces.

#include <cstddef>
#include <vector>

#include "anlab/numeric/matrix.hpp"

namespace anlab::numeric {

struct EigenOptions {
  double hermitian_tolerance = 1e-12;   // on ‖A - A*‖_max, scaled by max(1, ‖A‖_max)
  double off_diagonal_tolerance = 1e-14;  // stop when off(A) <= tol · ‖A‖_F
  int max_sweeps = 100;
};

struct EigenResult {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]
  int sweeps = 0;
};

/// A = V diag(values) V*. Throws Error{NotHermitian} or Error{NoConvergence}.
EigenResult sym_eigen(const DenseMatrix& a, const EigenOptions& options = {});

/// Largest singular value.
double operator_norm(const DenseMatrix& t);

/// (T*T)^{1/2}
DenseMatrix absolute_value(const DenseMatrix& t);

struct PolarResult {
  DenseMatrix u;    // partial isometry from clos ran|T| onto clos ran T
  DenseMatrix abs;  // |T|
  std::size_t rank = 0;
};

/// T = U|T|. Singular values at or below rank_tolerance·σ_max are treated as
/// zero and U vanishes on their singular vectors.
PolarResult polar(const DenseMatrix& t, double rank_tolerance = 1e-10);

/// Columns of an m×k matrix that are orthonormal within `tolerance` (max
/// entry of V*V - I).
class SubspaceBasis {
 public:
  /// Throws Error{NotOrthonormal}.
  explicit SubspaceBasis(DenseMatrix v, double tolerance = 1e-10);

  const DenseMatrix& matrix() const noexcept { return v_; }
  std::size_t ambient_dimension() const noexcept { return v_.rows(); }
  std::size_t dimension() const noexcept { return v_.cols(); }
  double tolerance() const noexcept { return tolerance_; }

 private:
  DenseMatrix v_;
  double tolerance_;
};

struct RestrictedNorm {
  double norm = 0.0;
  std::vector<cplx> attaining;  // unit vector in subspace coordinates
};

/// ‖T|_M‖ = ‖T V_M‖ and a unit x with ‖T V_M x‖ = ‖T V_M‖.
RestrictedNorm restricted_norm(const DenseMatrix& t, const SubspaceBasis& basis);

/// Modified Gram–Schmidt with one reorthogonalization pass. A column whose
/// residual norm falls below pivot_tolerance·max(1, ‖column‖) throws
/// Error{DependentInput}.
SubspaceBasis gram_schmidt(const DenseMatrix& vectors, double pivot_tolerance = 1e-12);

struct NegativeCount {
  std::size_t count = 0;  // eigenvalues of K + F below -threshold
  std::size_t bound = 0;  // eigenvalues of F below -threshold
};

/// Throws Error{NotHermitian} for non-Hermitian F or K, Error{NotPSD} when K
/// has an eigenvalue below -psd_tolerance.
NegativeCount negative_eigenvalue_count(const DenseMatrix& k, const DenseMatrix& f, double threshold = 1e-10,
                                        double psd_tolerance = 1e-10);

}  // namespace anlab::numeric

#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace anlab::numeric {

using cplx = std::complex<double>;

/// Row-major complex matrix. Entries must stay finite.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> values);
  static DenseMatrix diagonal(std::span<const cplx> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<cplx> column(std::size_t j) const;

  const std::vector<cplx>& entries() const noexcept { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;

  double max_abs() const;
  double frobenius() const;
  bool all_finite() const;

  /// max |A_ij - conj(A_ji)|; requires a square matrix.
  double hermitian_defect() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(cplx s, const DenseMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

std::vector<cplx> operator*(const DenseMatrix& a, std::span<const cplx> x);

double norm(std::span<const cplx> x);

/// A*A, exactly Hermitian (upper triangle mirrored).
DenseMatrix gram(const DenseMatrix& a);

/// (A + A*) / 2
DenseMatrix hermitian_part(const DenseMatrix& a);

/// Entries with independent standard normal real and imaginary parts.
DenseMatrix random_complex(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

/// A random unit vector (normalized complex Gaussian).
std::vector<cplx> random_unit_vector(std::size_t n, std::mt19937_64& rng);

}  // namespace anlab::numeric

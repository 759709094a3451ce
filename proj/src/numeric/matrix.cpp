#include "anlab/numeric/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "anlab/error.hpp"
#include "anlab/kernels/kernels.hpp"

namespace anlab::numeric {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
  }
  if (!all_finite()) throw Error(ErrorCode::InvalidSpec, "matrix has non-finite entries");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const cplx> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<cplx> DenseMatrix::column(std::size_t j) const {
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double DenseMatrix::frobenius() const { return std::sqrt(kernels::active().norm_sq(data_.data(), data_.size())); }

bool DenseMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

double DenseMatrix::hermitian_defect() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "hermitian check needs a square matrix");
  double d = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  }
  const auto& k = kernels::active();
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const cplx s = a(i, l);
      if (s == cplx{}) continue;
      k.axpy(s, b.row(l).data(), out.data(), out.size());
    }
  }
  return c;
}

namespace {

DenseMatrix combine(const DenseMatrix& a, const DenseMatrix& b, double sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
  DenseMatrix c = a;
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < a.rows(); ++i) k.axpy(sign, b.row(i).data(), c.row(i).data(), a.cols());
  return c;
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) { return combine(a, b, 1.0); }
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return combine(a, b, -1.0); }

DenseMatrix operator*(cplx s, const DenseMatrix& a) {
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (auto& z : c.row(i)) z *= s;
  return c;
}

std::vector<cplx> operator*(const DenseMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  const auto& k = kernels::active();
  std::vector<cplx> y(a.rows());
  // Σ_j a_ij x_j = conj(Σ_j conj(a_ij) conj(x_j)); keep the dot kernel by
  // conjugating the row once
  std::vector<cplx> row_conj(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) row_conj[j] = std::conj(r[j]);
    y[i] = k.dot_conj(row_conj.data(), x.data(), x.size());
  }
  return y;
}

double norm(std::span<const cplx> x) { return std::sqrt(kernels::active().norm_sq(x.data(), x.size())); }

DenseMatrix gram(const DenseMatrix& a) {
  // columns of a are contiguous rows of a^T
  const DenseMatrix at = a.transpose();
  const auto& k = kernels::active();
  DenseMatrix g(a.cols(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      const cplx v = k.dot_conj(at.row(i).data(), at.row(j).data(), a.rows());
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

DenseMatrix hermitian_part(const DenseMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "hermitian part needs a square matrix");
  DenseMatrix h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

DenseMatrix random_complex(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (auto& z : m.row(i)) {
      const double re = normal(rng);
      z = {re, normal(rng)};
    }
  return m;
}

std::vector<cplx> random_unit_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& z : v) {
    const double re = normal(rng);
    z = {re, normal(rng)};
  }
  const double len = norm(v);
  for (auto& z : v) z /= len;
  return v;
}

}  // namespace anlab::numeric

#include "anlab/numeric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "anlab/error.hpp"
#include "anlab/kernels/kernels.hpp"

namespace anlab::numeric {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

}  // namespace

EigenResult sym_eigen(const DenseMatrix& input, const EigenOptions& options) {
  if (!input.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigendecomposition needs a square matrix");
  const double scale = std::max(1.0, input.max_abs());
  if (input.hermitian_defect() > options.hermitian_tolerance * scale) {
    throw Error(ErrorCode::NotHermitian, "‖A - A*‖_max = " + std::to_string(input.hermitian_defect()));
  }

  const std::size_t n = input.rows();
  DenseMatrix a = hermitian_part(input);
  DenseMatrix w = DenseMatrix::identity(n);  // rows are eigenvectors
  const auto& k = kernels::active();
  const double target = options.off_diagonal_tolerance * a.frobenius();

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep == options.max_sweeps) {
      throw Error(ErrorCode::NoConvergence, "Jacobi did not converge in " + std::to_string(sweep) + " sweeps");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        const cplx e = g / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A ← J* A J with J = [[c, s·e], [-s·conj(e), c]] on (p, q)
        k.rotate_pair(a.row(p).data(), a.row(q).data(), n, c, -s * e, s * std::conj(e));
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          a(r, p) = std::conj(a(p, r));
          a(r, q) = std::conj(a(q, r));
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        k.rotate_pair(w.row(p).data(), w.row(q).data(), n, c, -s * std::conj(e), s * e);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenResult result;
  result.sweeps = sweep;
  result.values.reserve(n);
  result.vectors = DenseMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    result.values.push_back(a(src, src).real());
    for (std::size_t r = 0; r < n; ++r) result.vectors(r, col) = w(src, r);
  }
  return result;
}

double operator_norm(const DenseMatrix& t) {
  if (t.rows() == 0 || t.cols() == 0) return 0.0;
  const auto eig = sym_eigen(gram(t));
  return std::sqrt(std::max(0.0, eig.values.back()));
}

namespace {

struct SingularSystem {
  DenseMatrix right;            // columns w_i
  std::vector<double> sigma;    // ‖T w_i‖
};

SingularSystem singular_system(const DenseMatrix& t) {
  const auto eig = sym_eigen(gram(t));
  const DenseMatrix tw = t * eig.vectors;
  SingularSystem out{eig.vectors, {}};
  out.sigma.reserve(t.cols());
  for (std::size_t i = 0; i < t.cols(); ++i) out.sigma.push_back(norm(tw.column(i)));
  return out;
}

}  // namespace

DenseMatrix absolute_value(const DenseMatrix& t) { return polar(t).abs; }

PolarResult polar(const DenseMatrix& t, double rank_tolerance) {
  const std::size_t n = t.cols();
  const auto sys = singular_system(t);
  const DenseMatrix tw = t * sys.right;
  const double sigma_max = sys.sigma.empty() ? 0.0 : *std::max_element(sys.sigma.begin(), sys.sigma.end());

  // |T| = W diag(σ) W*,  U = Σ_{σ_i retained} (T w_i / σ_i) w_i*
  DenseMatrix scaled_w(n, n);
  DenseMatrix u_cols(t.rows(), n);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) scaled_w(r, i) = sys.right(r, i) * sys.sigma[i];
    if (sys.sigma[i] > rank_tolerance * sigma_max && sys.sigma[i] > 0.0) {
      ++rank;
      for (std::size_t r = 0; r < t.rows(); ++r) u_cols(r, i) = tw(r, i) / sys.sigma[i];
    }
  }
  const DenseMatrix w_adj = sys.right.adjoint();
  PolarResult out;
  out.abs = hermitian_part(scaled_w * w_adj);
  out.u = u_cols * w_adj;
  out.rank = rank;
  return out;
}

// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(DenseMatrix v, double tolerance) : v_(std::move(v)), tolerance_(tolerance) {
  if (v_.cols() == 0 || v_.cols() > v_.rows()) {
    throw Error(ErrorCode::NotOrthonormal, "subspace basis must have 1..rows columns");
  }
  const DenseMatrix defect = gram(v_) - DenseMatrix::identity(v_.cols());
  if (defect.max_abs() > tolerance_) {
    throw Error(ErrorCode::NotOrthonormal, "‖V*V - I‖_max = " + std::to_string(defect.max_abs()));
  }
}

RestrictedNorm restricted_norm(const DenseMatrix& t, const SubspaceBasis& basis) {
  if (t.cols() != basis.ambient_dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "operator and subspace dimensions differ");
  }
  const DenseMatrix tv = t * basis.matrix();
  const auto eig = sym_eigen(gram(tv));
  RestrictedNorm out;
  out.norm = std::sqrt(std::max(0.0, eig.values.back()));
  out.attaining = eig.vectors.column(eig.vectors.cols() - 1);
  return out;
}

SubspaceBasis gram_schmidt(const DenseMatrix& vectors, double pivot_tolerance) {
  const auto& k = kernels::active();
  DenseMatrix q = vectors.transpose();  // rows are the working vectors
  const std::size_t m = vectors.rows();
  for (std::size_t j = 0; j < q.rows(); ++j) {
    auto v = q.row(j);
    const double original = norm(v);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        const cplx proj = k.dot_conj(q.row(i).data(), v.data(), m);
        k.axpy(-proj, q.row(i).data(), v.data(), m);
      }
    }
    const double len = norm(v);
    if (len < pivot_tolerance * std::max(1.0, original)) {
      throw Error(ErrorCode::DependentInput, "column " + std::to_string(j) + " is dependent on earlier columns");
    }
    for (auto& z : v) z /= len;
  }
  return SubspaceBasis(q.transpose());
}

NegativeCount negative_eigenvalue_count(const DenseMatrix& k, const DenseMatrix& f, double threshold,
                                        double psd_tolerance) {
  if (k.rows() != f.rows() || k.cols() != f.cols()) throw Error(ErrorCode::DimensionMismatch, "K and F differ in shape");
  const auto f_eig = sym_eigen(f);
  const auto k_eig = sym_eigen(k);
  if (!k_eig.values.empty() && k_eig.values.front() < -psd_tolerance) {
    throw Error(ErrorCode::NotPSD, "K has eigenvalue " + std::to_string(k_eig.values.front()));
  }
  const auto sum_eig = sym_eigen(k + f);
  NegativeCount out;
  for (double v : sum_eig.values) out.count += v < -threshold ? 1 : 0;
  for (double v : f_eig.values) out.bound += v < -threshold ? 1 : 0;
  return out;
}

}  // namespace anlab::numeric

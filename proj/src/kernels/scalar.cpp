#include <cstdlib>
#include <cstring>

#include "anlab/kernels/kernels.hpp"

namespace anlab::kernels {

namespace {

void rotate_pair_scalar(cplx* x, cplx* y, std::size_t n, double c, cplx s1, cplx s2) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    x[i] = {c * xr + (s1.real() * yr - s1.imag() * yi), c * xi + (s1.real() * yi + s1.imag() * yr)};
    y[i] = {c * yr + (s2.real() * xr - s2.imag() * xi), c * yi + (s2.real() * xi + s2.imag() * xr)};
  }
}

cplx dot_conj_scalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = {y[i].real() + (a.real() * x[i].real() - a.imag() * x[i].imag()),
            y[i].imag() + (a.real() * x[i].imag() + a.imag() * x[i].real())};
  }
}

double norm_sq_scalar(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return acc;
}

const KernelTable kScalar{"scalar", rotate_pair_scalar, dot_conj_scalar, axpy_scalar, norm_sq_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

#if !defined(ANLAB_HAVE_AVX2)
const KernelTable* avx2_table() { return nullptr; }
#endif

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* force = std::getenv("AN_LAB_KERNELS");
    if (force != nullptr && std::strcmp(force, "scalar") == 0) return &kScalar;
    const KernelTable* simd = avx2_table();
    return simd != nullptr ? simd : &kScalar;
  }();
  return *chosen;
}

}  // namespace anlab::kernels

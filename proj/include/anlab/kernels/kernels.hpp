#pragma once

// Inner loops of the dense complex linear algebra. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2/FMA variant selected at
// runtime. Complex vectors are interleaved (re, im) std::complex<double>.
//
// Set AN_LAB_KERNELS=scalar to force the reference path.

#include <complex>
#include <cstddef>

namespace anlab::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  const char* name;

  /// x ← c·x + s1·y,  y ← s2·x + c·y  (simultaneous update)
  void (*rotate_pair)(cplx* x, cplx* y, std::size_t n, double c, cplx s1, cplx s2);

  /// Σ conj(x_i)·y_i
  cplx (*dot_conj)(const cplx* x, const cplx* y, std::size_t n);

  /// y ← y + a·x
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);

  /// Σ |x_i|²
  double (*norm_sq)(const cplx* x, std::size_t n);
};

const KernelTable& scalar_table();

/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table();

/// The table in use: AVX2 when available, unless overridden by the
/// AN_LAB_KERNELS environment variable.
const KernelTable& active();

}  // namespace anlab::kernels

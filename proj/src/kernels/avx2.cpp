// Compiled with -mavx2 -mfma; only reached after the runtime CPU check.

#include <immintrin.h>

#include "anlab/kernels/kernels.hpp"

namespace anlab::kernels {

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// a·v for a broadcast complex a
inline __m256d cmul(__m256d a_re, __m256d a_im, __m256d v) {
  return _mm256_fmaddsub_pd(a_re, v, _mm256_mul_pd(a_im, swap_re_im(v)));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void rotate_pair_avx2(cplx* x, cplx* y, std::size_t n, double c, cplx s1, cplx s2) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d s1r = _mm256_set1_pd(s1.real()), s1i = _mm256_set1_pd(s1.imag());
  const __m256d s2r = _mm256_set1_pd(s2.real()), s2i = _mm256_set1_pd(s2.imag());
  auto* xd = reinterpret_cast<double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    const __m256d nx = _mm256_fmadd_pd(vc, vx, cmul(s1r, s1i, vy));
    const __m256d ny = _mm256_fmadd_pd(vc, vy, cmul(s2r, s2i, vx));
    _mm256_storeu_pd(xd + 2 * i, nx);
    _mm256_storeu_pd(yd + 2 * i, ny);
  }
  if (i < n) scalar_table().rotate_pair(x + i, y + i, n - i, c, s1, s2);
}

cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();  // [xr·yr, xi·yi, ...]
  __m256d acc_im = _mm256_setzero_pd();  // [xr·yi, xi·yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
    acc_im = _mm256_fmadd_pd(vx, swap_re_im(vy), acc_im);
  }
  const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
  cplx out{hsum(acc_re), hsum(_mm256_mul_pd(acc_im, sign))};
  if (i < n) out += scalar_table().dot_conj(x + i, y + i, n - i);
  return out;
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(vy, cmul(ar, ai, vx)));
  }
  if (i < n) scalar_table().axpy(a, x + i, y + i, n - i);
}

double norm_sq_avx2(const cplx* x, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double out = hsum(acc);
  if (i < n) out += scalar_table().norm_sq(x + i, n - i);
  return out;
}

const KernelTable kAvx2{"avx2", rotate_pair_avx2, dot_conj_avx2, axpy_avx2, norm_sq_avx2};

}  // namespace

const KernelTable* avx2_table() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace anlab::kernels

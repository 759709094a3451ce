#include <doctest.h>

#include <random>
#include <vector>

#include "anlab/kernels/kernels.hpp"

using namespace anlab::kernels;

TEST_SUITE_BEGIN("kernels");

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("scalar kernels match textbook formulas") {
  const auto& k = scalar_table();
  std::vector<cplx> x{{1, 2}, {3, -1}};
  std::vector<cplx> y{{0, 1}, {2, 2}};
  CHECK(k.dot_conj(x.data(), y.data(), 2) == cplx(1, -2) * cplx(0, 1) + cplx(3, 1) * cplx(2, 2));
  CHECK(k.norm_sq(x.data(), 2) == 15.0);
  k.axpy({0, 1}, x.data(), y.data(), 2);
  CHECK(y[0] == cplx(-2, 2));
  CHECK(y[1] == cplx(3, 5));
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const KernelTable* fast = avx2_table();
  if (fast == nullptr) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  const auto& ref = scalar_table();
  std::mt19937_64 rng(61);
  for (std::size_t n = 0; n < 40; ++n) {
    const auto x = random_vec(n, rng);
    const auto y = random_vec(n, rng);
    const cplx a{0.3, -1.7};

    CHECK(std::abs(fast->dot_conj(x.data(), y.data(), n) - ref.dot_conj(x.data(), y.data(), n)) <= 1e-12 * (n + 1));
    CHECK(fast->norm_sq(x.data(), n) == doctest::Approx(ref.norm_sq(x.data(), n)).epsilon(1e-13));

    auto y1 = y, y2 = y;
    fast->axpy(a, x.data(), y1.data(), n);
    ref.axpy(a, x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) <= 1e-13);

    auto x1 = x, x2 = x;
    y1 = y;
    y2 = y;
    const double c = 0.8;
    const cplx s1{-0.36, 0.48}, s2{0.36, 0.48};
    fast->rotate_pair(x1.data(), y1.data(), n, c, s1, s2);
    ref.rotate_pair(x2.data(), y2.data(), n, c, s1, s2);
    CHECK(max_diff(x1, x2) <= 1e-13);
    CHECK(max_diff(y1, y2) <= 1e-13);
  }
  CHECK(std::string(active().name).size() > 0);
}

TEST_SUITE_END();

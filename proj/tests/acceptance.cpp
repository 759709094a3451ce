// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every criterion also has a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "anlab/classifier.hpp"
#include "anlab/decomposer.hpp"
#include "anlab/kernels/kernels.hpp"
#include "anlab/models.hpp"
#include "anlab/numeric/linalg.hpp"
#include "anlab/numeric/truncation.hpp"
#include "support.hpp"

using namespace anlab;
using anlab::testing::q;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs > budget_seconds) {
    out.ok = false;
    out.detail = "over time budget";
  }
  if (!out.ok) ++failures;
  std::printf("[%s] criterion %d: %s (%.3f s / %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              budget_seconds, out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

const SpectrumSpec& model_spectrum(const char* name) { return std::get<SpectrumSpec>(find_model(name)->spec); }

// ---------------------------------------------------------------------------

Outcome named_examples() {
  Outcome o;
  const auto ramesh = classify_positive(model_spectrum("ramesh-counterexample"));
  o.require(ramesh.satisfied, "ramesh-counterexample not AN");
  if (ramesh.decomposition) {
    const auto& d = *ramesh.decomposition;
    o.require(d.alpha == 1, "ramesh alpha != 1");
    o.require(d.f_atoms == std::vector<WeightedValue>{{q("-1/2"), 1}}, "ramesh F != {-1/2}");
    o.require(d.k_atoms.empty() && d.k_tails.empty(), "ramesh K not empty");
  }

  const auto blocks = classify_positive(model_spectrum("two-limit-blocks"));
  o.require(!blocks.satisfied && blocks.reason == VerdictReason::Fail_TwoLimitPoints, "two-limit-blocks verdict");

  const auto proj = classify_positive(model_spectrum("projection-infinite"));
  o.require(!proj.satisfied && proj.reason == VerdictReason::Fail_TwoInfiniteMultiplicities,
            "projection-infinite verdict");

  const auto iso = classify_diagonal(std::get<DiagonalOperatorSpec>(find_model("isometry-phase")->spec));
  o.require(iso.satisfied, "isometry-phase not AN");

  const auto sum = classify_norming(model_spectrum("sum-not-an"));
  o.require(!sum.satisfied, "sum-not-an is norming");
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::mt19937_64 rng(0x5eed0002);
  for (int trial = 0; trial < 100 && o.ok; ++trial) {
    const auto s = anlab::testing::random_an_spec(rng);
    const auto back = reconstruct(decompose(s));
    o.require(structurally_equal(back, s), "structural mismatch at trial " + std::to_string(trial));
    o.require(top_k_plain(back, 1000) == top_k_plain(s, 1000), "top_k(1000) mismatch at trial " + std::to_string(trial));
  }
  return o;
}

Outcome witness_exactness() {
  Outcome o;
  const auto& s = model_spectrum("two-limit-blocks");
  const auto plan = witness_two_limit_points(s.tails[0], s.tails[1]);
  const auto reports = numeric::truncation_study(plan, {10, 50, 200});
  char buf[160];
  for (const auto& r : reports) {
    const double gamma = 2.0 - 1.0 / (4.0 * static_cast<double>(r.n));
    std::snprintf(buf, sizeof buf, "N=%zu norm=%.15f gamma=%.15f", r.n, r.restricted_norm, gamma);
    o.require(std::abs(r.restricted_norm - gamma) <= 1e-10, buf);
    o.require(r.restricted_norm <= gamma + 1e-10 && gamma + 1e-10 < 2.0, buf);
  }
  return o;
}

Outcome rational_identity() {
  Outcome o;
  const TailSequence above2{q("2"), Direction::Decreasing, HarmonicRule{q("1"), 1}, 1};
  const TailSequence above1{q("1"), Direction::Decreasing, HarmonicRule{q("1"), 2}, 2};
  const std::vector<WitnessPlan> plans{
      *classify_positive(model_spectrum("sum-not-an")).witness,
      *classify_positive(model_spectrum("two-limit-blocks")).witness,
      *classify_positive(model_spectrum("projection-infinite")).witness,
      witness_limit_vs_infmult(q("1"), q("2"), above1),
      witness_limit_vs_infmult(q("2"), q("1"), above2),
  };
  std::vector<bool> seen(5, false);
  for (const auto& plan : plans) {
    seen[static_cast<std::size_t>(plan.kind)] = true;
    const auto rows = emit_basis_vectors(plan, 10000);
    for (const auto& row : rows) {
      const Rational a = plan.first_at(row.n);
      const Rational b = plan.second_at(row.n);
      const Rational g = plan.gamma_at(row.n);
      const Rational lhs = row.c_squared * a * a + (1 - row.c_squared) * b * b;
      if (lhs != g * g) {
        o.require(false, std::string(to_string(plan.kind)) + " fails at n=" + std::to_string(row.n));
        break;
      }
    }
  }
  o.require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }), "not every plan kind covered");
  return o;
}

Outcome numeric_properties() {
  using namespace anlab::numeric;
  Outcome o;
  std::mt19937_64 rng(0x5eed0005);
  std::uniform_int_distribution<std::size_t> dim(1, 16);
  char buf[160];
  for (int trial = 0; trial < 200 && o.ok; ++trial) {
    const std::size_t m = dim(rng), n = dim(rng);
    const auto t = random_complex(m, n, rng);
    const double nt = operator_norm(t);
    const auto p = polar(t);

    const double residual = operator_norm(t - p.u * p.abs);
    std::snprintf(buf, sizeof buf, "trial %d: polar residual %.3e vs norm %.3e", trial, residual, nt);
    o.require(residual <= 1e-9 * nt, buf);

    for (int i = 0; i < 100; ++i) {
      const auto x = random_unit_vector(n, rng);
      const double diff = std::abs(norm(t * x) - norm(p.abs * x));
      std::snprintf(buf, sizeof buf, "trial %d: | ||Tx|| - || |T|x || | = %.3e", trial, diff);
      o.require(diff <= 1e-10, buf);
    }

    const auto eig = sym_eigen(p.abs);
    double dist = INFINITY;
    for (double v : eig.values) dist = std::min(dist, std::abs(v - nt));
    std::snprintf(buf, sizeof buf, "trial %d: norm is %.3e away from the spectrum of |T|", trial, dist);
    o.require(dist <= 1e-9, buf);

    const auto k = gram(random_complex(n, n, rng));
    const std::size_t rank = 1 + trial % 4;
    const auto f = anlab::testing::random_low_rank_hermitian(n, rank, trial % (rank + 1), rng);
    const auto nc = negative_eigenvalue_count(k, f);
    std::snprintf(buf, sizeof buf, "trial %d: %zu negative eigenvalues, bound %zu", trial, nc.count, nc.bound);
    o.require(nc.count <= nc.bound, buf);
  }
  return o;
}

Outcome cone() {
  Outcome o;
  std::mt19937_64 rng(0x5eed0006);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d1 = decompose(anlab::testing::random_an_spec(rng));
    const auto d2 = decompose(anlab::testing::random_an_spec(rng));
    const auto v = classify_positive(reconstruct(add_decompositions(d1, d2)));
    o.require(v.satisfied, "sum not AN at trial " + std::to_string(trial));
  }
  return o;
}

// gap_N ≈ rate / N for the harmonic constructions below
struct GapCase {
  std::string name;
  std::function<std::vector<numeric::TruncationReport>(const std::vector<std::size_t>&)> study;
  double rate;
};

Outcome monotone_gap() {
  Outcome o;
  const std::vector<std::size_t> sizes{10, 25, 50, 100, 200, 400};
  const auto blocks = *classify_positive(model_spectrum("two-limit-blocks")).witness;
  const TailSequence above1{q("1"), Direction::Decreasing, HarmonicRule{q("1"), 1}, 1};
  const auto below = witness_limit_vs_infmult(q("1"), q("3"), above1);
  const auto infmult = witness_two_infmult(q("1/2"), q("5/2"));
  const auto& sum = model_spectrum("sum-not-an");

  // shifted-harmonic γ_n = base + delta/(2n) leaves a gap of -delta/(2N)
  auto rate_of = [](const WitnessPlan& p) { return -to_double(std::get<ShiftedHarmonicGamma>(p.gamma).delta) / 2.0; };
  const std::vector<GapCase> cases{
      {"two-limit-blocks witness", [&](const auto& n) { return numeric::truncation_study(blocks, n); }, rate_of(blocks)},
      {"limit-below witness", [&](const auto& n) { return numeric::truncation_study(below, n); }, rate_of(below)},
      {"two-infinite witness", [&](const auto& n) { return numeric::truncation_study(infmult, n); }, rate_of(infmult)},
      {"sum-not-an spectrum", [&](const auto& n) { return numeric::truncation_study(sum, n); },
       to_double(std::get<HarmonicRule>(sum.tails[0].rule).c)},
  };
  char buf[200];
  for (const auto& c : cases) {
    const auto reports = c.study(sizes);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) {
        std::snprintf(buf, sizeof buf, "%s: gap grows from N=%zu to N=%zu", c.name.c_str(), reports[i - 1].n, reports[i].n);
        o.require(reports[i].gap <= reports[i - 1].gap, buf);
      }
      if (reports[i].n >= 50) {
        const double expected = c.rate / static_cast<double>(reports[i].n);
        std::snprintf(buf, sizeof buf, "%s: N=%zu gap %.6e vs %.6e", c.name.c_str(), reports[i].n, reports[i].gap, expected);
        o.require(std::abs(reports[i].gap - expected) <= 0.1 * expected, buf);
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  std::printf("kernels: %s\n", kernels::active().name);
  criterion(1, "named examples reproduce exactly", 1.0, named_examples);
  criterion(2, "decomposition round-trip on 100 random spectra", 10.0, round_trip);
  criterion(3, "witness restricted norm equals 2 - 1/(4N) below 2", 30.0, witness_exactness);
  criterion(4, "convex identity exact for n <= 10^4 on all plan kinds", 5.0, rational_identity);
  criterion(5, "polar, |T| and negative-count properties on 200 matrices", 60.0, numeric_properties);
  criterion(6, "sums of AN decompositions stay AN", 5.0, cone);
  criterion(7, "truncation gaps nonincreasing and within 10% of rate/N", 10.0, monotone_gap);
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include "anlab/numeric/truncation.hpp"

#include <cstdio>
#include <future>

#include "anlab/error.hpp"
#include "anlab/numeric/linalg.hpp"

namespace anlab::numeric {

TruncationReport truncate_spectrum(const SpectrumSpec& spec, std::size_t n) {
  std::vector<double> diag;
  diag.reserve(n);
  for (const auto& v : top_k_values(spec, n)) diag.push_back(to_double(v.value));
  const DenseMatrix t = DenseMatrix::diagonal(diag);
  const auto rn = restricted_norm(t, SubspaceBasis(DenseMatrix::identity(diag.size())));

  TruncationReport r;
  r.n = n;
  r.restricted_norm = rn.norm;
  r.sup_value = to_double(sup_norm(spec).norm);
  r.gap = r.sup_value - r.restricted_norm;
  r.attaining_vector = rn.attaining;
  return r;
}

TruncationReport truncate_witness(const WitnessPlan& plan, std::size_t n) {
  const auto rows = emit_basis_vectors(plan, n);
  std::vector<double> diag(2 * n);
  DenseMatrix v(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    diag[row.c_index] = to_double(plan.first_at(row.n));
    diag[row.s_index] = to_double(plan.second_at(row.n));
    v(row.c_index, i) = row.c;
    v(row.s_index, i) = row.s;
  }
  const auto rn = restricted_norm(DenseMatrix::diagonal(diag), SubspaceBasis(std::move(v)));

  TruncationReport r;
  r.n = n;
  r.restricted_norm = rn.norm;
  r.sup_value = to_double(plan.sup_value);
  r.gap = r.sup_value - r.restricted_norm;
  r.attaining_vector = rn.attaining;
  return r;
}

namespace {

void check_sizes(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw Error(ErrorCode::InvalidSpec, "truncation sizes must be nonempty");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0 || (i > 0 && sizes[i] <= sizes[i - 1])) {
      throw Error(ErrorCode::InvalidSpec, "truncation sizes must be positive and strictly increasing");
    }
  }
}

template <typename Fn>
std::vector<TruncationReport> run_all(const std::vector<std::size_t>& sizes, Fn fn) {
  check_sizes(sizes);
  std::vector<std::future<TruncationReport>> jobs;
  jobs.reserve(sizes.size());
  for (std::size_t n : sizes) jobs.push_back(std::async(std::launch::async, fn, n));
  std::vector<TruncationReport> out;
  out.reserve(sizes.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace

std::vector<TruncationReport> truncation_study(const SpectrumSpec& spec, const std::vector<std::size_t>& sizes) {
  return run_all(sizes, [&spec](std::size_t n) { return truncate_spectrum(spec, n); });
}

std::vector<TruncationReport> truncation_study(const WitnessPlan& plan, const std::vector<std::size_t>& sizes) {
  return run_all(sizes, [&plan](std::size_t n) { return truncate_witness(plan, n); });
}

std::string format_reports_csv(const std::vector<TruncationReport>& reports) {
  std::string out = "N,restricted_norm,sup_value,gap\n";
  char buf[128];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%zu,%.12e,%.12e,%.12e\n", r.n, r.restricted_norm, r.sup_value, r.gap);
    out += buf;
  }
  return out;
}

}  // namespace anlab::numeric

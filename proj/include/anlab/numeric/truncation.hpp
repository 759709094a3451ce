#pragma once

// Finite shadows of the symbolic results: materialize an N-term truncation,
// compute its (restricted) norm numerically and compare with the symbolic
// supremum.

#include <cstddef>
#include <string>
#include <vector>

#include "anlab/numeric/matrix.hpp"
#include "anlab/spectrum.hpp"
#include "anlab/witness.hpp"

namespace anlab::numeric {

struct TruncationReport {
  std::size_t n = 0;
  double restricted_norm = 0.0;
  double sup_value = 0.0;
  double gap = 0.0;  // sup_value - restricted_norm
  std::vector<cplx> attaining_vector;
};

/// diag(top_k_values(spec, N)) on the whole truncated space.
TruncationReport truncate_spectrum(const SpectrumSpec& spec, std::size_t n);

/// T on the 2N indices hosting f_1..f_N, g_1..g_N, restricted to the span of
/// e_1..e_N from emit_basis_vectors.
TruncationReport truncate_witness(const WitnessPlan& plan, std::size_t n);

/// One report per size. Sizes must be nonempty and strictly increasing;
/// sizes are evaluated concurrently and each report is independent of
/// scheduling.
std::vector<TruncationReport> truncation_study(const SpectrumSpec& spec, const std::vector<std::size_t>& sizes);
std::vector<TruncationReport> truncation_study(const WitnessPlan& plan, const std::vector<std::size_t>& sizes);

/// CSV with header `N,restricted_norm,sup_value,gap`, values as %.12e.
std::string format_reports_csv(const std::vector<TruncationReport>& reports);

}  // namespace anlab::numeric

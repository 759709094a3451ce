#pragma once

// Canonical αI + K + F form of a positive AN operator.

#include <cstdint>
#include <vector>

#include "anlab/rational.hpp"
#include "anlab/spectrum.hpp"

namespace anlab {

struct WeightedValue {
  Rational value;
  std::uint64_t multiplicity = 1;
  friend bool operator==(const WeightedValue&, const WeightedValue&) = default;
};

/// P = αI + K + F with α >= 0, K positive compact (finitely many atoms plus
/// tails decreasing to 0) and F self-adjoint finite rank.
///
/// The triple alone does not fix the dimension of the α-eigenspace, so it is
/// carried explicitly: `alpha_infinite` for an infinite-dimensional remainder,
/// `alpha_multiplicity` for finitely many copies of α beyond it.
struct Decomposition {
  Rational alpha;
  bool alpha_infinite = false;
  std::uint64_t alpha_multiplicity = 0;
  std::vector<WeightedValue> f_atoms;
  std::vector<WeightedValue> k_atoms;
  std::vector<TailSequence> k_tails;  // each Decreasing with limit 0

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws Error{InvalidDecomposition} when an invariant fails (negative α,
/// non-positive K value, K tail not decreasing to 0, zero multiplicity or a
/// reconstructed eigenvalue below 0).
void validate(const Decomposition& d);

/// Extracts (α, K, F). Case selection by (limit point L?, infinite atom M?):
///   neither  α = 0, every nonzero value goes to F
///   M only   α = M, F = finite atoms ≠ M shifted by -α
///   L only   α = L, K = tails and atoms above α shifted, F = atoms below α
///   both     α = L = M, as above with the infinite atom absorbed into αI
/// Values equal to α are counted in alpha_multiplicity rather than stored as
/// zero entries. Throws Error{ConditionViolation} when any condition fails.
Decomposition decompose(const SpectrumSpec& spec);

/// Inverse of decompose. Throws Error{InvalidDecomposition} if a
/// reconstructed value would be negative.
SpectrumSpec reconstruct(const Decomposition& d);

/// (α₁+α₂)I + (K₁+K₂) + (F₁+F₂) with the K and F parts supported on
/// mutually orthogonal eigenvectors. Tails are carried side by side.
Decomposition add_decompositions(const Decomposition& d1, const Decomposition& d2);

}  // namespace anlab

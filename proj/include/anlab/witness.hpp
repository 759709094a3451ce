#pragma once

// Explicit subspaces on which a positive operator fails to attain its norm.
//
// Every plan pairs two eigenvector families f_n, g_n with eigenvalue
// sequences and mixes them as e_n = c_n·x_n + sqrt(1 - c_n²)·y_n, where
// (x_n, y_n) is (f_n, g_n) or (g_n, f_n) depending on the plan kind. The
// coefficients are chosen so that
//
//     c_n²·first_n² + (1 - c_n²)·second_n² = γ_n²
//
// with γ_n strictly increasing to the supremum of the restricted norm. The
// restricted operator therefore has norm sup γ_n but ‖T e‖ < sup for every
// unit vector e of the subspace. Plans are closed-form; truncation happens
// only in emit_basis_vectors.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "anlab/rational.hpp"
#include "anlab/spectrum.hpp"

namespace anlab {

enum class WitnessKind {
  IncreasingApproach,
  TwoLimitPoints,
  TwoInfiniteMultiplicities,
  LimitVsInfMult_LimitBelow,
  LimitVsInfMult_LimitAbove,
};

std::string_view to_string(WitnessKind kind);

struct ConstantSequence {
  Rational value;
  friend bool operator==(const ConstantSequence&, const ConstantSequence&) = default;
};

/// term(n + start - 1) of a tail; start > 1 re-indexes the tail.
struct TailTermsSequence {
  TailSequence tail;
  std::uint64_t start = 1;
  friend bool operator==(const TailTermsSequence&, const TailTermsSequence&) = default;
};

using SequenceRule = std::variant<ConstantSequence, TailTermsSequence>;

Rational evaluate(const SequenceRule& rule, std::uint64_t n);

/// γ_n = base + delta / (2n)
struct ShiftedHarmonicGamma {
  Rational base;
  Rational delta;
  friend bool operator==(const ShiftedHarmonicGamma&, const ShiftedHarmonicGamma&) = default;
};

/// γ_n equals the n-th term of the first sequence (single-family plans).
struct SequenceGamma {
  friend bool operator==(const SequenceGamma&, const SequenceGamma&) = default;
};

using GammaRule = std::variant<ShiftedHarmonicGamma, SequenceGamma>;

enum class CSquaredRule {
  One,     // c_n² ≡ 1, single eigenvector family
  Convex,  // c_n² = (second_n² - γ_n²) / (second_n² - first_n²)
};

enum class Family { F, G };

struct WitnessPlan {
  WitnessKind kind = WitnessKind::IncreasingApproach;
  SequenceRule first;   // eigenvalues on the family weighted by c_n
  SequenceRule second;  // eigenvalues on the family weighted by sqrt(1 - c_n²)
  GammaRule gamma;
  CSquaredRule c_squared_rule = CSquaredRule::One;
  Family c_family = Family::F;  // which family carries c_n
  Rational sup_value;

  Rational first_at(std::uint64_t n) const { return evaluate(first, n); }
  Rational second_at(std::uint64_t n) const { return evaluate(second, n); }
  Rational gamma_at(std::uint64_t n) const;
  Rational c_squared_at(std::uint64_t n) const;

  /// The eigenvalue sequences under the f/g naming of the constructions:
  /// a_n on f_n, b_n on g_n.
  Rational a_at(std::uint64_t n) const { return c_family == Family::F ? first_at(n) : second_at(n); }
  Rational b_at(std::uint64_t n) const { return c_family == Family::F ? second_at(n) : first_at(n); }

  friend bool operator==(const WitnessPlan&, const WitnessPlan&) = default;
};

/// Closed span of an increasing tail's eigenvectors; γ_n = term(n).
WitnessPlan witness_increasing(const TailSequence& tail);

/// Two decreasing tails with limits a < b (either argument order). Tail a is
/// re-indexed to its first term below b. Throws Error{DegenerateTails} when
/// the limits coincide or a tail is not decreasing.
WitnessPlan witness_two_limit_points(const TailSequence& tail_a, const TailSequence& tail_b);

/// Two eigenvalues of infinite multiplicity β₁ < β₂ (either order).
/// Throws Error{EqualValues} when they coincide.
WitnessPlan witness_two_infmult(const Rational& beta1, const Rational& beta2);

/// A limit point β realized by a decreasing `tail` and an infinite-
/// multiplicity eigenvalue β̂ ≠ β. Throws Error{EqualValues} when β = β̂.
WitnessPlan witness_limit_vs_infmult(const Rational& limit, const Rational& infmult, const TailSequence& tail);

struct BasisRow {
  std::uint64_t n = 0;
  Rational c_squared;
  double c = 0.0;  // sqrt(c_n²)
  double s = 0.0;  // sqrt(1 - c_n²)
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  std::size_t c_index = 0;  // index weighted by c
  std::size_t s_index = 0;  // index weighted by s
};

/// The first N basis vectors e_1..e_N of the witness subspace inside a
/// 2N-dimensional truncation where f_n and g_n occupy the interleaved
/// indices 2(n-1) and 2(n-1)+1.
std::vector<BasisRow> emit_basis_vectors(const WitnessPlan& plan, std::size_t count);

}  // namespace anlab

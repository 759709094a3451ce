#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "anlab/decomposer.hpp"
#include "anlab/spectrum.hpp"
#include "anlab/witness.hpp"

namespace anlab {

enum class VerdictReason {
  FiniteRankPlusScalar,
  CompactPlusScalarPlusFiniteRank,
  Fail_IncreasingApproach,
  Fail_TwoLimitPoints,
  Fail_TwoInfiniteMultiplicities,
  Fail_LimitNeqInfMult,
};

std::string_view to_string(VerdictReason reason);

/// satisfied ⟺ decomposition present ⟺ reason is one of the two success
/// codes; !satisfied ⟺ witness present.
struct ANVerdict {
  bool satisfied = false;
  VerdictReason reason = VerdictReason::FiniteRankPlusScalar;
  std::optional<Decomposition> decomposition;
  std::optional<WitnessPlan> witness;
};

struct NormingVerdict {
  bool satisfied = false;
  std::optional<Rational> attaining_value;
};

/// A positive operator attains its norm iff the norm is an eigenvalue.
NormingVerdict classify_norming(const SpectrumSpec& spec);

/// AN verdict for a positive spectrum. On failure the reason is the first
/// failing condition in the order (i), (ii), (iii), (iv), with a matching
/// witness plan.
ANVerdict classify_positive(const SpectrumSpec& spec);

// ---------------------------------------------------------------------------
// Diagonal complex operators, classified through |T|.

/// λ = modulus · e^{iπ·phase}
struct FixedComplex {
  Rational modulus;
  Rational phase;  // multiple of π
  Multiplicity multiplicity = Multiplicity::finite(1);
};

/// Entries whose moduli follow a tail; the phase rule is informational.
struct PhasedTail {
  TailSequence modulus_tail;
  std::string phase_rule;
};

/// Infinitely many entries with a common modulus and distinct phases, as in
/// a diagonal isometry.
struct ConstantModulusFamily {
  Rational modulus;
};

using ComplexPart = std::variant<FixedComplex, PhasedTail, ConstantModulusFamily>;

struct DiagonalOperatorSpec {
  std::vector<ComplexPart> entries;
};

void validate(const DiagonalOperatorSpec& dspec);

/// The eigenvalue multiset of |T|.
SpectrumSpec modulus_spectrum(const DiagonalOperatorSpec& dspec);

ANVerdict classify_diagonal(const DiagonalOperatorSpec& dspec);

}  // namespace anlab

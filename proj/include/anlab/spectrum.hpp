#pragma once

// Symbolic eigenvalue spectra of positive diagonalizable operators.
//
// A spectrum is a finite list of atoms (a value with finite or infinite
// multiplicity) plus a finite list of monotone tails with closed-form terms.
// Every value is an exact rational. Distinctness across parts is not
// enforced: multiplicities aggregate by multiset union.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "anlab/rational.hpp"

namespace anlab {

/// Positive finite count or the INFINITE token.
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t count);
  static Multiplicity infinite() { return Multiplicity{}; }

  bool is_infinite() const noexcept { return !count_.has_value(); }
  /// Only meaningful when finite.
  std::uint64_t count() const { return count_.value(); }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  Multiplicity() = default;
  explicit Multiplicity(std::uint64_t c) : count_(c) {}
  std::optional<std::uint64_t> count_;
};

/// Sum of multiplicities; INFINITE absorbs.
Multiplicity operator+(const Multiplicity& a, const Multiplicity& b);

struct EigenvalueAtom {
  Rational value;
  Multiplicity multiplicity = Multiplicity::finite(1);

  friend bool operator==(const EigenvalueAtom&, const EigenvalueAtom&) = default;
};

enum class Direction { Decreasing, Increasing };

/// term(n) = limit ± c / n^p
struct HarmonicRule {
  Rational c;
  unsigned p = 1;
  friend bool operator==(const HarmonicRule&, const HarmonicRule&) = default;
};

/// term(n) = limit ± c · r^n, 0 < r < 1
struct GeometricRule {
  Rational c;
  Rational r;
  friend bool operator==(const GeometricRule&, const GeometricRule&) = default;
};

using TailRule = std::variant<HarmonicRule, GeometricRule>;

/// A strictly monotone sequence of eigenvalues converging to `limit`. The
/// sign of the offset is fixed by the direction: + for Decreasing, - for
/// Increasing.
struct TailSequence {
  Rational limit;
  Direction direction = Direction::Decreasing;
  TailRule rule = HarmonicRule{Rational(1), 1};
  std::uint64_t term_multiplicity = 1;

  /// |term(n) - limit| for n >= 1.
  Rational offset(std::uint64_t n) const;
  /// The n-th eigenvalue, n >= 1.
  Rational term(std::uint64_t n) const;

  friend bool operator==(const TailSequence&, const TailSequence&) = default;
};

struct SpectrumSpec {
  std::vector<EigenvalueAtom> atoms;
  std::vector<TailSequence> tails;

  friend bool operator==(const SpectrumSpec&, const SpectrumSpec&) = default;
};

/// Throws Error{InvalidSpec} describing the first violated invariant.
void validate(const TailSequence& tail);
void validate(const SpectrumSpec& spec);

// ---------------------------------------------------------------------------
// Enumeration

struct ValueSource {
  enum class Kind { Atom, Tail };
  Kind kind = Kind::Atom;
  std::size_t index = 0;  // declaration index in atoms or tails
  std::uint64_t term = 0; // 1-based term index for tails, 0 for atoms

  friend bool operator==(const ValueSource&, const ValueSource&) = default;
};

struct RankedValue {
  Rational value;
  ValueSource source;
};

/// The first k eigenvalues of the multiset, counting multiplicity, produced
/// by a max-of-heads merge: atoms by value, Decreasing tails in term order,
/// INFINITE atoms supplying unlimited copies. Ties go to atoms before tails,
/// then declaration order. Without Increasing tails the result is sorted
/// non-increasing and top_k(k+1) extends top_k(k). An Increasing tail has no
/// largest term, so its head is its next unused term in index order; the
/// merge stays prefix-stable but need not be sorted once such a head is taken.
std::vector<RankedValue> top_k_values(const SpectrumSpec& spec, std::size_t k);

/// Values only, same order as top_k_values.
std::vector<Rational> top_k_plain(const SpectrumSpec& spec, std::size_t k);

// ---------------------------------------------------------------------------
// Limit points and condition checks

enum class Approach { FromAbove, FromBelow, Both };

struct LimitPoint {
  Rational value;
  Approach approach = Approach::FromAbove;
  std::vector<std::size_t> tails;
};

struct LimitPointReport {
  std::vector<LimitPoint> points;  // ascending by value
};

LimitPointReport limit_points(const SpectrumSpec& spec);

struct ConditionResult {
  bool holds = true;
  std::vector<std::size_t> offending_atoms;
  std::vector<std::size_t> offending_tails;

  friend bool operator==(const ConditionResult&, const ConditionResult&) = default;
};

/// The four necessary spectral conditions for a positive AN operator:
///  (i)   every subset of eigenvalues attains its supremum
///  (ii)  at most one limit point, approached only from above
///  (iii) at most one eigenvalue of infinite multiplicity
///  (iv)  a limit point and an infinite-multiplicity eigenvalue coincide
struct ConditionReport {
  ConditionResult sup_is_max;             // (i)
  ConditionResult single_limit_above;     // (ii)
  ConditionResult single_infinite;        // (iii)
  ConditionResult limit_matches_infinite; // (iv)

  bool all_hold() const noexcept {
    return sup_is_max.holds && single_limit_above.holds && single_infinite.holds &&
           limit_matches_infinite.holds;
  }

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

ConditionReport check_conditions(const SpectrumSpec& spec);

struct SupNorm {
  Rational norm;
  bool attained = false;
};

/// Operator norm of the positive operator: the supremum of all represented
/// values, and whether some eigenvalue equals it.
SupNorm sup_norm(const SpectrumSpec& spec);

/// Distinct values carried by INFINITE atoms, ascending.
std::vector<Rational> infinite_values(const SpectrumSpec& spec);

// ---------------------------------------------------------------------------
// Transformations

/// Multiplies every represented value by factor > 0.
SpectrumSpec scaled(const SpectrumSpec& spec, const Rational& factor);

/// Spectrum of T² (equivalently T*T for positive T). Exact only when every
/// tail converges to 0; otherwise throws Error{InvalidSpec}.
SpectrumSpec squared(const SpectrumSpec& spec);

/// Atoms merged by value (descending), zero-multiplicity entries removed,
/// tails sorted by a fixed key. Two specs with equal canonical forms
/// describe the same atoms and tail rules.
SpectrumSpec canonical(const SpectrumSpec& spec);

bool structurally_equal(const SpectrumSpec& a, const SpectrumSpec& b);

std::string describe(const TailSequence& tail);

}  // namespace anlab

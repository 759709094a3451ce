#include "anlab/witness.hpp"

#include <cmath>

#include "anlab/error.hpp"

namespace anlab {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::IncreasingApproach: return "IncreasingApproach";
    case WitnessKind::TwoLimitPoints: return "TwoLimitPoints";
    case WitnessKind::TwoInfiniteMultiplicities: return "TwoInfiniteMultiplicities";
    case WitnessKind::LimitVsInfMult_LimitBelow: return "LimitVsInfMult_LimitBelow";
    case WitnessKind::LimitVsInfMult_LimitAbove: return "LimitVsInfMult_LimitAbove";
  }
  return "Unknown";
}

Rational evaluate(const SequenceRule& rule, std::uint64_t n) {
  if (const auto* c = std::get_if<ConstantSequence>(&rule)) return c->value;
  const auto& t = std::get<TailTermsSequence>(rule);
  return t.tail.term(n + t.start - 1);
}

Rational WitnessPlan::gamma_at(std::uint64_t n) const {
  if (const auto* g = std::get_if<ShiftedHarmonicGamma>(&gamma)) {
    Rational out = g->base + g->delta / Rational(static_cast<unsigned long>(2 * n));
    out.canonicalize();
    return out;
  }
  return first_at(n);
}

Rational WitnessPlan::c_squared_at(std::uint64_t n) const {
  if (c_squared_rule == CSquaredRule::One) return Rational(1);
  const Rational x = first_at(n);
  const Rational y = second_at(n);
  const Rational g = gamma_at(n);
  Rational out = (y * y - g * g) / (y * y - x * x);
  out.canonicalize();
  return out;
}

namespace {

void require_decreasing(const TailSequence& tail, const char* what) {
  if (tail.direction != Direction::Decreasing) {
    throw Error(ErrorCode::DegenerateTails, std::string(what) + " must be a decreasing tail: " + describe(tail));
  }
}

}  // namespace

WitnessPlan witness_increasing(const TailSequence& tail) {
  if (tail.direction != Direction::Increasing) {
    throw Error(ErrorCode::InvalidSpec, "increasing-approach witness needs an increasing tail: " + describe(tail));
  }
  WitnessPlan plan;
  plan.kind = WitnessKind::IncreasingApproach;
  plan.first = TailTermsSequence{tail, 1};
  plan.second = TailTermsSequence{tail, 1};
  plan.gamma = SequenceGamma{};
  plan.c_squared_rule = CSquaredRule::One;
  plan.sup_value = tail.limit;
  return plan;
}

WitnessPlan witness_two_limit_points(const TailSequence& tail_a, const TailSequence& tail_b) {
  require_decreasing(tail_a, "tail_a");
  require_decreasing(tail_b, "tail_b");
  if (tail_a.limit == tail_b.limit) {
    throw Error(ErrorCode::DegenerateTails, "both tails converge to " + format_rational(tail_a.limit));
  }
  const TailSequence& lower = tail_a.limit < tail_b.limit ? tail_a : tail_b;
  const TailSequence& upper = tail_a.limit < tail_b.limit ? tail_b : tail_a;
  const Rational& b = upper.limit;

  // first term of the lower tail strictly below b; exists since it converges to a < b
  std::uint64_t start = 1;
  while (lower.term(start) >= b) ++start;

  WitnessPlan plan;
  plan.kind = WitnessKind::TwoLimitPoints;
  plan.first = TailTermsSequence{lower, start};
  plan.second = TailTermsSequence{upper, 1};
  plan.gamma = ShiftedHarmonicGamma{b, Rational(lower.term(start) - b)};
  plan.c_squared_rule = CSquaredRule::Convex;
  plan.c_family = Family::F;
  plan.sup_value = b;
  return plan;
}

WitnessPlan witness_two_infmult(const Rational& beta1, const Rational& beta2) {
  if (beta1 == beta2) {
    throw Error(ErrorCode::EqualValues, "infinite-multiplicity values coincide at " + format_rational(beta1));
  }
  const Rational& lo = beta1 < beta2 ? beta1 : beta2;
  const Rational& hi = beta1 < beta2 ? beta2 : beta1;

  WitnessPlan plan;
  plan.kind = WitnessKind::TwoInfiniteMultiplicities;
  plan.first = ConstantSequence{lo};
  plan.second = ConstantSequence{hi};
  plan.gamma = ShiftedHarmonicGamma{hi, Rational(lo - hi)};
  plan.c_squared_rule = CSquaredRule::Convex;
  plan.c_family = Family::F;
  plan.sup_value = hi;
  return plan;
}

WitnessPlan witness_limit_vs_infmult(const Rational& limit, const Rational& infmult, const TailSequence& tail) {
  if (limit == infmult) {
    throw Error(ErrorCode::EqualValues, "limit point equals the infinite-multiplicity value; no witness exists");
  }
  require_decreasing(tail, "tail");
  if (tail.limit != limit) {
    throw Error(ErrorCode::InvalidSpec, "tail " + describe(tail) + " does not converge to " + format_rational(limit));
  }

  WitnessPlan plan;
  plan.c_squared_rule = CSquaredRule::Convex;
  if (limit < infmult) {
    // γ_n = β̂ + (β - β̂)/(2n); γ_1 is the midpoint of β and β̂, and the tail
    // must start at or below it for c_n² to stay in [0,1]
    const Rational gamma1 = (limit + infmult) / 2;
    std::uint64_t start = 1;
    while (tail.term(start) > gamma1) ++start;

    plan.kind = WitnessKind::LimitVsInfMult_LimitBelow;
    plan.first = TailTermsSequence{tail, start};
    plan.second = ConstantSequence{infmult};
    plan.gamma = ShiftedHarmonicGamma{infmult, Rational(limit - infmult)};
    plan.c_family = Family::F;
    plan.sup_value = infmult;
  } else {
    // γ_n = β + (β̂ - β)/(2n) and e_n = c_n g_n + sqrt(1 - c_n²) f_n
    plan.kind = WitnessKind::LimitVsInfMult_LimitAbove;
    plan.first = ConstantSequence{infmult};
    plan.second = TailTermsSequence{tail, 1};
    plan.gamma = ShiftedHarmonicGamma{limit, Rational(infmult - limit)};
    plan.c_family = Family::G;
    plan.sup_value = limit;
  }
  return plan;
}

std::vector<BasisRow> emit_basis_vectors(const WitnessPlan& plan, std::size_t count) {
  std::vector<BasisRow> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BasisRow row;
    row.n = i + 1;
    row.c_squared = plan.c_squared_at(row.n);
    const double c2 = to_double(row.c_squared);
    row.c = std::sqrt(c2);
    row.s = std::sqrt(to_double(Rational(1 - row.c_squared)));
    row.c_index = 2 * i;
    row.s_index = 2 * i + 1;
    if (plan.c_family == Family::F) {
      row.f_index = row.c_index;
      row.g_index = row.s_index;
    } else {
      row.g_index = row.c_index;
      row.f_index = row.s_index;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace anlab

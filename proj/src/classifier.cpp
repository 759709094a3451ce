#include "anlab/classifier.hpp"

#include "anlab/error.hpp"

namespace anlab {

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::FiniteRankPlusScalar: return "FiniteRankPlusScalar";
    case VerdictReason::CompactPlusScalarPlusFiniteRank: return "CompactPlusScalarPlusFiniteRank";
    case VerdictReason::Fail_IncreasingApproach: return "Fail_IncreasingApproach";
    case VerdictReason::Fail_TwoLimitPoints: return "Fail_TwoLimitPoints";
    case VerdictReason::Fail_TwoInfiniteMultiplicities: return "Fail_TwoInfiniteMultiplicities";
    case VerdictReason::Fail_LimitNeqInfMult: return "Fail_LimitNeqInfMult";
  }
  return "Unknown";
}

NormingVerdict classify_norming(const SpectrumSpec& spec) {
  const auto norm = sup_norm(spec);
  if (norm.attained) return {true, norm.norm};
  return {false, std::nullopt};
}

ANVerdict classify_positive(const SpectrumSpec& spec) {
  const auto report = check_conditions(spec);
  ANVerdict verdict;

  if (report.all_hold()) {
    verdict.satisfied = true;
    verdict.decomposition = decompose(spec);
    verdict.reason = verdict.decomposition->k_tails.empty() ? VerdictReason::FiniteRankPlusScalar
                                                             : VerdictReason::CompactPlusScalarPlusFiniteRank;
    return verdict;
  }

  verdict.satisfied = false;
  if (!report.sup_is_max.holds) {
    verdict.reason = VerdictReason::Fail_IncreasingApproach;
    verdict.witness = witness_increasing(spec.tails.at(report.sup_is_max.offending_tails.front()));
  } else if (!report.single_limit_above.holds) {
    // (i) holds, so every tail decreases and there are two distinct limits
    const auto limits = limit_points(spec);
    verdict.reason = VerdictReason::Fail_TwoLimitPoints;
    verdict.witness = witness_two_limit_points(spec.tails.at(limits.points.at(0).tails.front()),
                                               spec.tails.at(limits.points.at(1).tails.front()));
  } else if (!report.single_infinite.holds) {
    const auto inf = infinite_values(spec);
    verdict.reason = VerdictReason::Fail_TwoInfiniteMultiplicities;
    verdict.witness = witness_two_infmult(inf.at(0), inf.at(1));
  } else {
    const auto limits = limit_points(spec);
    const auto& point = limits.points.at(0);
    verdict.reason = VerdictReason::Fail_LimitNeqInfMult;
    verdict.witness = witness_limit_vs_infmult(point.value, infinite_values(spec).at(0),
                                               spec.tails.at(point.tails.front()));
  }
  return verdict;
}

void validate(const DiagonalOperatorSpec& dspec) {
  if (dspec.entries.empty()) throw Error(ErrorCode::InvalidSpec, "diagonal operator needs at least one entry");
  for (const auto& part : dspec.entries) {
    std::visit(
        [](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, PhasedTail>) {
            validate(p.modulus_tail);
          } else {
            if (p.modulus < 0) throw Error(ErrorCode::InvalidSpec, "modulus must be >= 0");
          }
        },
        part);
  }
}

SpectrumSpec modulus_spectrum(const DiagonalOperatorSpec& dspec) {
  SpectrumSpec spec;
  for (const auto& part : dspec.entries) {
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, FixedComplex>) {
            spec.atoms.push_back({p.modulus, p.multiplicity});
          } else if constexpr (std::is_same_v<P, PhasedTail>) {
            spec.tails.push_back(p.modulus_tail);
          } else {
            spec.atoms.push_back({p.modulus, Multiplicity::infinite()});
          }
        },
        part);
  }
  return spec;
}

ANVerdict classify_diagonal(const DiagonalOperatorSpec& dspec) { return classify_positive(modulus_spectrum(dspec)); }

}  // namespace anlab

#include "anlab/decomposer.hpp"

#include <algorithm>

#include "anlab/error.hpp"

namespace anlab {

void validate(const Decomposition& d) {
  if (d.alpha < 0) throw Error(ErrorCode::InvalidDecomposition, "alpha must be >= 0");
  for (const auto& f : d.f_atoms) {
    if (f.multiplicity == 0) throw Error(ErrorCode::InvalidDecomposition, "F multiplicity must be >= 1");
    if (d.alpha + f.value < 0) {
      throw Error(ErrorCode::InvalidDecomposition,
                  "alpha + f = " + format_rational(Rational(d.alpha + f.value)) + " is negative");
    }
  }
  for (const auto& k : d.k_atoms) {
    if (k.multiplicity == 0) throw Error(ErrorCode::InvalidDecomposition, "K multiplicity must be >= 1");
    if (k.value <= 0) throw Error(ErrorCode::InvalidDecomposition, "K atoms must be > 0");
  }
  for (const auto& tail : d.k_tails) {
    if (tail.direction != Direction::Decreasing || tail.limit != 0) {
      throw Error(ErrorCode::InvalidDecomposition, "K tail must decrease to 0: " + describe(tail));
    }
    try {
      validate(tail);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidDecomposition, e.what());
    }
  }
  if (!d.alpha_infinite && d.alpha_multiplicity == 0 && d.f_atoms.empty() && d.k_atoms.empty() &&
      d.k_tails.empty()) {
    throw Error(ErrorCode::InvalidDecomposition, "decomposition represents the zero-dimensional space");
  }
}

namespace {

void push_weighted(std::vector<WeightedValue>& into, Rational value, const Multiplicity& m) {
  into.push_back({std::move(value), m.count()});
}

}  // namespace

Decomposition decompose(const SpectrumSpec& spec) {
  const auto conditions = check_conditions(spec);
  if (!conditions.all_hold()) {
    throw Error(ErrorCode::ConditionViolation, "spectrum violates the AN conditions; no αI + K + F form exists");
  }
  const auto limits = limit_points(spec);
  const auto inf = infinite_values(spec);
  const bool has_limit = !limits.points.empty();
  const bool has_inf = !inf.empty();

  Decomposition d;
  if (has_limit) {
    d.alpha = limits.points.front().value;
  } else if (has_inf) {
    d.alpha = inf.front();
  } else {
    d.alpha = 0;
  }
  d.alpha_infinite = has_inf;

  for (const auto& atom : spec.atoms) {
    if (atom.multiplicity.is_infinite()) continue;  // value == alpha by (iii)/(iv)
    Rational shift = atom.value - d.alpha;
    if (shift == 0) {
      d.alpha_multiplicity += atom.multiplicity.count();
    } else if (shift < 0 || !has_limit) {
      // atoms above α join K only when K already carries a tail
      push_weighted(d.f_atoms, std::move(shift), atom.multiplicity);
    } else {
      push_weighted(d.k_atoms, std::move(shift), atom.multiplicity);
    }
  }
  for (const auto& tail : spec.tails) {
    TailSequence k = tail;
    k.limit = 0;
    d.k_tails.push_back(std::move(k));
  }
  return d;
}

SpectrumSpec reconstruct(const Decomposition& d) {
  validate(d);
  SpectrumSpec spec;
  for (const auto& f : d.f_atoms) {
    spec.atoms.push_back({Rational(d.alpha + f.value), Multiplicity::finite(f.multiplicity)});
  }
  for (const auto& k : d.k_atoms) {
    spec.atoms.push_back({Rational(d.alpha + k.value), Multiplicity::finite(k.multiplicity)});
  }
  if (d.alpha_infinite) {
    spec.atoms.push_back({d.alpha, Multiplicity::infinite()});
  } else if (d.alpha_multiplicity > 0) {
    spec.atoms.push_back({d.alpha, Multiplicity::finite(d.alpha_multiplicity)});
  }
  if (d.alpha_infinite && d.alpha_multiplicity > 0) {
    // finite copies on top of an infinite remainder are kept for structure
    spec.atoms.push_back({d.alpha, Multiplicity::finite(d.alpha_multiplicity)});
  }
  for (const auto& k : d.k_tails) {
    TailSequence t = k;
    t.limit = d.alpha;
    spec.tails.push_back(std::move(t));
  }
  return spec;
}

Decomposition add_decompositions(const Decomposition& d1, const Decomposition& d2) {
  validate(d1);
  validate(d2);
  Decomposition sum;
  sum.alpha = d1.alpha + d2.alpha;
  sum.alpha_infinite = d1.alpha_infinite || d2.alpha_infinite;
  sum.alpha_multiplicity = d1.alpha_multiplicity + d2.alpha_multiplicity;
  sum.f_atoms = d1.f_atoms;
  sum.f_atoms.insert(sum.f_atoms.end(), d2.f_atoms.begin(), d2.f_atoms.end());
  sum.k_atoms = d1.k_atoms;
  sum.k_atoms.insert(sum.k_atoms.end(), d2.k_atoms.begin(), d2.k_atoms.end());
  sum.k_tails = d1.k_tails;
  sum.k_tails.insert(sum.k_tails.end(), d2.k_tails.begin(), d2.k_tails.end());
  return sum;
}

}  // namespace anlab

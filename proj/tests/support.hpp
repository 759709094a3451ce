#pragma once

// Shared fixtures for the unit and acceptance tests: seeded random spectra.

#include <random>
#include <vector>

#include "anlab/decomposer.hpp"
#include "anlab/numeric/matrix.hpp"
#include "anlab/spectrum.hpp"

namespace anlab::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline Rational random_rational(std::mt19937_64& rng, long max_num = 12, long max_den = 6) {
  std::uniform_int_distribution<long> num(0, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_positive(std::mt19937_64& rng, long max_num = 12, long max_den = 6) {
  std::uniform_int_distribution<long> num(1, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline TailSequence random_tail(std::mt19937_64& rng, const Rational& limit, Direction dir) {
  TailSequence t;
  t.limit = dir == Direction::Increasing && limit == 0 ? Rational(1) : limit;
  t.direction = dir;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<unsigned> power(1, 3);
  std::uniform_int_distribution<std::uint64_t> mult(1, 2);
  Rational c = random_positive(rng, 4, 4);
  if (dir == Direction::Increasing && c > t.limit) c = t.limit;  // keeps term(1) >= 0 when limit > 0
  if (coin(rng) == 0) {
    t.rule = HarmonicRule{c, power(rng)};
  } else {
    std::uniform_int_distribution<long> rnum(1, 4);
    t.rule = GeometricRule{c, Rational(rnum(rng), 5)};
  }
  t.term_multiplicity = mult(rng);
  return t;
}

inline Multiplicity random_finite_multiplicity(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> m(1, 3);
  return Multiplicity::finite(m(rng));
}

/// A spectrum satisfying all four conditions: at most 6 atoms, at most one
/// decreasing tail, and any infinite-multiplicity atom sitting at the limit.
inline SpectrumSpec random_an_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shape(0, 3);  // bit 0: tail, bit 1: infinite atom
  std::uniform_int_distribution<int> atom_count(0, 6);
  const int s = shape(rng);
  const bool tail = (s & 1) != 0;
  const bool inf = (s & 2) != 0;
  const Rational alpha = random_rational(rng);

  SpectrumSpec spec;
  int atoms = atom_count(rng);
  if (inf) {
    spec.atoms.push_back({alpha, Multiplicity::infinite()});
    atoms = std::min(atoms, 5);
  }
  for (int i = 0; i < atoms; ++i) spec.atoms.push_back({random_rational(rng), random_finite_multiplicity(rng)});
  if (tail) spec.tails.push_back(random_tail(rng, inf ? alpha : random_rational(rng), Direction::Decreasing));
  if (spec.atoms.empty() && spec.tails.empty()) spec.atoms.push_back({alpha, Multiplicity::finite(1)});
  std::shuffle(spec.atoms.begin(), spec.atoms.end(), rng);
  return spec;
}

/// Any valid spectrum: up to 4 atoms (some infinite) and up to 2 tails of
/// either direction.
inline SpectrumSpec random_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> tails(0, 2);
  std::uniform_int_distribution<int> coin(0, 3);
  SpectrumSpec spec;
  const int atoms = count(rng);
  for (int i = 0; i < atoms; ++i) {
    spec.atoms.push_back({random_rational(rng, 6, 3),
                          coin(rng) == 0 ? Multiplicity::infinite() : random_finite_multiplicity(rng)});
  }
  const int t = tails(rng);
  for (int i = 0; i < t; ++i) {
    const Direction dir = coin(rng) == 0 ? Direction::Increasing : Direction::Decreasing;
    spec.tails.push_back(random_tail(rng, random_rational(rng, 6, 3), dir));
  }
  if (spec.atoms.empty() && spec.tails.empty()) spec.atoms.push_back({Rational(1), Multiplicity::finite(1)});
  return spec;
}

/// Hermitian B·diag(±1)·B* of rank at most `rank`, with `negative` of the
/// signs negative.
inline numeric::DenseMatrix random_low_rank_hermitian(std::size_t n, std::size_t rank, std::size_t negative,
                                                      std::mt19937_64& rng) {
  const auto b = numeric::random_complex(n, rank, rng);
  std::vector<double> signs(rank, 1.0);
  for (std::size_t i = 0; i < std::min(negative, rank); ++i) signs[i] = -1.0;
  const auto d = numeric::DenseMatrix::diagonal(std::span<const double>(signs));
  return numeric::hermitian_part(b * d * b.adjoint());
}

}  // namespace anlab::testing

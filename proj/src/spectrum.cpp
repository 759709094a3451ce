#include "anlab/spectrum.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "anlab/error.hpp"

namespace anlab {

Multiplicity Multiplicity::finite(std::uint64_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidSpec, "multiplicity must be >= 1");
  return Multiplicity{count};
}

Multiplicity operator+(const Multiplicity& a, const Multiplicity& b) {
  if (a.is_infinite() || b.is_infinite()) return Multiplicity::infinite();
  return Multiplicity::finite(a.count() + b.count());
}

Rational TailSequence::offset(std::uint64_t n) const {
  return std::visit(
      [n](const auto& r) -> Rational {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, HarmonicRule>) {
          return r.c / pow(Rational(static_cast<unsigned long>(n)), r.p);
        } else {
          return r.c * pow(r.r, n);
        }
      },
      rule);
}

Rational TailSequence::term(std::uint64_t n) const {
  Rational out = direction == Direction::Decreasing ? Rational(limit + offset(n)) : Rational(limit - offset(n));
  out.canonicalize();
  return out;
}

void validate(const TailSequence& tail) {
  if (tail.limit < 0) throw Error(ErrorCode::InvalidSpec, "tail limit must be >= 0");
  if (tail.term_multiplicity == 0) throw Error(ErrorCode::InvalidSpec, "term_multiplicity must be >= 1");
  std::visit(
      [](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if (r.c <= 0) throw Error(ErrorCode::InvalidSpec, "tail coefficient c must be > 0");
        if constexpr (std::is_same_v<R, HarmonicRule>) {
          if (r.p == 0) throw Error(ErrorCode::InvalidSpec, "harmonic exponent p must be >= 1");
        } else {
          if (r.r <= 0 || r.r >= 1) throw Error(ErrorCode::InvalidSpec, "geometric ratio r must lie in (0,1)");
        }
      },
      tail.rule);
  // term(1) is the smallest term of an increasing tail
  if (tail.direction == Direction::Increasing && tail.term(1) < 0) {
    throw Error(ErrorCode::InvalidSpec, "increasing tail has negative terms (term(1) < 0)");
  }
}

void validate(const SpectrumSpec& spec) {
  if (spec.atoms.empty() && spec.tails.empty()) {
    throw Error(ErrorCode::InvalidSpec, "spectrum needs at least one atom or tail");
  }
  for (const auto& atom : spec.atoms) {
    if (atom.value < 0) throw Error(ErrorCode::InvalidSpec, "atom value must be >= 0");
  }
  for (const auto& tail : spec.tails) validate(tail);
}

// ---------------------------------------------------------------------------

namespace {

struct AtomCursor {
  std::size_t index;
  std::uint64_t remaining;  // ignored when infinite
  bool infinite;
};

struct TailCursor {
  std::uint64_t term = 1;
  std::uint64_t copies_used = 0;
  Rational head;
};

}  // namespace

std::vector<RankedValue> top_k_values(const SpectrumSpec& spec, std::size_t k) {
  std::vector<RankedValue> out;
  out.reserve(k);

  // Atoms ordered by value descending, declaration order among equals.
  std::vector<AtomCursor> atoms;
  for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
    const auto& m = spec.atoms[i].multiplicity;
    atoms.push_back({i, m.is_infinite() ? 0 : m.count(), m.is_infinite()});
  }
  std::stable_sort(atoms.begin(), atoms.end(), [&](const AtomCursor& a, const AtomCursor& b) {
    return spec.atoms[a.index].value > spec.atoms[b.index].value;
  });
  std::size_t atom_pos = 0;

  std::vector<TailCursor> tails(spec.tails.size());
  for (std::size_t t = 0; t < tails.size(); ++t) tails[t].head = spec.tails[t].term(1);

  while (out.size() < k) {
    const Rational* best = nullptr;
    bool best_is_atom = false;
    std::size_t best_tail = 0;

    if (atom_pos < atoms.size()) {
      best = &spec.atoms[atoms[atom_pos].index].value;
      best_is_atom = true;
    }
    for (std::size_t t = 0; t < tails.size(); ++t) {
      // strict comparison keeps atoms and earlier tails ahead on ties
      if (best == nullptr || tails[t].head > *best) {
        best = &tails[t].head;
        best_is_atom = false;
        best_tail = t;
      }
    }
    if (best == nullptr) break;  // only finite atoms, all consumed

    if (best_is_atom) {
      auto& cur = atoms[atom_pos];
      out.push_back({spec.atoms[cur.index].value, {ValueSource::Kind::Atom, cur.index, 0}});
      if (!cur.infinite && --cur.remaining == 0) ++atom_pos;
    } else {
      auto& cur = tails[best_tail];
      out.push_back({cur.head, {ValueSource::Kind::Tail, best_tail, cur.term}});
      if (++cur.copies_used == spec.tails[best_tail].term_multiplicity) {
        cur.copies_used = 0;
        ++cur.term;
        cur.head = spec.tails[best_tail].term(cur.term);
      }
    }
  }
  return out;
}

std::vector<Rational> top_k_plain(const SpectrumSpec& spec, std::size_t k) {
  std::vector<Rational> out;
  for (auto& rv : top_k_values(spec, k)) out.push_back(std::move(rv.value));
  return out;
}

// ---------------------------------------------------------------------------

LimitPointReport limit_points(const SpectrumSpec& spec) {
  std::map<Rational, LimitPoint> by_value;
  for (std::size_t t = 0; t < spec.tails.size(); ++t) {
    const auto& tail = spec.tails[t];
    const Approach dir = tail.direction == Direction::Decreasing ? Approach::FromAbove : Approach::FromBelow;
    auto [it, inserted] = by_value.try_emplace(tail.limit, LimitPoint{tail.limit, dir, {}});
    if (!inserted && it->second.approach != dir) it->second.approach = Approach::Both;
    it->second.tails.push_back(t);
  }
  LimitPointReport report;
  for (auto& [value, point] : by_value) report.points.push_back(std::move(point));
  return report;
}

std::vector<Rational> infinite_values(const SpectrumSpec& spec) {
  std::vector<Rational> values;
  for (const auto& atom : spec.atoms) {
    if (atom.multiplicity.is_infinite()) values.push_back(atom.value);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

ConditionReport check_conditions(const SpectrumSpec& spec) {
  ConditionReport report;

  for (std::size_t t = 0; t < spec.tails.size(); ++t) {
    if (spec.tails[t].direction == Direction::Increasing) {
      report.sup_is_max.holds = false;
      report.sup_is_max.offending_tails.push_back(t);
    }
  }

  const auto limits = limit_points(spec);
  if (limits.points.size() > 1) {
    report.single_limit_above.holds = false;
    for (std::size_t t = 0; t < spec.tails.size(); ++t) report.single_limit_above.offending_tails.push_back(t);
  } else if (!limits.points.empty() && limits.points.front().approach != Approach::FromAbove) {
    report.single_limit_above.holds = false;
    report.single_limit_above.offending_tails = report.sup_is_max.offending_tails;
  }

  std::vector<std::size_t> infinite_atoms;
  for (std::size_t a = 0; a < spec.atoms.size(); ++a) {
    if (spec.atoms[a].multiplicity.is_infinite()) infinite_atoms.push_back(a);
  }
  const auto inf_values = infinite_values(spec);
  if (inf_values.size() > 1) {
    report.single_infinite.holds = false;
    report.single_infinite.offending_atoms = infinite_atoms;
  }

  if (limits.points.size() == 1 && inf_values.size() == 1 && limits.points.front().value != inf_values.front()) {
    report.limit_matches_infinite.holds = false;
    report.limit_matches_infinite.offending_atoms = infinite_atoms;
    report.limit_matches_infinite.offending_tails = limits.points.front().tails;
  }
  return report;
}

SupNorm sup_norm(const SpectrumSpec& spec) {
  SupNorm result{Rational(0), false};
  bool have = false;
  auto offer = [&](const Rational& v, bool realized) {
    if (!have || v > result.norm) {
      result.norm = v;
      result.attained = realized;
      have = true;
    } else if (v == result.norm) {
      result.attained = result.attained || realized;
    }
  };
  for (const auto& atom : spec.atoms) offer(atom.value, true);
  for (const auto& tail : spec.tails) {
    if (tail.direction == Direction::Decreasing) {
      offer(tail.term(1), true);
    } else {
      offer(tail.limit, false);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

SpectrumSpec scaled(const SpectrumSpec& spec, const Rational& factor) {
  if (factor <= 0) throw Error(ErrorCode::InvalidSpec, "scale factor must be > 0");
  SpectrumSpec out = spec;
  for (auto& atom : out.atoms) atom.value *= factor;
  for (auto& tail : out.tails) {
    tail.limit *= factor;
    std::visit([&](auto& r) { r.c *= factor; }, tail.rule);
  }
  return out;
}

SpectrumSpec squared(const SpectrumSpec& spec) {
  SpectrumSpec out = spec;
  for (auto& atom : out.atoms) atom.value *= atom.value;
  for (auto& tail : out.tails) {
    if (tail.limit != 0) {
      throw Error(ErrorCode::InvalidSpec, "squaring a tail with nonzero limit has no closed form: " + describe(tail));
    }
    std::visit(
        [](auto& r) {
          using R = std::decay_t<decltype(r)>;
          r.c *= r.c;
          if constexpr (std::is_same_v<R, HarmonicRule>) {
            r.p *= 2;
          } else {
            r.r *= r.r;
          }
        },
        tail.rule);
  }
  return out;
}

namespace {

auto tail_key(const TailSequence& t) {
  const bool geometric = std::holds_alternative<GeometricRule>(t.rule);
  Rational c = std::visit([](const auto& r) { return r.c; }, t.rule);
  Rational shape = geometric ? std::get<GeometricRule>(t.rule).r : Rational(std::get<HarmonicRule>(t.rule).p);
  return std::make_tuple(t.limit, static_cast<int>(t.direction), geometric, c, shape, t.term_multiplicity);
}

}  // namespace

SpectrumSpec canonical(const SpectrumSpec& spec) {
  std::map<Rational, Multiplicity, std::greater<>> merged;
  for (const auto& atom : spec.atoms) {
    auto it = merged.find(atom.value);
    if (it == merged.end()) {
      merged.emplace(atom.value, atom.multiplicity);
    } else {
      it->second = it->second + atom.multiplicity;
    }
  }
  SpectrumSpec out;
  for (const auto& [value, mult] : merged) out.atoms.push_back({value, mult});
  out.tails = spec.tails;
  std::sort(out.tails.begin(), out.tails.end(),
            [](const TailSequence& a, const TailSequence& b) { return tail_key(a) < tail_key(b); });
  return out;
}

bool structurally_equal(const SpectrumSpec& a, const SpectrumSpec& b) { return canonical(a) == canonical(b); }

std::string describe(const TailSequence& tail) {
  std::string out = tail.direction == Direction::Decreasing ? "Dec->" : "Inc->";
  out += format_rational(tail.limit);
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, HarmonicRule>) {
          out += " harmonic(c=" + format_rational(r.c) + ", p=" + std::to_string(r.p) + ")";
        } else {
          out += " geometric(c=" + format_rational(r.c) + ", r=" + format_rational(r.r) + ")";
        }
      },
      tail.rule);
  if (tail.term_multiplicity != 1) out += " x" + std::to_string(tail.term_multiplicity);
  return out;
}

}  // namespace anlab

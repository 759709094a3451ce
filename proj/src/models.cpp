#include "anlab/models.hpp"

#include <vector>

namespace anlab {

namespace {

Rational q(const char* text) { return parse_rational(text); }

std::vector<ModelRegistryEntry> build() {
  std::vector<ModelRegistryEntry> out;

  // diag(1/2, 1, 1, 1, ...) on l2
  SpectrumSpec ramesh;
  ramesh.atoms = {{q("1/2"), Multiplicity::finite(1)}, {q("1"), Multiplicity::infinite()}};
  out.push_back({"ramesh-counterexample", ramesh,
                 "counterexample to Ramesh's characterization: one eigenvalue 1/2, eigenvalue 1 repeated infinitely"});

  // blocks with eigenvalues 1 + 1/(2n) and 2 + 1/n
  SpectrumSpec blocks;
  blocks.tails = {{q("1"), Direction::Decreasing, HarmonicRule{q("1/2"), 1}, 1},
                  {q("2"), Direction::Decreasing, HarmonicRule{q("1"), 1}, 1}};
  out.push_back({"two-limit-blocks", blocks,
                 "positive diagonal operator whose eigenvalues accumulate at two points a=1 < b=2 from above"});

  DiagonalOperatorSpec isometry;
  isometry.entries.emplace_back(ConstantModulusFamily{q("1")});
  out.push_back({"isometry-phase", isometry,
                 "diagonal isometry with entries a_i + i b_i on the unit circle, a_i increasing"});

  // 2 Re(T) for the isometry above with a_i = 1 - 1/(2i)
  SpectrumSpec sum;
  sum.tails = {{q("2"), Direction::Increasing, HarmonicRule{q("1"), 1}, 1}};
  out.push_back({"sum-not-an", sum,
                 "T + T* for the phase isometry: eigenvalues 2 a_i increasing to 2, norm never attained"});

  // orthogonal projection with infinite-dimensional range and kernel
  SpectrumSpec projection;
  projection.atoms = {{q("0"), Multiplicity::infinite()}, {q("1"), Multiplicity::infinite()}};
  out.push_back({"projection-infinite", projection,
                 "|T| of a partial isometry: projection with infinite-dimensional kernel and range"});

  return out;
}

}  // namespace

std::span<const ModelRegistryEntry> models() {
  static const std::vector<ModelRegistryEntry> registry = build();
  return registry;
}

const ModelRegistryEntry* find_model(std::string_view name) {
  for (const auto& m : models()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

}  // namespace anlab

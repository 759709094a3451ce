#pragma once

// Named example operators shipped with the tool.

#include <span>
#include <string>
#include <string_view>

#include "anlab/io.hpp"

namespace anlab {

struct ModelRegistryEntry {
  std::string name;
  io::OperatorInput spec;
  std::string provenance;
};

/// Registry in listing order. Names are unique.
std::span<const ModelRegistryEntry> models();

/// nullptr when no model has that name.
const ModelRegistryEntry* find_model(std::string_view name);

}  // namespace anlab

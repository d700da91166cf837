#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"

namespace hecke {

/// One algebra configuration: the root system, the translation lattice with
/// its coroot embedding, and the parameter weights per affine generator.
struct AlgebraConfig {
  std::string name;
  std::string description;
  size_t free_rank = 0;
  std::vector<Int> torsion_orders;
  std::vector<IntVec> roots;
  std::vector<IntVec> simple_roots;
  std::vector<LamElt> coroots;            // one per simple root
  std::map<std::string, Int> params;      // keyed by generator name
};

/// Parse and schema-check a configuration file.
/// Throws DomainError("ParseError") or DomainError("SchemaVersionMismatch").
AlgebraConfig load_config(const std::string& path);

/// Build the fully validated algebra; BuildError carries every violation.
std::shared_ptr<Algebra> build_algebra(const AlgebraConfig& cfg);

inline constexpr int kSchemaVersion = 1;

}  // namespace hecke

#pragma once

#include <cstdint>
#include <vector>

#include "odot/molecule.hpp"

namespace odot {

struct CorpusBounds {
  std::uint64_t seed = 0;
  int max_dim = 3;
  int max_size = 15;
  int target = 48;     // stop once this many molecules are collected
  int attempts = 600;  // random construction attempts
};

// Reproducible molecules: the globe, simplex and cube families within the
// bounds, then random pastings, atoms, mergers, Gray products and duals.
// Deduplicated by canonical form, ordered by (dim, size, canonical code).
std::vector<Molecule> corpus(const CorpusBounds& b);

std::vector<Molecule> atoms_of(const std::vector<Molecule>& c);
std::vector<Molecule> rounds_of(const std::vector<Molecule>& c);

}  // namespace odot

#pragma once

#include <string>
#include <vector>

#include "odot/molecule.hpp"

namespace odot {

// Position in the cylinder: copy 0- / 0+ / 1 over a base element, or the
// collapsed copy (y) of an element of K.
enum class Copy : std::uint8_t { Minus, Plus, Mid, Collapsed };

struct CylTag {
  Copy copy;
  int base;
};

struct CylinderResult {
  Molecule shape;
  PosetMap projection;          // onto the base molecule
  Subset collapsed;             // K, in base ids
  std::vector<CylTag> tags;     // per element of shape
  std::vector<int> index;       // 3*base + copy -> element, -1 where absent

  int at(Copy c, int base) const;
};

enum class CylVariant : std::uint8_t { Plain, Left, Right };

CylinderResult partial_gray_cylinder(const Molecule& U, const Subset& K);
CylinderResult inverted_left(const Molecule& U, const Subset& K);
CylinderResult inverted_right(const Molecule& U, const Subset& K);
CylinderResult cylinder(const Molecule& U, const Subset& K, CylVariant v);

// Letters act from the right end of s: "LR" is the left cylinder of the
// right cylinder of U.
CylinderResult invertor_shape(const Molecule& U, const std::string& s);
CylinderResult unit_shape(const Molecule& U);

}  // namespace odot

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "odot/dset.hpp"
#include "odot/marked.hpp"

namespace odot {

enum class AnodyneTag : std::uint8_t { Horn, MarkedN, Inv, Loc, Comp, UnmarkedN, Atomic, CellularModel };
const char* anodyne_tag_name(AnodyneTag t);
// Accepts the names printed by anodyne_tag_name ("Jhorn", "Jn", ...).
std::optional<AnodyneTag> parse_anodyne_tag(std::string_view s);

struct AnodyneFamily {
  AnodyneTag tag = AnodyneTag::Horn;
  int n = 0;      // Jn variants: only atoms of dimension > n
  int d = 2;      // dimension bound on source shapes
  int depth = 1;  // truncation depth for Jloc, Jcomp and unmarked Jn
  // Atoms (and, for Jcomp, round molecules) to draw from. Empty means
  // default_shapes(d).
  std::vector<Molecule> shapes;
};

// Globes, simplices and cubes of dimension <= d, then the atoms and round
// molecules of the corpus for `seed`; deduplicated, ordered by (dim, size).
std::vector<Molecule> default_shapes(int d, std::uint64_t seed = 0, int max_size = 15);

struct AnodyneItem {
  AnodyneTag tag;
  std::string label;  // human-readable origin, e.g. "U3 x=5 A={...}"
  std::variant<MarkedMono, PresMono> mono;
  bool truncated = false;  // a finite stage standing in for an infinite object
  int depth = 0;
};

// Markings of a horn enumerated for Jhorn: for each minimal requirement R,
// every superset within the positive part of the horn when at most
// kHornFreeLimit elements are free, otherwise R, R plus one element, and the
// full marking.
inline constexpr int kHornFreeLimit = 6;

// Pull-based enumeration; items are produced shape by shape and
// deduplicated by canonical key.
class AnodyneStream {
 public:
  explicit AnodyneStream(AnodyneFamily f);
  std::optional<AnodyneItem> next();

 private:
  void fill();

  AnodyneFamily fam_;
  std::size_t shape_ = 0;
  std::vector<AnodyneItem> buffer_;
  std::size_t pos_ = 0;
  std::set<std::vector<int>> seen_;
};

AnodyneStream enumerate_anodyne(const AnodyneFamily& f);
std::vector<AnodyneItem> collect(AnodyneStream s);

// Canonical key of a marked mono: target shape coloured by image and both
// markings.
std::vector<int> mono_key(const MarkedMono& m);

// S, plus (i-, i+) box j for j in S, plus i^a box m for m in the cellular
// model over atoms of dimension <= model_dim; deduplicated, S first.
std::vector<MarkedMono> anodyne_closure_step(const std::vector<MarkedMono>& S, int model_dim,
                                             const std::vector<Molecule>& atoms = {});

}  // namespace odot

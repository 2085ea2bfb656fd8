#pragma once

#include <vector>

#include "odot/ogposet.hpp"

namespace odot {

enum class MapKind : std::uint8_t { Inclusion, Collapse, Cartesian };

const char* map_kind_name(MapKind k);

// A structure map. Built through classify_map (validated) or the trusted
// helpers below, which are only used where the map is correct by
// construction.
struct PosetMap {
  PosetRef source;
  PosetRef target;
  std::vector<int> f;
  MapKind kind = MapKind::Cartesian;

  int operator()(int x) const { return f[x]; }
  bool injective() const;
  bool surjective() const;
  bool is_iso() const { return injective() && surjective(); }
  Subset image() const;
  Subset image(const Subset& s) const;
};

// Checks monotonicity and the boundary-preservation condition
// f(bd^a_k cl{x}) = bd^a_k cl{f(x)} for every x, k and sign a.
PosetMap classify_map(PosetRef source, PosetRef target, std::vector<int> f);

// Classification without validation.
PosetMap trusted_map(PosetRef source, PosetRef target, std::vector<int> f);

PosetMap identity_map(PosetRef P);
PosetMap compose(const PosetMap& g, const PosetMap& f);  // g after f
PosetMap inverse(const PosetMap& iso);

// Inclusion of a closed subset, with the induced poset as source.
PosetMap subset_inclusion(PosetRef P, const Subset& closed);

struct Factorization {
  PosetMap collapse;   // source ->> image
  PosetMap inclusion;  // image >-> target
};
Factorization factorize(const PosetMap& f);

struct Pushout {
  PosetRef result;
  PosetMap left;   // P -> result
  PosetMap right;  // Q -> result
};

// Pushout of two inclusions i: K -> P and j: K -> Q. Elements of P keep their
// ids, elements of Q outside j(K) follow in increasing order.
Pushout glue_pushout(const PosetMap& i, const PosetMap& j);

}  // namespace odot

#pragma once

#include <optional>
#include <vector>

#include "odot/map.hpp"

namespace odot {

struct CanonicalForm {
  std::vector<int> labelling;  // labelling[old] = canonical id
  std::vector<int> code;       // relabelling-invariant certificate
  bool exhaustive = true;      // false if the leaf cap cut the search short
  // Leaves reaching the least certificate. The search does no pruning, so
  // this is the order of the automorphism group when exhaustive.
  long automorphisms = 1;
};

// Colour refinement on face and coface signatures, then individualisation
// with backtracking keeping the lexicographically least certificate.
// `colours` optionally fixes an initial partition (e.g. a marking).
CanonicalForm canonical_form(const OgPoset& P, const std::vector<int>* colours = nullptr);

std::optional<PosetMap> are_isomorphic(PosetRef P, PosetRef Q);
// Isomorphism that also matches the given colourings.
std::optional<PosetMap> are_isomorphic(PosetRef P, PosetRef Q, const std::vector<int>& cp,
                                       const std::vector<int>& cq);

}  // namespace odot

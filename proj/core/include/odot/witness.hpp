#pragma once

#include <memory>
#include <string>
#include <vector>

#include "odot/dset.hpp"

namespace odot {

enum class LeafKind : std::uint8_t { Degenerate, Assumed, Recurse };
const char* leaf_kind_name(LeafKind k);

// Finite unfolding of the coinductive definition: a Recurse node carries the
// inverses and witnesses for the two invertors.
struct EquivWitness {
  Diagram subject;
  LeafKind leaf = LeafKind::Degenerate;
  Diagram left_inv, right_inv;
  std::shared_ptr<const EquivWitness> z, h;
};
using WitnessRef = std::shared_ptr<const EquivWitness>;

WitnessRef degenerate_leaf(Diagram d);
WitnessRef assumed_leaf(Diagram d);
WitnessRef recurse_node(Diagram e, Diagram eL, Diagram eR, WitnessRef z, WitnessRef h);

struct WitnessVerdict {
  bool ok = false;
  std::string path;    // position of the first failing node, e.g. "root.z.h"
  std::string reason;
  int depth = 0;       // height of the witness tree
};

// Typing faults throw TypeMismatch (message starts with the path); leaves
// that are neither degenerate nor assumed give a negative verdict.
WitnessVerdict check_equiv_witness(const Presentation& X, const EquivWitness& w, const Subset& assumptions);

int witness_depth(const EquivWitness& w);

// Image of a witness under a morphism; `assumptions` are translated by
// pushed_assumptions.
WitnessRef push_witness(const PresMorphism& f, const EquivWitness& w);
Subset pushed_assumptions(const PresMorphism& f, const Subset& A);

// Witness that the generator a of a localisation of depth d is an
// equivalence, unfolded down to `levels` (at most d); deeper invertors are
// left as assumed leaves, which lie in the last stage's marking.
WitnessRef localisation_witness(const Localisation& loc, int a, int levels);

// Weak composite of a round diagram u: a cell of shape <U> and a witness
// for the compositor u => <u>.
struct CompositeWitness {
  Diagram u;
  Diagram composite;
  WitnessRef compositor;
};
WitnessVerdict check_composite_witness(const Presentation& X, const CompositeWitness& c,
                                       const Subset& assumptions);

// A sampled instance of the omega-equivalence condition: v in the target,
// u in the source, and a witness for v ~ f(u) (either orientation).
struct OmegaEntry {
  Diagram v;
  Diagram u;
  WitnessRef witness;
};

struct OmegaVerdict {
  bool ok = false;
  std::size_t sampled = 0;
  int depth = 0;
  std::vector<std::string> failures;
};

// Every 0-dimensional generator of the target must appear as the v of some
// entry (MissingWitness otherwise). The verdict covers the supplied sample
// at the supplied depth only.
OmegaVerdict check_omega_equivalence(const PresMorphism& f, const std::vector<OmegaEntry>& entries,
                                     const Subset& assumptions);

}  // namespace odot

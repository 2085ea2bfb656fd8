#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odot/molecule.hpp"

namespace odot {

// A shape together with a set of marked positive-dimensional elements.
struct MarkedPoset {
  PosetRef poset;
  Subset marked;
};

MarkedPoset minmark(PosetRef P);
// Only the greatest element marked.
MarkedPoset markmol(PosetRef P);
// Every positive-dimensional element marked.
MarkedPoset fullmark(PosetRef P);
// Throws InvalidDiagram if a marked id is out of range or has dim 0.
void check_marking(const MarkedPoset& X);

enum class MonoKind : std::uint8_t { Entire, Regular, General };
const char* mono_kind_name(MonoKind k);

struct MarkedMono {
  MarkedPoset source;
  MarkedPoset target;
  PosetMap map;  // injective, source.poset -> target.poset
  MonoKind kind = MonoKind::General;
};

// Validates injectivity and f(A) within B, and classifies.
MarkedMono make_marked_mono(MarkedPoset source, MarkedPoset target, PosetMap map);

struct MonoFactorization {
  MarkedMono regular;  // (X,A) -> (Y, f(A))
  MarkedMono entire;   // (Y, f(A)) -> (Y,B)
};
MonoFactorization factor_regular_entire(const MarkedMono& m);

// Underlying Gray product with the pseudo-Gray marking: (x,y) is marked when
// dim x = 0 and y in B, or both dims are positive, or x in A and dim y = 0.
MarkedPoset pseudo_gray(const MarkedPoset& X, const MarkedPoset& Y);

// --- horns ---------------------------------------------------------------

struct HornData {
  PosetRef atom;
  int top = -1;
  Sign side = Sign::Minus;  // V sits in the `side` boundary
  int x = -1;               // -1 for a molecular horn with V not an atom
  Subset V;                 // closed, in atom ids
  Subset horn;              // boundary minus the interior of V
  PosetMap lambda;          // horn -> atom
};

HornData atomic_horn(PosetRef U, int x);
HornData molecular_horn(PosetRef U, Sign side, const Subset& V);
// One horn per codimension-1 face of the greatest element. NotAtom otherwise.
std::vector<HornData> atomic_horns(const Molecule& U);
// One horn per rewritable submolecule of either boundary.
std::vector<HornData> molecular_horns(const Molecule& U);

// (A', rule) for a marked horn: A plus {x, top} when the opposite faces of
// top are all in A, A plus {top} otherwise.
Subset horn_target_marking(const OgPoset& U, int x, const Subset& A);

// Layers (L_i, R_i), i = 1..k, of a decomposition of the boundary of U on
// the side of x around cl{x}, and the i-dimensional elements it forces to be
// marked.
struct HornDecomposition {
  std::vector<Subset> L, R;  // index i-1
  Subset required;
};

// Minimal requirement sets over all decompositions found by the layered
// search. Each entry carries one decomposition realising it.
std::vector<HornDecomposition> horn_requirements(const OgPoset& U, int x);

struct HornVerdict {
  bool ok = false;
  std::string reason;
  std::optional<HornDecomposition> witness;
};

HornVerdict is_marked_horn(const OgPoset& U, int x, const Subset& A, const Subset& Aprime);
// Recognises the horn inside the mono (the target has a greatest element and
// the image misses exactly it and one face of it) before checking markings.
HornVerdict is_marked_horn(const MarkedMono& m);

MarkedMono horn_mono(const HornData& h, const Subset& A, const Subset& Aprime);

// --- pushout-products ----------------------------------------------------

enum class CylInclusion : std::uint8_t { IotaMinus, IotaPlus, Both };
const char* cyl_inclusion_name(CylInclusion b);

// Ids of the arrow used as the cylinder: 0- = 0, 0+ = 1, 1 = 2.
inline constexpr int kArrowMinus = 0, kArrowPlus = 1, kArrowMid = 2;

// beta box m for an injective marked map of shapes m: (X,A) -> (Y,B). The
// target is the marked arrow pseudo-Gray (Y,B); elements are a*|Y|+y.
MarkedMono pushout_product(CylInclusion beta, const MarkedMono& m);

// minmark boundary of U -> U, with target marking minimal or markmol.
MarkedMono boundary_mono(PosetRef U, bool full_target);

}  // namespace odot

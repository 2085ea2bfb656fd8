#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "odot/canonical.hpp"
#include "odot/map.hpp"

namespace odot {

enum class CertKind : std::uint8_t { Point, Atom, Paste, PasteSub, PasteSubCo, GrayProd, Dual, Import };

const char* cert_kind_name(CertKind k);

struct Cert;
using CertRef = std::shared_ptr<const Cert>;

// Construction tree. `k` is the pasting dimension, `ints` carries dual
// dimensions, an embedded subset, or import parameters.
struct Cert {
  CertKind kind = CertKind::Point;
  std::vector<CertRef> children;
  int k = 0;
  std::vector<int> ints;
  std::string name;  // Import only
};

class Molecule {
 public:
  Molecule() = default;
  // Wraps a poset produced by a constructor. Not a recognizer: callers are
  // responsible for `poset` being what `cert` describes.
  static Molecule certified(PosetRef poset, CertRef cert);

  const OgPoset& poset() const { return *d_->poset; }
  const PosetRef& poset_ref() const { return d_->poset; }
  const Cert& cert() const { return *d_->cert; }
  const CertRef& cert_ref() const { return d_->cert; }
  bool valid() const { return static_cast<bool>(d_); }

  int size() const { return d_->poset->size(); }
  int dim() const { return d_->poset->dimension(); }
  bool is_atom() const { return d_->poset->has_greatest(); }
  bool is_round() const;
  const CanonicalForm& canonical() const;

 private:
  struct Data {
    PosetRef poset;
    CertRef cert;
    mutable std::once_flag canon_once, round_once;
    mutable CanonicalForm canon;
    mutable bool round = false;
  };
  std::shared_ptr<Data> d_;
};

bool same_shape(const Molecule& a, const Molecule& b);

// Result of a gluing: the new molecule and the two coprojections.
struct Glued {
  Molecule result;
  PosetMap left;
  PosetMap right;
};

struct SubmoleculeInclusion {
  PosetMap map;
  bool rewritable = false;
};

// A molecule sitting inside another one as a closed subset.
struct SubMolecule {
  Molecule mol;
  PosetMap incl;  // mol -> parent
};

Molecule point();
Molecule arrow();

Glued atom_glued(const Molecule& V, const Molecule& W);
Molecule atom(const Molecule& V, const Molecule& W);
Molecule merger(const Molecule& U);

Glued paste_glued(const Molecule& U, const Molecule& V, int k);
Molecule paste(const Molecule& U, const Molecule& V, int k);
Molecule paste(const Molecule& U, const Molecule& V);

// U pasted at the submolecule `iota` of the k-input boundary of V. Requires
// dim U = k+1, U round and iota a round closed k-dimensional subset.
Glued paste_sub(const Molecule& U, const Molecule& V, int k, const Subset& iota);
// Dual: V pasted at the submolecule `iota` of the k-output boundary of U.
Glued paste_sub_co(const Molecule& U, const Molecule& V, int k, const Subset& iota);

Molecule gray(const Molecule& U, const Molecule& V);
Molecule dual(const Molecule& U, const std::vector<int>& dims);

Molecule simplex(int n);
Molecule cube(int n);
Molecule globe(int n);

SubMolecule boundary_of(const Molecule& U, int k, Sign a);
SubMolecule boundary_of(const Molecule& U, Sign a);
SubMolecule atom_closure(const Molecule& U, int x);
// A closed subset known by the caller to be a submolecule.
SubMolecule submolecule(const Molecule& U, const Subset& closed);

// Rewritable submolecules of the a-boundary, as inclusions into U. Found as
// flow-connected convex sets of top cells with round closure.
std::vector<SubmoleculeInclusion> rewritable_submolecules(const Molecule& U, Sign a);

// Top cells of a pure closed subset and the flow relation y -> z between
// them: an output face of y is an input face of z.
std::vector<std::vector<int>> flow_graph(const OgPoset& P, const Subset& tops);

Molecule replay(const Cert& cert);
bool replays_exactly(const Molecule& U);

}  // namespace odot

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "odot/cylinder.hpp"
#include "odot/molecule.hpp"

namespace odot {

// Label of an element x of a diagram's shape: a generator and a surjective
// map from cl{x} onto the generator's shape. `f` is aligned with the sorted
// ids of cl{x}.
struct Label {
  int gen = -1;
  std::vector<int> f;
  bool operator==(const Label& o) const { return gen == o.gen && f == o.f; }
};

struct Diagram {
  Molecule shape;
  std::vector<Label> labels;  // one per element of shape
};

struct Generator {
  std::string name;
  Molecule shape;             // an atom
  std::vector<Label> labels;  // the greatest element carries (self, identity)
  int dim() const { return shape.dim(); }
};

// Finitely presented diagrammatic set. Cells are attached along diagrams over
// earlier generators; indices never change once assigned.
class Presentation {
 public:
  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int g) const { return gens_[g]; }
  const std::vector<Generator>& gens() const { return gens_; }
  // -1 when absent.
  int find(const std::string& name) const;
  int count_dim_at_least(int d) const;

  int add_point(const std::string& name);
  // Adds e: u => v. Throws NotRound / NotParallel.
  int add_cell(const std::string& name, const Diagram& u, const Diagram& v);
  // Adds a generator whose shape and label table are given; validated.
  int add_raw(Generator g);

  bool operator==(const Presentation& o) const;

 private:
  int push(Generator g);

  std::vector<Generator> gens_;
  std::map<std::string, int> by_name_;
};

Presentation extend(const Presentation& X, const std::string& name);
Presentation extend(const Presentation& X, const std::string& name, const Diagram& u, const Diagram& v);

// Throws InvalidDiagram unless every label is a surjective cartesian map onto
// its generator and labels restrict correctly to faces.
void check_diagram(const Presentation& X, const Diagram& d);

Diagram gen_cell(const Presentation& X, int g);
Diagram paste_diagrams(const Presentation& X, const Diagram& u, const Diagram& v, int k);
Diagram paste_diagrams(const Presentation& X, const Diagram& u, const Diagram& v);
// u pasted at the submolecule iota of the k-input boundary of v.
Diagram paste_diagrams_sub(const Presentation& X, const Diagram& u, const Diagram& v, int k,
                           const Subset& iota);
Diagram restrict_boundary(const Presentation& X, const Diagram& u, int k, Sign a);
Diagram restrict_boundary(const Presentation& X, const Diagram& u, Sign a);
// Restriction along the inclusion of a submolecule.
Diagram restrict_to(const Presentation& X, const Diagram& u, const SubMolecule& sub);

// u pulled back along a surjective map p: W ->> shape(u).
Diagram degenerate_pullback(const Presentation& X, const Diagram& u, const Molecule& W, const PosetMap& p);
Diagram unit(const Presentation& X, const Diagram& u);
bool is_degenerate(const Presentation& X, const Diagram& u);
// Same labels on the dual of the shape in its top dimension. NotDegenerate
// unless u is degenerate.
Diagram reverse(const Presentation& X, const Diagram& u);
// Equality up to the unique isomorphism of shapes.
bool diagram_equal(const Diagram& u, const Diagram& v);
// The same diagram on an isomorphic shape. InvalidDiagram if not isomorphic.
Diagram transport(const Diagram& u, const Molecule& T);
// Cell status: the shape is an atom whose top label is a generator of the
// same dimension. Returns that generator or -1.
int cell_generator(const Presentation& X, const Diagram& u);

// The label of y as seen through the label of x, for y in cl{x}.
Label restrict_label(const Presentation& X, const OgPoset& S, int x, const Label& lx, int y);

// One generator per element of U, ordered by dimension, named c<id>.
struct ShapePresentation {
  std::shared_ptr<const Presentation> pres;
  std::vector<int> gen_of;  // element of U -> generator
  Diagram tautological;     // the identity diagram of shape U
};
ShapePresentation presentation_of(const Molecule& U);

// --- markings and morphisms ----------------------------------------------

struct MarkedPres {
  std::shared_ptr<const Presentation> pres;
  Subset marked;  // generator indices of positive dimension
};

struct PresMorphism {
  std::shared_ptr<const Presentation> source;
  std::shared_ptr<const Presentation> target;
  std::vector<Diagram> images;  // per source generator, on the generator's shape
};

// Validates shapes and boundary compatibility of the images.
PresMorphism make_morphism(std::shared_ptr<const Presentation> X, std::shared_ptr<const Presentation> Y,
                           std::vector<Diagram> images);
PresMorphism identity_morphism(std::shared_ptr<const Presentation> X);
// Induced by a map of shapes U -> V between their presentations.
PresMorphism morphism_of_map(const ShapePresentation& U, const ShapePresentation& V, const PosetMap& f);
Diagram pushforward(const PresMorphism& f, const Diagram& u);
PresMorphism compose(const PresMorphism& g, const PresMorphism& f);
bool morphism_equal(const PresMorphism& a, const PresMorphism& b);
// Every marked generator goes to a degenerate diagram or a marked cell.
bool preserves_marking(const PresMorphism& f, const Subset& A, const Subset& B);

// Gray product of presentations: generators (g,h) ordered by dimension.
struct PresGray {
  std::shared_ptr<const Presentation> pres;
  std::vector<int> index;  // g*|Y|+h -> generator
};
PresGray gray_presentation(const Presentation& X, const Presentation& Y);
MarkedPres pseudo_gray(const MarkedPres& X, const MarkedPres& Y, PresGray* layout = nullptr);

// An inclusion of a sub-presentation (by generators) with markings.
struct PresMono {
  MarkedPres target;
  Subset domain;         // generators of the source
  Subset domain_marked;  // its marking
  bool entire() const { return static_cast<int>(domain.size()) == target.pres->size(); }
  bool identity() const { return entire() && domain_marked == target.marked; }
};
PresMono pres_pushout_product(int beta /* 0: iota-, 1: iota+, 2: both */, const PresMono& m);

// --- localisation ----------------------------------------------------------

struct LocEntry {
  int gen = -1;
  int base = -1;     // generator of the input presentation
  std::string word;  // s in {L,R}*
  char kind = 'h';   // 'h' for h^s a, 'L' / 'R' for its inverses
};

struct Localisation {
  std::shared_ptr<const Presentation> pres;
  int depth = 0;
  std::vector<Subset> stage_marked;  // A^(0), ..., A^(depth)
  std::vector<LocEntry> entries;     // generated generators, in order
};

std::string loc_name(const std::string& base, const std::string& word, char kind);
Localisation localize(const MarkedPres& X, int depth);

Localisation walking_equivalence(const Molecule& U, int depth);

struct WalkingInvertors {
  std::shared_ptr<const Presentation> pres;
  Subset marked_m;    // dim >= n+1
  Subset marked_bar;  // dim >= n
};
WalkingInvertors walking_invertors(const Molecule& U);

// Extends a marking-preserving f to the depth-truncated localisations.
// NotMarkingPreserving otherwise.
PresMorphism loc_pushforward(const PresMorphism& f, const Subset& A, const Subset& B, int depth,
                             const Localisation* source = nullptr, const Localisation* target = nullptr);

}  // namespace odot

#include "odot/witness.hpp"

#include <algorithm>

namespace odot {

const char* leaf_kind_name(LeafKind k) {
  switch (k) {
    case LeafKind::Degenerate: return "degenerate";
    case LeafKind::Assumed: return "assumed";
    case LeafKind::Recurse: return "recurse";
  }
  return "?";
}

WitnessRef degenerate_leaf(Diagram d) {
  auto w = std::make_shared<EquivWitness>();
  w->subject = std::move(d);
  w->leaf = LeafKind::Degenerate;
  return w;
}

WitnessRef assumed_leaf(Diagram d) {
  auto w = std::make_shared<EquivWitness>();
  w->subject = std::move(d);
  w->leaf = LeafKind::Assumed;
  return w;
}

WitnessRef recurse_node(Diagram e, Diagram eL, Diagram eR, WitnessRef z, WitnessRef h) {
  auto w = std::make_shared<EquivWitness>();
  w->subject = std::move(e);
  w->leaf = LeafKind::Recurse;
  w->left_inv = std::move(eL);
  w->right_inv = std::move(eR);
  w->z = std::move(z);
  w->h = std::move(h);
  return w;
}

int witness_depth(const EquivWitness& w) {
  if (w.leaf != LeafKind::Recurse) return 0;
  return 1 + std::max(w.z ? witness_depth(*w.z) : 0, w.h ? witness_depth(*w.h) : 0);
}

namespace {

[[noreturn]] void mismatch(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::TypeMismatch, path + ": " + what);
}

void require_valid(const Presentation& X, const Diagram& d, const std::string& path, const char* role) {
  if (!d.shape.valid()) mismatch(path, std::string(role) + " is missing");
  try {
    check_diagram(X, d);
  } catch (const Error& e) {
    mismatch(path, std::string(role) + " is not a diagram: " + e.what());
  }
}

bool same(const Diagram& a, const Diagram& b) { return diagram_equal(a, b); }

Diagram bd(const Presentation& X, const Diagram& d, Sign a) { return restrict_boundary(X, d, a); }

void check_node(const Presentation& X, const EquivWitness& w, const Subset& assumptions, const std::string& path,
                WitnessVerdict& v) {
  if (!v.ok) return;
  require_valid(X, w.subject, path, "subject");
  const Diagram& e = w.subject;
  if (!e.shape.is_round() || e.shape.dim() < 1) mismatch(path, "subject is not a round diagram of positive dimension");
  const bool degenerate = is_degenerate(X, e);
  switch (w.leaf) {
    case LeafKind::Degenerate:
      if (!degenerate) {
        v.ok = false;
        v.path = path;
        v.reason = "leaf marked degenerate is not degenerate";
      }
      return;
    case LeafKind::Assumed: {
      if (degenerate) return;
      const int g = cell_generator(X, e);
      if (g < 0 || !std::binary_search(assumptions.begin(), assumptions.end(), g)) {
        v.ok = false;
        v.path = path;
        v.reason = "assumed leaf is not a marked cell";
      }
      return;
    }
    case LeafKind::Recurse: break;
  }
  const int n = e.shape.dim();
  require_valid(X, w.left_inv, path, "left inverse");
  require_valid(X, w.right_inv, path, "right inverse");
  const auto u = bd(X, e, Sign::Minus);
  const auto t = bd(X, e, Sign::Plus);
  for (const Diagram* inv : {&w.left_inv, &w.right_inv}) {
    const char* role = inv == &w.left_inv ? "left inverse" : "right inverse";
    if (!inv->shape.is_round() || inv->shape.dim() != n) mismatch(path, std::string(role) + " has the wrong dimension");
    if (!same(bd(X, *inv, Sign::Minus), t) || !same(bd(X, *inv, Sign::Plus), u))
      mismatch(path, std::string(role) + " is not parallel to the reversed subject");
  }
  if (!w.z || !w.h) mismatch(path, "invertor witness missing");
  require_valid(X, w.z->subject, path + ".z", "subject");
  require_valid(X, w.h->subject, path + ".h", "subject");
  const Diagram& z = w.z->subject;
  const Diagram& h = w.h->subject;
  if (z.shape.dim() != n + 1 || h.shape.dim() != n + 1) mismatch(path, "invertors have the wrong dimension");
  if (!same(bd(X, z, Sign::Minus), paste_diagrams(X, e, w.left_inv, n - 1)) || !same(bd(X, z, Sign::Plus), unit(X, u)))
    mismatch(path + ".z", "left invertor has the wrong boundary");
  if (!same(bd(X, h, Sign::Minus), unit(X, t)) || !same(bd(X, h, Sign::Plus), paste_diagrams(X, w.right_inv, e, n - 1)))
    mismatch(path + ".h", "right invertor has the wrong boundary");
  check_node(X, *w.z, assumptions, path + ".z", v);
  check_node(X, *w.h, assumptions, path + ".h", v);
}

}  // namespace

WitnessVerdict check_equiv_witness(const Presentation& X, const EquivWitness& w, const Subset& assumptions) {
  WitnessVerdict v;
  v.ok = true;
  v.path = "root";
  check_node(X, w, assumptions, "root", v);
  v.depth = witness_depth(w);
  if (v.ok) v.path.clear();
  return v;
}

WitnessRef push_witness(const PresMorphism& f, const EquivWitness& w) {
  auto r = std::make_shared<EquivWitness>();
  r->subject = pushforward(f, w.subject);
  r->leaf = w.leaf;
  if (w.leaf == LeafKind::Assumed && is_degenerate(*f.target, r->subject)) r->leaf = LeafKind::Degenerate;
  if (w.leaf == LeafKind::Recurse) {
    r->left_inv = pushforward(f, w.left_inv);
    r->right_inv = pushforward(f, w.right_inv);
    if (w.z) r->z = push_witness(f, *w.z);
    if (w.h) r->h = push_witness(f, *w.h);
  }
  return r;
}

Subset pushed_assumptions(const PresMorphism& f, const Subset& A) {
  Subset r;
  for (int a : A) {
    const Diagram& img = f.images[a];
    if (is_degenerate(*f.target, img)) continue;
    const int g = cell_generator(*f.target, img);
    if (g >= 0) r.push_back(g);
  }
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

WitnessRef localisation_witness(const Localisation& loc, int a, int levels) {
  const Presentation& P = *loc.pres;
  if (levels <= 0) return assumed_leaf(gen_cell(P, a));
  int base = a;
  std::string word;
  for (const auto& e : loc.entries)
    if (e.gen == a) {
      if (e.kind != 'h') throw Error(ErrorKind::InvalidDiagram, "inverses carry no invertors");
      base = e.base;
      word = e.word;
    }
  const std::string& bn = P.gen(base).name;
  auto need = [&](const std::string& name) {
    const int g = P.find(name);
    if (g < 0) throw Error(ErrorKind::MissingWitness, "localisation too shallow for " + name);
    return g;
  };
  const int l = need(loc_name(bn, word, 'L'));
  const int r = need(loc_name(bn, word, 'R'));
  const int hl = need(loc_name(bn, "L" + word, 'h'));
  const int hr = need(loc_name(bn, "R" + word, 'h'));
  return recurse_node(gen_cell(P, a), gen_cell(P, l), gen_cell(P, r), localisation_witness(loc, hl, levels - 1),
                      localisation_witness(loc, hr, levels - 1));
}

WitnessVerdict check_composite_witness(const Presentation& X, const CompositeWitness& c, const Subset& assumptions) {
  require_valid(X, c.u, "composite", "u");
  require_valid(X, c.composite, "composite", "composite");
  if (!c.u.shape.is_round() || c.u.shape.dim() < 1) mismatch("composite", "u is not round");
  if (!c.composite.shape.is_atom() || !same_shape(c.composite.shape, merger(c.u.shape)))
    mismatch("composite", "composite does not have the merger shape");
  for (Sign a : {Sign::Minus, Sign::Plus})
    if (!same(bd(X, c.composite, a), bd(X, c.u, a))) mismatch("composite", "composite is not parallel to u");
  if (!c.compositor) mismatch("composite", "compositor witness missing");
  const Diagram& s = c.compositor->subject;
  require_valid(X, s, "compositor", "subject");
  if (!same(bd(X, s, Sign::Minus), c.u) || !same(bd(X, s, Sign::Plus), c.composite))
    mismatch("compositor", "compositor is not of type u => <u>");
  return check_equiv_witness(X, *c.compositor, assumptions);
}

OmegaVerdict check_omega_equivalence(const PresMorphism& f, const std::vector<OmegaEntry>& entries,
                                     const Subset& assumptions) {
  const Presentation& Y = *f.target;
  for (int p = 0; p < Y.size(); ++p) {
    if (Y.gen(p).dim() != 0) continue;
    const auto cell = gen_cell(Y, p);
    bool found = std::any_of(entries.begin(), entries.end(), [&](const OmegaEntry& e) {
      return e.v.shape.valid() && e.v.shape.dim() == 0 && diagram_equal(e.v, cell);
    });
    if (!found) throw Error(ErrorKind::MissingWitness, "no witness for the 0-cell " + Y.gen(p).name);
  }
  OmegaVerdict r;
  r.sampled = entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string tag = "entry " + std::to_string(i);
    try {
      check_diagram(*f.source, e.u);
      check_diagram(Y, e.v);
      if (!e.witness) throw Error(ErrorKind::MissingWitness, "no witness");
      const Diagram fu = pushforward(f, e.u);
      const Diagram& s = e.witness->subject;
      const auto sm = restrict_boundary(Y, s, Sign::Minus);
      const auto sp = restrict_boundary(Y, s, Sign::Plus);
      const bool forward = diagram_equal(sm, e.v) && diagram_equal(sp, fu);
      const bool backward = diagram_equal(sm, fu) && diagram_equal(sp, e.v);
      if (!forward && !backward) throw Error(ErrorKind::TypeMismatch, "witness does not relate v and f(u)");
      auto v = check_equiv_witness(Y, *e.witness, assumptions);
      r.depth = std::max(r.depth, v.depth);
      if (!v.ok) r.failures.push_back(tag + ": " + v.path + ": " + v.reason);
    } catch (const Error& err) {
      r.failures.push_back(tag + ": " + error_kind_name(err.kind()).data() + ": " + err.what());
    }
  }
  r.ok = r.failures.empty();
  return r;
}

}  // namespace odot

#include "odot/dset.hpp"

#include <algorithm>
#include <functional>

namespace odot {

namespace {

int pos_in(const Subset& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) throw Error(ErrorKind::InvalidDiagram, "label lookup outside a closure");
  return static_cast<int>(it - s.begin());
}

// Label at element t of T obtained from the label `l` at s of S through a
// map t_to_s sending cl{t} into cl{s}.
Label relabel(const OgPoset& S, int s, const Label& l, const OgPoset& T, int t,
              const std::function<int(int)>& t_to_s) {
  const Subset ds = closure_of(S, s);
  const Subset dt = closure_of(T, t);
  Label r{l.gen, std::vector<int>(dt.size())};
  for (std::size_t k = 0; k < dt.size(); ++k) r.f[k] = l.f[pos_in(ds, t_to_s(dt[k]))];
  return r;
}

std::vector<int> inverse_of(const PosetMap& m) {
  std::vector<int> inv(m.target->size(), -1);
  for (int x = 0; x < m.source->size(); ++x) inv[m.f[x]] = x;
  return inv;
}

Label identity_label(int g, int n) {
  Label l{g, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) l.f[i] = i;
  return l;
}

// Labels of a glued shape from the labels of the two pieces.
std::vector<Label> glue_labels(const Glued& g, const Diagram& u, const Diagram& v, ErrorKind on_clash) {
  const OgPoset& R = g.result.poset();
  auto invL = inverse_of(g.left);
  auto invR = inverse_of(g.right);
  std::vector<Label> labels(R.size());
  for (int r = 0; r < R.size(); ++r) {
    auto tl = [&](int t) { return invL[t]; };
    auto tr = [&](int t) { return invR[t]; };
    if (invL[r] >= 0) labels[r] = relabel(u.shape.poset(), invL[r], u.labels[invL[r]], R, r, tl);
    if (invR[r] >= 0) {
      Label l = relabel(v.shape.poset(), invR[r], v.labels[invR[r]], R, r, tr);
      if (invL[r] >= 0 && !(l == labels[r]))
        throw Error(on_clash, "labels disagree on the glued boundary");
      labels[r] = std::move(l);
    }
  }
  return labels;
}

void check_over(const Presentation& X, const Diagram& d) {
  for (const auto& l : d.labels)
    if (l.gen < 0 || l.gen >= X.size()) throw Error(ErrorKind::UnknownId, "label refers to an unknown generator");
}

}  // namespace

// --- presentation --------------------------------------------------------

int Presentation::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int Presentation::count_dim_at_least(int d) const {
  return static_cast<int>(std::count_if(gens_.begin(), gens_.end(), [&](const Generator& g) { return g.dim() >= d; }));
}

int Presentation::push(Generator g) {
  if (by_name_.count(g.name)) throw Error(ErrorKind::DuplicateId, "generator " + g.name + " already exists");
  const int id = size();
  by_name_.emplace(g.name, id);
  gens_.push_back(std::move(g));
  return id;
}

int Presentation::add_point(const std::string& name) {
  return push(Generator{name, point(), {identity_label(size(), 1)}});
}

int Presentation::add_cell(const std::string& name, const Diagram& u, const Diagram& v) {
  check_over(*this, u);
  check_over(*this, v);
  if (!u.shape.is_round() || !v.shape.is_round()) throw Error(ErrorKind::NotRound, "cell boundaries must be round");
  if (u.shape.dim() != v.shape.dim()) throw Error(ErrorKind::NotParallel, "cell boundaries differ in dimension");
  if (u.shape.dim() > 0)
    for (Sign a : {Sign::Minus, Sign::Plus})
      if (!diagram_equal(restrict_boundary(*this, u, a), restrict_boundary(*this, v, a)))
        throw Error(ErrorKind::NotParallel, std::string("boundaries differ on side ") + sign_char(a));
  Glued g = atom_glued(u.shape, v.shape);
  Generator gen{name, g.result, {}};
  const int top = *g.result.poset().greatest();
  auto labels = glue_labels(g, u, v, ErrorKind::NotParallel);
  labels[top] = identity_label(size(), g.result.size());
  gen.labels = std::move(labels);
  return push(std::move(gen));
}

int Presentation::add_raw(Generator g) {
  auto top = g.shape.poset().greatest();
  if (!top) throw Error(ErrorKind::NotAtom, "generator shape must be an atom");
  if (static_cast<int>(g.labels.size()) != g.shape.size())
    throw Error(ErrorKind::InvalidDiagram, "label table size mismatch");
  if (!(g.labels[*top] == identity_label(size(), g.shape.size())))
    throw Error(ErrorKind::InvalidDiagram, "generator " + g.name + " must label its top by itself");
  const int id = push(std::move(g));
  try {
    check_diagram(*this, gen_cell(*this, id));
  } catch (...) {
    by_name_.erase(gens_.back().name);
    gens_.pop_back();
    throw;
  }
  return id;
}

bool Presentation::operator==(const Presentation& o) const {
  if (size() != o.size()) return false;
  for (int i = 0; i < size(); ++i) {
    const auto& a = gens_[i];
    const auto& b = o.gens_[i];
    if (a.name != b.name || !(a.shape.poset() == b.shape.poset()) || a.labels != b.labels) return false;
  }
  return true;
}

Presentation extend(const Presentation& X, const std::string& name) {
  Presentation Y = X;
  Y.add_point(name);
  return Y;
}

Presentation extend(const Presentation& X, const std::string& name, const Diagram& u, const Diagram& v) {
  Presentation Y = X;
  Y.add_cell(name, u, v);
  return Y;
}

// --- diagrams -------------------------------------------------------------

Label restrict_label(const Presentation& X, const OgPoset& S, int x, const Label& lx, int y) {
  const Subset dx = closure_of(S, x);
  const Subset dy = closure_of(S, y);
  const int py = lx.f[pos_in(dx, y)];
  const Generator& G = X.gen(lx.gen);
  const Label& gl = G.labels[py];
  const Subset dg = closure_of(G.shape.poset(), py);
  Label r{gl.gen, std::vector<int>(dy.size())};
  for (std::size_t k = 0; k < dy.size(); ++k) r.f[k] = gl.f[pos_in(dg, lx.f[pos_in(dx, dy[k])])];
  return r;
}

void check_diagram(const Presentation& X, const Diagram& d) {
  const OgPoset& S = d.shape.poset();
  if (static_cast<int>(d.labels.size()) != S.size()) throw Error(ErrorKind::InvalidDiagram, "label table size mismatch");
  check_over(X, d);
  for (int x = 0; x < S.size(); ++x) {
    const Label& l = d.labels[x];
    const Subset dx = closure_of(S, x);
    if (l.f.size() != dx.size()) throw Error(ErrorKind::InvalidDiagram, "label of " + std::to_string(x) + " has the wrong size");
    const Generator& G = X.gen(l.gen);
    for (int v : l.f)
      if (v < 0 || v >= G.shape.size()) throw Error(ErrorKind::InvalidDiagram, "label map out of range");
    auto r = restrict_to(S, dx);
    try {
      auto m = classify_map(share(std::move(r.poset)), G.shape.poset_ref(), l.f);
      if (!m.surjective()) throw Error(ErrorKind::InvalidDiagram, "label is not surjective");
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidDiagram) throw;
      throw Error(ErrorKind::InvalidDiagram, "label of " + std::to_string(x) + ": " + e.what());
    }
    for (Sign a : {Sign::Minus, Sign::Plus})
      for (int y : S.faces(x, a))
        if (!(restrict_label(X, S, x, l, y) == d.labels[y]))
          throw Error(ErrorKind::InvalidDiagram, "labels of " + std::to_string(x) + " and its face " +
                                                     std::to_string(y) + " disagree");
  }
}

Diagram gen_cell(const Presentation& X, int g) {
  if (g < 0 || g >= X.size()) throw Error(ErrorKind::UnknownId, "unknown generator");
  return {X.gen(g).shape, X.gen(g).labels};
}

Diagram paste_diagrams(const Presentation& X, const Diagram& u, const Diagram& v, int k) {
  check_over(X, u);
  check_over(X, v);
  Glued g = paste_glued(u.shape, v.shape, k);
  return {g.result, glue_labels(g, u, v, ErrorKind::BoundaryMismatch)};
}

Diagram paste_diagrams(const Presentation& X, const Diagram& u, const Diagram& v) {
  return paste_diagrams(X, u, v, std::min(u.shape.dim(), v.shape.dim()) - 1);
}

Diagram paste_diagrams_sub(const Presentation& X, const Diagram& u, const Diagram& v, int k, const Subset& iota) {
  check_over(X, u);
  check_over(X, v);
  Glued g = paste_sub(u.shape, v.shape, k, iota);
  return {g.result, glue_labels(g, u, v, ErrorKind::BoundaryMismatch)};
}

Diagram restrict_to(const Presentation&, const Diagram& u, const SubMolecule& sub) {
  const OgPoset& T = sub.mol.poset();
  std::vector<Label> labels(T.size());
  auto t_to_s = [&](int t) { return sub.incl(t); };
  for (int m = 0; m < T.size(); ++m)
    labels[m] = relabel(u.shape.poset(), sub.incl(m), u.labels[sub.incl(m)], T, m, t_to_s);
  return {sub.mol, std::move(labels)};
}

Diagram restrict_boundary(const Presentation& X, const Diagram& u, int k, Sign a) {
  return restrict_to(X, u, boundary_of(u.shape, k, a));
}

Diagram restrict_boundary(const Presentation& X, const Diagram& u, Sign a) {
  return restrict_boundary(X, u, u.shape.dim() - 1, a);
}

Diagram degenerate_pullback(const Presentation&, const Diagram& u, const Molecule& W, const PosetMap& p) {
  if (p.f.size() != static_cast<std::size_t>(W.size()) || p.target->size() != u.shape.size() || !p.surjective())
    throw Error(ErrorKind::NotCartesian, "pullback needs a surjection onto the diagram's shape");
  const OgPoset& T = W.poset();
  std::vector<Label> labels(T.size());
  auto t_to_s = [&](int t) { return p(t); };
  for (int w = 0; w < T.size(); ++w) labels[w] = relabel(u.shape.poset(), p(w), u.labels[p(w)], T, w, t_to_s);
  return {W, std::move(labels)};
}

Diagram unit(const Presentation& X, const Diagram& u) {
  auto c = unit_shape(u.shape);
  return degenerate_pullback(X, u, c.shape, c.projection);
}

bool is_degenerate(const Presentation& X, const Diagram& u) {
  const int n = u.shape.dim();
  const OgPoset& S = u.shape.poset();
  for (int x = 0; x < S.size(); ++x)
    if (S.dim(x) == n && X.gen(u.labels[x].gen).dim() == n) return false;
  return true;
}

Diagram reverse(const Presentation& X, const Diagram& u) {
  if (!is_degenerate(X, u)) throw Error(ErrorKind::NotDegenerate, "reverse of a non-degenerate diagram");
  return {dual(u.shape, {u.shape.dim()}), u.labels};
}

bool diagram_equal(const Diagram& u, const Diagram& v) {
  if (u.shape.size() != v.shape.size()) return false;
  if (u.shape.poset() == v.shape.poset()) return u.labels == v.labels;
  auto iso = are_isomorphic(u.shape.poset_ref(), v.shape.poset_ref());
  if (!iso) return false;
  const OgPoset& S = u.shape.poset();
  auto fwd = [&](int t) { return (*iso)(t); };
  for (int x = 0; x < S.size(); ++x) {
    const int y = (*iso)(x);
    if (!(relabel(v.shape.poset(), y, v.labels[y], S, x, fwd) == u.labels[x])) return false;
  }
  return true;
}

Diagram transport(const Diagram& u, const Molecule& T) {
  if (u.shape.poset_ref() == T.poset_ref() || u.shape.poset() == T.poset()) return {T, u.labels};
  auto iso = are_isomorphic(T.poset_ref(), u.shape.poset_ref());
  if (!iso) throw Error(ErrorKind::InvalidDiagram, "transport to a non-isomorphic shape");
  std::vector<Label> labels(T.size());
  auto fwd = [&](int t) { return (*iso)(t); };
  for (int t = 0; t < T.size(); ++t) labels[t] = relabel(u.shape.poset(), (*iso)(t), u.labels[(*iso)(t)], T.poset(), t, fwd);
  return {T, std::move(labels)};
}

int cell_generator(const Presentation& X, const Diagram& u) {
  auto top = u.shape.poset().greatest();
  if (!top) return -1;
  const int g = u.labels[*top].gen;
  return X.gen(g).dim() == u.shape.poset().dim(*top) ? g : -1;
}

ShapePresentation presentation_of(const Molecule& U) {
  const OgPoset& P = U.poset();
  std::vector<int> order = all_of(P);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return P.dim(a) < P.dim(b); });
  std::vector<SubMolecule> subs;
  subs.reserve(P.size());
  std::vector<std::vector<int>> inv(P.size());
  for (int x = 0; x < P.size(); ++x) {
    subs.push_back(atom_closure(U, x));
    inv[x] = inverse_of(subs[x].incl);
  }
  std::vector<int> gen_of(P.size());
  for (int i = 0; i < P.size(); ++i) gen_of[order[i]] = i;

  auto pres = std::make_shared<Presentation>();
  for (int x : order) {
    const auto& sub = subs[x];
    const OgPoset& S = sub.mol.poset();
    Generator g{"c" + std::to_string(x), sub.mol, std::vector<Label>(S.size())};
    for (int m = 0; m < S.size(); ++m) {
      const int y = sub.incl(m);
      const Subset dm = closure_of(S, m);
      Label l{gen_of[y], std::vector<int>(dm.size())};
      for (std::size_t k = 0; k < dm.size(); ++k) l.f[k] = inv[y][sub.incl(dm[k])];
      g.labels[m] = std::move(l);
    }
    pres->add_raw(std::move(g));
  }
  Diagram taut{U, std::vector<Label>(P.size())};
  for (int x = 0; x < P.size(); ++x) {
    const Subset dx = closure_of(P, x);
    Label l{gen_of[x], std::vector<int>(dx.size())};
    for (std::size_t k = 0; k < dx.size(); ++k) l.f[k] = inv[x][dx[k]];
    taut.labels[x] = std::move(l);
  }
  return {pres, std::move(gen_of), std::move(taut)};
}

// --- morphisms ------------------------------------------------------------

namespace {

Label push_label(const std::vector<Diagram>& images, const Presentation& X, const Label& l) {
  const Diagram& img = images[l.gen];
  const int top = *X.gen(l.gen).shape.poset().greatest();
  const Label& q = img.labels[top];
  Label r{q.gen, std::vector<int>(l.f.size())};
  for (std::size_t k = 0; k < l.f.size(); ++k) r.f[k] = q.f[l.f[k]];
  return r;
}

}  // namespace

PresMorphism make_morphism(std::shared_ptr<const Presentation> X, std::shared_ptr<const Presentation> Y,
                           std::vector<Diagram> images) {
  if (static_cast<int>(images.size()) != X->size())
    throw Error(ErrorKind::InvalidDiagram, "morphism needs one image per generator");
  for (int g = 0; g < X->size(); ++g) {
    const Generator& G = X->gen(g);
    if (!(images[g].shape.poset() == G.shape.poset()))
      throw Error(ErrorKind::InvalidDiagram, "image of " + G.name + " has the wrong shape");
    check_diagram(*Y, images[g]);
    for (int z = 0; z < G.shape.size(); ++z)
      if (!(images[g].labels[z] == push_label(images, *X, G.labels[z])) && G.labels[z].gen != g)
        throw Error(ErrorKind::BoundaryMismatch, "image of " + G.name + " does not match on its boundary");
  }
  return {std::move(X), std::move(Y), std::move(images)};
}

PresMorphism identity_morphism(std::shared_ptr<const Presentation> X) {
  std::vector<Diagram> images;
  for (int g = 0; g < X->size(); ++g) images.push_back(gen_cell(*X, g));
  return {X, X, std::move(images)};
}

PresMorphism morphism_of_map(const ShapePresentation& U, const ShapePresentation& V, const PosetMap& f) {
  const OgPoset& PV = V.tautological.shape.poset();
  std::vector<int> elem_of(U.pres->size());
  for (std::size_t x = 0; x < U.gen_of.size(); ++x) elem_of[U.gen_of[x]] = static_cast<int>(x);
  const Molecule& UM = U.tautological.shape;
  std::vector<Diagram> images;
  for (int g = 0; g < U.pres->size(); ++g) {
    auto sub = atom_closure(UM, elem_of[g]);
    const OgPoset& S = sub.mol.poset();
    if (!(S == U.pres->gen(g).shape.poset())) throw Error(ErrorKind::InvalidDiagram, "shape presentation mismatch");
    Diagram d{U.pres->gen(g).shape, std::vector<Label>(S.size())};
    auto t_to_s = [&](int t) { return f(sub.incl(t)); };
    for (int m = 0; m < S.size(); ++m) {
      const int fy = f(sub.incl(m));
      d.labels[m] = relabel(PV, fy, V.tautological.labels[fy], S, m, t_to_s);
    }
    images.push_back(std::move(d));
  }
  return make_morphism(U.pres, V.pres, std::move(images));
}

Diagram pushforward(const PresMorphism& f, const Diagram& u) {
  Diagram r{u.shape, std::vector<Label>(u.labels.size())};
  for (std::size_t x = 0; x < u.labels.size(); ++x) r.labels[x] = push_label(f.images, *f.source, u.labels[x]);
  return r;
}

PresMorphism compose(const PresMorphism& g, const PresMorphism& f) {
  std::vector<Diagram> images;
  for (const auto& d : f.images) images.push_back(pushforward(g, d));
  return {f.source, g.target, std::move(images)};
}

bool morphism_equal(const PresMorphism& a, const PresMorphism& b) {
  if (a.images.size() != b.images.size()) return false;
  for (std::size_t i = 0; i < a.images.size(); ++i)
    if (!diagram_equal(a.images[i], b.images[i])) return false;
  return true;
}

bool preserves_marking(const PresMorphism& f, const Subset& A, const Subset& B) {
  for (int a : A) {
    const Diagram& img = f.images[a];
    if (is_degenerate(*f.target, img)) continue;
    const int g = cell_generator(*f.target, img);
    if (g < 0 || !std::binary_search(B.begin(), B.end(), g)) return false;
  }
  return true;
}

// --- Gray products ---------------------------------------------------------

PresGray gray_presentation(const Presentation& X, const Presentation& Y) {
  const int nx = X.size(), ny = Y.size();
  std::vector<std::pair<int, int>> order;
  for (int g = 0; g < nx; ++g)
    for (int h = 0; h < ny; ++h) order.push_back({g, h});
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return X.gen(a.first).dim() + Y.gen(a.second).dim() < X.gen(b.first).dim() + Y.gen(b.second).dim();
  });
  std::vector<int> index(nx * ny, -1);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i].first * ny + order[i].second] = static_cast<int>(i);

  auto pres = std::make_shared<Presentation>();
  for (auto [g, h] : order) {
    const Generator& G = X.gen(g);
    const Generator& H = Y.gen(h);
    Molecule shape = gray(G.shape, H.shape);
    const OgPoset& PG = G.shape.poset();
    const OgPoset& PH = H.shape.poset();
    const int m = PH.size();
    Generator out{"(" + G.name + "," + H.name + ")", shape, std::vector<Label>(shape.size())};
    for (int x = 0; x < PG.size(); ++x)
      for (int y = 0; y < m; ++y) {
        const Label& lx = G.labels[x];
        const Label& ly = H.labels[y];
        const int mt = Y.gen(ly.gen).shape.size();
        Label l{index[lx.gen * ny + ly.gen], {}};
        for (int fx : lx.f)
          for (int fy : ly.f) l.f.push_back(fx * mt + fy);
        out.labels[x * m + y] = std::move(l);
      }
    pres->add_raw(std::move(out));
  }
  return {pres, std::move(index)};
}

MarkedPres pseudo_gray(const MarkedPres& X, const MarkedPres& Y, PresGray* layout) {
  PresGray pg = gray_presentation(*X.pres, *Y.pres);
  const int ny = Y.pres->size();
  Subset marked;
  auto inA = [&](int g) { return std::binary_search(X.marked.begin(), X.marked.end(), g); };
  auto inB = [&](int h) { return std::binary_search(Y.marked.begin(), Y.marked.end(), h); };
  for (int g = 0; g < X.pres->size(); ++g)
    for (int h = 0; h < ny; ++h) {
      const int dg = X.pres->gen(g).dim(), dh = Y.pres->gen(h).dim();
      if ((dg == 0 && inB(h)) || (dg > 0 && dh > 0) || (inA(g) && dh == 0)) marked.push_back(pg.index[g * ny + h]);
    }
  std::sort(marked.begin(), marked.end());
  MarkedPres r{pg.pres, std::move(marked)};
  if (layout) *layout = std::move(pg);
  return r;
}

PresMono pres_pushout_product(int beta, const PresMono& m) {
  static const ShapePresentation I = presentation_of(arrow());
  // Generators of the arrow presentation: 0- = 0, 0+ = 1, 1 = 2.
  MarkedPres Isharp{I.pres, {2}};
  PresGray layout;
  MarkedPres T = pseudo_gray(Isharp, m.target, &layout);
  const int ny = m.target.pres->size();
  std::vector<int> full, part{2};
  if (beta != 1) full.push_back(0);
  if (beta != 0) full.push_back(1);
  for (int a : {0, 1})
    if (std::find(full.begin(), full.end(), a) == full.end()) part.push_back(a);
  Subset dom, dm;
  for (int a : full)
    for (int y = 0; y < ny; ++y) dom.push_back(layout.index[a * ny + y]);
  for (int a : part)
    for (int y : m.domain) dom.push_back(layout.index[a * ny + y]);
  for (int a : full)
    for (int y : m.target.marked) dm.push_back(layout.index[a * ny + y]);
  for (int a : {0, 1})
    for (int y : m.domain_marked) dm.push_back(layout.index[a * ny + y]);
  for (int y : m.domain) dm.push_back(layout.index[2 * ny + y]);
  for (auto* v : {&dom, &dm}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return {std::move(T), std::move(dom), std::move(dm)};
}

// --- localisation ------------------------------------------------------------

std::string loc_name(const std::string& base, const std::string& word, char kind) {
  std::string r = base + "#" + word;
  if (kind == 'L') r += "^L";
  if (kind == 'R') r += "^R";
  return r;
}

Localisation localize(const MarkedPres& X, int depth) {
  auto P = std::make_shared<Presentation>(*X.pres);
  Localisation loc;
  loc.depth = depth;
  loc.stage_marked.push_back(X.marked);
  // (base, word) of each marked cell of the current stage.
  std::vector<std::pair<int, std::string>> tag(X.pres->size(), {-1, ""});
  for (int a : X.marked) tag[a] = {a, ""};
  Subset cur = X.marked;
  for (int stage = 1; stage <= depth; ++stage) {
    std::vector<std::pair<int, int>> inv(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const int a = cur[i];
      auto e = gen_cell(*P, a);
      auto u = restrict_boundary(*P, e, Sign::Minus);
      auto v = restrict_boundary(*P, e, Sign::Plus);
      const auto& [base, word] = tag[a];
      const std::string& bn = X.pres->gen(base).name;
      const int l = P->add_cell(loc_name(bn, word, 'L'), v, u);
      loc.entries.push_back({l, base, word, 'L'});
      const int r = P->add_cell(loc_name(bn, word, 'R'), v, u);
      loc.entries.push_back({r, base, word, 'R'});
      inv[i] = {l, r};
    }
    Subset next;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const int a = cur[i];
      const int n = P->gen(a).dim();
      auto e = gen_cell(*P, a);
      auto u = restrict_boundary(*P, e, Sign::Minus);
      auto v = restrict_boundary(*P, e, Sign::Plus);
      auto eL = gen_cell(*P, inv[i].first);
      auto eR = gen_cell(*P, inv[i].second);
      const auto [base, word] = tag[a];
      const std::string& bn = X.pres->gen(base).name;
      const int hl = P->add_cell(loc_name(bn, "L" + word, 'h'), paste_diagrams(*P, e, eL, n - 1), unit(*P, u));
      loc.entries.push_back({hl, base, "L" + word, 'h'});
      const int hr = P->add_cell(loc_name(bn, "R" + word, 'h'), unit(*P, v), paste_diagrams(*P, eR, e, n - 1));
      loc.entries.push_back({hr, base, "R" + word, 'h'});
      tag.resize(P->size(), {-1, ""});
      tag[hl] = {base, "L" + word};
      tag[hr] = {base, "R" + word};
      next.push_back(hl);
      next.push_back(hr);
    }
    std::sort(next.begin(), next.end());
    cur = next;
    loc.stage_marked.push_back(cur);
  }
  loc.pres = P;
  return loc;
}

Localisation walking_equivalence(const Molecule& U, int depth) {
  if (U.dim() <= 0 || !U.is_atom()) throw Error(ErrorKind::NotAtom, "walking equivalence needs an atom of positive dimension");
  auto sp = presentation_of(U);
  return localize({sp.pres, {sp.gen_of[*U.poset().greatest()]}}, depth);
}

WalkingInvertors walking_invertors(const Molecule& U) {
  auto loc = walking_equivalence(U, 1);
  WalkingInvertors w{loc.pres, {}, {}};
  const int n = U.dim();
  for (int g = 0; g < loc.pres->size(); ++g) {
    if (loc.pres->gen(g).dim() >= n + 1) w.marked_m.push_back(g);
    if (loc.pres->gen(g).dim() >= n) w.marked_bar.push_back(g);
  }
  return w;
}

PresMorphism loc_pushforward(const PresMorphism& f, const Subset& A, const Subset& B, int depth,
                             const Localisation* source, const Localisation* target) {
  if (!preserves_marking(f, A, B)) throw Error(ErrorKind::NotMarkingPreserving, "morphism does not preserve markings");
  Localisation ls, lt;
  if (!source) {
    ls = localize({f.source, A}, depth);
    source = &ls;
  }
  if (!target) {
    lt = localize({f.target, B}, depth);
    target = &lt;
  }
  const Presentation& LX = *source->pres;
  const Presentation& LY = *target->pres;
  std::vector<Diagram> images = f.images;
  for (const auto& e : source->entries) {
    const Molecule& shape = LX.gen(e.gen).shape;
    const Diagram& fa = f.images[e.base];
    const int b = is_degenerate(*f.target, fa) ? -1 : cell_generator(*f.target, fa);
    if (b >= 0) {
      const int t = LY.find(loc_name(f.target->gen(b).name, e.word, e.kind));
      if (t < 0) throw Error(ErrorKind::NotMarkingPreserving, "target localisation lacks " + f.target->gen(b).name);
      images.push_back(transport(gen_cell(LY, t), shape));
      continue;
    }
    Diagram cell = fa;
    if (!e.word.empty()) {
      auto c = invertor_shape(fa.shape, e.word);
      cell = degenerate_pullback(LY, fa, c.shape, c.projection);
    }
    if (e.kind != 'h') cell = reverse(LY, cell);
    images.push_back(transport(cell, shape));
  }
  return make_morphism(source->pres, target->pres, std::move(images));
}

}  // namespace odot

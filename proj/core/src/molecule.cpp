#include "odot/molecule.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace odot {

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::Point: return "point";
    case CertKind::Atom: return "atom";
    case CertKind::Paste: return "paste";
    case CertKind::PasteSub: return "paste_sub";
    case CertKind::PasteSubCo: return "paste_sub_co";
    case CertKind::GrayProd: return "gray";
    case CertKind::Dual: return "dual";
    case CertKind::Import: return "import";
  }
  return "?";
}

Molecule Molecule::certified(PosetRef poset, CertRef cert) {
  Molecule m;
  m.d_ = std::make_shared<Data>();
  m.d_->poset = std::move(poset);
  m.d_->cert = std::move(cert);
  return m;
}

bool Molecule::is_round() const {
  std::call_once(d_->round_once, [this] { d_->round = odot::is_round(*d_->poset); });
  return d_->round;
}

const CanonicalForm& Molecule::canonical() const {
  std::call_once(d_->canon_once, [this] { d_->canon = canonical_form(*d_->poset); });
  return d_->canon;
}

bool same_shape(const Molecule& a, const Molecule& b) {
  return a.size() == b.size() && a.canonical().code == b.canonical().code;
}

namespace {

CertRef make_cert(CertKind kind, std::vector<CertRef> children, int k = 0,
                  std::vector<int> ints = {}, std::string name = {}) {
  auto c = std::make_shared<Cert>();
  c->kind = kind;
  c->children = std::move(children);
  c->k = k;
  c->ints = std::move(ints);
  c->name = std::move(name);
  return c;
}

// Unique iso between two closed subsets of (possibly different) posets,
// returned as an id map from the first parent to the second.
std::optional<std::vector<int>> subset_iso(const OgPoset& P, const Subset& a, const OgPoset& Q,
                                           const Subset& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ra = restrict_to(P, a);
  auto rb = restrict_to(Q, b);
  auto iso = are_isomorphic(share(std::move(ra.poset)), share(std::move(rb.poset)));
  if (!iso) return std::nullopt;
  std::vector<int> f(P.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i) f[a[i]] = rb.embed[iso->f[i]];
  return f;
}

// Pushout of P and Q along a closed K in P and a partial id map K -> Q.
Pushout glue_along(PosetRef P, PosetRef Q, const Subset& K, const std::vector<int>& kmap) {
  auto inc = subset_inclusion(P, K);
  std::vector<int> jf(K.size());
  for (std::size_t i = 0; i < K.size(); ++i) jf[i] = kmap[K[i]];
  PosetMap j{inc.source, Q, std::move(jf), MapKind::Inclusion};
  return glue_pushout(inc, j);
}

}  // namespace

Molecule point() {
  return Molecule::certified(share(OgPoset::from_faces({0}, {{}}, {{}})),
                             make_cert(CertKind::Point, {}));
}

Molecule arrow() { return atom(point(), point()); }

Glued atom_glued(const Molecule& V, const Molecule& W) {
  if (!V.is_round() || !W.is_round()) throw Error(ErrorKind::NotRound, "atom needs round input and output");
  if (V.dim() != W.dim()) throw Error(ErrorKind::NotParallel, "atom input and output differ in dimension");
  const OgPoset& P = V.poset();
  const OgPoset& Q = W.poset();
  const int n = V.dim();

  Subset K;
  std::vector<int> kmap(P.size(), -1);
  if (n > 0) {
    for (Sign a : {Sign::Minus, Sign::Plus}) {
      auto bv = boundary(P, side_of(a));
      auto bw = boundary(Q, side_of(a));
      auto iso = subset_iso(P, bv, Q, bw);
      if (!iso) throw Error(ErrorKind::NotParallel, std::string("boundaries differ on side ") + sign_char(a));
      for (int x : bv) {
        if (kmap[x] >= 0 && kmap[x] != (*iso)[x])
          throw Error(ErrorKind::NotParallel, "boundary isomorphisms disagree on the overlap");
        kmap[x] = (*iso)[x];
      }
      K = set_union(K, bv);
    }
    // The combined map must respect faces inside the boundary of W.
    for (int x : K)
      for (Sign a : {Sign::Minus, Sign::Plus}) {
        std::vector<int> img;
        for (int y : P.faces(x, a)) img.push_back(kmap[y]);
        std::sort(img.begin(), img.end());
        if (img != Q.faces(kmap[x], a))
          throw Error(ErrorKind::NotParallel, "boundary isomorphisms are not compatible");
      }
  }
  auto po = glue_along(V.poset_ref(), W.poset_ref(), K, kmap);

  const OgPoset& R = *po.result;
  const int top = R.size();
  std::vector<int> dims(top + 1);
  std::vector<std::vector<int>> in(top + 1), out(top + 1);
  for (int x = 0; x < top; ++x) {
    dims[x] = R.dim(x);
    in[x] = R.faces(x, Sign::Minus);
    out[x] = R.faces(x, Sign::Plus);
  }
  dims[top] = n + 1;
  for (int x : P.grade(n)) in[top].push_back(po.left(x));
  for (int y : Q.grade(n)) out[top].push_back(po.right(y));
  auto res = share(OgPoset::from_faces(std::move(dims), std::move(in), std::move(out)));
  Molecule m = Molecule::certified(res, make_cert(CertKind::Atom, {V.cert_ref(), W.cert_ref()}));
  return {m, PosetMap{V.poset_ref(), res, po.left.f, MapKind::Inclusion},
          PosetMap{W.poset_ref(), res, po.right.f, MapKind::Inclusion}};
}

Molecule atom(const Molecule& V, const Molecule& W) { return atom_glued(V, W).result; }

Molecule merger(const Molecule& U) {
  if (!U.is_round()) throw Error(ErrorKind::NotRound, "merger of a non-round molecule");
  if (U.dim() <= 0) throw Error(ErrorKind::NotRound, "merger of a point");
  return atom(boundary_of(U, Sign::Minus).mol, boundary_of(U, Sign::Plus).mol);
}

Glued paste_glued(const Molecule& U, const Molecule& V, int k) {
  if (k < 0) throw Error(ErrorKind::BoundaryMismatch, "negative pasting dimension");
  const OgPoset& P = U.poset();
  const OgPoset& Q = V.poset();
  auto bu = boundary(P, k, Side::Plus);
  auto bv = boundary(Q, k, Side::Minus);
  auto iso = subset_iso(P, bu, Q, bv);
  if (!iso) throw Error(ErrorKind::BoundaryMismatch, "output " + std::to_string(k) +
                                                          "-boundary does not match input boundary");
  auto po = glue_along(U.poset_ref(), V.poset_ref(), bu, *iso);
  Molecule m = Molecule::certified(po.result, make_cert(CertKind::Paste, {U.cert_ref(), V.cert_ref()}, k));
  return {m, PosetMap{U.poset_ref(), po.result, po.left.f, MapKind::Inclusion},
          PosetMap{V.poset_ref(), po.result, po.right.f, MapKind::Inclusion}};
}

Molecule paste(const Molecule& U, const Molecule& V, int k) { return paste_glued(U, V, k).result; }

Molecule paste(const Molecule& U, const Molecule& V) {
  return paste(U, V, std::min(U.dim(), V.dim()) - 1);
}

namespace {

void check_sub(const OgPoset& Q, const Subset& iota, const Subset& bd, int k) {
  if (!is_closed(Q, iota) || !is_subset(iota, bd))
    throw Error(ErrorKind::NotSubmolecule, "subset is not a closed part of the boundary");
  if (subset_dim(Q, iota) != k || !is_round(Q, iota))
    throw Error(ErrorKind::NotSubmolecule, "subset is not a round " + std::to_string(k) + "-molecule");
}

}  // namespace

Glued paste_sub(const Molecule& U, const Molecule& V, int k, const Subset& iota) {
  if (U.dim() != k + 1 || !U.is_round())
    throw Error(ErrorKind::NotSubmolecule, "pasting at a submolecule needs a round (k+1)-molecule");
  const OgPoset& P = U.poset();
  const OgPoset& Q = V.poset();
  check_sub(Q, iota, boundary(Q, k, Side::Minus), k);
  auto bu = boundary(P, k, Side::Plus);
  auto iso = subset_iso(P, bu, Q, iota);
  if (!iso) throw Error(ErrorKind::BoundaryMismatch, "output boundary does not match the submolecule");
  auto po = glue_along(U.poset_ref(), V.poset_ref(), bu, *iso);
  Molecule m = Molecule::certified(
      po.result, make_cert(CertKind::PasteSub, {U.cert_ref(), V.cert_ref()}, k, iota));
  return {m, PosetMap{U.poset_ref(), po.result, po.left.f, MapKind::Inclusion},
          PosetMap{V.poset_ref(), po.result, po.right.f, MapKind::Inclusion}};
}

Glued paste_sub_co(const Molecule& U, const Molecule& V, int k, const Subset& iota) {
  if (V.dim() != k + 1 || !V.is_round())
    throw Error(ErrorKind::NotSubmolecule, "pasting at a submolecule needs a round (k+1)-molecule");
  const OgPoset& P = U.poset();
  const OgPoset& Q = V.poset();
  check_sub(P, iota, boundary(P, k, Side::Plus), k);
  auto bv = boundary(Q, k, Side::Minus);
  auto iso = subset_iso(P, iota, Q, bv);
  if (!iso) throw Error(ErrorKind::BoundaryMismatch, "input boundary does not match the submolecule");
  auto po = glue_along(U.poset_ref(), V.poset_ref(), iota, *iso);
  Molecule m = Molecule::certified(
      po.result, make_cert(CertKind::PasteSubCo, {U.cert_ref(), V.cert_ref()}, k, iota));
  return {m, PosetMap{U.poset_ref(), po.result, po.left.f, MapKind::Inclusion},
          PosetMap{V.poset_ref(), po.result, po.right.f, MapKind::Inclusion}};
}

Molecule gray(const Molecule& U, const Molecule& V) {
  return Molecule::certified(share(gray_product(U.poset(), V.poset())),
                             make_cert(CertKind::GrayProd, {U.cert_ref(), V.cert_ref()}));
}

Molecule dual(const Molecule& U, const std::vector<int>& dims) {
  std::vector<int> d = dims;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return Molecule::certified(share(odot::dual(U.poset(), d)), make_cert(CertKind::Dual, {U.cert_ref()}, 0, d));
}

Molecule simplex(int n) {
  if (n < 0) throw Error(ErrorKind::GradingError, "negative simplex dimension");
  if (n == 0) return point();
  const int verts = n + 1;
  std::vector<int> masks;
  for (int s = 1; s < (1 << verts); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](int a, int b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<int> idx(1 << verts, -1);
  for (std::size_t i = 0; i < masks.size(); ++i) idx[masks[i]] = static_cast<int>(i);
  const int N = static_cast<int>(masks.size());
  std::vector<int> dims(N);
  std::vector<std::vector<int>> in(N), out(N);
  for (int i = 0; i < N; ++i) {
    const int s = masks[i];
    const int d = __builtin_popcount(s) - 1;
    dims[i] = d;
    if (d == 0) continue;
    int pos = 0;
    for (int v = 0; v < verts; ++v) {
      if (!(s & (1 << v))) continue;
      const int face = idx[s & ~(1 << v)];
      ((pos % 2) == (d % 2) ? in[i] : out[i]).push_back(face);
      ++pos;
    }
  }
  return Molecule::certified(share(OgPoset::from_faces(std::move(dims), std::move(in), std::move(out))),
                             make_cert(CertKind::Import, {}, 0, {n}, "simplex"));
}

Molecule cube(int n) {
  Molecule c = point();
  for (int i = 0; i < n; ++i) c = i == 0 ? arrow() : gray(c, arrow());
  return c;
}

Molecule globe(int n) {
  Molecule g = point();
  for (int i = 0; i < n; ++i) g = atom(g, g);
  return g;
}

SubMolecule boundary_of(const Molecule& U, int k, Sign a) {
  auto s = boundary(U.poset(), k, side_of(a));
  auto inc = subset_inclusion(U.poset_ref(), s);
  auto m = Molecule::certified(inc.source, make_cert(CertKind::Import, {U.cert_ref()}, 0,
                                                     {k, static_cast<int>(a)}, "boundary"));
  return {m, inc};
}

SubMolecule boundary_of(const Molecule& U, Sign a) { return boundary_of(U, U.dim() - 1, a); }

SubMolecule atom_closure(const Molecule& U, int x) {
  auto inc = subset_inclusion(U.poset_ref(), closure_of(U.poset(), x));
  auto m = Molecule::certified(inc.source, make_cert(CertKind::Import, {U.cert_ref()}, 0, {x}, "closure"));
  return {m, inc};
}

SubMolecule submolecule(const Molecule& U, const Subset& closed) {
  auto inc = subset_inclusion(U.poset_ref(), closed);
  auto m = Molecule::certified(inc.source, make_cert(CertKind::Import, {U.cert_ref()}, 0, closed, "sub"));
  return {m, inc};
}

std::vector<std::vector<int>> flow_graph(const OgPoset& P, const Subset& tops) {
  const int t = static_cast<int>(tops.size());
  std::vector<std::vector<int>> g(t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      if (!set_intersection(P.faces(tops[i], Sign::Plus), P.faces(tops[j], Sign::Minus)).empty())
        g[i].push_back(j);
    }
  return g;
}

std::vector<SubmoleculeInclusion> rewritable_submolecules(const Molecule& U, Sign a) {
  constexpr std::size_t kMaxSets = 4096;
  const OgPoset& P = U.poset();
  std::vector<SubmoleculeInclusion> out;
  if (U.dim() < 1) return out;
  const Subset bd = boundary(P, side_of(a));
  const int n = U.dim() - 1;
  const Subset tops = subset_grade(P, bd, n);
  const int t = static_cast<int>(tops.size());
  auto g = flow_graph(P, tops);
  std::vector<std::vector<int>> rev(t), und(t);
  for (int i = 0; i < t; ++i)
    for (int j : g[i]) {
      rev[j].push_back(i);
      und[i].push_back(j);
      und[j].push_back(i);
    }

  auto reach = [&](const std::vector<char>& in, const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(t, 0);
    std::vector<int> stack;
    for (int i = 0; i < t; ++i)
      if (in[i])
        for (int j : adj[i])
          if (!in[j] && !seen[j]) {
            seen[j] = 1;
            stack.push_back(j);
          }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j : adj[x])
        if (!seen[j] && !in[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
    }
    return seen;
  };
  auto convex = [&](const std::vector<int>& s) {
    std::vector<char> in(t, 0);
    for (int i : s) in[i] = 1;
    auto fw = reach(in, g);
    auto bw = reach(in, rev);
    for (int i = 0; i < t; ++i)
      if (fw[i] && bw[i]) return false;
    return true;
  };

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < t; ++i) {
    seen.insert({i});
    frontier.push_back({i});
  }
  std::vector<std::vector<int>> found;
  while (!frontier.empty() && seen.size() < kMaxSets) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      if (convex(s)) found.push_back(s);
      for (int i : s)
        for (int j : und[i]) {
          if (std::binary_search(s.begin(), s.end(), j)) continue;
          auto s2 = s;
          s2.insert(std::upper_bound(s2.begin(), s2.end(), j), j);
          if (seen.insert(s2).second) next.push_back(std::move(s2));
        }
    }
    frontier = std::move(next);
  }
  std::vector<int> all(t);
  for (int i = 0; i < t; ++i) all[i] = i;
  if (std::find(found.begin(), found.end(), all) == found.end()) found.push_back(all);

  for (const auto& s : found) {
    Subset gens;
    for (int i : s) gens.push_back(tops[i]);
    Subset cl = closure(P, gens);
    if (s.size() > 1 && !is_round(P, cl)) continue;
    out.push_back({subset_inclusion(U.poset_ref(), cl), true});
  }
  std::sort(out.begin(), out.end(), [](const SubmoleculeInclusion& x, const SubmoleculeInclusion& y) {
    if (x.map.f.size() != y.map.f.size()) return x.map.f.size() < y.map.f.size();
    return x.map.f < y.map.f;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SubmoleculeInclusion& x, const SubmoleculeInclusion& y) {
                          return x.map.f == y.map.f;
                        }),
            out.end());
  return out;
}

}  // namespace odot

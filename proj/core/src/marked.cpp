#include "odot/marked.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace odot {

MarkedPoset minmark(PosetRef P) { return {std::move(P), {}}; }

MarkedPoset markmol(PosetRef P) {
  auto top = P->greatest();
  if (!top) throw Error(ErrorKind::NotAtom, "markmol of a shape without greatest element");
  Subset m;
  if (P->dim(*top) > 0) m.push_back(*top);
  return {std::move(P), std::move(m)};
}

MarkedPoset fullmark(PosetRef P) {
  Subset m;
  for (int x = 0; x < P->size(); ++x)
    if (P->dim(x) > 0) m.push_back(x);
  return {std::move(P), std::move(m)};
}

void check_marking(const MarkedPoset& X) {
  if (!std::is_sorted(X.marked.begin(), X.marked.end()) ||
      std::adjacent_find(X.marked.begin(), X.marked.end()) != X.marked.end())
    throw Error(ErrorKind::InvalidDiagram, "marking is not a sorted set");
  for (int x : X.marked) {
    if (x < 0 || x >= X.poset->size()) throw Error(ErrorKind::UnknownId, "marked id out of range");
    if (X.poset->dim(x) == 0) throw Error(ErrorKind::InvalidDiagram, "marked element of dimension 0");
  }
}

const char* mono_kind_name(MonoKind k) {
  switch (k) {
    case MonoKind::Entire: return "entire";
    case MonoKind::Regular: return "regular";
    case MonoKind::General: return "general";
  }
  return "?";
}

MarkedMono make_marked_mono(MarkedPoset source, MarkedPoset target, PosetMap map) {
  check_marking(source);
  check_marking(target);
  if (!map.injective()) throw Error(ErrorKind::NotInclusion, "marked mono is not injective");
  auto img = map.image(source.marked);
  if (!is_subset(img, target.marked))
    throw Error(ErrorKind::NotMarkingPreserving, "a marked element maps to an unmarked one");
  MarkedMono m{std::move(source), std::move(target), std::move(map), MonoKind::General};
  if (m.map.is_iso())
    m.kind = MonoKind::Entire;
  else if (img == m.target.marked)
    m.kind = MonoKind::Regular;
  return m;
}

MonoFactorization factor_regular_entire(const MarkedMono& m) {
  MarkedPoset mid{m.target.poset, m.map.image(m.source.marked)};
  auto r = make_marked_mono(m.source, mid, m.map);
  r.kind = m.map.is_iso() ? MonoKind::Entire : MonoKind::Regular;
  auto e = make_marked_mono(mid, m.target, identity_map(m.target.poset));
  return {std::move(r), std::move(e)};
}

MarkedPoset pseudo_gray(const MarkedPoset& X, const MarkedPoset& Y) {
  const OgPoset& P = *X.poset;
  const OgPoset& Q = *Y.poset;
  auto inA = mask_of(P, X.marked);
  auto inB = mask_of(Q, Y.marked);
  Subset marked;
  const int m = Q.size();
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < m; ++y) {
      const bool mk = (P.dim(x) == 0 && inB[y]) || (P.dim(x) > 0 && Q.dim(y) > 0) ||
                      (inA[x] && Q.dim(y) == 0);
      if (mk) marked.push_back(x * m + y);
    }
  return {share(gray_product(P, Q)), std::move(marked)};
}

// --- horns ---------------------------------------------------------------

namespace {

int require_top(const OgPoset& P) {
  auto top = P.greatest();
  if (!top || P.dim(*top) == 0) throw Error(ErrorKind::NotAtom, "horns need an atom of positive dimension");
  return *top;
}

std::optional<Sign> face_side(const OgPoset& P, int top, int x) {
  for (Sign a : {Sign::Minus, Sign::Plus}) {
    const auto& f = P.faces(top, a);
    if (std::binary_search(f.begin(), f.end(), x)) return a;
  }
  return std::nullopt;
}

HornData make_horn(PosetRef U, int top, Sign side, int x, Subset V) {
  const OgPoset& P = *U;
  auto inter = set_difference(V, boundary(P, V, Side::Both));
  auto horn = set_difference(boundary(P, Side::Both), inter);
  HornData h;
  h.lambda = subset_inclusion(U, horn);
  h.atom = std::move(U);
  h.top = top;
  h.side = side;
  h.x = x;
  h.V = std::move(V);
  h.horn = std::move(horn);
  return h;
}

}  // namespace

HornData atomic_horn(PosetRef U, int x) {
  const int top = require_top(*U);
  auto side = face_side(*U, top, x);
  if (!side) throw Error(ErrorKind::NotSubmolecule, "horn element is not a face of the greatest element");
  Subset V = closure_of(*U, x);
  return make_horn(std::move(U), top, *side, x, std::move(V));
}

HornData molecular_horn(PosetRef U, Sign side, const Subset& V) {
  const int top = require_top(*U);
  const OgPoset& P = *U;
  if (!is_closed(P, V) || !is_subset(V, boundary(P, side_of(side))))
    throw Error(ErrorKind::NotSubmolecule, "horn subset is not a closed part of the boundary");
  auto mx = subset_maximal(P, V);
  const int x = mx.size() == 1 ? mx.front() : -1;
  return make_horn(std::move(U), top, side, x, V);
}

std::vector<HornData> atomic_horns(const Molecule& U) {
  const OgPoset& P = U.poset();
  const int top = require_top(P);
  std::vector<HornData> r;
  for (Sign a : {Sign::Minus, Sign::Plus})
    for (int x : P.faces(top, a)) r.push_back(atomic_horn(U.poset_ref(), x));
  return r;
}

std::vector<HornData> molecular_horns(const Molecule& U) {
  require_top(U.poset());
  std::vector<HornData> r;
  for (Sign a : {Sign::Minus, Sign::Plus})
    for (const auto& s : rewritable_submolecules(U, a))
      r.push_back(molecular_horn(U.poset_ref(), a, s.map.image()));
  return r;
}

Subset horn_target_marking(const OgPoset& U, int x, const Subset& A) {
  const int top = require_top(U);
  auto side = face_side(U, top, x);
  if (!side) throw Error(ErrorKind::NotSubmolecule, "horn element is not a face of the greatest element");
  Subset opp = U.faces(top, flip(*side));
  if (is_subset(opp, A)) return set_union(A, set_union(Subset{x}, Subset{top}));
  return set_union(A, Subset{top});
}

namespace {

constexpr std::size_t kIdealCap = 4096;

// Layered search: at level i the current M has x and i-dimensional maximal
// elements; L gathers an ideal D of the flow order avoiding x and its
// descendants, R the rest, and M_(i-1) is what remains around cl{x}.
class HornSearch {
 public:
  HornSearch(const OgPoset& P, int x) : P_(P), x_(x), cx_(closure_of(P, x)) {}

  std::vector<HornDecomposition> solve(int i, const Subset& M) {
    if (i == 0) {
      if (M == cx_) return {HornDecomposition{}};
      return {};
    }
    auto key = std::make_pair(i, M);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto res = compute(i, M);
    memo_.emplace(std::move(key), res);
    return res;
  }

 private:
  std::vector<HornDecomposition> compute(int i, const Subset& M) {
    std::vector<HornDecomposition> out;
    Subset maxM = subset_maximal(P_, M);
    if (!std::binary_search(maxM.begin(), maxM.end(), x_)) return out;
    std::vector<int> verts;
    for (int v : maxM) {
      if (v == x_) continue;
      if (P_.dim(v) > i) return out;
      if (P_.dim(v) == i) verts.push_back(v);
    }
    const Subset need = set_difference(subset_grade(P_, M, i), cx_);

    // Flow between x and the vertices through (i-1)-dimensional faces.
    std::vector<int> nodes = verts;
    nodes.push_back(x_);
    const int n = static_cast<int>(nodes.size());
    const int xi = n - 1;
    std::vector<Subset> outs(n), ins(n);
    for (int j = 0; j < n; ++j) {
      auto c = closure_of(P_, nodes[j]);
      outs[j] = subset_grade(P_, boundary(P_, c, i - 1, Side::Plus), i - 1);
      ins[j] = subset_grade(P_, boundary(P_, c, i - 1, Side::Minus), i - 1);
    }
    std::vector<std::vector<int>> pred(n), succ(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && !set_intersection(outs[a], ins[b]).empty()) {
          succ[a].push_back(b);
          pred[b].push_back(a);
        }
    auto reach = [&](const std::vector<std::vector<int>>& adj) {
      std::vector<char> seen(n, 0);
      std::vector<int> st{xi};
      while (!st.empty()) {
        int a = st.back();
        st.pop_back();
        for (int b : adj[a])
          if (!seen[b]) {
            seen[b] = 1;
            st.push_back(b);
          }
      }
      return seen;
    };
    auto anc = reach(pred);
    auto desc = reach(succ);
    if (anc[xi] || desc[xi]) return out;

    // Ideals D with anc(x) inside and desc(x) outside, built in a fixed order
    // by deciding each free vertex once its predecessors are decided.
    std::vector<int> order;
    {
      std::vector<int> indeg(n, 0);
      for (int b = 0; b < n; ++b)
        for (int a : pred[b])
          if (a != xi) ++indeg[b];
      std::vector<int> q;
      for (int a = 0; a < xi; ++a)
        if (indeg[a] == 0) q.push_back(a);
      while (!q.empty()) {
        int a = q.front();
        q.erase(q.begin());
        order.push_back(a);
        for (int b : succ[a])
          if (b != xi && --indeg[b] == 0) q.push_back(b);
      }
      if (static_cast<int>(order.size()) != xi) return out;  // cyclic flow
    }
    std::vector<char> inD(n, 0);
    std::size_t explored = 0;
    const Subset inM = boundary(P_, M, i - 1, Side::Minus);
    const Subset outM = boundary(P_, M, i - 1, Side::Plus);

    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (explored >= kIdealCap) return;
      if (pos == order.size()) {
        ++explored;
        try_split(i, M, nodes, inD, inM, outM, need, out);
        return;
      }
      const int a = order[pos];
      const bool preds_in = std::all_of(pred[a].begin(), pred[a].end(),
                                        [&](int p) { return p != xi && inD[p]; });
      if (!desc[a]) {
        if (preds_in) {
          inD[a] = 1;
          rec(pos + 1);
          inD[a] = 0;
        }
      }
      if (!anc[a]) rec(pos + 1);
    };
    rec(0);
    minimise(out);
    return out;
  }

  void try_split(int i, const Subset& M, const std::vector<int>& nodes, const std::vector<char>& inD,
                 const Subset& inM, const Subset& outM, const Subset& need,
                 std::vector<HornDecomposition>& out) {
    Subset D, rest;
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) (inD[j] ? D : rest).push_back(nodes[j]);
    std::sort(D.begin(), D.end());
    std::sort(rest.begin(), rest.end());

    Subset L = closure(P_, set_union(inM, D));
    if (boundary(P_, L, i - 1, Side::Minus) != inM) return;
    const Subset Lout = boundary(P_, L, i - 1, Side::Plus);
    Subset Rp = closure(P_, set_union(Lout, set_union(rest, Subset{x_})));
    if (set_union(L, Rp) != M) return;
    if (set_intersection(L, Rp) != Lout || boundary(P_, Rp, i - 1, Side::Minus) != Lout) return;

    Subset N = closure(P_, set_union(Lout, Subset{x_}));
    const Subset Nout = boundary(P_, N, i - 1, Side::Plus);
    Subset R = closure(P_, set_union(Nout, rest));
    if (set_union(N, R) != Rp) return;
    if (set_intersection(N, R) != Nout || boundary(P_, R, i - 1, Side::Minus) != Nout) return;
    if (boundary(P_, R, i - 1, Side::Plus) != outM) return;
    if (subset_dim(P_, L) > i || subset_dim(P_, R) > i) return;

    for (auto& sub : solve(i - 1, N)) {
      sub.L.push_back(L);
      sub.R.push_back(R);
      sub.required = set_union(sub.required, need);
      out.push_back(std::move(sub));
    }
  }

  static void minimise(std::vector<HornDecomposition>& v) {
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      if (a.required.size() != b.required.size()) return a.required.size() < b.required.size();
      return a.required < b.required;
    });
    std::vector<HornDecomposition> keep;
    for (auto& d : v) {
      bool dominated = std::any_of(keep.begin(), keep.end(),
                                   [&](const auto& k) { return is_subset(k.required, d.required); });
      if (!dominated) keep.push_back(std::move(d));
    }
    v = std::move(keep);
  }

  const OgPoset& P_;
  int x_;
  Subset cx_;
  std::map<std::pair<int, Subset>, std::vector<HornDecomposition>> memo_;
};

}  // namespace

std::vector<HornDecomposition> horn_requirements(const OgPoset& U, int x) {
  const int top = require_top(U);
  auto side = face_side(U, top, x);
  if (!side) throw Error(ErrorKind::NotSubmolecule, "horn element is not a face of the greatest element");
  const int k = U.dim(top) - 1;
  HornSearch s(U, x);
  // Layers come out ordered from level 1 upwards.
  return s.solve(k, boundary(U, side_of(*side)));
}

HornVerdict is_marked_horn(const OgPoset& U, int x, const Subset& A, const Subset& Aprime) {
  HornVerdict v;
  auto top = U.greatest();
  if (!top || U.dim(*top) == 0) {
    v.reason = "target is not an atom of positive dimension";
    return v;
  }
  if (!face_side(U, *top, x)) {
    v.reason = "horn element is not a face of the greatest element";
    return v;
  }
  for (int a : A)
    if (a == x || a == *top || U.dim(a) == 0) {
      v.reason = "source marking leaves the positive part of the horn";
      return v;
    }
  if (Aprime != horn_target_marking(U, x, A)) {
    v.reason = "target marking does not follow the horn rule";
    return v;
  }
  for (auto& d : horn_requirements(U, x))
    if (is_subset(d.required, A)) {
      v.ok = true;
      v.witness = std::move(d);
      return v;
    }
  v.reason = "no decomposition found within search space";
  return v;
}

HornVerdict is_marked_horn(const MarkedMono& m) {
  const OgPoset& P = *m.target.poset;
  HornVerdict v;
  auto top = P.greatest();
  if (!top) {
    v.reason = "target has no greatest element";
    return v;
  }
  auto missing = set_difference(all_of(P), m.map.image());
  missing.erase(std::remove(missing.begin(), missing.end(), *top), missing.end());
  if (missing.size() != 1 || m.map.image().size() + 2 != static_cast<std::size_t>(P.size())) {
    v.reason = "image is not a horn";
    return v;
  }
  return is_marked_horn(P, missing.front(), m.map.image(m.source.marked), m.target.marked);
}

MarkedMono horn_mono(const HornData& h, const Subset& A, const Subset& Aprime) {
  // A is given in atom ids; the source carries it in horn ids.
  Subset src;
  for (int a : A) {
    auto it = std::lower_bound(h.horn.begin(), h.horn.end(), a);
    if (it == h.horn.end() || *it != a) throw Error(ErrorKind::InvalidDiagram, "marking outside the horn");
    src.push_back(static_cast<int>(it - h.horn.begin()));
  }
  return make_marked_mono({h.lambda.source, std::move(src)}, {h.atom, Aprime}, h.lambda);
}

// --- pushout-products ----------------------------------------------------

const char* cyl_inclusion_name(CylInclusion b) {
  switch (b) {
    case CylInclusion::IotaMinus: return "iota-";
    case CylInclusion::IotaPlus: return "iota+";
    case CylInclusion::Both: return "iota";
  }
  return "?";
}

MarkedMono pushout_product(CylInclusion beta, const MarkedMono& m) {
  const OgPoset& Y = *m.target.poset;
  const int ny = Y.size();
  static const PosetRef kArrow = arrow().poset_ref();
  MarkedPoset arrow_marked{kArrow, {kArrowMid}};
  MarkedPoset target = pseudo_gray(arrow_marked, m.target);

  const Subset X = m.map.image();
  const Subset A = m.map.image(m.source.marked);
  std::vector<int> full_copies, part_copies{kArrowMid};
  if (beta != CylInclusion::IotaPlus) full_copies.push_back(kArrowMinus);
  if (beta != CylInclusion::IotaMinus) full_copies.push_back(kArrowPlus);
  for (int a : {kArrowMinus, kArrowPlus})
    if (std::find(full_copies.begin(), full_copies.end(), a) == full_copies.end()) part_copies.push_back(a);

  Subset D, marked;
  for (int a : full_copies)
    for (int y = 0; y < ny; ++y) D.push_back(a * ny + y);
  for (int a : part_copies)
    for (int y : X) D.push_back(a * ny + y);
  std::sort(D.begin(), D.end());

  for (int a : full_copies)
    for (int y : m.target.marked) marked.push_back(a * ny + y);
  for (int a : {kArrowMinus, kArrowPlus})
    for (int y : A) marked.push_back(a * ny + y);
  for (int y : X) marked.push_back(kArrowMid * ny + y);
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  Subset src;
  for (int z : marked) {
    auto it = std::lower_bound(D.begin(), D.end(), z);
    src.push_back(static_cast<int>(it - D.begin()));
  }
  auto incl = subset_inclusion(target.poset, D);
  MarkedPoset source{incl.source, std::move(src)};
  return make_marked_mono(std::move(source), std::move(target), std::move(incl));
}

MarkedMono boundary_mono(PosetRef U, bool full_target) {
  auto bd = boundary(*U, Side::Both);
  auto incl = subset_inclusion(U, bd);
  MarkedPoset tgt = full_target ? markmol(U) : minmark(U);
  MarkedPoset src = minmark(incl.source);
  return make_marked_mono(std::move(src), std::move(tgt), std::move(incl));
}

}  // namespace odot

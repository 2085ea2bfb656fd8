#include "odot/map.hpp"

#include <algorithm>
#include <string>

namespace odot {

const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::Inclusion: return "inclusion";
    case MapKind::Collapse: return "collapse";
    case MapKind::Cartesian: return "cartesian";
  }
  return "?";
}

bool PosetMap::injective() const {
  std::vector<char> hit(target->size(), 0);
  for (int y : f) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool PosetMap::surjective() const { return static_cast<int>(image().size()) == target->size(); }

Subset PosetMap::image() const {
  Subset r(f.begin(), f.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

Subset PosetMap::image(const Subset& s) const {
  Subset r;
  r.reserve(s.size());
  for (int x : s) r.push_back(f[x]);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

namespace {

MapKind kind_of(const OgPoset& P, const OgPoset& Q, const std::vector<int>& f) {
  std::vector<char> hit(Q.size(), 0);
  bool inj = true;
  bool dimpres = true;
  int count = 0;
  for (int x = 0; x < P.size(); ++x) {
    if (hit[f[x]]) inj = false;
    else ++count;
    hit[f[x]] = 1;
    if (Q.dim(f[x]) != P.dim(x)) dimpres = false;
  }
  if (inj && dimpres) return MapKind::Inclusion;
  if (count == Q.size()) return MapKind::Collapse;
  return MapKind::Cartesian;
}

}  // namespace

PosetMap trusted_map(PosetRef source, PosetRef target, std::vector<int> f) {
  PosetMap m{source, target, std::move(f), MapKind::Cartesian};
  m.kind = kind_of(*source, *target, m.f);
  return m;
}

PosetMap classify_map(PosetRef source, PosetRef target, std::vector<int> f) {
  const OgPoset& P = *source;
  const OgPoset& Q = *target;
  if (static_cast<int>(f.size()) != P.size())
    throw Error(ErrorKind::UnknownId, "assignment is not total on the source");
  for (int y : f)
    if (y < 0 || y >= Q.size()) throw Error(ErrorKind::UnknownId, "assignment leaves the target");

  std::vector<Subset> qclosure(Q.size());
  std::vector<char> have(Q.size(), 0);
  auto qcl = [&](int y) -> const Subset& {
    if (!have[y]) {
      qclosure[y] = closure_of(Q, y);
      have[y] = 1;
    }
    return qclosure[y];
  };

  for (int x = 0; x < P.size(); ++x) {
    const Subset& cy = qcl(f[x]);
    for (Sign a : {Sign::Minus, Sign::Plus})
      for (int z : P.faces(x, a))
        if (!std::binary_search(cy.begin(), cy.end(), f[z]))
          throw Error(ErrorKind::NotMonotone, "face " + std::to_string(z) + " of " +
                                                  std::to_string(x) + " not sent below its image");
  }

  PosetMap m{source, target, std::move(f), MapKind::Cartesian};
  for (int x = 0; x < P.size(); ++x) {
    const Subset cx = closure_of(P, x);
    const Subset& cy = qcl(m.f[x]);
    if (m.image(cx) != cy)
      throw Error(ErrorKind::NotCartesian,
                  "closure of " + std::to_string(x) + " not sent onto the closure of its image");
    for (int k = 0; k < P.dim(x); ++k)
      for (Side a : {Side::Minus, Side::Plus})
        if (m.image(boundary(P, cx, k, a)) != boundary(Q, cy, k, a))
          throw Error(ErrorKind::NotCartesian,
                      "boundary " + std::to_string(k) + (a == Side::Minus ? "-" : "+") +
                          " of element " + std::to_string(x) + " not preserved");
  }
  m.kind = kind_of(P, Q, m.f);
  return m;
}

PosetMap identity_map(PosetRef P) {
  std::vector<int> f(P->size());
  for (int i = 0; i < P->size(); ++i) f[i] = i;
  return PosetMap{P, P, std::move(f), MapKind::Inclusion};
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
  std::vector<int> h(f.f.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = g.f[f.f[i]];
  return trusted_map(f.source, g.target, std::move(h));
}

PosetMap inverse(const PosetMap& iso) {
  std::vector<int> h(iso.f.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[iso.f[i]] = static_cast<int>(i);
  return PosetMap{iso.target, iso.source, std::move(h), MapKind::Inclusion};
}

PosetMap subset_inclusion(PosetRef P, const Subset& closed) {
  auto r = restrict_to(*P, closed);
  return PosetMap{share(std::move(r.poset)), P, std::move(r.embed), MapKind::Inclusion};
}

Factorization factorize(const PosetMap& f) {
  Subset img = f.image();
  auto inc = subset_inclusion(f.target, img);
  std::vector<int> pos(f.target->size(), -1);
  for (std::size_t i = 0; i < img.size(); ++i) pos[img[i]] = static_cast<int>(i);
  std::vector<int> c(f.f.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = pos[f.f[i]];
  PosetMap col{f.source, inc.source, std::move(c), MapKind::Collapse};
  return {std::move(col), std::move(inc)};
}

Pushout glue_pushout(const PosetMap& i, const PosetMap& j) {
  if (i.source->size() != j.source->size())
    throw Error(ErrorKind::NotInclusion, "pushout legs have different sources");
  for (const PosetMap* m : {&i, &j})
    if (!m->injective()) throw Error(ErrorKind::NotInclusion, "pushout leg is not injective");
  const OgPoset& P = *i.target;
  const OgPoset& Q = *j.target;
  const int nk = i.source->size();

  std::vector<int> qmap(Q.size(), -1);
  for (int k = 0; k < nk; ++k) qmap[j.f[k]] = i.f[k];
  int next = P.size();
  for (int y = 0; y < Q.size(); ++y)
    if (qmap[y] < 0) qmap[y] = next++;

  std::vector<int> dims(next);
  std::vector<std::vector<int>> in(next), out(next);
  for (int x = 0; x < P.size(); ++x) {
    dims[x] = P.dim(x);
    in[x] = P.faces(x, Sign::Minus);
    out[x] = P.faces(x, Sign::Plus);
  }
  std::vector<char> fromk(Q.size(), 0);
  for (int k = 0; k < nk; ++k) fromk[j.f[k]] = 1;
  for (int y = 0; y < Q.size(); ++y) {
    const int t = qmap[y];
    if (fromk[y]) {
      if (P.dim(t) != Q.dim(y))
        throw Error(ErrorKind::NotInclusion, "pushout legs disagree on dimension");
      continue;
    }
    dims[t] = Q.dim(y);
    for (int z : Q.faces(y, Sign::Minus)) in[t].push_back(qmap[z]);
    for (int z : Q.faces(y, Sign::Plus)) out[t].push_back(qmap[z]);
  }
  auto R = share(OgPoset::from_faces(std::move(dims), std::move(in), std::move(out)));
  std::vector<int> lf(P.size());
  for (int x = 0; x < P.size(); ++x) lf[x] = x;
  return {R, PosetMap{i.target, R, std::move(lf), MapKind::Inclusion},
          PosetMap{j.target, R, std::move(qmap), MapKind::Inclusion}};
}

}  // namespace odot

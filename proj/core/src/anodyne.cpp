#include "odot/anodyne.hpp"

#include <algorithm>
#include <set>

#include "odot/corpus.hpp"

namespace odot {

namespace {

struct TagName {
  AnodyneTag tag;
  const char* name;
};
constexpr TagName kTags[] = {
    {AnodyneTag::Horn, "Jhorn"}, {AnodyneTag::MarkedN, "Jn"},          {AnodyneTag::Inv, "Jinv"},
    {AnodyneTag::Loc, "Jloc"},   {AnodyneTag::Comp, "Jcomp"},          {AnodyneTag::UnmarkedN, "Jn-unmarked"},
    {AnodyneTag::Atomic, "Jat"}, {AnodyneTag::CellularModel, "M"},
};

std::string subset_str(const Subset& s) {
  std::string r = "{";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + "}";
}

Subset positive_part(const OgPoset& P, const Subset& S) {
  Subset r;
  for (int x : S)
    if (P.dim(x) > 0) r.push_back(x);
  return r;
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Subset set_minus(const Subset& a, const Subset& b) {
  Subset r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

// Markings of the horn to try, per the enumeration policy.
std::vector<Subset> horn_markings(const OgPoset& U, const HornData& h) {
  const Subset pos = positive_part(U, h.horn);
  std::set<Subset> out;
  for (const auto& dec : horn_requirements(U, h.x)) {
    const Subset& R = dec.required;
    const Subset free = set_minus(pos, R);
    if (free.size() <= static_cast<std::size_t>(kHornFreeLimit)) {
      for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
        Subset extra;
        for (std::size_t i = 0; i < free.size(); ++i)
          if (mask & (1u << i)) extra.push_back(free[i]);
        out.insert(set_union(R, extra));
      }
    } else {
      out.insert(R);
      for (int y : free) out.insert(set_union(R, {y}));
      out.insert(pos);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> pres_key(AnodyneTag t, const Molecule& U, int depth) {
  std::vector<int> k{-1 - static_cast<int>(t), depth};
  const auto& c = U.canonical().code;
  k.insert(k.end(), c.begin(), c.end());
  return k;
}

PresMono entire_pres_mono(std::shared_ptr<const Presentation> P, Subset from, Subset to) {
  Subset all(P->size());
  for (int g = 0; g < P->size(); ++g) all[g] = g;
  return PresMono{{std::move(P), std::move(to)}, std::move(all), std::move(from)};
}

}  // namespace

const char* anodyne_tag_name(AnodyneTag t) {
  for (const auto& e : kTags)
    if (e.tag == t) return e.name;
  return "?";
}

std::optional<AnodyneTag> parse_anodyne_tag(std::string_view s) {
  for (const auto& e : kTags)
    if (s == e.name) return e.tag;
  if (s == "Jn-marked") return AnodyneTag::MarkedN;
  return std::nullopt;
}

std::vector<Molecule> default_shapes(int d, std::uint64_t seed, int max_size) {
  std::vector<Molecule> all;
  for (int k = 0; k <= d; ++k) {
    all.push_back(globe(k));
    all.push_back(simplex(k));
    all.push_back(cube(k));
  }
  for (auto& U : corpus({seed, std::max(d, 0), max_size, 48, 600}))
    if (U.dim() <= d) all.push_back(U);
  std::vector<Molecule> out;
  for (auto& U : all) {
    if (!U.is_atom() && !U.is_round()) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const Molecule& V) { return same_shape(U, V); });
    if (!dup) out.push_back(U);
  }
  std::stable_sort(out.begin(), out.end(), [](const Molecule& a, const Molecule& b) {
    return std::make_pair(a.dim(), a.size()) < std::make_pair(b.dim(), b.size());
  });
  return out;
}

std::vector<int> mono_key(const MarkedMono& m) {
  const OgPoset& Y = *m.target.poset;
  std::vector<int> colour(Y.size(), 0);
  for (int x = 0; x < m.source.poset->size(); ++x) colour[m.map(x)] |= 4;
  for (int y : m.target.marked) colour[y] |= 2;
  for (int a : m.source.marked) colour[m.map(a)] |= 1;
  auto cf = canonical_form(Y, &colour);
  std::vector<int> key{Y.size(), m.source.poset->size()};
  key.insert(key.end(), cf.code.begin(), cf.code.end());
  std::vector<int> cols(Y.size());
  for (int y = 0; y < Y.size(); ++y) cols[cf.labelling[y]] = colour[y];
  key.insert(key.end(), cols.begin(), cols.end());
  return key;
}

AnodyneStream::AnodyneStream(AnodyneFamily f) : fam_(std::move(f)) {
  if (fam_.shapes.empty()) fam_.shapes = default_shapes(fam_.d);
}

AnodyneStream enumerate_anodyne(const AnodyneFamily& f) { return AnodyneStream(f); }

std::vector<AnodyneItem> collect(AnodyneStream s) {
  std::vector<AnodyneItem> r;
  while (auto it = s.next()) r.push_back(std::move(*it));
  return r;
}

std::optional<AnodyneItem> AnodyneStream::next() {
  while (pos_ >= buffer_.size()) {
    if (shape_ >= fam_.shapes.size()) return std::nullopt;
    buffer_.clear();
    pos_ = 0;
    fill();
    ++shape_;
  }
  return std::move(buffer_[pos_++]);
}

void AnodyneStream::fill() {
  const Molecule& U = fam_.shapes[shape_];
  const std::string uname = "U" + std::to_string(shape_);
  if (U.dim() > fam_.d) return;
  const bool atom = U.is_atom();
  auto emit_shape = [&](MarkedMono m, std::string label) {
    auto key = mono_key(m);
    if (!seen_.insert(std::move(key)).second) return;
    buffer_.push_back({fam_.tag, std::move(label), std::move(m), false, 0});
  };
  auto emit_pres = [&](PresMono m, std::string label, bool truncated) {
    auto key = pres_key(fam_.tag, U, fam_.depth);
    if (!seen_.insert(std::move(key)).second) return;
    buffer_.push_back({fam_.tag, std::move(label), std::move(m), truncated, truncated ? fam_.depth : 0});
  };
  const PosetRef& P = U.poset_ref();
  switch (fam_.tag) {
    case AnodyneTag::Horn:
      if (!atom || U.dim() < 1) return;
      for (const auto& h : atomic_horns(U))
        for (const auto& A : horn_markings(*P, h))
          emit_shape(horn_mono(h, A, horn_target_marking(*P, h.x, A)),
                     uname + " x=" + std::to_string(h.x) + " A=" + subset_str(A));
      return;
    case AnodyneTag::Atomic:
      if (!atom || U.dim() < 1) return;
      for (const auto& h : atomic_horns(U)) emit_shape(horn_mono(h, {}, {}), uname + " x=" + std::to_string(h.x));
      return;
    case AnodyneTag::MarkedN:
      if (!atom || U.dim() <= fam_.n) return;
      emit_shape(make_marked_mono(minmark(P), markmol(P), identity_map(P)), uname + " t");
      return;
    case AnodyneTag::CellularModel:
      if (!atom) return;
      emit_shape(boundary_mono(P, false), uname + " boundary");
      if (U.dim() > 0) emit_shape(make_marked_mono(minmark(P), markmol(P), identity_map(P)), uname + " t");
      return;
    case AnodyneTag::Inv: {
      if (!atom || U.dim() < 1) return;
      auto w = walking_invertors(U);
      emit_pres(entire_pres_mono(w.pres, w.marked_m, w.marked_bar), uname + " invertors", false);
      return;
    }
    case AnodyneTag::Loc: {
      if (!atom || U.dim() < 1) return;
      auto loc = walking_equivalence(U, fam_.depth);
      emit_pres(entire_pres_mono(loc.pres, {}, loc.stage_marked[0]), uname + " loc", true);
      return;
    }
    case AnodyneTag::UnmarkedN: {
      if (!atom || U.dim() <= fam_.n) return;
      auto loc = walking_equivalence(U, fam_.depth);
      Subset base(U.size());
      for (int g = 0; g < U.size(); ++g) base[g] = g;
      emit_pres(PresMono{{loc.pres, {}}, std::move(base), {}}, uname + " loc", true);
      return;
    }
    case AnodyneTag::Comp: {
      if (!U.is_round()) return;
      // U => <U> as an atom, its top cell freely inverted.
      Glued g = U.dim() == 0 ? atom_glued(U, U) : atom_glued(U, merger(U));
      auto sp = presentation_of(g.result);
      auto loc = localize({sp.pres, {sp.gen_of[*g.result.poset().greatest()]}}, fam_.depth);
      Subset dom;
      for (int x = 0; x < U.size(); ++x) dom.push_back(sp.gen_of[g.left(x)]);
      std::sort(dom.begin(), dom.end());
      emit_pres(PresMono{{loc.pres, {}}, std::move(dom), {}}, uname + " compositor", true);
      return;
    }
  }
}

std::vector<MarkedMono> anodyne_closure_step(const std::vector<MarkedMono>& S, int model_dim,
                                             const std::vector<Molecule>& atoms) {
  std::vector<MarkedMono> out;
  std::set<std::vector<int>> seen;
  auto add = [&](MarkedMono m) {
    if (seen.insert(mono_key(m)).second) out.push_back(std::move(m));
  };
  for (const auto& j : S) add(j);
  for (const auto& j : S) add(pushout_product(CylInclusion::Both, j));
  AnodyneFamily fam{AnodyneTag::CellularModel, 0, model_dim, 0, atoms};
  auto M = collect(enumerate_anodyne(fam));
  for (const auto& item : M)
    for (CylInclusion b : {CylInclusion::IotaMinus, CylInclusion::IotaPlus})
      add(pushout_product(b, std::get<MarkedMono>(item.mono)));
  return out;
}

}  // namespace odot

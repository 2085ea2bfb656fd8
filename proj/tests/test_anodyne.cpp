#include <gtest/gtest.h>

#include <set>

#include "odot/anodyne.hpp"

using namespace odot;

namespace {

std::vector<AnodyneItem> run(AnodyneTag t, int d, std::vector<Molecule> shapes = {}, int n = 0, int depth = 1) {
  return collect(enumerate_anodyne({t, n, d, depth, std::move(shapes)}));
}

bool is_identity(const MarkedMono& m) {
  return m.kind == MonoKind::Entire && m.source.marked == m.target.marked;
}

}  // namespace

TEST(Anodyne, TagNames) {
  for (auto t : {AnodyneTag::Horn, AnodyneTag::MarkedN, AnodyneTag::Inv, AnodyneTag::Loc, AnodyneTag::Comp,
                 AnodyneTag::UnmarkedN, AnodyneTag::Atomic, AnodyneTag::CellularModel})
    EXPECT_EQ(parse_anodyne_tag(anodyne_tag_name(t)), t);
  EXPECT_FALSE(parse_anodyne_tag("Jbogus"));
}

TEST(Anodyne, MarkedNEmptyWithinBound) {
  EXPECT_TRUE(run(AnodyneTag::MarkedN, 2, {}, 2).empty());
  auto j = run(AnodyneTag::MarkedN, 2, {}, 1);
  ASSERT_FALSE(j.empty());
  for (const auto& it : j) {
    const auto& m = std::get<MarkedMono>(it.mono);
    EXPECT_EQ(m.kind, MonoKind::Entire);
    EXPECT_EQ(m.target.poset->dimension(), 2);
  }
}

// Every marking of the horn for which the decision procedure says yes is
// enumerated, and nothing else.
TEST(Anodyne, HornMatchesBruteForce) {
  for (const Molecule& U : {globe(2), simplex(2), arrow(), globe(3)}) {
    std::set<std::pair<int, Subset>> expect, got;
    const OgPoset& P = U.poset();
    for (const auto& h : atomic_horns(U)) {
      Subset pos;
      for (int y : h.horn)
        if (P.dim(y) > 0) pos.push_back(y);
      for (std::uint32_t mask = 0; mask < (1u << pos.size()); ++mask) {
        Subset A;
        for (std::size_t i = 0; i < pos.size(); ++i)
          if (mask & (1u << i)) A.push_back(pos[i]);
        if (is_marked_horn(P, h.x, A, horn_target_marking(P, h.x, A)).ok) expect.insert({h.x, A});
      }
    }
    for (const auto& it : run(AnodyneTag::Horn, U.dim(), {U})) {
      const auto& m = std::get<MarkedMono>(it.mono);
      auto v = is_marked_horn(m);
      EXPECT_TRUE(v.ok) << it.label;
      int x = -1;
      std::vector<char> hit(P.size(), 0);
      for (int s = 0; s < m.source.poset->size(); ++s) hit[m.map(s)] = 1;
      for (int y = 0; y < P.size(); ++y)
        if (!hit[y] && y != *P.greatest()) x = y;
      Subset A;
      for (int a : m.source.marked) A.push_back(m.map(a));
      std::sort(A.begin(), A.end());
      got.insert({x, A});
    }
    EXPECT_EQ(got, expect) << U.size();
  }
  // globe(2): both sides, with and without the other arrow marked.
  EXPECT_EQ(run(AnodyneTag::Horn, 2, {globe(2)}).size(), 4u);
}

TEST(Anodyne, HornsPassDecisionUpToDim3) {
  for (const auto& it : run(AnodyneTag::Horn, 3, {simplex(3), cube(2), atom(paste(arrow(), arrow(), 0), arrow())})) {
    EXPECT_TRUE(is_marked_horn(std::get<MarkedMono>(it.mono)).ok) << it.label;
  }
}

TEST(Anodyne, CellularModelCounts) {
  auto shapes = default_shapes(2);
  int atoms = 0, positive = 0;
  for (const auto& U : shapes)
    if (U.is_atom()) {
      ++atoms;
      positive += U.dim() > 0;
    }
  auto M = run(AnodyneTag::CellularModel, 2);
  EXPECT_EQ(static_cast<int>(M.size()), atoms + positive);
  for (const auto& it : M) {
    const auto& m = std::get<MarkedMono>(it.mono);
    EXPECT_TRUE(m.source.marked.empty());
  }
}

TEST(Anodyne, AtomicHornsUnmarked) {
  std::size_t expect = 0;
  for (const auto& U : default_shapes(2))
    if (U.is_atom() && U.dim() > 0) expect += atomic_horns(U).size();
  auto J = run(AnodyneTag::Atomic, 2);
  EXPECT_LE(J.size(), expect);  // symmetric horns coincide up to iso
  EXPECT_GT(J.size(), 0u);
  for (const auto& it : J) EXPECT_TRUE(std::get<MarkedMono>(it.mono).target.marked.empty());
}

TEST(Anodyne, PresentationFamilies) {
  auto inv = run(AnodyneTag::Inv, 1, {arrow()});
  ASSERT_EQ(inv.size(), 1u);
  const auto& pm = std::get<PresMono>(inv[0].mono);
  EXPECT_EQ(pm.target.pres->size(), 7);
  EXPECT_TRUE(pm.entire());
  EXPECT_EQ(pm.domain_marked.size(), 2u);
  EXPECT_EQ(pm.target.marked.size(), 5u);
  EXPECT_FALSE(inv[0].truncated);

  auto loc = run(AnodyneTag::Loc, 2, {arrow(), globe(2)}, 0, 2);
  ASSERT_EQ(loc.size(), 2u);
  for (const auto& it : loc) {
    const auto& m = std::get<PresMono>(it.mono);
    EXPECT_TRUE(it.truncated);
    EXPECT_EQ(it.depth, 2);
    EXPECT_TRUE(m.domain_marked.empty());
    EXPECT_EQ(m.target.marked.size(), 1u);
  }

  auto un = run(AnodyneTag::UnmarkedN, 2, {arrow(), globe(2)}, 1, 1);
  ASSERT_EQ(un.size(), 1u);
  EXPECT_EQ(std::get<PresMono>(un[0].mono).domain.size(), 5u);

  auto comp = run(AnodyneTag::Comp, 2, {point(), arrow(), paste(arrow(), arrow(), 0)}, 0, 1);
  ASSERT_EQ(comp.size(), 3u);
  // point => point inverted is the reversible arrow.
  EXPECT_EQ(std::get<PresMono>(comp[0].mono).target.pres->count_dim_at_least(1), 5);
  const auto& path = std::get<PresMono>(comp[2].mono);
  EXPECT_EQ(path.domain.size(), 5u);
  // the path, its composite, the compositor, and the depth-1 inverses
  EXPECT_EQ(path.target.pres->count_dim_at_least(1), 2 + 1 + 1 + 4);
}

TEST(Anodyne, Dedup) {
  auto once = run(AnodyneTag::Horn, 2, {simplex(2)});
  auto twice = run(AnodyneTag::Horn, 2, {simplex(2), simplex(2), dual(simplex(2), {1, 2})});
  EXPECT_LE(twice.size(), 2 * once.size());
  std::set<std::vector<int>> keys;
  for (const auto& it : twice) EXPECT_TRUE(keys.insert(mono_key(std::get<MarkedMono>(it.mono))).second);
  auto again = run(AnodyneTag::Horn, 2, {simplex(2)});
  ASSERT_EQ(again.size(), once.size());
  for (std::size_t i = 0; i < once.size(); ++i) EXPECT_EQ(once[i].label, again[i].label);
}

TEST(AnodyneClosure, HornGoesUpOneDimension) {
  auto horns = run(AnodyneTag::Horn, 2, {simplex(2), globe(2)});
  std::vector<MarkedMono> S;
  for (const auto& it : horns) S.push_back(std::get<MarkedMono>(it.mono));
  auto T = anodyne_closure_step(S, -1);
  EXPECT_EQ(T.size(), 2 * S.size());
  for (std::size_t i = S.size(); i < T.size(); ++i) {
    EXPECT_EQ(T[i].target.poset->dimension(), 3);
    EXPECT_TRUE(is_marked_horn(T[i]).ok);
  }
}

TEST(AnodyneClosure, IdentitiesStayIdentities) {
  std::vector<MarkedMono> S;
  for (const Molecule& U : {arrow(), globe(2), simplex(2)}) {
    auto P = U.poset_ref();
    S.push_back(make_marked_mono(markmol(P), markmol(P), identity_map(P)));
    S.push_back(make_marked_mono(minmark(P), minmark(P), identity_map(P)));
  }
  for (int round = 0; round < 2; ++round) {
    S = anodyne_closure_step(S, -1);
    for (const auto& m : S) EXPECT_TRUE(is_identity(m));
  }
}

TEST(AnodyneClosure, CellularModelBoxes) {
  auto T = anodyne_closure_step({}, 1, {point(), arrow()});
  // boundary and t_U pieces under both iota: boundaries give horns, t_U boxes
  // are entire.
  EXPECT_EQ(T.size(), 2u * 3u);
  for (const auto& m : T) {
    if (m.kind == MonoKind::Entire) continue;
    EXPECT_TRUE(is_marked_horn(m).ok);
  }
}

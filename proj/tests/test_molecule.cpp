#include <gtest/gtest.h>

#include "odot/corpus.hpp"
#include "odot/cylinder.hpp"
#include "odot/molecule.hpp"
#include "oracles.hpp"

using namespace odot;

namespace {

const std::vector<Molecule>& small_corpus() {
  static const auto c = corpus({0, 3, 15, 48, 600});
  return c;
}

}  // namespace

TEST(Molecule, PointAndArrow) {
  EXPECT_EQ(point().size(), 1);
  EXPECT_EQ(point().dim(), 0);
  auto A = arrow();
  EXPECT_EQ(A.size(), 3);
  EXPECT_TRUE(A.is_atom());
  EXPECT_TRUE(A.is_round());
  EXPECT_EQ(A.poset().faces(2, Sign::Minus), std::vector<int>{0});
  EXPECT_EQ(A.poset().faces(2, Sign::Plus), std::vector<int>{1});
}

TEST(Molecule, Roundness) {
  EXPECT_TRUE(paste(arrow(), arrow(), 0).is_round());
  auto whisker = paste(arrow(), globe(2), 0);
  EXPECT_FALSE(whisker.is_round());
  EXPECT_EQ(whisker.size(), 7);
  for (const auto& U : atoms_of(small_corpus())) EXPECT_TRUE(U.is_round());
}

TEST(Molecule, AtomAndMerger) {
  // Two points, two parallel arrows and the top cell.
  auto G = atom(arrow(), arrow());
  EXPECT_EQ(G.size(), 5);
  EXPECT_TRUE(same_shape(G, globe(2)));
  auto S = atom(paste(arrow(), arrow(), 0), arrow());
  EXPECT_EQ(S.size(), 7);
  EXPECT_TRUE(same_shape(S, simplex(2)));
  for (const auto& U : atoms_of(small_corpus()))
    if (U.dim() > 0) EXPECT_TRUE(same_shape(merger(U), U));
}

TEST(Molecule, AtomRejectsMismatches) {
  try {
    atom(arrow(), globe(2));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotParallel);
  }
  try {
    atom(paste(arrow(), globe(2), 0), paste(arrow(), globe(2), 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRound);
  }
}

TEST(Molecule, MergerInvariants) {
  for (const auto& U : rounds_of(small_corpus())) {
    if (U.dim() < 1) continue;
    auto M = merger(U);
    EXPECT_TRUE(M.is_atom());
    const auto bd = boundary(U.poset(), Side::Both);
    EXPECT_EQ(M.size(), static_cast<int>(bd.size()) + 1);
    for (Sign a : {Sign::Minus, Sign::Plus})
      EXPECT_TRUE(same_shape(boundary_of(M, a).mol, boundary_of(U, a).mol));
  }
}

TEST(Molecule, PastingCountsAndErrors) {
  EXPECT_EQ(paste(arrow(), arrow(), 0).size(), 5);
  auto l = paste(paste(arrow(), arrow(), 0), arrow(), 0);
  auto r = paste(arrow(), paste(arrow(), arrow(), 0), 0);
  EXPECT_TRUE(same_shape(l, r));
  try {
    paste(globe(2), simplex(2), 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundaryMismatch);
  }
}

TEST(Molecule, PasteAtSubmolecule) {
  // A 2-globe glued onto the first edge of the 2-simplex input path.
  auto S = simplex(2);
  auto cl01 = closure_of(S.poset(), 3);
  auto g = paste_sub(globe(2), S, 1, cl01);
  EXPECT_EQ(g.result.size(), 7 + 5 - 3);
  EXPECT_EQ(subset_grade(g.result.poset(), all_of(g.result.poset()), 2).size(), 2u);
  EXPECT_THROW(paste_sub(globe(2), S, 1, closure_of(S.poset(), 4)), Error);
  auto co = paste_sub_co(S, globe(2), 1, closure_of(S.poset(), 4));
  EXPECT_EQ(co.result.size(), 9);
}

TEST(Molecule, GrayProductSignRule) {
  auto G = gray(arrow(), arrow());
  ASSERT_EQ(G.size(), 9);
  // (x,y) -> 3x+y with arrow ids 0-:0, 0+:1, 1:2.
  const auto& P = G.poset();
  EXPECT_EQ(P.faces(8, Sign::Minus), (std::vector<int>{2, 7}));
  EXPECT_EQ(P.faces(8, Sign::Plus), (std::vector<int>{5, 6}));
  EXPECT_EQ(gray(point(), simplex(2)).poset(), simplex(2).poset());
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(cube(n).size(), static_cast<int>(std::pow(3, n)));
}

TEST(Molecule, GrayBoundaryFormula) {
  // bd^a_k(U x V) = union over i+j=k of bd^a_i U x bd^{a(-1)^i}_j V.
  std::vector<std::pair<Molecule, Molecule>> pairs{{arrow(), globe(2)}, {simplex(2), arrow()},
                                                   {globe(2), paste(arrow(), arrow(), 0)}};
  for (auto& [U, V] : pairs) {
    auto G = gray(U, V);
    const int m = V.size();
    for (int k = 0; k < G.dim(); ++k)
      for (Sign a : {Sign::Minus, Sign::Plus}) {
        Subset expect;
        for (int i = 0; i <= k; ++i) {
          auto bu = boundary(U.poset(), i, side_of(a));
          auto bv = boundary(V.poset(), k - i, side_of(twist(a, i)));
          for (int x : bu)
            for (int y : bv) expect.push_back(x * m + y);
        }
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        EXPECT_EQ(boundary(G.poset(), k, side_of(a)), expect) << "k=" << k;
      }
  }
}

TEST(Molecule, ShapeFamilies) {
  for (int n = 0; n <= 4; ++n) {
    auto S = simplex(n);
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(static_cast<long>(S.poset().grade(k).size()), oracle::binom(n + 1, k + 1));
    EXPECT_EQ(globe(n).size(), 2 * n + 1);
    EXPECT_TRUE(simplex(n).is_atom());
  }
  EXPECT_EQ(cube(3).size(), 27);
  // Dimension-3 simplex orientation: input {023, 012}, output {013, 123}.
  auto S = simplex(3);
  const auto& P = S.poset();
  auto verts = [&](int x) {
    std::set<int> v;
    for (int y : closure_of(P, x))
      if (P.dim(y) == 0) v.insert(y);
    return v;
  };
  std::set<std::set<int>> in, out;
  for (int f : P.faces(*P.greatest(), Sign::Minus)) in.insert(verts(f));
  for (int f : P.faces(*P.greatest(), Sign::Plus)) out.insert(verts(f));
  EXPECT_EQ(in, (std::set<std::set<int>>{{0, 2, 3}, {0, 1, 2}}));
  EXPECT_EQ(out, (std::set<std::set<int>>{{0, 1, 3}, {1, 2, 3}}));
}

TEST(Molecule, RewritableSubmolecules) {
  auto r = rewritable_submolecules(simplex(2), Sign::Minus);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].map.f.size(), 3u);
  EXPECT_EQ(r[1].map.f.size(), 3u);
  EXPECT_EQ(r[2].map.f.size(), 5u);
  EXPECT_EQ(rewritable_submolecules(globe(2), Sign::Plus).size(), 1u);
  for (const auto& U : atoms_of(small_corpus())) {
    if (U.dim() < 1) continue;
    const int top = *U.poset().greatest();
    for (Sign a : {Sign::Minus, Sign::Plus}) {
      auto subs = rewritable_submolecules(U, a);
      for (int x : U.poset().faces(top, a)) {
        auto cl = closure_of(U.poset(), x);
        bool found = false;
        for (const auto& s : subs) found |= s.map.f == cl;
        EXPECT_TRUE(found);
      }
      bool whole = false;
      for (const auto& s : subs) whole |= s.map.f == boundary(U.poset(), side_of(a));
      EXPECT_TRUE(whole);
    }
  }
}

TEST(Molecule, Globularity) {
  for (const auto& U : small_corpus()) {
    const auto& P = U.poset();
    for (int k = 0; k < U.dim(); ++k)
      for (int j = 0; j < k; ++j)
        for (Side a : {Side::Minus, Side::Plus})
          for (Side b : {Side::Minus, Side::Plus})
            EXPECT_EQ(boundary(P, boundary(P, k, b), j, a), boundary(P, j, a));
  }
}

TEST(Molecule, DualPreservesRoundness) {
  for (const auto& U : small_corpus())
    for (int mask = 0; mask < (1 << (U.dim() + 1)); ++mask) {
      std::vector<int> dims;
      for (int d = 0; d <= U.dim(); ++d)
        if (mask & (1 << d)) dims.push_back(d);
      EXPECT_EQ(dual(U, dims).is_round(), U.is_round());
    }
}

TEST(Molecule, CertificatesReplay) {
  for (const auto& U : small_corpus()) EXPECT_TRUE(replays_exactly(U));
  EXPECT_TRUE(replays_exactly(unit_shape(globe(2)).shape));
  EXPECT_TRUE(replays_exactly(invertor_shape(arrow(), "LRL").shape));
}

TEST(Corpus, DeterministicAndBounded) {
  auto a = corpus({0, 2, 12, 40, 400});
  auto b = corpus({0, 2, 12, 40, 400});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].poset(), b[i].poset());
  for (const auto& m : a) {
    EXPECT_LE(m.dim(), 2);
    EXPECT_LE(m.size(), 12);
  }
  for (int n = 0; n <= 2; ++n) {
    bool g = false, s = false;
    for (const auto& m : a) {
      g |= same_shape(m, globe(n));
      s |= same_shape(m, simplex(n));
    }
    EXPECT_TRUE(g && s);
  }
}

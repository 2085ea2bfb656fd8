#include <gtest/gtest.h>

#include <random>

#include "odot/canonical.hpp"
#include "odot/map.hpp"
#include "odot/molecule.hpp"
#include "oracles.hpp"

using namespace odot;

namespace {

OgPoset raw_arrow() {
  return OgPoset::build({{10, 0, {}, {}}, {11, 0, {}, {}}, {12, 1, {10}, {11}}});
}

ErrorKind build_error(const std::vector<RawElement>& raw) {
  try {
    OgPoset::build(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Build, ArrowHasThreeElements) {
  auto P = raw_arrow();
  EXPECT_EQ(P.size(), 3);
  EXPECT_EQ(P.dimension(), 1);
  EXPECT_EQ(P.faces(2, Sign::Minus), std::vector<int>{0});
  EXPECT_EQ(P.faces(2, Sign::Plus), std::vector<int>{1});
}

TEST(Build, PointIsTerminalShape) {
  auto P = OgPoset::build({{0, 0, {}, {}}});
  EXPECT_EQ(P.size(), 1);
  EXPECT_EQ(P.dimension(), 0);
  EXPECT_TRUE(P.has_greatest());
}

TEST(Build, RejectsMalformedInput) {
  EXPECT_EQ(build_error({{0, 0, {}, {}}, {1, 1, {}, {0}}}), ErrorKind::EmptyFaceSet);
  EXPECT_EQ(build_error({{0, 0, {}, {}}, {0, 0, {}, {}}}), ErrorKind::DuplicateId);
  EXPECT_EQ(build_error({{0, 1, {7}, {7}}}), ErrorKind::UnknownId);
  EXPECT_EQ(build_error({{0, 1, {0}, {0}}}), ErrorKind::CycleError);
  EXPECT_EQ(build_error({{0, 0, {}, {}}, {1, 2, {0}, {0}}}), ErrorKind::GradingError);
  EXPECT_EQ(build_error({{0, 0, {}, {}}, {1, 1, {0}, {0}}}), ErrorKind::FaceOverlap);
}

TEST(Closure, Examples) {
  auto P = raw_arrow();
  EXPECT_EQ(closure(P, {2}), (Subset{0, 1, 2}));
  EXPECT_EQ(closure(P, P.maximal()), all_of(P));
  EXPECT_EQ(closure(P, {0}), Subset{0});
  EXPECT_THROW(closure(P, {9}), Error);
}

TEST(Closure, IdempotentAndMatchesSweep) {
  std::mt19937_64 rng(3);
  for (const auto& U : {cube(3), simplex(3), globe(3)}) {
    const auto& P = U.poset();
    for (int t = 0; t < 30; ++t) {
      Subset s;
      for (int x = 0; x < P.size(); ++x)
        if (rng() % 5 == 0) s.push_back(x);
      auto c = closure(P, s);
      EXPECT_EQ(closure(P, c), c);
      auto ref = oracle::sweep_closure(P, {s.begin(), s.end()});
      EXPECT_EQ(c, Subset(ref.begin(), ref.end()));
    }
  }
}

TEST(Boundary, ArrowInput) {
  auto P = raw_arrow();
  EXPECT_EQ(boundary(P, 0, Side::Minus), Subset{0});
  EXPECT_EQ(boundary(P, 0, Side::Plus), Subset{1});
  EXPECT_EQ(boundary(P, 1, Side::Minus), all_of(P));
  EXPECT_EQ(boundary(P, 5, Side::Plus), all_of(P));
  EXPECT_EQ(boundary(P, Side::Both), (Subset{0, 1}));
}

TEST(Boundary, SimplexInputPath) {
  auto S = simplex(2);
  const auto& P = S.poset();
  auto b = boundary(P, 1, Side::Minus);
  ASSERT_EQ(b.size(), 5u);
  // Vertex sets of the edges in b, read off through closures.
  std::set<std::set<int>> edges;
  for (int x : b)
    if (P.dim(x) == 1) {
      auto c = oracle::sweep_closure(P, {x});
      std::set<int> verts;
      for (int y : c)
        if (P.dim(y) == 0) verts.insert(y);
      edges.insert(verts);
    }
  // Vertices are ids 0,1,2; the input path is 01 then 12.
  EXPECT_EQ(edges, (std::set<std::set<int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(subset_grade(P, boundary(P, 1, Side::Plus), 1).size(), 1u);
}

TEST(Canonical, RenamedArrowsAreIsomorphic) {
  auto a = share(raw_arrow());
  auto b = share(OgPoset::build({{5, 1, {7}, {3}}, {3, 0, {}, {}}, {7, 0, {}, {}}}));
  auto iso = are_isomorphic(a, b);
  ASSERT_TRUE(iso);
  EXPECT_EQ(iso->f, (std::vector<int>{2, 0, 1}));
}

TEST(Canonical, SelfIsoIsIdentity) {
  for (const auto& U : {simplex(3), cube(2), globe(3)}) {
    auto iso = are_isomorphic(U.poset_ref(), U.poset_ref());
    ASSERT_TRUE(iso);
    EXPECT_EQ(iso->f, identity_map(U.poset_ref()).f);
  }
}

TEST(Canonical, SimplexNotIsoToItsDual) {
  auto S = simplex(2);
  auto D = share(dual(S.poset(), {2}));
  EXPECT_TRUE(oracle::all_isos(S.poset(), *D).empty());
  EXPECT_FALSE(are_isomorphic(S.poset_ref(), D));
}

TEST(Canonical, MatchesExhaustiveIsoSearch) {
  auto S = simplex(2);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    auto Q = relabel(S.poset(), oracle::random_perm(S.size(), rng));
    auto ref = oracle::all_isos(S.poset(), Q);
    ASSERT_EQ(ref.size(), 1u);
    auto iso = are_isomorphic(S.poset_ref(), share(Q));
    ASSERT_TRUE(iso);
    EXPECT_EQ(iso->f, ref.front());
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (const auto& U : {cube(3), simplex(3), paste(globe(2), globe(2), 1)}) {
    const auto code = canonical_form(U.poset()).code;
    for (int t = 0; t < 100; ++t) {
      auto Q = relabel(U.poset(), oracle::random_perm(U.size(), rng));
      EXPECT_EQ(canonical_form(Q).code, code);
    }
  }
}

TEST(Maps, ArrowToPointIsCollapse) {
  auto A = arrow().poset_ref();
  auto P = point().poset_ref();
  auto f = classify_map(A, P, {0, 0, 0});
  EXPECT_EQ(f.kind, MapKind::Collapse);
}

TEST(Maps, BoundaryInclusion) {
  auto A = arrow();
  auto inc = boundary_of(A, 0, Sign::Minus).incl;
  auto f = classify_map(inc.source, inc.target, inc.f);
  EXPECT_EQ(f.kind, MapKind::Inclusion);
}

TEST(Maps, RejectsBadAssignments) {
  auto A = arrow().poset_ref();
  // Sending the 1-cell to an endpoint while keeping both endpoints apart.
  EXPECT_THROW(classify_map(A, A, {0, 1, 0}), Error);
  // Reversing the arrow is monotone but breaks orientation.
  try {
    classify_map(A, A, {1, 0, 2});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCartesian);
  }
}

TEST(Maps, FactorizeComposite) {
  auto A = arrow().poset_ref();
  auto P = point().poset_ref();
  auto collapse = classify_map(A, P, {0, 0, 0});
  auto incl = classify_map(P, A, {0});
  auto f = classify_map(A, A, compose(incl, collapse).f);
  auto fac = factorize(f);
  EXPECT_EQ(fac.collapse.target->size(), 1);
  EXPECT_EQ(fac.collapse.kind, MapKind::Collapse);
  EXPECT_EQ(fac.inclusion.f, std::vector<int>{0});
  EXPECT_EQ(compose(fac.inclusion, fac.collapse).f, f.f);
}

TEST(Maps, FactorizationUniqueExhaustive) {
  // Every valid map between small shapes, and every (closed S, surjection
  // onto S) pair recomposing to it: exactly one must exist.
  std::vector<Molecule> shapes{point(), arrow(), paste(arrow(), arrow(), 0), globe(2)};
  int checked = 0;
  for (const auto& U : shapes)
    for (const auto& V : shapes) {
      const int n = U.size(), m = V.size();
      std::vector<int> f(n, 0);
      while (true) {
        try {
          auto g = classify_map(U.poset_ref(), V.poset_ref(), f);
          auto fac = factorize(g);
          EXPECT_EQ(compose(fac.inclusion, fac.collapse).f, g.f);
          int count = 0;
          for (int mask = 1; mask < (1 << m); ++mask) {
            Subset S;
            for (int y = 0; y < m; ++y)
              if (mask & (1 << y)) S.push_back(y);
            if (!is_closed(V.poset(), S)) continue;
            auto inc = subset_inclusion(V.poset_ref(), S);
            std::vector<int> c(n, 0);
            const int s = static_cast<int>(S.size());
            while (true) {
              bool recompose = true;
              for (int x = 0; x < n; ++x) recompose &= inc.f[c[x]] == g.f[x];
              if (recompose) {
                try {
                  auto cm = classify_map(U.poset_ref(), inc.source, c);
                  if (cm.surjective()) ++count;
                } catch (const Error&) {
                }
              }
              int i = 0;
              while (i < n && ++c[i] == s) c[i++] = 0;
              if (i == n) break;
            }
          }
          EXPECT_EQ(count, 1);
          ++checked;
        } catch (const Error&) {
        }
        int i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) break;
      }
    }
  EXPECT_GT(checked, 20);
}

TEST(Pushout, TwoArrowsAlongPoint) {
  auto A = arrow();
  auto pa = A.poset_ref();
  auto pt = point().poset_ref();
  auto i = classify_map(pt, pa, {1});
  auto j = classify_map(pt, pa, {0});
  auto po = glue_pushout(i, j);
  EXPECT_EQ(po.result->size(), 5);
  EXPECT_EQ(po.result->maximal().size(), 2u);
}

TEST(Pushout, EmptyAndTotal) {
  auto pa = arrow().poset_ref();
  auto empty = share(OgPoset{});
  auto po = glue_pushout(PosetMap{empty, pa, {}, MapKind::Inclusion}, PosetMap{empty, pa, {}, MapKind::Inclusion});
  EXPECT_EQ(po.result->size(), 6);
  auto id = identity_map(pa);
  auto same = glue_pushout(id, id);
  EXPECT_EQ(*same.result, *pa);
}

TEST(Dual, SimplexTopSwaps) {
  auto S = simplex(2);
  auto D = dual(S.poset(), {2});
  const int top = *S.poset().greatest();
  EXPECT_EQ(D.faces(top, Sign::Minus), S.poset().faces(top, Sign::Plus));
  EXPECT_EQ(D.faces(top, Sign::Plus), S.poset().faces(top, Sign::Minus));
  EXPECT_EQ(D.faces(top, Sign::Minus).size(), 1u);
  EXPECT_EQ(dual(S.poset(), {5, 7}), S.poset());
  EXPECT_EQ(dual(D, {2}), S.poset());
}

TEST(Dual, SwapsBoundariesAtDualisedDims) {
  for (const auto& U : {simplex(3), cube(3), globe(3)}) {
    const int n = U.dim();
    for (int k = 0; k < n; ++k) {
      auto D = dual(U.poset(), {k + 1});
      for (Side a : {Side::Minus, Side::Plus}) {
        Side b = a == Side::Minus ? Side::Plus : Side::Minus;
        EXPECT_EQ(boundary(D, k, a), boundary(U.poset(), k, b)) << "k=" << k;
      }
      EXPECT_EQ(closure(D, {0}), closure(U.poset(), {0}));
    }
  }
}

#include <gtest/gtest.h>

#include "odot/corpus.hpp"
#include "odot/verify.hpp"
#include <random>

#include "oracles.hpp"

using namespace odot;

TEST(RunCases, OrderedFailuresAndExceptions) {
  std::vector<VerifyCase> cases;
  for (int i = 0; i < 40; ++i)
    cases.push_back([i]() -> std::optional<Counterexample> {
      if (i % 7 == 3) return Counterexample{"", "bad " + std::to_string(i), i};
      if (i == 20) throw Error(ErrorKind::NotAtom, "boom");
      return std::nullopt;
    });
  std::vector<std::string> labels;
  for (int i = 0; i < 40; ++i) labels.push_back("c" + std::to_string(i));
  for (int threads : {1, 4}) {
    auto f = run_cases(cases, threads, labels);
    ASSERT_EQ(f.size(), 7u);
    EXPECT_EQ(f[0].label, "c3");
    EXPECT_EQ(f[2].label, "c17");
    EXPECT_EQ(f[3].label, "c20");
    EXPECT_NE(f[3].message.find("NotAtom"), std::string::npos);
    EXPECT_EQ(f.back().label, "c38");
  }
}

TEST(Rigidity, MoleculesAreRigid) {
  for (const auto& U : corpus({0, 3, 15, 48, 600})) {
    EXPECT_TRUE(is_rigid(U.poset()));
    EXPECT_EQ(U.canonical().automorphisms, 1);
  }
}

TEST(Rigidity, SymmetricPosetsAreNot) {
  // Two points, and two parallel arrows with shared endpoints.
  auto pts = OgPoset::from_faces({0, 0}, {{}, {}}, {{}, {}});
  EXPECT_FALSE(is_rigid(pts));
  EXPECT_EQ(canonical_form(pts).automorphisms, 2);
  auto par = OgPoset::from_faces({0, 0, 1, 1}, {{}, {}, {0}, {0}}, {{}, {}, {1}, {1}});
  EXPECT_FALSE(is_rigid(par));
  EXPECT_EQ(canonical_form(par).automorphisms, 2);
  // Three disjoint arrows: 3! automorphisms.
  auto three = OgPoset::from_faces({0, 0, 0, 0, 0, 0, 1, 1, 1}, {{}, {}, {}, {}, {}, {}, {0}, {2}, {4}},
                                   {{}, {}, {}, {}, {}, {}, {1}, {3}, {5}});
  EXPECT_FALSE(is_rigid(three));
  EXPECT_EQ(canonical_form(three).automorphisms, 6);
}

TEST(Rigidity, AgreesWithAutomorphismCount) {
  // Random subsets of corpus shapes are often symmetric.
  std::mt19937_64 rng(3);
  int symmetric = 0;
  for (const auto& U : corpus({1, 3, 12, 30, 300})) {
    for (int t = 0; t < 4; ++t) {
      Subset s;
      for (int x = 0; x < U.size(); ++x)
        if (rng() % 3 == 0) s.push_back(x);
      auto inc = subset_inclusion(U.poset_ref(), closure(U.poset(), s));
      const auto& Q = *inc.source;
      const auto cf = canonical_form(Q);
      ASSERT_TRUE(cf.exhaustive);
      EXPECT_EQ(is_rigid(Q), cf.automorphisms == 1);
      // Brute force on small cases.
      if (Q.size() <= 7) EXPECT_EQ(static_cast<long>(oracle::all_isos(Q, Q).size()), cf.automorphisms);
      symmetric += cf.automorphisms > 1;
    }
  }
  EXPECT_GT(symmetric, 0);
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(verify_suites().size(), 9u);
  EXPECT_THROW(run_suite("nope", {}), Error);
}

TEST(Suites, SmallBoundsPass) {
  VerifyOptions o;
  o.max_dim = 2;
  o.max_size = 10;
  o.samples = 10;
  for (const auto& name : verify_suites()) {
    auto r = run_suite(name, o);
    EXPECT_GT(r.cases, 0u) << name;
    EXPECT_TRUE(r.ok()) << name << ": " << (r.failures.empty() ? "" : r.failures[0].label + " " + r.failures[0].message);
    auto j = r.to_json();
    EXPECT_EQ(j["suite"], name);
    EXPECT_EQ(j["failures"].size(), r.failures.size());
  }
}

TEST(Suites, Reproducible) {
  VerifyOptions o;
  o.max_dim = 2;
  o.seed = 11;
  auto a = run_suite("factorisation", o), b = run_suite("factorisation", o);
  EXPECT_EQ(a.cases, b.cases);
}

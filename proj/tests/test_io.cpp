#include <gtest/gtest.h>

#include "odot/corpus.hpp"
#include "odot/io.hpp"

using namespace odot;

namespace {

template <class F>
void expect_kind(ErrorKind k, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), k) << e.what();
  }
}

}  // namespace

TEST(Json, ArrowIsBitExact) {
  const std::string expect =
      R"({"elements":[{"dim":0,"id":0,"input":[],"output":[]},{"dim":0,"id":1,"input":[],"output":[]},)"
      R"({"dim":1,"id":2,"input":[0],"output":[1]}]})";
  EXPECT_EQ(poset_to_json(arrow().poset()).dump(), expect);
  EXPECT_EQ(poset_from_json(json::parse(expect)), arrow().poset());
}

TEST(Json, SparseIdsRenumbered) {
  auto j = json::parse(R"({"elements":[{"id":10,"dim":1,"input":[3],"output":[7]},
                                       {"id":3,"dim":0,"input":[],"output":[]},
                                       {"id":7,"dim":0,"input":[],"output":[]}]})");
  EXPECT_EQ(poset_from_json(j), arrow().poset());
}

TEST(Json, Malformed) {
  expect_kind(ErrorKind::ParseError, [] { poset_from_json(json::parse(R"({"elems":[]})")); });
  expect_kind(ErrorKind::ParseError, [] { poset_from_json(json::parse(R"({"elements":[{"id":0}]})")); });
  expect_kind(ErrorKind::UnknownId, [] {
    poset_from_json(json::parse(R"({"elements":[{"id":0,"dim":1,"input":[5],"output":[6]}]})"));
  });
  auto j = molecule_to_json(arrow());
  j.erase("cert");
  expect_kind(ErrorKind::ParseError, [&] { molecule_from_json(j); });
  auto k = molecule_to_json(globe(2));
  k["cert"] = cert_to_json(arrow().cert());
  expect_kind(ErrorKind::ParseError, [&] { molecule_from_json(k); });
}

TEST(Json, CorpusRoundTrip) {
  for (const auto& U : corpus({0, 3, 15, 48, 600})) {
    auto j = molecule_to_json(U);
    auto V = molecule_from_json(json::parse(j.dump()));
    EXPECT_EQ(V.poset(), U.poset());
    EXPECT_TRUE(replays_exactly(V));
    EXPECT_EQ(molecule_to_json(V), j);
  }
}

TEST(Json, SharedCertificateNodes) {
  auto g = globe(6);
  auto j = cert_to_json(g.cert());
  EXPECT_EQ(j["nodes"].size(), 7u);
}

TEST(Json, MarkedAndMonos) {
  const auto U = simplex(2);
  for (const auto& h : atomic_horns(U)) {
    for (const auto& dec : horn_requirements(U.poset(), h.x)) {
      auto m = horn_mono(h, dec.required, horn_target_marking(U.poset(), h.x, dec.required));
      auto back = mono_from_json(json::parse(mono_to_json(m).dump()));
      EXPECT_EQ(back.map.f, m.map.f);
      EXPECT_EQ(back.kind, m.kind);
      EXPECT_EQ(back.source.marked, m.source.marked);
      EXPECT_EQ(back.target.marked, m.target.marked);
      EXPECT_TRUE(is_marked_horn(back).ok);
    }
  }
  auto m = boundary_mono(globe(2).poset_ref(), true);
  auto j = mono_to_json(m);
  j["kind"] = "entire";
  expect_kind(ErrorKind::ParseError, [&] { mono_from_json(j); });
  auto bad = marked_to_json(markmol(arrow().poset_ref()));
  bad["marked"] = {0};
  expect_kind(ErrorKind::InvalidDiagram, [&] { marked_from_json(bad); });
}

TEST(Json, PresentationRoundTrip) {
  auto loc = walking_equivalence(globe(2), 2);
  auto j = presentation_to_json(*loc.pres, loc.stage_marked[2]);
  auto back = presentation_from_json(json::parse(j.dump()));
  EXPECT_EQ(*back.pres, *loc.pres);
  EXPECT_EQ(back.marked, loc.stage_marked[2]);
  // A corrupted label table is rejected on import.
  auto broken = j;
  auto& labels = broken["generators"][4]["labels"];
  std::swap(labels[0], labels[1]);
  EXPECT_THROW(presentation_from_json(broken), Error);
}

TEST(Json, WitnessRoundTrip) {
  auto loc = walking_equivalence(arrow(), 2);
  auto w = localisation_witness(loc, 2, 2);
  auto j = witness_to_json(*w);
  auto back = witness_from_json(*loc.pres, json::parse(j.dump()));
  EXPECT_EQ(witness_to_json(*back), j);
  EXPECT_TRUE(check_equiv_witness(*loc.pres, *back, loc.stage_marked[2]).ok);
  auto d = diagram_to_json(unit(*loc.pres, gen_cell(*loc.pres, 2)));
  auto dd = diagram_from_json(*loc.pres, d);
  EXPECT_TRUE(is_degenerate(*loc.pres, dd));
}

TEST(Json, AnodyneItems) {
  auto items = collect(enumerate_anodyne({AnodyneTag::Loc, 0, 1, 1, {arrow()}}));
  ASSERT_EQ(items.size(), 1u);
  auto j = anodyne_item_to_json(items[0]);
  EXPECT_EQ(j["family"], "Jloc");
  EXPECT_TRUE(j["truncated"].get<bool>());
  auto back = presentation_from_json(j["mono"]["target"]);
  EXPECT_EQ(back.pres->size(), 7);
  EXPECT_EQ(back.marked.size(), 1u);
}

TEST(Dot, GrayArrowArrow) {
  auto s = poset_to_dot(gray(arrow(), arrow()).poset());
  EXPECT_EQ(std::count(s.begin(), s.end(), '['), 9 + 12);
  EXPECT_NE(s.find("[label=\"8:2\"]"), std::string::npos);
  EXPECT_NE(s.find("side=\"-\""), std::string::npos);
  EXPECT_NE(s.find("side=\"+\""), std::string::npos);
}

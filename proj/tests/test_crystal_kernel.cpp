#include <gtest/gtest.h>

#include <random>
#include <set>

#include "c2crystal/crystal.hpp"
#include "c2crystal/graph_io.hpp"
#include "c2crystal/path.hpp"
#include "c2crystal/perfect_crystal.hpp"
#include "c2crystal/young_wall.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace c2crystal;

namespace {

using Pair = TensorSquareModel::Element;

const TensorSquareModel kSquare = tensor_square_model();

std::pair<BElem, BElem> as_pair(const Pair& t) { return {t.left, t.right}; }

Pair random_pair(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> d(0, kBElems.size() - 1);
  return {kBElems[d(rng)], kBElems[d(rng)]};
}

}  // namespace

TEST(Tensor, FExamples) {
  const auto a = kSquare.f(Index{1}, Pair{BElem::OneBarTwo, BElem::TwoBarTwo});
  ASSERT_TRUE(a);
  EXPECT_EQ(as_pair(*a), std::make_pair(BElem::TwoBarTwo, BElem::TwoBarTwo));
  EXPECT_FALSE(kSquare.f(Index{0}, Pair{BElem::OneTwo, BElem::OneTwo}));
  EXPECT_EQ(kSquare.wt(Pair{BElem::OneTwo, BElem::OneTwo}), wt_b(BElem::OneTwo) + wt_b(BElem::OneTwo));
}

TEST(Tensor, EExamples) {
  EXPECT_FALSE(kSquare.e(Index{2}, Pair{BElem::OneTwo, BElem::OneTwo}));
  // phi_1(2,-1) = 0 < eps_1(2,-2) = 1, so e_1 acts on the right factor.
  const auto r = kSquare.e(Index{1}, Pair{BElem::TwoBarOne, BElem::TwoBarTwo});
  ASSERT_TRUE(r);
  EXPECT_EQ(as_pair(*r), std::make_pair(BElem::TwoBarOne, BElem::OneBarTwo));
}

TEST(Tensor, AgreesWithSignatureRuleOnAllPairs) {
  for (Index i : kIndices) {
    for (BElem l : kBElems) {
      for (BElem r : kBElems) {
        const Pair t{l, r};
        const auto expected = oracle::tensor_by_signature(i, l, r);
        const auto f = kSquare.f(i, t);
        const auto e = kSquare.e(i, t);
        ASSERT_EQ(f.has_value(), expected.f.has_value());
        if (f) EXPECT_EQ(as_pair(*f), *expected.f);
        ASSERT_EQ(e.has_value(), expected.e.has_value());
        if (e) EXPECT_EQ(as_pair(*e), *expected.e);
        EXPECT_EQ(kSquare.eps(i, t), expected.eps);
        EXPECT_EQ(kSquare.phi(i, t), expected.phi);
      }
    }
  }
}

TEST(Tensor, EpsPhiMatchStringLengths) {
  for (Index i : kIndices) {
    for (BElem l : kBElems) {
      for (BElem r : kBElems) {
        const auto [eps, phi] = oracle::tensor_string_lengths(i, l, r);
        EXPECT_EQ(tensor_eps_phi(kSquare, i, Pair{l, r}), std::make_pair(eps, phi));
      }
    }
  }
  // eps_1((1,-2) (x) (2,-1)) = max(0, 2 - <wt(1,-2), h_1>) = max(0, 2 - 2).
  EXPECT_EQ(kSquare.eps(Index{1}, Pair{BElem::OneBarTwo, BElem::TwoBarOne}), 0);
}

TEST(Tensor, RandomAxiomsAndBounds) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Pair t = random_pair(rng);
    for (Index i : kIndices) {
      EXPECT_EQ(kSquare.phi(i, t) - kSquare.eps(i, t), pair(kSquare.wt(t), i));
      EXPECT_GE(kSquare.eps(i, t), PerfectCrystalModel{}.eps(i, t.left));
      if (auto up = tensor_e(kSquare, i, t)) {
        const auto back = tensor_f(kSquare, i, *up);
        ASSERT_TRUE(back);
        EXPECT_EQ(*back, t);
      }
    }
  }
}

TEST(BuildGraph, PerfectCrystalClosure) {
  const auto g = build_graph(PerfectCrystalModel{}, BElem::OneTwo, 10);
  EXPECT_EQ(g.nodes.size(), 5u);
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_EQ(g.root, 0u);
}

TEST(BuildGraph, DepthZeroIsTheRoot) {
  const auto g = build_graph(WallModel{}, ground_wall(Index{1}), 0);
  ASSERT_EQ(g.nodes.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_TRUE(g.nodes[0].frontier);
}

TEST(BuildGraph, NodeCapRaises) {
  EXPECT_THROW(build_graph(WallModel{}, ground_wall(Index{0}), 12, BuildOptions{10, 0}), CapacityError);
}

TEST(BuildGraph, Deterministic) {
  const auto a = build_graph(PathModel{}, ground_path(Index{2}), 7);
  const auto b = build_graph(PathModel{}, ground_path(Index{2}), 7);
  ASSERT_EQ(a.nodes.size(), b.nodes.size());
  for (std::size_t n = 0; n < a.nodes.size(); ++n) EXPECT_EQ(a.nodes[n].key, b.nodes[n].key);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(BuildGraph, EachColourIsAPartialMatching) {
  const auto g = build_graph(WallModel{}, ground_wall(Index{0}), 9);
  for (Index i : kIndices) {
    std::set<std::size_t> sources;
    std::set<std::size_t> targets;
    for (const GraphEdge& e : g.edges) {
      if (e.color != i) continue;
      EXPECT_TRUE(sources.insert(e.from).second);
      EXPECT_TRUE(targets.insert(e.to).second);
    }
  }
}

TEST(BuildGraph, TensorAssociativitySmoke) {
  using Left = TensorModel<TensorSquareModel, PerfectCrystalModel>;
  using Right = TensorModel<PerfectCrystalModel, TensorSquareModel>;
  const Left left{kSquare, PerfectCrystalModel{}};
  const Right right{PerfectCrystalModel{}, kSquare};
  for (BElem root : kBElems) {
    const auto gl = build_graph(left, Left::Element{Pair{root, root}, root}, 6);
    const auto gr = build_graph(right, Right::Element{root, Pair{root, root}}, 6);
    EXPECT_EQ(gl.nodes.size(), gr.nodes.size());
  }
}

TEST(Axioms, HoldOnPerfectCrystalAndPaths) {
  const auto gb = build_graph(PerfectCrystalModel{}, BElem::OneTwo, 10);
  EXPECT_TRUE(check_axioms(gb, PerfectCrystalModel{}).ok());
  const auto gp = build_graph(PathModel{}, ground_path(Index{1}), 6);
  EXPECT_TRUE(check_axioms(gp, PathModel{}).ok());
}

TEST(Axioms, RecolouredEdgeIsReported) {
  auto g = build_graph(PerfectCrystalModel{}, BElem::OneTwo, 10);
  g.edges[0].color = Index{(g.edges[0].color.value() + 1) % 3};
  const AxiomReport report = check_axioms(g, PerfectCrystalModel{});
  ASSERT_FALSE(report.ok());
  bool saw_four = false;
  for (const AxiomViolation& v : report.violations) saw_four = saw_four || v.condition == 4;
  EXPECT_TRUE(saw_four);
}

TEST(Isomorphism, SelfAndIdentity) {
  const auto gb = build_graph(PerfectCrystalModel{}, BElem::OneTwo, 10);
  const IsoResult r = check_root_isomorphism(gb, gb, PerfectCrystalModel{}, PerfectCrystalModel{});
  ASSERT_TRUE(r.ok) << r.reason;
  for (std::size_t n = 0; n < r.mapping.size(); ++n) EXPECT_EQ(r.mapping[n], n);

  const auto gw = build_graph(WallModel{}, ground_wall(Index{1}), 6);
  EXPECT_TRUE(check_root_isomorphism(gw, gw, WallModel{}, WallModel{}).ok);
}

TEST(Isomorphism, PathsAndWallsAgree) {
  const auto gp = build_graph(PathModel{}, ground_path(Index{0}), 8);
  const auto gw = build_graph(WallModel{}, ground_wall(Index{0}), 8);
  const IsoResult r = check_root_isomorphism(gp, gw, PathModel{}, WallModel{});
  EXPECT_TRUE(r.ok) << r.reason;
}

TEST(Isomorphism, DifferentGroundsDiffer) {
  const auto g0 = build_graph(PathModel{}, ground_path(Index{0}), 3);
  const auto g1 = build_graph(PathModel{}, ground_path(Index{1}), 3);
  const IsoResult r = check_root_isomorphism(g0, g1, PathModel{}, PathModel{});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.offending_node, 0u);
}

TEST(Multiplicities, HighestWeightAndPerfectCrystal) {
  const auto gw = build_graph(WallModel{}, ground_wall(Index{0}), 6);
  const auto table = weight_multiplicities(gw);
  EXPECT_EQ(table.at(AffineWeight::fundamental(Index{0})), 1u);

  const auto gb = build_graph(PerfectCrystalModel{}, BElem::OneTwo, 10);
  const auto tb = weight_multiplicities(gb);
  EXPECT_EQ(tb.size(), 5u);
  for (const auto& [wt, count] : tb) EXPECT_EQ(count, 1u) << wt;
}

TEST(GraphIo, JsonShape) {
  const auto g = build_graph(PerfectCrystalModel{}, BElem::OneTwo, 1);
  const auto doc = nlohmann::json::parse(to_json(g));
  EXPECT_EQ(doc["model"], "b");
  EXPECT_EQ(doc["depth"], 1);
  ASSERT_EQ(doc["nodes"].size(), 2u);
  EXPECT_EQ(doc["nodes"][0]["key"], "1,2");
  EXPECT_EQ(doc["nodes"][0]["wt"], nlohmann::json::parse("[-1,0,1,0]"));
  EXPECT_EQ(doc["nodes"][1]["frontier"], true);
  EXPECT_EQ(doc["edges"][0]["i"], 2);
  const std::string text = to_json(g);
  EXPECT_LT(text.find("\"model\""), text.find("\"ground\""));
  EXPECT_LT(text.find("\"nodes\""), text.find("\"edges\""));
}

TEST(GraphIo, DotColours) {
  const auto g = build_graph(PerfectCrystalModel{}, BElem::OneTwo, 10);
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("label=\"0\", color=\"red\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"1\", color=\"blue\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"2\", color=\"darkgreen\""), std::string::npos);
}

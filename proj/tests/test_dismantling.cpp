#include <gtest/gtest.h>

#include "flagsh/corpus.hpp"
#include "flagsh/dismantling.hpp"
#include "flagsh/i_contractibility.hpp"
#include "flagsh/moves.hpp"
#include "flagsh/random.hpp"
#include "flagsh/reduction.hpp"
#include "oracles.hpp"

using namespace flagsh;

namespace {

Graph k4() { return complete_graph({"a", "b", "c", "d"}); }
Graph c5() { return cycle_graph({"a", "b", "c", "d", "e"}); }
Graph octahedron() { return suspension(cycle_graph({"a", "b", "c", "d"}), "n", "s"); }

}  // namespace

TEST(Dismantling, DominatedVertices) {
  auto p = path_graph({"a", "b", "c"});
  auto d = dominated_vertices(p);
  EXPECT_NE(std::find(d.begin(), d.end(), std::pair<Label, Label>{"a", "b"}), d.end());
  EXPECT_TRUE(dominated_vertices(c5()).empty());
}

TEST(Dismantling, GreedyMatchesExhaustiveSearch) {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    auto g = random_graph(rng, uniform_size(rng, 1, 8), random_density(rng));
    auto r = is_dismantlable(g);
    EXPECT_EQ(r.dismantlable, oracle::dismantlable(g)) << to_text(g);
    if (r.dismantlable) {
      EXPECT_TRUE(check_dismantling(g, *r.order));
    }
  }
}

TEST(Dismantling, Examples) {
  EXPECT_TRUE(is_dismantlable(k4()));
  EXPECT_TRUE(is_dismantlable(path_graph({"a", "b", "c", "d"})));
  EXPECT_FALSE(is_dismantlable(c5()));
  EXPECT_FALSE(is_dismantlable(Graph({"a", "b"}, {})));
  EXPECT_TRUE(is_dismantlable(Graph({"a"}, {})));
  EXPECT_THROW(is_dismantlable(Graph{}), PreconditionError);
  EXPECT_EQ(dismantling_core(c5()).residual, c5());
}

TEST(Dismantling, CheckerRejectsBadOrders) {
  auto p = path_graph({"a", "b", "c"});
  EXPECT_TRUE(check_dismantling(p, {{{"a", "b"}, {"b", "c"}}}));
  auto bad = check_dismantling(p, {{{"b", "a"}}}, false);
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.step, 0u);
  EXPECT_FALSE(check_dismantling(p, {{{"a", "b"}}}));  // stops at two vertices
  EXPECT_TRUE(check_dismantling(p, {{{"a", "b"}}}, false));
}

TEST(Dismantling, ConeOrder) {
  auto g = add_vertex(c5(), "x", c5().labels());
  auto order = cone_order(g, "x");
  EXPECT_TRUE(check_dismantling(g, order));
  EXPECT_EQ(apply_dismantling(g, order).labels(), LabelSet{"x"});
}

TEST(Dismantling, OntoInducedSubgraph) {
  auto p = path_graph({"a", "b", "c", "d"});
  auto r = dismantles_onto(p, p.induced(LabelSet{"b", "c"}));
  ASSERT_TRUE(r.yes());
  EXPECT_EQ(apply_dismantling(p, *r.certificate).labels(), (LabelSet{"b", "c"}));
  // The ends of a path are dominated, the middle is not.
  EXPECT_TRUE(dismantles_onto(p, p.induced(LabelSet{"a", "d"})).no());
  EXPECT_THROW(dismantles_onto(p, Graph({"b", "c"}, {})), PreconditionError);
}

TEST(Dismantling, SDismantlableVerticesAndEdges) {
  EXPECT_TRUE(s_dismantlable_vertices(c5()).empty());
  EXPECT_EQ(s_dismantlable_vertices(k4()).size(), 4u);
  EXPECT_EQ(s_dismantlable_edges(k4()).size(), 6u);
  EXPECT_TRUE(s_dismantlable_edges(c5()).empty());  // empty common neighbourhoods
  EXPECT_FALSE(is_s_dismantlable_vertex(Graph({"a"}, {}), "a"));
  EXPECT_THROW(is_s_dismantlable_edge(c5(), "a", "c"), UnknownLabel);
  // Octahedron: each neighbourhood is a square, each common neighbourhood two points.
  EXPECT_TRUE(s_dismantlable_vertices(octahedron()).empty());
  EXPECT_TRUE(s_dismantlable_edges(octahedron()).empty());
}

TEST(Moves, ApplyAndCheck) {
  auto g = k4();
  auto remove = GraphMove::remove_vertex("a", cone_order(open_neighborhood_subgraph(g, "a"), "b"));
  auto h = apply_move(g, remove);
  EXPECT_EQ(h, complete_graph({"b", "c", "d"}));
  MoveCertificate ok{g, {remove}, h};
  EXPECT_TRUE(check_certificate(ok));
  MoveCertificate wrong_end{g, {remove}, g};
  EXPECT_FALSE(check_certificate(wrong_end));
  auto bad = GraphMove::remove_vertex("a", {{{"b", "z"}}});
  EXPECT_THROW(apply_move(g, bad), CertificateError);
  EXPECT_FALSE(check_certificate({g, {bad}, h}));
}

TEST(Moves, TextRoundTrip) {
  std::vector<GraphMove> moves{
      GraphMove::add_vertex("x", {"a", "b"}, {{{"a", "b"}}}),
      GraphMove::remove_vertex("a", {}),
      GraphMove::remove_edge("c", "b", {{{"[a,b]", "[c]"}}}),
      GraphMove::add_edge("b", "d", {}),
  };
  auto text = to_text(moves);
  EXPECT_EQ(parse_moves(text), moves);
  EXPECT_THROW(parse_moves("-v a\n-v b\nw\n"), ParseError);
  EXPECT_THROW(parse_moves("w a:b\n"), ParseError);
  EXPECT_THROW(parse_moves("-v a\nw a-b\n"), ParseError);
}

TEST(Moves, EdgeDeletionOnCompleteGraph) {
  auto cert = realize_edge_deletion(k4(), "a", "b");
  EXPECT_EQ(cert.moves.size(), 2u);
  EXPECT_TRUE(std::all_of(cert.moves.begin(), cert.moves.end(), [](const auto& m) { return m.is_vertex_move(); }));
  EXPECT_TRUE(check_certificate(cert));
  EXPECT_TRUE(are_isomorphic(cert.end, delete_edge(k4(), "a", "b")).has_value());
  EXPECT_THROW(realize_edge_deletion(c5(), "a", "b"), PreconditionError);
}

TEST(Moves, EdgeAdditionMirrorsDeletion) {
  auto g = delete_edge(k4(), "a", "b");
  auto cert = realize_edge_addition(g, "a", "b");
  EXPECT_TRUE(check_certificate(cert));
  EXPECT_TRUE(are_isomorphic(cert.end, k4()).has_value());
  EXPECT_THROW(realize_edge_addition(k4(), "a", "b"), PreconditionError);
}

TEST(Moves, NormalizationMovesAdditionsFirst) {
  auto g = path_graph({"a", "b", "c"});
  // remove a, add a again hanging on b, remove c
  std::vector<GraphMove> moves{
      GraphMove::remove_vertex("a", {}),
      GraphMove::add_vertex("a", {"b"}, {}),
      GraphMove::remove_vertex("c", {}),
  };
  MoveCertificate cert{g, moves, replay(g, moves)};
  ASSERT_TRUE(check_certificate(cert));
  auto norm = normalize_certificate(cert);
  EXPECT_TRUE(check_certificate(norm));
  EXPECT_EQ(norm.moves.front().kind, MoveKind::AddVertex);
  EXPECT_NE(norm.moves.front().a, "a");  // renamed away from the removed label
  EXPECT_TRUE(are_isomorphic(norm.end, cert.end).has_value());
}

TEST(Reduction, SCollapseSearch) {
  auto g1 = corpus::g1_graph();
  auto r = s_collapse_search(g1);
  ASSERT_TRUE(r.yes());
  EXPECT_TRUE(check_certificate(*r.certificate));
  EXPECT_EQ(r.certificate->end.size(), 1u);
  EXPECT_TRUE(s_collapse_search(c5()).no());
  EXPECT_TRUE(s_collapse_search(octahedron()).no());
  EXPECT_TRUE(s_collapse_search(g1, 1).outcome == Outcome::Unknown);
}

TEST(Reduction, SReductionTowardsTarget) {
  auto g1 = corpus::g1_graph();
  auto target = delete_vertex(g1, "a");
  auto r = s_reduction_search(g1, target);
  ASSERT_TRUE(r.yes());
  EXPECT_EQ(r.certificate->end, target);
  EXPECT_TRUE(s_reduction_search(g1, Graph({"a", "z"}, {})).no());
}

TEST(Reduction, WsSearch) {
  auto g = corpus::edge_collapse_graph();
  EXPECT_TRUE(s_collapse_search(g).no());
  // Edge bc goes, and then the search is stuck short of a point.
  EXPECT_TRUE(ws_reduction_search(g).no());
  auto r = ws_reduction_search(g, corpus::edge_collapse_subgraph());
  ASSERT_TRUE(r.yes());
  EXPECT_TRUE(check_certificate(*r.certificate));
  EXPECT_EQ(r.certificate->end, corpus::edge_collapse_subgraph());
  EXPECT_TRUE(ws_reduction_search(k4()).yes());
  EXPECT_TRUE(ws_reduction_search(c5()).no());
}

TEST(Reduction, NeighbourhoodDeletion) {
  auto g = corpus::g1_graph();
  // N(a) is a path, hence dismantlable
  auto r = realize_s_neighborhood_deletion(add_vertex(g, "z", LabelSet{"a", "b", "c", "d", "e", "f", "g", "h"}), "z");
  ASSERT_TRUE(r.yes());
  EXPECT_TRUE(check_certificate(*r.certificate));
  EXPECT_TRUE(are_isomorphic(r.certificate->end, g).has_value());
  EXPECT_TRUE(realize_s_neighborhood_deletion(add_vertex(c5(), "z", c5().labels()), "z").no());
  EXPECT_TRUE(realize_s_neighborhood_deletion(Graph({"a", "b"}, {}), "a").no());
}

TEST(IContractibility, Examples) {
  EXPECT_EQ(is_I_contractible(k4()).outcome, Outcome::Yes);
  EXPECT_EQ(is_I_contractible(Graph({"a"}, {})).outcome, Outcome::Yes);
  EXPECT_EQ(is_I_contractible(c5()).outcome, Outcome::No);  // Euler characteristic 0
  EXPECT_EQ(is_I_contractible(octahedron()).outcome, Outcome::No);
  EXPECT_EQ(is_I_contractible(Graph({"a", "b"}, {})).outcome, Outcome::No);
  EXPECT_EQ(is_I_contractible(corpus::g1_graph()).outcome, Outcome::Yes);
  EXPECT_EQ(is_I_dismantlable_vertex(k4(), "a").outcome, Outcome::Yes);
  EXPECT_EQ(is_I_dismantlable_vertex(add_vertex(c5(), "z", c5().labels()), "z").outcome, Outcome::No);
}

TEST(IContractibility, BudgetGivesUnknown) {
  // The dunce-hat graph passes both invariants and has no deletion move.
  IContractibilityOptions options;
  options.budget = 10;
  auto r = is_I_contractible(corpus::dunce_hat_graph(), options);
  EXPECT_EQ(r.outcome, Outcome::Unknown);
}

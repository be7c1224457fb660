#include <gtest/gtest.h>

#include "flagsh/collapse.hpp"
#include "flagsh/complex.hpp"
#include "flagsh/corpus.hpp"
#include "flagsh/random.hpp"
#include "oracles.hpp"

using namespace flagsh;

namespace {

SimplicialComplex triangle() { return full_simplex({"a", "b", "c"}); }
SimplicialComplex hollow_triangle() { return SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

}  // namespace

TEST(Complex, ClosureAndCounts) {
  auto k = triangle();
  EXPECT_EQ(k.size(), 7u);
  EXPECT_EQ(k.f_vector(), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_EQ(k.euler_characteristic(), 1);
  EXPECT_EQ(hollow_triangle().euler_characteristic(), 0);
  EXPECT_EQ(k.maximal_simplices(), (std::vector<Simplex>{{"a", "b", "c"}}));
  EXPECT_THROW(SimplicialComplex::from_closed({{"a", "b"}}), InvalidStructure);
}

TEST(Complex, CliqueComplexAndSkeleton) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(rng, uniform_size(rng, 1, 7), random_density(rng));
    auto k = delta_g(g);
    std::set<std::vector<std::string>> got(k.simplices().begin(), k.simplices().end());
    EXPECT_EQ(got, oracle::complete_subgraphs(g));
    EXPECT_EQ(sk(k), g);
    EXPECT_TRUE(is_flag(k));
  }
}

TEST(Complex, FlagViolation) {
  auto r = is_flag(hollow_triangle());
  EXPECT_FALSE(r.flag);
  EXPECT_EQ(r.violation, (Simplex{"a", "b", "c"}));
}

TEST(Complex, LinkAndOpenStar) {
  auto k = SimplicialComplex::from_maximal({{"a", "b", "c"}, {"a", "d"}});
  EXPECT_EQ(link(k, {"a"}), SimplicialComplex::from_maximal({{"b", "c"}, {"d"}}));
  auto rest = delete_open_star(k, {"a"});
  EXPECT_EQ(rest, SimplicialComplex::from_maximal({{"b", "c"}, {"d"}}));
  EXPECT_THROW(link(k, {"b", "d"}), UnknownLabel);
}

TEST(Complex, GammaOfTriangleIsItsSubdivisionGraph) {
  auto g = gamma(triangle());
  EXPECT_EQ(g.size(), 7u);
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_EQ(g, bd_graph(complete_graph({"a", "b", "c"})));
}

TEST(Complex, SubdivisionOfTriangle) {
  auto bd = bd_complex(triangle());
  EXPECT_EQ(bd.size(), 25u);
  EXPECT_EQ(bd.f_vector(), (std::vector<std::size_t>{7, 12, 6}));
  EXPECT_EQ(bd.euler_characteristic(), 1);
}

TEST(Complex, TextRoundTrip) {
  Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    auto k = random_complex(rng, uniform_size(rng, 1, 6), 30);
    EXPECT_EQ(parse_complex(to_text(k)), k);
  }
  EXPECT_THROW(parse_complex("a b a\n"), ParseError);
}

TEST(Collapse, FreePairs) {
  auto pairs = free_pairs(triangle());
  EXPECT_EQ(pairs.size(), 3u);  // each edge is free in the 2-simplex
  for (const auto& p : pairs) EXPECT_EQ(p.sigma, (Simplex{"a", "b", "c"}));
  auto path = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}});
  auto pp = free_pairs(path);
  EXPECT_EQ(pp.size(), 2u);  // the end vertices
  EXPECT_TRUE(free_pairs(hollow_triangle()).empty());
}

TEST(Collapse, CollapseAndAnticollapse) {
  auto k = triangle();
  CollapsePair p{{"a", "b", "c"}, {"a", "b"}};
  auto l = collapse(k, p);
  EXPECT_EQ(l.size(), 5u);
  EXPECT_TRUE(can_anticollapse(l, p));
  EXPECT_EQ(anticollapse(l, p), k);
  EXPECT_THROW(collapse(k, {{"a", "b"}, {"a"}}), PreconditionError);
}

TEST(Collapse, CertificateChecker) {
  auto k = triangle();
  std::vector<ComplexMove> moves{{ComplexMoveKind::Collapse, {{"a", "b", "c"}, {"a", "b"}}},
                                 {ComplexMoveKind::Collapse, {{"a", "c"}, {"a"}}},
                                 {ComplexMoveKind::Collapse, {{"b", "c"}, {"b"}}}};
  ComplexCertificate cert{k, moves, full_simplex({"c"})};
  EXPECT_TRUE(check_complex_certificate(cert));
  cert.moves.erase(cert.moves.begin());
  auto bad = check_complex_certificate(cert);
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.step, 0u);
  EXPECT_EQ(parse_complex_moves(to_text(moves)), moves);
}

TEST(Collapse, PrisnerCollapse) {
  auto g = add_vertex(cycle_graph({"a", "b", "c", "d"}), "x", LabelSet{"a", "b"});
  auto cert = prisner_collapse(g, "x", "a");
  EXPECT_TRUE(check_complex_certificate(cert));
  EXPECT_EQ(cert.end, delta_g(delete_vertex(g, "x")));
  EXPECT_THROW(prisner_collapse(g, "a", "x"), PreconditionError);
}

TEST(Collapse, DismantlingCollapseReachesVertex) {
  auto g = complete_graph({"a", "b", "c", "d"});
  auto cert = dismantling_collapse(g, *is_dismantlable(g).order);
  EXPECT_TRUE(check_complex_certificate(cert));
  EXPECT_EQ(cert.end.size(), 1u);
}

TEST(Collapse, StarCollapses) {
  auto g1 = corpus::g1_graph();
  for (const auto& v : s_dismantlable_vertices(g1)) {
    auto cert = vertex_star_collapse(g1, v);
    EXPECT_TRUE(check_complex_certificate(cert));
    EXPECT_EQ(cert.end, delta_g(delete_vertex(g1, v)));
  }
  EXPECT_THROW(vertex_star_collapse(cycle_graph({"a", "b", "c", "d"}), "a"), PreconditionError);
}

TEST(Collapse, SkeletonMoves) {
  auto k = triangle();
  EXPECT_EQ(skeleton_move(k, {{"a", "b", "c"}, {"a", "b"}})->kind, MoveKind::RemoveEdge);
  auto path = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(skeleton_move(path, {{"a", "b"}, {"a"}})->kind, MoveKind::RemoveVertex);
  auto tet = full_simplex({"a", "b", "c", "d"});
  EXPECT_FALSE(skeleton_move(tet, {{"a", "b", "c", "d"}, {"a", "b", "c"}}).has_value());
  EXPECT_THROW(skeleton_move(k, {{"a", "b"}, {"a"}}), PreconditionError);
}

TEST(Collapse, SkeletonCertificateValidates) {
  auto tet = full_simplex({"a", "b", "c", "d"});
  auto r = collapse_search(tet);
  ASSERT_TRUE(r.yes());
  auto moves = skeleton_certificate(*r.certificate);
  EXPECT_TRUE(check_certificate(moves));
  EXPECT_EQ(moves.end.size(), 1u);
}

TEST(Collapse, Search) {
  EXPECT_TRUE(collapse_search(triangle()).yes());
  EXPECT_TRUE(collapse_search(hollow_triangle()).no());
  auto dunce = delta_g(corpus::dunce_hat_graph());
  EXPECT_TRUE(collapse_search(dunce).no());  // no free pair at all
  auto target = SimplicialComplex::from_maximal({{"a", "b"}});
  auto r = collapse_search(triangle(), target);
  ASSERT_TRUE(r.yes());
  EXPECT_EQ(r.certificate->end, target);
  EXPECT_TRUE(collapse_search(triangle(), full_simplex({"z"})).no());
}

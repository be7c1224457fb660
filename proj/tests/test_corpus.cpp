#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flagsh/corpus.hpp"
#include "oracles.hpp"

using namespace flagsh;

namespace {

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Corpus, EveryAssertionPasses) {
  for (const auto& r : corpus::verify_corpus()) EXPECT_TRUE(r.passed) << r.fixture << " " << r.id << " " << r.detail;
}

TEST(Corpus, ShippedFilesMatchFixtures) {
  for (const auto& f : corpus::fixtures()) {
    auto path = std::filesystem::path(FLAGSH_CORPUS_DIR) / (f.name + "." + f.kind);
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    auto text = read(path);
    if (f.kind == "graph")
      EXPECT_EQ(parse_graph(text), parse_graph(f.payload)) << f.name;
    else
      EXPECT_EQ(parse_poset(text), parse_poset(f.payload)) << f.name;
  }
}

TEST(Corpus, AppendixGraphIsUnionOfTriangles) {
  auto g = corpus::appendix_graph();
  std::set<Edge> from_triangles;
  for (const auto& t : corpus::appendix_triangles())
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) from_triangles.insert(make_edge(t[i], t[j]));
  auto edges = g.edges();
  EXPECT_EQ(std::set<Edge>(edges.begin(), edges.end()), from_triangles);
}

TEST(Corpus, AppendixNeighbourhoodsByPermutationSearch) {
  auto g = corpus::appendix_graph();
  for (const auto& v : g.labels()) {
    auto n = open_neighborhood_subgraph(g, v);
    EXPECT_TRUE(oracle::isomorphic(n, corpus::appendix_neighborhood_shape())) << v;
    EXPECT_FALSE(oracle::dismantlable(n)) << v;
  }
}

TEST(Corpus, G1HasNoDominatedVertexByExhaustiveCheck) {
  auto g = corpus::g1_graph();
  EXPECT_FALSE(oracle::dismantlable(g));
  EXPECT_TRUE(oracle::dismantlable(delete_vertex(g, "a")));
}

TEST(Corpus, SubdivisionFixtureCompleteSubgraphs) {
  EXPECT_EQ(oracle::complete_subgraphs(corpus::subdivision_fixture_graph()).size(), 16u);
}

TEST(Corpus, DunceHatPoset) {
  auto p = corpus::dunce_hat_poset();
  EXPECT_EQ(p.size(), 17u);
  EXPECT_EQ(oracle::maximal_chain_count(p), 36u);
  EXPECT_EQ(oracle::euler_characteristic(comp(p)), 1);
  EXPECT_EQ(oracle::chains(p).size(), 17u + 52u + 36u);
}

#include <gtest/gtest.h>

#include "flagsh/cliques.hpp"
#include "flagsh/graph.hpp"
#include "flagsh/isomorphism.hpp"
#include "flagsh/random.hpp"
#include "oracles.hpp"

using namespace flagsh;

namespace {

Graph square() { return cycle_graph({"a", "b", "c", "d"}); }

}  // namespace

TEST(Graph, LabelsAreSortedAndEdgesSymmetric) {
  Graph g({"c", "a", "b"}, {make_edge("c", "a")});
  EXPECT_EQ(g.labels(), (LabelSet{"a", "b", "c"}));
  EXPECT_TRUE(g.has_edge("a", "c"));
  EXPECT_TRUE(g.has_edge("c", "a"));
  EXPECT_FALSE(g.has_edge("a", "b"));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(g.index("b")), 0u);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph({"a", "a"}, {}), InvalidStructure);
  EXPECT_THROW(Graph({"a"}, {make_edge("a", "a")}), InvalidStructure);
  EXPECT_THROW(Graph({"a"}, {make_edge("a", "b")}), Error);
  EXPECT_THROW(square().index("z"), UnknownLabel);
}

TEST(Graph, Neighbourhoods) {
  auto g = square();
  EXPECT_EQ(open_neighborhood(g, "a"), (LabelSet{"b", "d"}));
  EXPECT_EQ(closed_neighborhood(g, "a"), (LabelSet{"a", "b", "d"}));
  auto n = open_neighborhood_subgraph(g, "a");
  EXPECT_EQ(n.size(), 2u);
  EXPECT_EQ(n.edge_count(), 0u);
}

TEST(Graph, DeletionsAndAdditions) {
  auto g = square();
  auto h = delete_vertex(g, "a");
  EXPECT_EQ(h.labels(), (LabelSet{"b", "c", "d"}));
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(delete_edge(g, "a", "b").edge_count(), 3u);
  EXPECT_THROW(delete_edge(g, "a", "c"), Error);
  EXPECT_EQ(add_edge(g, "a", "c").edge_count(), 5u);
  LabelSet attach{"a", "c"};
  auto x = add_vertex(g, "x", attach);
  EXPECT_EQ(open_neighborhood(x, "x"), attach);
  EXPECT_THROW(add_vertex(g, "a", attach), Error);
}

TEST(Graph, FreshLabelAvoidsExisting) {
  Graph g({"_x1", "a"}, {});
  EXPECT_EQ(fresh_label(g), "_x2");
}

TEST(Graph, SuspensionOfSquareIsOctahedron) {
  auto s = suspension(square());
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(s.edge_count(), 12u);
  // K_{2,2,2}: complement is a perfect matching
  Graph k222({"1", "2", "3", "4", "5", "6"}, {});
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if (!((i == 1 && j == 2) || (i == 3 && j == 4) || (i == 5 && j == 6)))
        k222 = add_edge(k222, std::to_string(i), std::to_string(j));
  EXPECT_TRUE(are_isomorphic(s, k222).has_value());
  EXPECT_TRUE(oracle::isomorphic(s, k222));
}

TEST(Graph, ComponentCount) {
  EXPECT_EQ(component_count(Graph{}), 0u);
  EXPECT_EQ(component_count(square()), 1u);
  EXPECT_EQ(component_count(Graph({"a", "b", "c"}, {make_edge("a", "b")})), 2u);
}

TEST(Graph, TextRoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(rng, uniform_size(rng, 0, 8), random_density(rng));
    EXPECT_EQ(parse_graph(to_text(g)), g);
  }
}

TEST(Graph, ParseErrorsCarryLineNumbers) {
  try {
    parse_graph("v a\n# comment\nv b\ne a b\ne a q\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
  }
  EXPECT_THROW(parse_graph("v a\nv a\n"), ParseError);
  EXPECT_THROW(parse_graph("x a\n"), ParseError);
  EXPECT_THROW(parse_graph("v a\ne a a\n"), ParseError);
  EXPECT_THROW(parse_graph("v a b\n"), ParseError);
}

TEST(Cliques, MatchExhaustiveEnumeration) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(rng, uniform_size(rng, 1, 8), random_density(rng));
    auto family = enumerate_complete_subgraphs(g, CliqueMode::All);
    std::set<std::vector<std::string>> got(family.cliques.begin(), family.cliques.end());
    EXPECT_EQ(got, oracle::complete_subgraphs(g)) << to_text(g);
    EXPECT_TRUE(is_valid_family(g, family));
    EXPECT_EQ(euler_characteristic(g), oracle::euler_characteristic(g));
  }
}

TEST(Cliques, MaximalAreTheInclusionMaximalOnes) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(rng, uniform_size(rng, 1, 8), random_density(rng));
    auto all = oracle::complete_subgraphs(g);
    std::set<std::vector<std::string>> want;
    for (const auto& c : all) {
      bool maximal = std::none_of(all.begin(), all.end(), [&](const auto& d) {
        return d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end());
      });
      if (maximal) want.insert(c);
    }
    auto family = enumerate_complete_subgraphs(g, CliqueMode::Maximal);
    std::set<std::vector<std::string>> got(family.cliques.begin(), family.cliques.end());
    EXPECT_EQ(got, want) << to_text(g);
  }
}

TEST(Cliques, CapIsEnforced) {
  EXPECT_THROW(enumerate_complete_subgraphs(complete_graph(letter_labels(6)), CliqueMode::All, 10),
               BudgetExceeded);
}

TEST(Cliques, SubdivisionOfTriangle) {
  auto bd = bd_graph(complete_graph({"a", "b", "c"}));
  EXPECT_EQ(bd.size(), 7u);
  EXPECT_EQ(bd.edge_count(), 12u);
  EXPECT_TRUE(bd.has_edge("[a]", "[a,b,c]"));
  EXPECT_FALSE(bd.has_edge("[a]", "[b]"));
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
  Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    const auto n = uniform_size(rng, 1, 6);
    auto g = random_graph(rng, n, random_density(rng));
    auto h = random_graph(rng, n, random_density(rng));
    auto w = are_isomorphic(g, h);
    EXPECT_EQ(w.has_value(), oracle::isomorphic(g, h)) << to_text(g) << "--\n" << to_text(h);
    if (w) {
      EXPECT_TRUE(is_isomorphism(g, h, *w));
    }
    EXPECT_EQ(canonical_form(g).key == canonical_form(h).key, w.has_value());
  }
}

TEST(Isomorphism, RelabelledCopiesMatch) {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(rng, uniform_size(rng, 1, 9), random_density(rng));
    auto labels = g.labels();
    auto shuffled = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::map<Label, Label> mapping;
    for (std::size_t k = 0; k < labels.size(); ++k) mapping[labels[k]] = "n" + shuffled[k];
    auto h = relabel(g, mapping);
    auto w = are_isomorphic(g, h);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_isomorphism(g, h, *w));
    EXPECT_EQ(memo_key(g), memo_key(h));
  }
}

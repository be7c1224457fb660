#pragma once

#include <functional>
#include <string>
#include <vector>

#include "flagsh/cliques.hpp"
#include "flagsh/collapse.hpp"
#include "flagsh/complex.hpp"
#include "flagsh/dismantling.hpp"
#include "flagsh/isomorphism.hpp"
#include "flagsh/poset.hpp"
#include "flagsh/reduction.hpp"
#include "flagsh/subdivision.hpp"

namespace flagsh::corpus {

namespace detail {

inline Graph from_edge_list(const std::vector<std::pair<const char*, const char*>>& list) {
  std::set<Label> vertices;
  std::vector<Edge> edges;
  for (const auto& [a, b] : list) {
    vertices.insert(a);
    vertices.insert(b);
    edges.push_back(make_edge(a, b));
  }
  return Graph(LabelSet(vertices.begin(), vertices.end()), edges);
}

inline Graph from_cliques(const std::vector<LabelSet>& cliques) {
  std::set<Label> vertices;
  std::set<Edge> edges;
  for (const auto& c : cliques)
    for (std::size_t i = 0; i < c.size(); ++i) {
      vertices.insert(c[i]);
      for (std::size_t j = i + 1; j < c.size(); ++j) edges.insert(make_edge(c[i], c[j]));
    }
  return Graph(LabelSet(vertices.begin(), vertices.end()), std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 6-regular graph on ten vertices whose vertices and edges are all non
// s-dismantlable. Built as the union of its ten triangles.

inline std::vector<LabelSet> appendix_triangles() {
  return {{"1", "2", "3"}, {"1", "5", "6"}, {"2", "4", "6"}, {"1", "8", "9"}, {"2", "7", "9"},
          {"3", "4", "5"}, {"3", "7", "8"}, {"5", "8", "x"}, {"6", "9", "x"}, {"4", "7", "x"}};
}

inline std::vector<LabelSet> appendix_tetrahedra() {
  return {{"1", "3", "5", "8"}, {"1", "2", "6", "9"}, {"2", "3", "4", "7"}, {"4", "5", "6", "x"}, {"7", "8", "9", "x"}};
}

inline Graph appendix_graph() { return detail::from_cliques(appendix_triangles()); }

/// Shape of every open neighbourhood in the appendix graph.
inline Graph appendix_neighborhood_shape() {
  return detail::from_edge_list(
      {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "p"}, {"p", "u"}, {"u", "q"}, {"s", "w"}, {"w", "r"}, {"w", "u"}});
}

/// Shape of every common neighbourhood of an edge: one edge plus an isolated vertex.
inline Graph appendix_common_shape() { return Graph({"p", "q", "r"}, {make_edge("p", "q")}); }

// ---------------------------------------------------------------------------
// Eight vertices, no dominated vertex, s-collapsible through vertex a.

inline Graph g1_graph() {
  return detail::from_edge_list({{"e", "h"}, {"h", "g"}, {"g", "f"}, {"f", "e"}, {"e", "g"}, {"g", "d"},
                                 {"d", "h"}, {"h", "a"}, {"a", "e"}, {"e", "b"}, {"b", "f"}, {"f", "c"},
                                 {"c", "d"}, {"d", "a"}, {"a", "b"}, {"b", "c"}, {"c", "g"}});
}

// ---------------------------------------------------------------------------
// Seven vertices, no s-dismantlable vertex, but edge bc is s-dismantlable.

inline Graph edge_collapse_graph() {
  return detail::from_edge_list({{"f", "g"}, {"g", "c"}, {"c", "a"}, {"a", "d"}, {"d", "e"}, {"e", "b"},
                                 {"b", "a"}, {"a", "f"}, {"b", "c"}});
}

inline Graph edge_collapse_subgraph() { return delete_edge(edge_collapse_graph(), "b", "c"); }

// ---------------------------------------------------------------------------
// Square a-b-c-d joined at c to the triangle e-f-g, for subdivision.

inline Graph subdivision_fixture_graph() {
  return detail::from_edge_list(
      {{"c", "d"}, {"d", "a"}, {"a", "b"}, {"b", "c"}, {"c", "e"}, {"e", "f"}, {"f", "g"}, {"g", "e"}});
}

inline LabelSet subdivision_fixture_labels() {
  return normalized({"[a]", "[b]", "[c]", "[d]", "[e]", "[f]", "[g]", "[a,b]", "[a,d]", "[b,c]", "[c,d]", "[c,e]",
                     "[e,f]", "[e,g]", "[f,g]", "[e,f,g]"});
}

// ---------------------------------------------------------------------------
// Dunce hat: a 17-element poset whose order complex is a non-collapsible
// triangulation of the dunce hat, and an independently transcribed graph
// that must be its comparability graph.

inline Poset dunce_hat_poset() {
  LabelSet elements{"1", "2", "3", "4", "o", "m1", "m2", "m3", "m4", "m5", "m6",
                    "t1", "t2", "t3", "t4", "t5", "t6"};
  std::vector<Relation> covers{
      {"4", "m1"}, {"4", "m2"}, {"4", "m3"}, {"4", "2"},  {"4", "3"},
      {"1", "m6"}, {"1", "m5"}, {"1", "m4"}, {"1", "2"},  {"1", "3"},
      {"o", "m1"}, {"o", "m2"}, {"o", "m3"}, {"o", "m4"}, {"o", "m5"}, {"o", "m6"},
      {"2", "t1"}, {"2", "t2"}, {"2", "t6"}, {"3", "t3"}, {"3", "t4"}, {"3", "t5"},
      {"m1", "t1"}, {"m1", "t4"}, {"m6", "t4"}, {"m6", "t3"}, {"m3", "t3"}, {"m3", "t6"},
      {"m5", "t6"}, {"m5", "t2"}, {"m2", "t2"}, {"m2", "t5"}, {"m4", "t5"}, {"m4", "t1"}};
  return Poset(elements, covers);
}

inline Graph dunce_hat_graph() {
  return detail::from_edge_list({
      {"1", "2"},   {"2", "4"},   {"4", "3"},   {"3", "1"},
      {"h1", "a"},  {"a", "h2"},  {"h2", "b"},  {"b", "h3"},  {"h3", "c"},  {"c", "h4"},
      {"h4", "d"},  {"d", "h5"},  {"h5", "e"},  {"e", "h6"},  {"h6", "f"},  {"f", "h1"},
      {"4", "c"},   {"c", "o"},   {"o", "f"},   {"f", "1"},
      {"1", "d"},   {"d", "o"},   {"o", "a"},   {"a", "4"},
      {"1", "b"},   {"b", "o"},   {"o", "e"},   {"e", "4"},
      {"o", "h1"},  {"o", "h2"},  {"o", "h3"},  {"o", "h4"},  {"o", "h5"},  {"o", "h6"},
      {"3", "h2"},  {"h2", "4"},  {"4", "h1"},  {"h1", "2"},
      {"2", "h5"},  {"h5", "4"},  {"4", "h6"},  {"h6", "3"},
      {"2", "h4"},  {"h4", "4"},  {"4", "h3"},  {"h3", "3"},
      {"h3", "1"},  {"1", "h2"},  {"h4", "1"},  {"1", "h5"},  {"h1", "1"},  {"1", "h6"},
  });
}

// ---------------------------------------------------------------------------
// Fixtures with their assertions

struct AssertionResult {
  std::string fixture;
  std::string id;
  bool passed = false;
  std::string detail;
};

struct FixtureAssertion {
  std::string id;
  std::function<AssertionResult()> check;
};

struct CorpusFixture {
  std::string name;
  std::string kind;  // "graph" or "poset"
  std::string payload;
  std::vector<FixtureAssertion> assertions;
};

namespace detail {

inline AssertionResult expect(bool ok, std::string detail = {}) { return {{}, {}, ok, std::move(detail)}; }

inline std::string count_text(std::size_t got, std::size_t want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

// One free pair per tetrahedron: a facet lying in no other simplex.
inline SimplicialComplex collapse_tetrahedra(const SimplicialComplex& k, const std::vector<LabelSet>& tetrahedra) {
  SimplicialComplex current = k;
  for (const auto& t : tetrahedra) {
    bool done = false;
    for (const auto& p : free_pairs(current))
      if (p.sigma == t) {
        current = collapse(current, p);
        done = true;
        break;
      }
    if (!done) throw PreconditionError("tetrahedron has no free facet");
  }
  return current;
}

}  // namespace detail

inline std::vector<CorpusFixture> fixtures() {
  using detail::count_text;
  using detail::expect;
  std::vector<CorpusFixture> out;

  {
    CorpusFixture f{"appendix_G", "graph", to_text(appendix_graph()), {}};
    f.assertions.push_back({"size", [] {
                              auto g = appendix_graph();
                              return expect(g.size() == 10 && g.edge_count() == 30,
                                            std::to_string(g.size()) + " vertices, " +
                                                std::to_string(g.edge_count()) + " edges");
                            }});
    f.assertions.push_back({"six_regular", [] {
                              auto g = appendix_graph();
                              for (std::size_t i = 0; i < g.size(); ++i)
                                if (g.degree(i) != 6) return expect(false, "vertex " + g.label(i));
                              return expect(true);
                            }});
    f.assertions.push_back({"maximal_cliques", [] {
                              auto family = enumerate_complete_subgraphs(appendix_graph(), CliqueMode::Maximal);
                              std::set<LabelSet> got(family.cliques.begin(), family.cliques.end());
                              std::set<LabelSet> want;
                              for (const auto& t : appendix_triangles()) want.insert(normalized(t));
                              for (const auto& t : appendix_tetrahedra()) want.insert(normalized(t));
                              return expect(got == want, count_text(got.size(), want.size()));
                            }});
    f.assertions.push_back({"neighborhoods", [] {
                              auto g = appendix_graph();
                              auto shape = appendix_neighborhood_shape();
                              for (const auto& v : g.labels()) {
                                auto n = open_neighborhood_subgraph(g, v);
                                if (is_dismantlable(n)) return expect(false, "N(" + v + ") is dismantlable");
                                if (!are_isomorphic(n, shape)) return expect(false, "N(" + v + ") has another shape");
                              }
                              return expect(true);
                            }});
    f.assertions.push_back({"common_neighborhoods", [] {
                              auto g = appendix_graph();
                              auto shape = appendix_common_shape();
                              for (const auto& [a, b] : g.edges()) {
                                auto n = g.induced(common_neighbors(g, g.index(a), g.index(b)));
                                if (!are_isomorphic(n, shape)) return expect(false, "edge " + a + "-" + b);
                              }
                              return expect(true);
                            }});
    f.assertions.push_back({"no_s_dismantlable", [] {
                              auto g = appendix_graph();
                              auto v = s_dismantlable_vertices(g);
                              auto e = s_dismantlable_edges(g);
                              return expect(v.empty() && e.empty(), std::to_string(v.size()) + " vertices, " +
                                                                        std::to_string(e.size()) + " edges");
                            }});
    f.assertions.push_back({"ws_reduction_no", [] {
                              auto verdict = ws_reduction_search(appendix_graph());
                              return expect(verdict.no(), std::string(to_string(verdict.outcome)));
                            }});
    f.assertions.push_back({"tetrahedra_collapse_stuck", [] {
                              auto k = detail::collapse_tetrahedra(delta_g(appendix_graph()), appendix_tetrahedra());
                              auto pairs = free_pairs(k);
                              auto flag = is_flag(k);
                              return expect(pairs.empty() && !flag.flag,
                                            std::to_string(pairs.size()) + " free pairs, flag=" +
                                                (flag.flag ? "true" : "false"));
                            }});
    out.push_back(std::move(f));
  }

  {
    CorpusFixture f{"G1", "graph", to_text(g1_graph()), {}};
    f.assertions.push_back({"no_dominated_vertex", [] {
                              auto d = dominated_vertices(g1_graph());
                              return expect(d.empty(), std::to_string(d.size()) + " pairs");
                            }});
    f.assertions.push_back({"four_s_dismantlable_vertices", [] {
                              auto v = s_dismantlable_vertices(g1_graph());
                              return expect(v.size() == 4, count_text(v.size(), 4));
                            }});
    f.assertions.push_back({"neighborhood_of_a_is_path", [] {
                              auto n = open_neighborhood_subgraph(g1_graph(), "a");
                              return expect(are_isomorphic(n, path_graph({"1", "2", "3", "4"})).has_value());
                            }});
    f.assertions.push_back({"s_collapsible", [] {
                              auto verdict = s_collapse_search(g1_graph());
                              bool ok = verdict.yes() && check_certificate(*verdict.certificate);
                              return expect(ok, std::string(to_string(verdict.outcome)));
                            }});
    f.assertions.push_back({"minus_a_dismantlable", [] {
                              return expect(is_dismantlable(delete_vertex(g1_graph(), "a")).dismantlable);
                            }});
    f.assertions.push_back({"does_not_dismantle_onto_minus_a", [] {
                              auto g = g1_graph();
                              auto verdict = dismantles_onto(g, delete_vertex(g, "a"));
                              return expect(verdict.no(), std::string(to_string(verdict.outcome)));
                            }});
    out.push_back(std::move(f));
  }

  {
    CorpusFixture f{"edge_collapse_G", "graph", to_text(edge_collapse_graph()), {}};
    f.assertions.push_back({"no_s_dismantlable_vertex", [] {
                              auto v = s_dismantlable_vertices(edge_collapse_graph());
                              return expect(v.empty(), std::to_string(v.size()) + " vertices");
                            }});
    f.assertions.push_back({"edge_bc_s_dismantlable", [] {
                              auto g = edge_collapse_graph();
                              auto common = g.to_labels(common_neighbors(g, g.index("b"), g.index("c")));
                              return expect(is_s_dismantlable_edge(g, "b", "c") && common == LabelSet{"a"});
                            }});
    f.assertions.push_back({"single_collapse_pair", [] {
                              auto cert = edge_star_collapse(edge_collapse_graph(), "b", "c");
                              bool ok = cert.moves.size() == 1 && cert.moves[0].pair.sigma == Simplex{"a", "b", "c"} &&
                                        cert.moves[0].pair.tau == Simplex{"b", "c"} &&
                                        cert.end == delta_g(edge_collapse_subgraph()) && check_complex_certificate(cert);
                              return expect(ok, std::to_string(cert.moves.size()) + " pairs");
                            }});
    f.assertions.push_back({"ws_reaches_H", [] {
                              auto verdict = ws_reduction_search(edge_collapse_graph(), edge_collapse_subgraph());
                              return expect(verdict.yes() && check_certificate(*verdict.certificate));
                            }});
    out.push_back(std::move(f));
  }

  {
    CorpusFixture f{"subdivision_G", "graph", to_text(subdivision_fixture_graph()), {}};
    f.assertions.push_back({"sixteen_complete_subgraphs", [] {
                              auto n = enumerate_complete_subgraphs(subdivision_fixture_graph(), CliqueMode::All).size();
                              return expect(n == 16, count_text(n, 16));
                            }});
    f.assertions.push_back({"subdivision_labels", [] {
                              return expect(bd_graph(subdivision_fixture_graph()).labels() == subdivision_fixture_labels());
                            }});
    f.assertions.push_back({"subdivision_equivalence", [] {
                              auto cert = check_bd_equivalence(subdivision_fixture_graph());
                              return expect(check_certificate(cert) && cert.end == bd_graph(subdivision_fixture_graph()));
                            }});
    out.push_back(std::move(f));
  }

  {
    CorpusFixture f{"dunce_hat_P", "poset", to_text(dunce_hat_poset()), {}};
    f.assertions.push_back({"seventeen_elements", [] {
                              auto p = dunce_hat_poset();
                              return expect(p.size() == 17, count_text(p.size(), 17));
                            }});
    f.assertions.push_back({"comparability_is_D", [] {
                              return expect(are_isomorphic(comp(dunce_hat_poset()), dunce_hat_graph()).has_value());
                            }});
    out.push_back(std::move(f));
  }

  {
    CorpusFixture f{"dunce_hat_D", "graph", to_text(dunce_hat_graph()), {}};
    f.assertions.push_back({"size", [] {
                              auto g = dunce_hat_graph();
                              auto tri = delta_g(g).f_vector();
                              bool ok = g.size() == 17 && tri.size() == 3 && tri[2] == 36;
                              return expect(ok, std::to_string(g.size()) + " vertices, " +
                                                    std::to_string(tri.size() > 2 ? tri[2] : 0) + " triangles");
                            }});
    f.assertions.push_back({"euler_characteristic", [] {
                              auto chi = euler_characteristic(dunce_hat_graph());
                              return expect(chi == 1, "chi=" + std::to_string(chi));
                            }});
    f.assertions.push_back({"no_free_pair", [] {
                              auto n = free_pairs(delta_g(dunce_hat_graph())).size();
                              return expect(n == 0, std::to_string(n) + " free pairs");
                            }});
    f.assertions.push_back({"not_s_collapsible", [] {
                              auto verdict = s_collapse_search(dunce_hat_graph());
                              return expect(verdict.no(), std::string(to_string(verdict.outcome)));
                            }});
    out.push_back(std::move(f));
  }
  return out;
}

/// Runs every assertion of every fixture.
inline std::vector<AssertionResult> verify_corpus() {
  std::vector<AssertionResult> results;
  for (const auto& f : fixtures())
    for (const auto& a : f.assertions) {
      AssertionResult r;
      try {
        r = a.check();
      } catch (const std::exception& e) {
        r = {{}, {}, false, std::string("error: ") + e.what()};
      }
      r.fixture = f.name;
      r.id = a.id;
      results.push_back(std::move(r));
    }
  return results;
}

}  // namespace flagsh::corpus

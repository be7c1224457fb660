#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "flagsh/graph.hpp"

namespace flagsh {

enum class CliqueMode { All, Maximal };

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// Vertex subsets inducing complete subgraphs of a parent graph.
/// Each clique is a sorted label list; the family is sorted lexicographically.
struct CliqueFamily {
  CliqueMode mode = CliqueMode::All;
  std::vector<LabelSet> cliques;

  std::size_t size() const noexcept { return cliques.size(); }
  friend bool operator==(const CliqueFamily&, const CliqueFamily&) = default;
};

namespace detail {

inline void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw BudgetExceeded("clique enumeration exceeded cap of " + std::to_string(cap));
}

// Bron–Kerbosch with Tomita pivoting over bitsets.
inline void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out, std::size_t cap) {
  if (p.none() && x.none()) {
    out.push_back(r);
    check_cap(out.size(), cap);
    return;
  }
  VertexSet px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = 0;
  for_each_member(px, [&](std::size_t u) {
    auto c = (p & g.neighbors(u)).count();
    if (c > best || (c == best && u < pivot)) {
      best = c;
      pivot = u;
    }
  });
  VertexSet candidates = p - g.neighbors(pivot);
  for_each_member(candidates, [&](std::size_t v) {
    r.set(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out, cap);
    r.reset(v);
    p.reset(v);
    x.set(v);
  });
}

// Every clique extends uniquely by adding larger-index common neighbours.
inline void extend_cliques(const Graph& g, VertexSet& current, const VertexSet& candidates,
                           std::vector<VertexSet>& out, std::size_t cap) {
  for_each_member(candidates, [&](std::size_t v) {
    current.set(v);
    out.push_back(current);
    check_cap(out.size(), cap);
    VertexSet next = candidates & g.neighbors(v);
    // keep only indices above v
    for (std::size_t i = 0; i <= v; ++i) next.reset(i);
    if (next.any()) extend_cliques(g, current, next, out, cap);
    current.reset(v);
  });
}

inline bool lex_less(const Graph& g, const VertexSet& a, const VertexSet& b) {
  // Lexicographic comparison of the sorted label lists; labels are sorted by index.
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != VertexSet::npos && j != VertexSet::npos) {
    if (i != j) return g.label(i) < g.label(j);
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == VertexSet::npos && j != VertexSet::npos;
}

}  // namespace detail

/// Cliques as vertex sets over `g`'s indices, in lexicographic order of labels.
inline std::vector<VertexSet> clique_sets(const Graph& g, CliqueMode mode,
                                          std::size_t cap = kDefaultCliqueCap) {
  std::vector<VertexSet> out;
  if (g.empty()) return out;
  if (mode == CliqueMode::Maximal) {
    VertexSet r = g.none();
    detail::bron_kerbosch(g, r, g.all(), g.none(), out, cap);
  } else {
    VertexSet current = g.none();
    detail::extend_cliques(g, current, g.all(), out, cap);
  }
  std::sort(out.begin(), out.end(),
            [&](const VertexSet& a, const VertexSet& b) { return detail::lex_less(g, a, b); });
  return out;
}

inline CliqueFamily enumerate_complete_subgraphs(const Graph& g, CliqueMode mode,
                                                 std::size_t cap = kDefaultCliqueCap) {
  CliqueFamily family{mode, {}};
  for (const auto& c : clique_sets(g, mode, cap)) family.cliques.push_back(g.to_labels(c));
  return family;
}

/// Checks the family's membership claim against `g`.
inline bool is_valid_family(const Graph& g, const CliqueFamily& family) {
  for (const auto& c : family.cliques) {
    for (const auto& v : c)
      if (!g.contains(v)) return false;
    if (c.empty() || !g.is_complete(g.to_set(c))) return false;
  }
  return family == enumerate_complete_subgraphs(g, family.mode);
}

/// Euler characteristic of the clique complex: sum over cliques of (-1)^(|c|-1).
inline long euler_characteristic(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  long chi = 0;
  for (const auto& c : clique_sets(g, CliqueMode::All, cap)) chi += (c.count() % 2 == 1) ? 1 : -1;
  return chi;
}

/// Barycentric subdivision of a graph: one vertex per complete subgraph,
/// adjacent when one contains the other.
inline Graph bd_graph(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  auto cliques = clique_sets(g, CliqueMode::All, cap);
  LabelSet labels;
  for (const auto& c : cliques) labels.push_back(bracket_label(g.to_labels(c)));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = 0; j < cliques.size(); ++j)
      if (i != j && cliques[i].is_proper_subset_of(cliques[j])) edges.push_back(make_edge(labels[i], labels[j]));
  return Graph(std::move(labels), edges);
}

}  // namespace flagsh

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "flagsh/error.hpp"
#include "flagsh/labels.hpp"

namespace flagsh {

/// Subset of a graph's vertices, indexed by position in `Graph::labels()`.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair, stored with `first < second`.
using Edge = std::pair<Label, Label>;

inline Edge make_edge(Label a, Label b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

template <class Fn>
void for_each_member(const VertexSet& set, Fn&& fn) {
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) fn(i);
}

inline std::vector<std::size_t> members(const VertexSet& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for_each_member(set, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// Finite simple undirected graph with string labels.
///
/// Immutable value: vertices are kept sorted by label, so two graphs compare
/// equal exactly when they have the same labels and the same edges. All
/// index-based accessors refer to that sorted order.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidStructure on duplicate vertices, duplicate edges,
  /// self-loops, invalid labels, or edges with undeclared endpoints.
  Graph(LabelSet vertices, const std::vector<Edge>& edges) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      require_valid_label(vertices[i]);
      if (i && vertices[i] == vertices[i - 1])
        throw InvalidStructure("duplicate vertex '" + vertices[i] + "'");
    }
    labels_ = std::move(vertices);
    adjacency_.assign(labels_.size(), VertexSet(labels_.size()));
    for (const auto& [a, b] : edges) {
      if (a == b) throw InvalidStructure("self-loop at '" + a + "'");
      auto i = find(a);
      auto j = find(b);
      if (!i) throw InvalidStructure("edge endpoint '" + a + "' is not a vertex");
      if (!j) throw InvalidStructure("edge endpoint '" + b + "' is not a vertex");
      if (adjacency_[*i][*j]) throw InvalidStructure("duplicate edge " + a + "-" + b);
      adjacency_[*i][*j] = true;
      adjacency_[*j][*i] = true;
    }
  }

  /// Induced subgraph of `base` on `keep`; no validation needed.
  Graph(const Graph& base, const VertexSet& keep) {
    const auto kept = members(keep);
    labels_.reserve(kept.size());
    for (auto i : kept) labels_.push_back(base.labels_[i]);
    adjacency_.assign(kept.size(), VertexSet(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t b = a + 1; b < kept.size(); ++b)
        if (base.adjacency_[kept[a]][kept[b]]) {
          adjacency_[a][b] = true;
          adjacency_[b][a] = true;
        }
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.count();
    return twice / 2;
  }

  const LabelSet& labels() const noexcept { return labels_; }
  const Label& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t index(std::string_view label) const {
    auto i = find(label);
    if (!i) throw UnknownLabel(std::string(label));
    return *i;
  }

  bool contains(std::string_view label) const { return find(label).has_value(); }

  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  bool adjacent(std::string_view a, std::string_view b) const {
    return adjacency_[index(a)][index(b)];
  }
  bool has_edge(std::string_view a, std::string_view b) const {
    auto i = find(a);
    auto j = find(b);
    return i && j && adjacency_[*i][*j];
  }

  const VertexSet& neighbors(std::size_t i) const { return adjacency_[i]; }
  VertexSet closed_neighbors(std::size_t i) const {
    VertexSet out = adjacency_[i];
    out.set(i);
    return out;
  }
  std::size_t degree(std::size_t i) const { return adjacency_[i].count(); }

  VertexSet all() const {
    VertexSet out(size());
    out.set();
    return out;
  }
  VertexSet none() const { return VertexSet(size()); }

  VertexSet to_set(std::span<const Label> labels) const {
    VertexSet out(size());
    for (const auto& l : labels) out.set(index(l));
    return out;
  }
  LabelSet to_labels(const VertexSet& set) const {
    LabelSet out;
    for_each_member(set, [&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
  }

  /// Edges as sorted label pairs, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (auto j = adjacency_[i].find_next(i); j != VertexSet::npos; j = adjacency_[i].find_next(j))
        out.emplace_back(labels_[i], labels_[j]);
    return out;
  }

  Graph induced(const VertexSet& keep) const { return Graph(*this, keep); }
  Graph induced(std::span<const Label> keep) const { return Graph(*this, to_set(keep)); }

  /// True when the vertices in `set` are pairwise adjacent.
  bool is_complete(const VertexSet& set) const {
    bool ok = true;
    for_each_member(set, [&](std::size_t i) {
      VertexSet rest = set;
      rest.reset(i);
      if (!rest.is_subset_of(adjacency_[i])) ok = false;
    });
    return ok;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  LabelSet labels_;
  std::vector<VertexSet> adjacency_;
};

// ---------------------------------------------------------------------------
// Structural operations

inline LabelSet closed_neighborhood(const Graph& g, std::string_view v) {
  return g.to_labels(g.closed_neighbors(g.index(v)));
}

inline LabelSet open_neighborhood(const Graph& g, std::string_view v) {
  return g.to_labels(g.neighbors(g.index(v)));
}

inline Graph open_neighborhood_subgraph(const Graph& g, std::string_view v) {
  return g.induced(g.neighbors(g.index(v)));
}

inline Graph delete_vertices(const Graph& g, std::span<const Label> vertices) {
  VertexSet keep = g.all();
  for (const auto& v : vertices) keep.reset(g.index(v));
  return g.induced(keep);
}

inline Graph delete_vertex(const Graph& g, const Label& v) {
  return delete_vertices(g, std::span<const Label>(&v, 1));
}

inline Graph delete_edge(const Graph& g, const Label& a, const Label& b) {
  if (!g.adjacent(a, b)) throw PreconditionError("no edge " + a + "-" + b);
  auto edges = g.edges();
  std::erase(edges, make_edge(a, b));
  return Graph(g.labels(), edges);
}

inline Graph add_edge(const Graph& g, const Label& a, const Label& b) {
  if (a == b) throw InvalidStructure("self-loop at '" + a + "'");
  if (g.adjacent(a, b)) throw PreconditionError("edge " + a + "-" + b + " already present");
  auto edges = g.edges();
  edges.push_back(make_edge(a, b));
  return Graph(g.labels(), edges);
}

/// Adds vertex `v` joined exactly to `attachment`.
inline Graph add_vertex(const Graph& g, const Label& v, std::span<const Label> attachment) {
  if (g.contains(v)) throw PreconditionError("vertex '" + v + "' already present");
  auto labels = g.labels();
  labels.push_back(v);
  auto edges = g.edges();
  for (const auto& a : attachment) {
    if (!g.contains(a)) throw UnknownLabel(a);
    edges.push_back(make_edge(v, a));
  }
  return Graph(std::move(labels), edges);
}

inline Label fresh_label(const Graph& g, std::string_view stem = "_x") {
  return fresh_label([&](const Label& l) { return g.contains(l); }, stem);
}

/// Renames vertices through `mapping`; unmapped labels are kept.
inline Graph relabel(const Graph& g, const std::map<Label, Label>& mapping) {
  auto rename = [&](const Label& l) {
    auto it = mapping.find(l);
    return it == mapping.end() ? l : it->second;
  };
  LabelSet labels;
  for (const auto& l : g.labels()) labels.push_back(rename(l));
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) edges.push_back(make_edge(rename(a), rename(b)));
  return Graph(std::move(labels), edges);
}

/// Adds two non-adjacent apexes joined to every vertex.
inline Graph suspension(const Graph& g, const Label& apex_a, const Label& apex_b) {
  if (apex_a == apex_b) throw InvalidStructure("suspension apexes must differ");
  auto with_a = add_vertex(g, apex_a, g.labels());
  return add_vertex(with_a, apex_b, g.labels());
}

/// Suspension with apexes named by the fresh-label scheme.
inline Graph suspension(const Graph& g) {
  Label a = fresh_label(g);
  Label b = fresh_label([&](const Label& l) { return g.contains(l) || l == a; });
  return suspension(g, a, b);
}

/// Number of connected components (0 for the empty graph).
inline std::size_t component_count(const Graph& g, VertexSet alive) {
  std::size_t count = 0;
  while (alive.any()) {
    ++count;
    VertexSet frontier(alive.size());
    frontier.set(alive.find_first());
    VertexSet seen = frontier;
    while (frontier.any()) {
      VertexSet next(alive.size());
      for_each_member(frontier, [&](std::size_t i) { next |= g.neighbors(i); });
      next &= alive;
      next -= seen;
      seen |= next;
      frontier = next;
    }
    alive -= seen;
  }
  return count;
}

inline std::size_t component_count(const Graph& g) { return component_count(g, g.all()); }

inline Graph complete_graph(const LabelSet& labels) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) edges.push_back(make_edge(labels[i], labels[j]));
  return Graph(labels, edges);
}

/// Cycle through `labels` in the given order.
inline Graph cycle_graph(const LabelSet& labels) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    edges.push_back(make_edge(labels[i], labels[(i + 1) % labels.size()]));
  return Graph(labels, edges);
}

inline Graph path_graph(const LabelSet& labels) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) edges.push_back(make_edge(labels[i], labels[i + 1]));
  return Graph(labels, edges);
}

// ---------------------------------------------------------------------------
// Text format: `v <label>` declares a vertex, `e <a> <b>` an edge, `#` starts
// a comment. Output lists vertices then edges, both sorted.

inline std::string to_text(const Graph& g) {
  std::string out;
  for (const auto& v : g.labels()) out += "v " + v + "\n";
  for (const auto& [a, b] : g.edges()) out += "e " + a + " " + b + "\n";
  return out;
}

inline Graph parse_graph(std::string_view text) {
  LabelSet vertices;
  std::set<Label> seen;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::map<Edge, std::size_t> edge_line;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tok = detail::tokenize(line);
    if (tok.empty()) return;
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'v <label>'");
      if (!valid_label(tok[1])) throw ParseError(lineno, "invalid label '" + tok[1] + "'");
      if (!seen.insert(tok[1]).second) throw ParseError(lineno, "duplicate vertex '" + tok[1] + "'");
      vertices.push_back(tok[1]);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e <label> <label>'");
      if (tok[1] == tok[2]) throw ParseError(lineno, "self-loop at '" + tok[1] + "'");
      auto e = make_edge(tok[1], tok[2]);
      if (!seen_edges.insert(e).second) throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
      edge_line[e] = lineno;
      edges.push_back(std::move(e));
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  });
  for (const auto& e : edges) {
    for (const auto& end : {e.first, e.second})
      if (!seen.count(end)) throw ParseError(edge_line[e], "undeclared vertex '" + end + "'");
  }
  return Graph(std::move(vertices), edges);
}

}  // namespace flagsh

#pragma once

#include <map>
#include <vector>

#include "flagsh/cliques.hpp"
#include "flagsh/moves.hpp"

namespace flagsh {

/// Certificate from g to its barycentric subdivision bd_graph(g), label for label.
///
/// Vertices are numbered g_1 < ... < g_n by label. First a vertex ĉ is added
/// for every complete subgraph c, by increasing cardinality, joined to the
/// ĉ_d with d ⊂ c, to g_max(c), and to every g_j with j > max(c) and c ∪ g_j
/// complete; that neighbourhood is a cone on g_max(c). Then g_1, ..., g_n are
/// removed: in what is left, each ĉ with max(c) < i and c ∪ g_i complete is
/// dominated by the hat of c ∪ g_i (largest c first), and the rest is a cone on the hat of [g_i].
inline MoveCertificate check_bd_equivalence(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  auto cliques = clique_sets(g, CliqueMode::All, cap);
  std::stable_sort(cliques.begin(), cliques.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
  std::map<VertexSet, Label> hat;
  for (const auto& c : cliques) {
    Label l = bracket_label(g.to_labels(c));
    if (g.contains(l)) throw PreconditionError("vertex label '" + l + "' collides with a subdivision label");
    hat[c] = std::move(l);
  }
  auto top = [](const VertexSet& c) {
    std::size_t m = 0;
    for_each_member(c, [&](std::size_t i) { m = i; });
    return m;
  };

  MoveCertificate cert{g, {}, {}};
  Graph current = g;
  for (const auto& c : cliques) {
    const std::size_t m = top(c);
    LabelSet attachment;
    for (const auto& d : cliques)
      if (d.is_proper_subset_of(c)) attachment.push_back(hat.at(d));
    attachment.push_back(g.label(m));
    for (std::size_t j = m + 1; j < g.size(); ++j)
      if (c.is_subset_of(g.neighbors(j))) attachment.push_back(g.label(j));
    normalize(attachment);
    auto witness = cone_order(current.induced(attachment), g.label(m));
    auto move = GraphMove::add_vertex(hat.at(c), attachment, std::move(witness));
    current = add_vertex(current, move.a, move.attachment);
    cert.moves.push_back(std::move(move));
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    DismantlingOrder witness;
    const Label& gi = g.label(i);
    VertexSet singleton = g.none();
    singleton.set(i);
    for (auto it = cliques.rbegin(); it != cliques.rend(); ++it) {
      const VertexSet& c = *it;
      if (c[i] || top(c) >= i || !c.is_subset_of(g.neighbors(i))) continue;
      VertexSet with = c;
      with.set(i);
      witness.steps.emplace_back(hat.at(c), hat.at(with));
    }
    // What remains of N(g_i) is a cone on the hat of [g_i].
    Graph local = open_neighborhood_subgraph(current, gi);
    LabelSet removed;
    for (const auto& s : witness.steps) removed.push_back(s.first);
    auto rest = cone_order(delete_vertices(local, removed), hat.at(singleton));
    witness.steps.insert(witness.steps.end(), rest.steps.begin(), rest.steps.end());
    cert.moves.push_back(GraphMove::remove_vertex(gi, std::move(witness)));
    current = delete_vertex(current, gi);
  }
  cert.end = current;
  return cert;
}

}  // namespace flagsh

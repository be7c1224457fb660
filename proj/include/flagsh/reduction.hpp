#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "flagsh/dismantling.hpp"
#include "flagsh/isomorphism.hpp"
#include "flagsh/moves.hpp"

namespace flagsh {

namespace detail {

// Removal certificate for a dismantlable graph: every dominated vertex is
// s-dismantlable (its open neighbourhood is a cone on the dominator).
inline std::vector<GraphMove> dismantling_as_moves(const Graph& g, const DismantlingOrder& order) {
  std::vector<GraphMove> moves;
  Graph current = g;
  for (const auto& [v, w] : order.steps) {
    moves.push_back(GraphMove::remove_vertex(v, cone_order(open_neighborhood_subgraph(current, v), w)));
    current = delete_vertex(current, v);
  }
  return moves;
}

struct ReductionSearch {
  ReductionSearch(std::size_t budget, bool edges) : budget(budget), edges(edges) {}

  std::size_t budget;
  bool edges;                 // allow s-dismantlable edge deletions
  std::optional<Graph> goal;  // label-exact target, or a single vertex when empty
  std::size_t goal_components = 1;
  SearchStats stats{};
  bool exhausted = false;
  std::unordered_set<std::string> dead;
  std::vector<GraphMove> path;

  std::string key(const Graph& g) const { return goal ? "L" + to_text(g) : memo_key(g); }

  bool reached(const Graph& g) const { return goal ? g == *goal : g.size() == 1; }

  bool dfs(const Graph& g) {
    if (reached(g)) return true;
    if (++stats.nodes > budget) {
      exhausted = true;
      return false;
    }
    // Both move kinds keep the number of components.
    if (component_count(g) != goal_components) return false;
    auto k = key(g);
    if (dead.count(k)) return false;
    if (!goal) {
      if (auto order = dismantling_order(g)) {
        auto moves = dismantling_as_moves(g, *order);
        path.insert(path.end(), moves.begin(), moves.end());
        return true;
      }
    }
    const bool truncated_before = exhausted;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (goal && goal->contains(g.label(v))) continue;
      auto order = dismantling_order(g.induced(g.neighbors(v)));
      if (!order) continue;
      path.push_back(GraphMove::remove_vertex(g.label(v), std::move(*order)));
      if (dfs(delete_vertex(g, g.label(v)))) return true;
      path.pop_back();
      if (exhausted) return false;
    }
    if (edges) {
      for (const auto& [a, b] : g.edges()) {
        if (goal && goal->has_edge(a, b)) continue;
        auto order = dismantling_order(g.induced(common_neighbors(g, g.index(a), g.index(b))));
        if (!order) continue;
        path.push_back(GraphMove::remove_edge(a, b, std::move(*order)));
        if (dfs(delete_edge(g, a, b))) return true;
        path.pop_back();
        if (exhausted) return false;
      }
    }
    if (!exhausted && !truncated_before) dead.insert(std::move(k));
    return false;
  }

  SearchVerdict<MoveCertificate> run(const Graph& start) {
    SearchVerdict<MoveCertificate> verdict;
    stats.budget = budget;
    if (dfs(start)) {
      verdict.outcome = Outcome::Yes;
      verdict.certificate = MoveCertificate{start, path, replay(start, path)};
    } else {
      verdict.outcome = exhausted ? Outcome::Unknown : Outcome::No;
    }
    verdict.stats = stats;
    return verdict;
  }
};

}  // namespace detail

/// Backtracking search for s-dismantlable vertex deletions down to a single
/// vertex. Dead ends are memoized up to isomorphism.
inline SearchVerdict<MoveCertificate> s_collapse_search(const Graph& g, std::size_t budget = kDefaultSearchBudget) {
  if (g.empty()) throw PreconditionError("s-collapse search on the empty graph");
  return detail::ReductionSearch(budget, false).run(g);
}

/// s-collapse search towards `target` (label-exact) instead of a single vertex.
inline SearchVerdict<MoveCertificate> s_reduction_search(const Graph& g, const Graph& target,
                                                         std::size_t budget = kDefaultSearchBudget) {
  if (g.empty() || target.empty()) throw PreconditionError("s-reduction search on the empty graph");
  detail::ReductionSearch search(budget, false);
  // Vertex deletions only reach induced subgraphs.
  const bool induced = std::all_of(target.labels().begin(), target.labels().end(),
                                   [&](const Label& v) { return g.contains(v); }) &&
                       g.induced(g.to_set(target.labels())) == target;
  if (!induced) {
    SearchVerdict<MoveCertificate> verdict;
    verdict.outcome = Outcome::No;
    verdict.stats.budget = budget;
    return verdict;
  }
  search.goal = target;
  search.goal_components = component_count(target);
  return search.run(g);
}

/// Search over deletions of s-dismantlable vertices and edges, towards a
/// single vertex or (label-exactly) towards `target`.
inline SearchVerdict<MoveCertificate> ws_reduction_search(const Graph& g, const std::optional<Graph>& target,
                                                          std::size_t budget = kDefaultSearchBudget) {
  if (g.empty()) throw PreconditionError("ws-reduction search on the empty graph");
  detail::ReductionSearch search(budget, true);
  if (target) {
    if (target->empty()) throw PreconditionError("ws-reduction target is empty");
    for (const auto& v : target->labels())
      if (!g.contains(v)) {
        SearchVerdict<MoveCertificate> verdict;
        verdict.outcome = Outcome::No;
        verdict.stats.budget = budget;
        return verdict;
      }
    search.goal = *target;
    search.goal_components = component_count(*target);
  }
  return search.run(g);
}

inline SearchVerdict<MoveCertificate> ws_reduction_search(const Graph& g, std::size_t budget = kDefaultSearchBudget) {
  return ws_reduction_search(g, std::nullopt, budget);
}

/// Certificate from g to g ∖ v when N(v) is s-dismantlable. `neighborhood`
/// certifies N(v) ↗ W ↘ pt (vertex moves, starting at N(v)); without it a
/// removal-only certificate is searched for, and `No` reports that N(v) is
/// not s-collapsible.
///
/// Construction: each vertex z added in W is added to g joined to its
/// attachment plus v; then every edge v–y is deleted by the two-move edge
/// deletion, following the removal order of W; the last copy of v has a
/// single neighbour and is removed; finally the added vertices are removed
/// in reverse order with their original witnesses.
inline SearchVerdict<MoveCertificate> realize_s_neighborhood_deletion(
    const Graph& g, const Label& v, std::size_t budget = kDefaultSearchBudget,
    const std::optional<MoveCertificate>& neighborhood = std::nullopt) {
  const Graph around = open_neighborhood_subgraph(g, v);
  SearchVerdict<MoveCertificate> verdict;
  verdict.stats.budget = budget;
  if (around.empty()) {
    verdict.outcome = Outcome::No;
    return verdict;
  }
  MoveCertificate local;
  if (neighborhood) {
    if (neighborhood->start != around) throw PreconditionError("neighbourhood certificate does not start at N(v)");
    if (neighborhood->end.size() != 1) throw PreconditionError("neighbourhood certificate does not end at a vertex");
    local = normalize_certificate(*neighborhood);
  } else {
    auto found = s_collapse_search(around, budget);
    verdict.stats = found.stats;
    verdict.stats.budget = budget;
    if (!found.yes()) {
      verdict.outcome = found.outcome;
      return verdict;
    }
    local = std::move(*found.certificate);
  }

  // Fresh names for the vertices of W outside N(v), disjoint from g.
  std::set<Label> taken(g.labels().begin(), g.labels().end());
  for (const auto& l : detail::labels_used(local)) taken.insert(l);
  std::map<Label, Label> rename;
  for (const auto& m : local.moves)
    if (m.kind == MoveKind::AddVertex) {
      Label fresh = fresh_label([&](const Label& l) { return taken.count(l) > 0; });
      taken.insert(fresh);
      rename[m.a] = fresh;
    }
  auto renamed = [&](GraphMove m) {
    for (const auto& [from, to] : rename) detail::rename_in(m, from, to);
    return m;
  };

  MoveCertificate cert{g, {}, {}};
  Graph current = g;
  auto push = [&](GraphMove m) {
    current = detail::apply_unchecked(current, m);
    cert.moves.push_back(std::move(m));
  };

  std::vector<GraphMove> additions;
  for (const auto& m : local.moves) {
    if (m.kind != MoveKind::AddVertex) break;
    GraphMove lifted = renamed(m);
    additions.push_back(lifted);
    LabelSet attach = lifted.attachment;
    attach.push_back(v);
    push(GraphMove::add_vertex(lifted.a, attach, cone_order(current.induced(normalized(attach)), v)));
  }

  Label hub = v;
  for (const auto& m : local.moves) {
    if (m.kind != MoveKind::RemoveVertex) continue;
    GraphMove lifted = renamed(m);
    Label fresh = fresh_label([&](const Label& l) { return taken.count(l) > 0; });
    taken.insert(fresh);
    auto step = realize_edge_deletion(current, hub, lifted.a, fresh);
    for (auto& mv : step.moves) push(std::move(mv));
    hub = fresh;
  }
  push(GraphMove::remove_vertex(hub, {}));

  for (auto it = additions.rbegin(); it != additions.rend(); ++it)
    push(GraphMove::remove_vertex(it->a, it->witness));

  cert.end = current;
  if (auto check = check_certificate(cert); !check)
    throw CertificateError(check.step, "neighbourhood deletion produced an invalid certificate: " + check.reason);
  verdict.outcome = Outcome::Yes;
  verdict.certificate = std::move(cert);
  return verdict;
}

}  // namespace flagsh

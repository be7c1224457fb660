#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagsh/graph.hpp"
#include "flagsh/verdict.hpp"

namespace flagsh {

/// Removal log: each step deletes `first`, dominated by `second` in the
/// graph left by the preceding steps.
struct DismantlingOrder {
  std::vector<std::pair<Label, Label>> steps;
  friend bool operator==(const DismantlingOrder&, const DismantlingOrder&) = default;
};

namespace detail {

/// Smallest-label w != v in `alive` with N[v] ⊆ N[w] inside `alive`.
inline std::optional<std::size_t> find_dominator(const Graph& g, const VertexSet& alive, std::size_t v) {
  VertexSet closed = g.neighbors(v) & alive;
  closed.set(v);
  std::optional<std::size_t> found;
  for_each_member(g.neighbors(v) & alive, [&](std::size_t w) {
    if (found) return;
    VertexSet around_w = g.neighbors(w);
    around_w.set(w);
    if (closed.is_subset_of(around_w)) found = w;
  });
  return found;
}

struct GreedyRun {
  VertexSet residual;
  std::vector<std::pair<std::size_t, std::size_t>> steps;
};

/// Deletes the first dominated vertex (label order) until none is left.
inline GreedyRun greedy_dismantle(const Graph& g, VertexSet alive) {
  GreedyRun run{std::move(alive), {}};
  for (bool progress = true; progress && run.residual.count() > 1;) {
    progress = false;
    for (auto v = run.residual.find_first(); v != VertexSet::npos; v = run.residual.find_next(v)) {
      if (auto w = find_dominator(g, run.residual, v)) {
        run.residual.reset(v);
        run.steps.emplace_back(v, *w);
        progress = true;
        break;
      }
    }
  }
  return run;
}

inline bool dismantlable_within(const Graph& g, const VertexSet& alive) {
  if (alive.none()) return false;
  return greedy_dismantle(g, alive).residual.count() == 1;
}

inline DismantlingOrder to_order(const Graph& g, const std::vector<std::pair<std::size_t, std::size_t>>& steps) {
  DismantlingOrder order;
  for (auto [v, w] : steps) order.steps.emplace_back(g.label(v), g.label(w));
  return order;
}

}  // namespace detail

/// All ordered pairs (v, w), v != w, with N[v] ⊆ N[w], sorted by labels.
inline std::vector<std::pair<Label, Label>> dominated_vertices(const Graph& g) {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    VertexSet closed = g.closed_neighbors(v);
    for_each_member(g.neighbors(v), [&](std::size_t w) {
      if (closed.is_subset_of(g.closed_neighbors(w))) out.emplace_back(g.label(v), g.label(w));
    });
  }
  return out;
}

struct DismantlingCore {
  Graph residual;
  DismantlingOrder order;
};

/// Greedy dismantling; `g` is dismantlable iff the residual is one vertex.
inline DismantlingCore dismantling_core(const Graph& g) {
  if (g.empty()) throw PreconditionError("dismantling of the empty graph");
  auto run = detail::greedy_dismantle(g, g.all());
  return {g.induced(run.residual), detail::to_order(g, run.steps)};
}

struct DismantlabilityResult {
  bool dismantlable = false;
  std::optional<DismantlingOrder> order;
  explicit operator bool() const noexcept { return dismantlable; }
};

/// Greedy deletion decides dismantlability: deleting a dominated vertex of a
/// dismantlable graph leaves a dismantlable graph (it is a retract).
inline DismantlabilityResult is_dismantlable(const Graph& g) {
  auto core = dismantling_core(g);
  if (core.residual.size() != 1) return {false, std::nullopt};
  return {true, std::move(core.order)};
}

/// Replays `order` on `g`. With `require_point`, the residual must be a single vertex.
inline CheckResult check_dismantling(const Graph& g, const DismantlingOrder& order, bool require_point = true) {
  VertexSet alive = g.all();
  for (std::size_t k = 0; k < order.steps.size(); ++k) {
    const auto& [removed, dominator] = order.steps[k];
    auto v = g.find(removed);
    auto w = g.find(dominator);
    if (!v || !alive[*v]) return CheckResult::fail(k, "'" + removed + "' is not present");
    if (!w || !alive[*w]) return CheckResult::fail(k, "dominator '" + dominator + "' is not present");
    if (*v == *w) return CheckResult::fail(k, "vertex cannot dominate itself");
    VertexSet closed_v = g.closed_neighbors(*v) & alive;
    if (!closed_v.is_subset_of(g.closed_neighbors(*w)))
      return CheckResult::fail(k, "'" + dominator + "' does not dominate '" + removed + "'");
    alive.reset(*v);
  }
  if (require_point && alive.count() != 1)
    return CheckResult::fail(order.steps.size(), "residual has " + std::to_string(alive.count()) + " vertices");
  return CheckResult::pass();
}

inline Graph apply_dismantling(const Graph& g, const DismantlingOrder& order) {
  LabelSet removed;
  for (const auto& s : order.steps) removed.push_back(s.first);
  return delete_vertices(g, removed);
}

/// Backtracking search for dominated-vertex deletions taking `g` onto its
/// induced subgraph `h`.
inline SearchVerdict<DismantlingOrder> dismantles_onto(const Graph& g, const Graph& h,
                                                       std::size_t budget = kDefaultSearchBudget) {
  for (const auto& v : h.labels())
    if (!g.contains(v)) throw PreconditionError("target vertex '" + v + "' is not in the graph");
  const VertexSet target = g.to_set(h.labels());
  if (g.induced(target) != h) throw PreconditionError("target is not an induced subgraph");

  SearchVerdict<DismantlingOrder> verdict;
  verdict.stats.budget = budget;
  std::set<VertexSet> dead;
  std::vector<std::pair<std::size_t, std::size_t>> path;
  bool exhausted = false;

  auto dfs = [&](auto&& self, const VertexSet& alive) -> bool {
    if (alive == target) return true;
    if (++verdict.stats.nodes > budget) {
      exhausted = true;
      return false;
    }
    if (dead.count(alive)) return false;
    bool truncated_before = exhausted;
    VertexSet removable = alive - target;
    for (auto v = removable.find_first(); v != VertexSet::npos; v = removable.find_next(v)) {
      auto w = detail::find_dominator(g, alive, v);
      if (!w) continue;
      VertexSet next = alive;
      next.reset(v);
      path.emplace_back(v, *w);
      if (self(self, next)) return true;
      path.pop_back();
      if (exhausted) return false;
    }
    if (!exhausted && !truncated_before) dead.insert(alive);
    return false;
  };

  if (dfs(dfs, g.all())) {
    verdict.outcome = Outcome::Yes;
    verdict.certificate = detail::to_order(g, path);
  } else {
    verdict.outcome = exhausted ? Outcome::Unknown : Outcome::No;
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// s-dismantlability

/// v is s-dismantlable when its open neighbourhood is a dismantlable graph.
/// An isolated vertex is not: dismantlable graphs are nonempty.
inline bool is_s_dismantlable_vertex(const Graph& g, std::string_view v) {
  return detail::dismantlable_within(g, g.neighbors(g.index(v)));
}

inline VertexSet common_neighbors(const Graph& g, std::size_t a, std::size_t b) {
  return g.neighbors(a) & g.neighbors(b);
}

/// Edge ab is s-dismantlable when N(a) ∩ N(b) is nonempty and dismantlable.
inline bool is_s_dismantlable_edge(const Graph& g, std::string_view a, std::string_view b) {
  auto i = g.index(a);
  auto j = g.index(b);
  if (!g.adjacent(i, j)) throw UnknownLabel(std::string(a) + "-" + std::string(b));
  return detail::dismantlable_within(g, common_neighbors(g, i, j));
}

inline LabelSet s_dismantlable_vertices(const Graph& g) {
  LabelSet out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (detail::dismantlable_within(g, g.neighbors(v))) out.push_back(g.label(v));
  return out;
}

inline std::vector<Edge> s_dismantlable_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& [a, b] : g.edges())
    if (detail::dismantlable_within(g, common_neighbors(g, g.index(a), g.index(b)))) out.emplace_back(a, b);
  return out;
}

/// Greedy dismantling order of `g`, or nullopt when `g` is not dismantlable.
inline std::optional<DismantlingOrder> dismantling_order(const Graph& g) {
  if (g.empty()) return std::nullopt;
  return is_dismantlable(g).order;
}

/// Order dismantling a graph that is a cone on `apex`: every other vertex in
/// label order, each dominated by the apex.
inline DismantlingOrder cone_order(const Graph& g, const Label& apex) {
  const auto a = g.index(apex);
  DismantlingOrder order;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v == a) continue;
    if (!g.adjacent(v, a)) throw PreconditionError("graph is not a cone on '" + apex + "'");
    order.steps.emplace_back(g.label(v), apex);
  }
  return order;
}

}  // namespace flagsh

#pragma once

#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "flagsh/cliques.hpp"
#include "flagsh/isomorphism.hpp"
#include "flagsh/verdict.hpp"

namespace flagsh {

struct IContractibilityOptions {
  std::size_t extra_vertices = 2;  // additions may grow the graph to |V| + extra_vertices
  std::size_t budget = kDefaultSearchBudget;
  bool additions = true;
};

struct IContractibilityResult {
  Outcome outcome = Outcome::Unknown;
  std::string reason;
  SearchStats stats;
  explicit operator bool() const noexcept { return outcome == Outcome::Yes; }
};

/// Decides contractibility under deletion and addition of I-dismantlable
/// vertices (v is I-dismantlable when N(v) is I-contractible).
///
/// `Yes` means the search found a sequence of such moves. `No` is only
/// returned from homotopy invariants that every such move preserves:
/// connectedness and the Euler characteristic of the clique complex. When
/// the bounded search fails on a graph passing both, the answer is `Unknown`.
class IContractibility {
 public:
  explicit IContractibility(IContractibilityOptions options = {}) : options_(options) {}

  IContractibilityResult contractible(const Graph& g) {
    if (g.empty()) throw PreconditionError("I-contractibility of the empty graph");
    IContractibilityResult result;
    result.stats.budget = options_.budget;
    if (auto reason = obstruction(g)) {
      result.outcome = Outcome::No;
      result.reason = *reason;
    } else if (by_deletions(g)) {
      result.outcome = Outcome::Yes;
      result.reason = "deletions";
    } else if (options_.additions && with_additions(g)) {
      result.outcome = Outcome::Yes;
      result.reason = "additions";
    } else {
      result.outcome = Outcome::Unknown;
      result.reason = exhausted_ ? "budget exhausted" : "no sequence within the size ceiling";
    }
    result.stats.nodes = nodes_;
    return result;
  }

  /// Whether deleting `v` is an I-move, i.e. N(v) is I-contractible.
  IContractibilityResult dismantlable_vertex(const Graph& g, std::string_view v) {
    auto around = open_neighborhood_subgraph(g, v);
    if (around.empty()) {
      IContractibilityResult r;
      r.outcome = Outcome::No;
      r.reason = "isolated vertex";
      return r;
    }
    return contractible(around);
  }

 private:
  static std::optional<std::string> obstruction(const Graph& g) {
    if (component_count(g) != 1) return "disconnected";
    if (euler_characteristic(g) != 1) return "Euler characteristic differs from 1";
    return std::nullopt;
  }

  // Some order of I-dismantlable vertex deletions reaches a single vertex.
  bool by_deletions(const Graph& g) {
    if (g.size() == 1) return true;
    auto key = memo_key(g);
    if (auto it = deletion_memo_.find(key); it != deletion_memo_.end()) return it->second;
    if (in_progress_.count(key)) return false;
    if (obstruction(g)) return deletion_memo_[key] = false;
    ++nodes_;
    in_progress_.insert(key);
    bool found = false;
    for (std::size_t v = 0; v < g.size() && !found; ++v) {
      auto around = g.induced(g.neighbors(v));
      if (around.empty() || !by_deletions(around)) continue;
      found = by_deletions(delete_vertex(g, g.label(v)));
    }
    in_progress_.erase(key);
    return deletion_memo_[key] = found;
  }

  // Breadth-first over graphs reachable by I-moves within the size ceiling,
  // stopping at one that reduces by deletions alone.
  bool with_additions(const Graph& start) {
    const std::size_t ceiling = start.size() + options_.extra_vertices;
    std::deque<Graph> queue{start};
    std::unordered_set<std::string> seen{memo_key(start)};
    while (!queue.empty()) {
      Graph g = std::move(queue.front());
      queue.pop_front();
      if (by_deletions(g)) return true;
      auto visit = [&](Graph next) {
        if (nodes_ >= options_.budget) {
          exhausted_ = true;
          return;
        }
        ++nodes_;
        if (seen.insert(memo_key(next)).second) queue.push_back(std::move(next));
      };
      for (std::size_t v = 0; v < g.size() && !exhausted_; ++v) {
        auto around = g.induced(g.neighbors(v));
        if (!around.empty() && by_deletions(around)) visit(delete_vertex(g, g.label(v)));
      }
      if (g.size() < ceiling && g.size() < 63) {
        const Label fresh = fresh_label(g);
        const std::uint64_t limit = std::uint64_t{1} << g.size();
        for (std::uint64_t mask = 1; mask < limit && !exhausted_; ++mask) {
          VertexSet attach(g.size(), mask);
          if (!by_deletions(g.induced(attach))) continue;
          visit(add_vertex(g, fresh, g.to_labels(attach)));
        }
      }
      if (exhausted_) return false;
    }
    return false;
  }

  IContractibilityOptions options_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::unordered_map<std::string, bool> deletion_memo_;
  std::unordered_set<std::string> in_progress_;
};

inline IContractibilityResult is_I_contractible(const Graph& g, IContractibilityOptions options = {}) {
  return IContractibility(options).contractible(g);
}

inline IContractibilityResult is_I_dismantlable_vertex(const Graph& g, std::string_view v,
                                                       IContractibilityOptions options = {}) {
  return IContractibility(options).dismantlable_vertex(g, v);
}

}  // namespace flagsh

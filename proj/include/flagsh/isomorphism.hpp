#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagsh/graph.hpp"

namespace flagsh {

/// Bijection between the vertex sets of two graphs.
struct IsoWitness {
  std::map<Label, Label> mapping;
  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

inline constexpr std::size_t kDefaultIsoNodeCap = 200'000;

/// Certificate string invariant under relabelling plus the vertex order that
/// produced it: `order[k]` is the vertex placed at canonical position k.
struct CanonicalForm {
  std::string key;
  std::vector<std::size_t> order;
};

namespace detail {

using Coloring = std::vector<std::size_t>;

inline std::size_t color_count(const Coloring& colors) {
  auto sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Rank vertices by (old colour, multiset of neighbour colours) until stable.
inline Coloring refine(const Graph& g, Coloring colors) {
  const std::size_t n = g.size();
  std::size_t classes = color_count(colors);
  for (;;) {
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.push_back(colors[v]);
      std::vector<std::size_t> around;
      for_each_member(g.neighbors(v), [&](std::size_t u) { around.push_back(colors[u]); });
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
      sig[v].second = v;
    }
    std::vector<std::vector<std::size_t>> keys;
    for (auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    Coloring next(n);
    for (std::size_t v = 0; v < n; ++v)
      next[v] = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    colors = std::move(next);
    if (keys.size() == classes) return colors;
    classes = keys.size();
  }
}

inline Coloring individualize(const Coloring& colors, std::size_t chosen) {
  // Chosen vertex sorts just before the rest of its cell.
  Coloring out(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) out[v] = 2 * colors[v] + (v == chosen ? 0 : 1);
  return out;
}

inline bool are_twins(const Graph& g, std::size_t u, std::size_t w) {
  VertexSet nu = g.neighbors(u), nw = g.neighbors(w);
  nu.reset(w);
  nw.reset(u);
  return nu == nw;
}

struct CanonSearch {
  const Graph& g;
  std::size_t cap;
  std::size_t nodes = 0;
  std::optional<CanonicalForm> best;

  std::string key_for(const std::vector<std::size_t>& order) const {
    const std::size_t n = order.size();
    std::string key = std::to_string(n) + ":";
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) key += g.adjacent(order[a], order[b]) ? '1' : '0';
    return key;
  }

  void run(const Coloring& colors) {
    if (++nodes > cap) throw BudgetExceeded("canonical labelling exceeded node cap");
    const std::size_t n = g.size();
    std::size_t classes = color_count(colors);
    if (classes == n) {
      std::vector<std::size_t> order(n);
      for (std::size_t v = 0; v < n; ++v) order[colors[v]] = v;
      std::string key = key_for(order);
      if (!best || key < best->key) best = CanonicalForm{std::move(key), std::move(order)};
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<std::size_t> size_of(n, 0);
    for (auto c : colors) ++size_of[c];
    std::size_t target = 0;
    while (size_of[target] < 2) ++target;
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      // Swapping twins is an automorphism fixing everything individualized so far.
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return are_twins(g, u, v); })) continue;
      tried.push_back(v);
      run(refine(g, individualize(colors, v)));
    }
  }
};

}  // namespace detail

/// Canonical labelling by colour refinement plus individualization. Throws
/// BudgetExceeded when the search tree exceeds `node_cap` nodes.
inline CanonicalForm canonical_form(const Graph& g, std::size_t node_cap = kDefaultIsoNodeCap) {
  if (g.empty()) return CanonicalForm{"0:", {}};
  detail::CanonSearch search{g, node_cap, 0, std::nullopt};
  search.run(detail::refine(g, detail::Coloring(g.size(), 0)));
  return std::move(*search.best);
}

inline bool is_isomorphism(const Graph& a, const Graph& b, const IsoWitness& w) {
  if (a.size() != b.size() || w.mapping.size() != a.size()) return false;
  std::vector<std::size_t> image(a.size());
  VertexSet hit = b.none();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = w.mapping.find(a.label(i));
    if (it == w.mapping.end()) return false;
    auto j = b.find(it->second);
    if (!j || hit[*j]) return false;
    hit.set(*j);
    image[i] = *j;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < a.size(); ++k)
      if (a.adjacent(i, k) != b.adjacent(image[i], image[k])) return false;
  return true;
}

/// An isomorphism from `a` onto `b`, if one exists.
inline std::optional<IsoWitness> are_isomorphic(const Graph& a, const Graph& b,
                                                std::size_t node_cap = kDefaultIsoNodeCap) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < g.size(); ++i) d.push_back(g.degree(i));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return std::nullopt;
  auto ca = canonical_form(a, node_cap);
  auto cb = canonical_form(b, node_cap);
  if (ca.key != cb.key) return std::nullopt;
  IsoWitness w;
  for (std::size_t k = 0; k < ca.order.size(); ++k) w.mapping[a.label(ca.order[k])] = b.label(cb.order[k]);
  return w;
}

/// Memo key for searches: isomorphism-invariant for small graphs, label-exact
/// otherwise. The two kinds never collide.
inline std::string memo_key(const Graph& g, std::size_t iso_limit = 20) {
  if (g.size() <= iso_limit) {
    try {
      return "C" + canonical_form(g, 20'000).key;
    } catch (const BudgetExceeded&) {
    }
  }
  return "L" + to_text(g);
}

}  // namespace flagsh

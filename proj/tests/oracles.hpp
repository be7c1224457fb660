#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain adjacency matrices built from labels and edges, not on library
// internals.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "flagsh/graph.hpp"
#include "flagsh/poset.hpp"

namespace oracle {

struct Adjacency {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> adj;
};

inline Adjacency adjacency(const flagsh::Graph& g) {
  Adjacency a;
  a.labels.assign(g.labels().begin(), g.labels().end());
  const auto n = a.labels.size();
  a.adj.assign(n, std::vector<bool>(n, false));
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[a.labels[i]] = i;
  for (const auto& [x, y] : g.edges()) a.adj[at[x]][at[y]] = a.adj[at[y]][at[x]] = true;
  return a;
}

// Every vertex subset that is pairwise adjacent, as sorted label lists.
inline std::set<std::vector<std::string>> complete_subgraphs(const flagsh::Graph& g) {
  auto a = adjacency(g);
  const auto n = a.labels.size();
  std::set<std::vector<std::string>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    bool complete = true;
    for (std::size_t i = 0; i < members.size() && complete; ++i)
      for (std::size_t j = i + 1; j < members.size() && complete; ++j) complete = a.adj[members[i]][members[j]];
    if (!complete) continue;
    std::vector<std::string> c;
    for (auto i : members) c.push_back(a.labels[i]);
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

inline long euler_characteristic(const flagsh::Graph& g) {
  long chi = 0;
  for (const auto& c : complete_subgraphs(g)) chi += c.size() % 2 ? 1 : -1;
  return chi;
}

// Tries every deletion order of dominated vertices (memoized on the alive set).
inline bool dismantlable(const flagsh::Graph& g) {
  auto a = adjacency(g);
  const auto n = a.labels.size();
  std::map<unsigned, bool> memo;
  auto dominated = [&](unsigned alive, std::size_t v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v || !(alive >> w & 1) || !a.adj[v][w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < n && ok; ++u)
        if (alive >> u & 1 && u != v && u != w && a.adj[v][u] && !a.adj[w][u]) ok = false;
      if (ok) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, unsigned alive) -> bool {
    if (__builtin_popcount(alive) == 1) return true;
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    bool found = false;
    for (std::size_t v = 0; v < n && !found; ++v)
      if (alive >> v & 1 && dominated(alive, v)) found = self(self, alive & ~(1u << v));
    return memo[alive] = found;
  };
  return n > 0 && rec(rec, (1u << n) - 1);
}

// Isomorphism by trying every bijection.
inline bool isomorphic(const flagsh::Graph& g, const flagsh::Graph& h) {
  auto a = adjacency(g);
  auto b = adjacency(h);
  const auto n = a.labels.size();
  if (n != b.labels.size() || g.edge_count() != h.edge_count()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = a.adj[i][j] == b.adj[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Poset as a strict order matrix.
struct Order {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> less;
};

inline Order order(const flagsh::Poset& p) {
  Order o;
  o.labels.assign(p.labels().begin(), p.labels().end());
  const auto n = o.labels.size();
  o.less.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) o.less[i][j] = p.less(i, j);
  return o;
}

// Tries every deletion order of irreducible points.
inline bool poset_dismantlable(const flagsh::Poset& p) {
  auto o = order(p);
  const auto n = o.labels.size();
  auto irreducible = [&](unsigned alive, std::size_t x) {
    // maximum of the strict down set, or minimum of the strict up set
    for (int dir = 0; dir < 2; ++dir) {
      auto rel = [&](std::size_t u, std::size_t v) { return dir == 0 ? o.less[u][v] : o.less[v][u]; };
      for (std::size_t y = 0; y < n; ++y) {
        if (!(alive >> y & 1) || !rel(y, x)) continue;
        bool top = true;
        for (std::size_t z = 0; z < n && top; ++z)
          if (alive >> z & 1 && z != y && rel(z, x) && !rel(z, y)) top = false;
        if (top) return true;
      }
    }
    return false;
  };
  std::map<unsigned, bool> memo;
  auto rec = [&](auto&& self, unsigned alive) -> bool {
    if (__builtin_popcount(alive) == 1) return true;
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    bool found = false;
    for (std::size_t x = 0; x < n && !found; ++x)
      if (alive >> x & 1 && irreducible(alive, x)) found = self(self, alive & ~(1u << x));
    return memo[alive] = found;
  };
  return n > 0 && rec(rec, (1u << n) - 1);
}

// Nonempty chains, as sorted label lists.
inline std::set<std::vector<std::string>> chains(const flagsh::Poset& p) {
  auto o = order(p);
  const auto n = o.labels.size();
  std::set<std::vector<std::string>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool chain = true;
    for (std::size_t i = 0; i < n && chain; ++i)
      for (std::size_t j = i + 1; j < n && chain; ++j)
        if (mask >> i & 1 && mask >> j & 1) chain = o.less[i][j] || o.less[j][i];
    if (!chain) continue;
    std::vector<std::string> c;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) c.push_back(o.labels[i]);
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

// Maximal chains, by extension from minimal elements along covers.
inline std::size_t maximal_chain_count(const flagsh::Poset& p) {
  std::size_t count = 0;
  for (const auto& c : chains(p)) {
    bool maximal = true;
    for (const auto& d : chains(p))
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    count += maximal;
  }
  return count;
}

}  // namespace oracle

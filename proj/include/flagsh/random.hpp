#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flagsh/complex.hpp"
#include "flagsh/graph.hpp"
#include "flagsh/poset.hpp"

namespace flagsh {

using Rng = std::mt19937_64;

/// "a".."z", then "v26", "v27", ...
inline Label letter_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i);
}

inline LabelSet letter_labels(std::size_t n) {
  LabelSet out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter_label(i));
  return out;
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Erdős–Rényi graph on letter labels.
inline Graph random_graph(Rng& rng, std::size_t n, double p) {
  auto labels = letter_labels(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, p)) edges.push_back(make_edge(labels[i], labels[j]));
  return Graph(labels, edges);
}

/// Edge probability drawn from {0.3, 0.5, 0.7}.
inline double random_density(Rng& rng) {
  static constexpr double kDensities[] = {0.3, 0.5, 0.7};
  return kDensities[uniform_size(rng, 0, 2)];
}

/// Random DAG on a shuffled vertex order, transitively closed.
inline Poset random_poset(Rng& rng, std::size_t n, double p) {
  auto labels = letter_labels(n);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, p)) rel.emplace_back(labels[i], labels[j]);
  return Poset(labels, rel);
}

/// Random complex on at most `vertices` vertices with at most `max_simplices`
/// simplices, grown by adding random simplices while the bound allows.
inline SimplicialComplex random_complex(Rng& rng, std::size_t vertices, std::size_t max_simplices) {
  auto labels = letter_labels(vertices);
  SimplicialComplex k;
  for (int attempt = 0; attempt < 20; ++attempt) {
    Simplex s;
    const std::size_t dim = uniform_size(rng, 1, std::min<std::size_t>(vertices, 3));
    std::vector<std::size_t> idx(vertices);
    for (std::size_t i = 0; i < vertices; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t i = 0; i < dim; ++i) s.push_back(labels[idx[i]]);
    normalize(s);
    auto maximal = k.maximal_simplices();
    maximal.push_back(s);
    auto next = SimplicialComplex::from_maximal(maximal);
    if (next.size() <= max_simplices) k = std::move(next);
  }
  return k;
}

}  // namespace flagsh

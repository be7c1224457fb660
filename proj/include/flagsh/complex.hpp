#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagsh/cliques.hpp"
#include "flagsh/graph.hpp"

namespace flagsh {

/// A simplex is a nonempty sorted list of vertex labels.
using Simplex = LabelSet;

/// Finite abstract simplicial complex stored as its full face set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `simplices`. Throws InvalidStructure on an empty
  /// member or an invalid label.
  static SimplicialComplex from_maximal(const std::vector<Simplex>& simplices) {
    SimplicialComplex k;
    for (auto s : simplices) {
      if (s.empty()) throw InvalidStructure("empty simplex");
      for (const auto& l : s) require_valid_label(l);
      normalize(s);
      k.add_closure(s);
    }
    return k;
  }

  /// Takes a family already closed under nonempty subsets.
  static SimplicialComplex from_closed(std::set<Simplex> simplices) {
    SimplicialComplex k;
    k.simplices_ = std::move(simplices);
    for (const auto& s : k.simplices_)
      for (std::size_t i = 0; s.size() > 1 && i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (!k.simplices_.count(face)) throw InvalidStructure("family is not closed under taking faces");
      }
    return k;
  }

  const std::set<Simplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }

  LabelSet vertices() const {
    LabelSet out;
    for (const auto& s : simplices_)
      if (s.size() == 1) out.push_back(s[0]);
    return out;
  }

  /// Number of simplices with k+1 vertices, for k = 0..dim.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& s : simplices_) {
      if (f.size() < s.size()) f.resize(s.size(), 0);
      ++f[s.size() - 1];
    }
    return f;
  }

  long euler_characteristic() const {
    long chi = 0;
    for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
  }

  bool is_maximal(const Simplex& s) const {
    for (const auto& t : simplices_)
      if (t.size() == s.size() + 1 && std::includes(t.begin(), t.end(), s.begin(), s.end())) return false;
    return true;
  }

  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
      if (is_maximal(s)) out.push_back(s);
    return out;
  }

  /// Simplices with exactly one more vertex than `s` that contain it.
  std::vector<Simplex> immediate_cofaces(const Simplex& s) const {
    std::vector<Simplex> out;
    for (const auto& t : simplices_)
      if (t.size() == s.size() + 1 && std::includes(t.begin(), t.end(), s.begin(), s.end())) out.push_back(t);
    return out;
  }

  /// Removes exactly the listed simplices; the result must still be closed.
  SimplicialComplex without(const std::vector<Simplex>& removed) const {
    SimplicialComplex k = *this;
    for (const auto& s : removed) k.simplices_.erase(s);
    return k;
  }
  SimplicialComplex with(const std::vector<Simplex>& added) const {
    SimplicialComplex k = *this;
    for (const auto& s : added) k.simplices_.insert(s);
    return k;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  void add_closure(const Simplex& s) {
    if (simplices_.count(s)) return;
    const std::size_t n = s.size();
    // All nonempty subsets; simplices stay small in practice.
    if (n > 24) throw BudgetExceeded("simplex with more than 24 vertices");
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint32_t{1} << i)) face.push_back(s[i]);
      simplices_.insert(std::move(face));
    }
  }

  std::set<Simplex> simplices_;
};

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool disjoint(const Simplex& a, const Simplex& b) {
  Simplex common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

inline bool is_face_of(const Simplex& tau, const Simplex& sigma) {
  return std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end());
}

/// Full simplex on `vertices` with all its faces.
inline SimplicialComplex full_simplex(const Simplex& vertices) { return SimplicialComplex::from_maximal({vertices}); }

/// Clique complex: the simplices are the complete subgraphs.
inline SimplicialComplex delta_g(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  std::set<Simplex> simplices;
  for (const auto& c : clique_sets(g, CliqueMode::All, cap)) simplices.insert(g.to_labels(c));
  return SimplicialComplex::from_closed(std::move(simplices));
}

/// 1-skeleton as a graph.
inline Graph sk(const SimplicialComplex& k) {
  LabelSet vertices;
  std::vector<Edge> edges;
  for (const auto& s : k.simplices()) {
    if (s.size() == 1) vertices.push_back(s[0]);
    if (s.size() == 2) edges.push_back(make_edge(s[0], s[1]));
  }
  return Graph(std::move(vertices), edges);
}

struct FlagResult {
  bool flag = true;
  std::optional<Simplex> violation;  // a minimal non-simplex with >= 3 vertices
  explicit operator bool() const noexcept { return flag; }
};

/// A complex is flag when every vertex set pairwise joined by edges is a
/// simplex. The smallest clique of the 1-skeleton missing from the complex
/// has all its proper faces present, so it is a minimal non-simplex.
inline FlagResult is_flag(const SimplicialComplex& k, std::size_t cap = kDefaultCliqueCap) {
  Graph skeleton = sk(k);
  std::optional<Simplex> smallest;
  for (const auto& c : clique_sets(skeleton, CliqueMode::All, cap)) {
    auto s = skeleton.to_labels(c);
    if (k.contains(s)) continue;
    if (!smallest || s.size() < smallest->size() || (s.size() == smallest->size() && s < *smallest)) smallest = s;
  }
  if (!smallest) return {};
  return {false, smallest};
}

inline void require_simplex(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.contains(sigma)) {
    std::string text;
    for (const auto& l : sigma) text += (text.empty() ? "" : " ") + l;
    throw UnknownLabel("simplex {" + text + "}");
  }
}

/// link(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}.
inline SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
  require_simplex(k, sigma);
  std::set<Simplex> out;
  for (const auto& t : k.simplices())
    if (disjoint(t, sigma) && k.contains(simplex_union(t, sigma))) out.insert(t);
  return SimplicialComplex::from_closed(std::move(out));
}

/// Removes every simplex containing σ.
inline SimplicialComplex delete_open_star(const SimplicialComplex& k, const Simplex& sigma) {
  require_simplex(k, sigma);
  std::set<Simplex> out;
  for (const auto& t : k.simplices())
    if (!is_face_of(sigma, t)) out.insert(t);
  return SimplicialComplex::from_closed(std::move(out));
}

/// Inclusion graph on the simplices; vertex labels use the bracket scheme.
inline Graph gamma(const SimplicialComplex& k) {
  std::vector<Simplex> all(k.simplices().begin(), k.simplices().end());
  LabelSet labels;
  for (const auto& s : all) labels.push_back(bracket_label(s));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      if (all[i].size() < all[j].size() && is_face_of(all[i], all[j])) edges.push_back(make_edge(labels[i], labels[j]));
  return Graph(std::move(labels), edges);
}

/// Barycentric subdivision: simplices are the chains of faces under inclusion.
inline SimplicialComplex bd_complex(const SimplicialComplex& k) {
  std::vector<Simplex> all(k.simplices().begin(), k.simplices().end());
  std::stable_sort(all.begin(), all.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  std::vector<Label> labels;
  for (const auto& s : all) labels.push_back(bracket_label(s));
  std::set<Simplex> chains;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    Simplex s;
    for (auto i : chain) s.push_back(labels[i]);
    normalize(s);
    chains.insert(std::move(s));
    for (std::size_t j = last + 1; j < all.size(); ++j)
      if (all[j].size() > all[last].size() && is_face_of(all[last], all[j])) {
        chain.push_back(j);
        self(self, j);
        chain.pop_back();
      }
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    chain = {i};
    extend(extend, i);
  }
  return SimplicialComplex::from_closed(std::move(chains));
}

// ---------------------------------------------------------------------------
// Text format: one maximal simplex per line, labels separated by spaces.

inline std::string to_text(const SimplicialComplex& k) {
  std::string out;
  for (const auto& s : k.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i];
    out += '\n';
  }
  return out;
}

inline SimplicialComplex parse_complex(std::string_view text) {
  std::vector<Simplex> simplices;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tok = detail::tokenize(line);
    if (tok.empty()) return;
    std::set<Label> seen;
    for (const auto& l : tok) {
      if (!valid_label(l)) throw ParseError(lineno, "invalid label '" + l + "'");
      if (!seen.insert(l).second) throw ParseError(lineno, "repeated vertex '" + l + "'");
    }
    simplices.push_back(normalized(tok));
  });
  return SimplicialComplex::from_maximal(simplices);
}

}  // namespace flagsh

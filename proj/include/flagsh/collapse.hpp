#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "flagsh/complex.hpp"
#include "flagsh/dismantling.hpp"
#include "flagsh/moves.hpp"
#include "flagsh/verdict.hpp"

namespace flagsh {

/// τ is a facet of σ and σ is the only simplex properly containing τ.
struct CollapsePair {
  Simplex sigma;
  Simplex tau;
  friend bool operator==(const CollapsePair&, const CollapsePair&) = default;
  friend auto operator<=>(const CollapsePair&, const CollapsePair&) = default;
};

enum class ComplexMoveKind { Collapse, Anticollapse };

struct ComplexMove {
  ComplexMoveKind kind = ComplexMoveKind::Collapse;
  CollapsePair pair;
  friend bool operator==(const ComplexMove&, const ComplexMove&) = default;
};

struct ComplexCertificate {
  SimplicialComplex start;
  std::vector<ComplexMove> moves;
  SimplicialComplex end;
};

namespace detail {

inline std::vector<Simplex> facets(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(f));
  }
  return out;
}

inline std::string simplex_text(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i];
  return out;
}

}  // namespace detail

inline bool is_free_pair(const SimplicialComplex& k, const CollapsePair& p) {
  if (!k.contains(p.sigma) || !k.contains(p.tau)) return false;
  if (p.sigma.size() != p.tau.size() + 1 || !is_face_of(p.tau, p.sigma)) return false;
  auto cofaces = k.immediate_cofaces(p.tau);
  return cofaces.size() == 1 && k.is_maximal(p.sigma);
}

/// All free pairs, sorted by (σ, τ).
inline std::vector<CollapsePair> free_pairs(const SimplicialComplex& k) {
  std::map<Simplex, std::pair<std::size_t, const Simplex*>> cofaces;
  for (const auto& s : k.simplices())
    for (auto& f : detail::facets(s)) {
      auto& entry = cofaces[f];
      ++entry.first;
      entry.second = &s;
    }
  std::vector<CollapsePair> out;
  for (const auto& [tau, entry] : cofaces) {
    if (entry.first != 1) continue;
    const Simplex& sigma = *entry.second;
    if (cofaces.count(sigma)) continue;  // σ not maximal
    out.push_back({sigma, tau});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline SimplicialComplex collapse(const SimplicialComplex& k, const CollapsePair& p) {
  if (!is_free_pair(k, p)) throw PreconditionError("not a free pair");
  return k.without({p.sigma, p.tau});
}

/// Inverse of a collapse: adds σ and its facet τ, all other faces of σ being present.
inline bool can_anticollapse(const SimplicialComplex& k, const CollapsePair& p) {
  if (k.contains(p.sigma) || k.contains(p.tau)) return false;
  if (p.tau.empty() || p.sigma.size() != p.tau.size() + 1 || !is_face_of(p.tau, p.sigma)) return false;
  for (const auto& f : detail::facets(p.sigma))
    if (f != p.tau && !k.contains(f)) return false;
  for (const auto& f : detail::facets(p.tau))
    if (!k.contains(f)) return false;
  return true;
}

inline SimplicialComplex anticollapse(const SimplicialComplex& k, const CollapsePair& p) {
  if (!can_anticollapse(k, p)) throw PreconditionError("pair cannot be added back");
  return k.with({p.sigma, p.tau});
}

inline CheckResult check_complex_certificate(const ComplexCertificate& c) {
  SimplicialComplex current = c.start;
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    const auto& m = c.moves[i];
    if (m.kind == ComplexMoveKind::Collapse) {
      if (!is_free_pair(current, m.pair))
        return CheckResult::fail(i, "{" + detail::simplex_text(m.pair.tau) + "} is not a free face of {" +
                                        detail::simplex_text(m.pair.sigma) + "}");
      current = current.without({m.pair.sigma, m.pair.tau});
    } else {
      if (!can_anticollapse(current, m.pair)) return CheckResult::fail(i, "anticollapse is not applicable");
      current = current.with({m.pair.sigma, m.pair.tau});
    }
  }
  if (current != c.end) return CheckResult::fail(c.moves.size(), "final complex differs from the stated end");
  return CheckResult::pass();
}

inline SimplicialComplex replay(const SimplicialComplex& start, const std::vector<ComplexMove>& moves) {
  SimplicialComplex current = start;
  for (const auto& m : moves)
    current = m.kind == ComplexMoveKind::Collapse ? current.without({m.pair.sigma, m.pair.tau})
                                                  : current.with({m.pair.sigma, m.pair.tau});
  return current;
}

/// Collapses the open star of σ given a collapse of link(σ) to a vertex p:
/// each link pair (α, β) becomes (σ ∪ α, σ ∪ β), then (σ ∪ p, σ) finishes.
inline ComplexCertificate collapse_star_certificate(const SimplicialComplex& k, const Simplex& sigma,
                                                    const ComplexCertificate& link_collapse) {
  auto lk = link(k, sigma);
  if (link_collapse.start != lk) throw PreconditionError("witness does not start at the link");
  if (auto check = check_complex_certificate(link_collapse); !check)
    throw PreconditionError("witness is invalid at step " + std::to_string(check.step) + ": " + check.reason);
  if (link_collapse.end.size() != 1) throw PreconditionError("witness does not end at a vertex");
  ComplexCertificate out{k, {}, {}};
  for (const auto& m : link_collapse.moves) {
    if (m.kind != ComplexMoveKind::Collapse) throw PreconditionError("witness contains an anticollapse");
    out.moves.push_back({ComplexMoveKind::Collapse,
                         {simplex_union(sigma, m.pair.sigma), simplex_union(sigma, m.pair.tau)}});
  }
  const Simplex& p = *link_collapse.end.simplices().begin();
  out.moves.push_back({ComplexMoveKind::Collapse, {simplex_union(sigma, p), sigma}});
  out.end = delete_open_star(k, sigma);
  if (auto check = check_complex_certificate(out); !check)
    throw CertificateError(check.step, "star collapse failed: " + check.reason);
  return out;
}

/// Collapse of Δ(G) onto Δ(G ∖ v) for v dominated by w: every clique c with
/// v ∈ c, w ∉ c is paired with c ∪ {w}, larger cliques first.
inline ComplexCertificate prisner_collapse(const Graph& g, const Label& v, const Label& w) {
  const auto vi = g.index(v);
  const auto wi = g.index(w);
  if (vi == wi || !g.closed_neighbors(vi).is_subset_of(g.closed_neighbors(wi)))
    throw PreconditionError("'" + w + "' does not dominate '" + v + "'");
  std::vector<Simplex> paired;
  for (const auto& c : clique_sets(g, CliqueMode::All))
    if (c[vi] && !c[wi]) paired.push_back(g.to_labels(c));
  std::stable_sort(paired.begin(), paired.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  ComplexCertificate out{delta_g(g), {}, {}};
  for (const auto& c : paired) {
    Simplex with_w = c;
    with_w.push_back(w);
    normalize(with_w);
    out.moves.push_back({ComplexMoveKind::Collapse, {std::move(with_w), c}});
  }
  out.end = delta_g(delete_vertex(g, v));
  return out;
}

/// Collapse of Δ(G) to a vertex, chaining one Prisner collapse per step of a
/// dismantling order.
inline ComplexCertificate dismantling_collapse(const Graph& g, const DismantlingOrder& order) {
  if (auto check = check_dismantling(g, order); !check)
    throw PreconditionError("invalid dismantling order at step " + std::to_string(check.step));
  ComplexCertificate out{delta_g(g), {}, {}};
  Graph current = g;
  for (const auto& [v, w] : order.steps) {
    auto step = prisner_collapse(current, v, w);
    out.moves.insert(out.moves.end(), step.moves.begin(), step.moves.end());
    current = delete_vertex(current, v);
  }
  out.end = delta_g(current);
  return out;
}

/// Δ(G) ↘ Δ(G ∖ v) for an s-dismantlable vertex v (star collapse of ⟨v⟩).
inline ComplexCertificate vertex_star_collapse(const Graph& g, const Label& v) {
  auto around = open_neighborhood_subgraph(g, v);
  auto order = around.empty() ? std::nullopt : dismantling_order(around);
  if (!order) throw PreconditionError("'" + v + "' is not s-dismantlable");
  return collapse_star_certificate(delta_g(g), {v}, dismantling_collapse(around, *order));
}

/// Δ(G) ↘ Δ(G ∖ ab) for an s-dismantlable edge ab (star collapse of ⟨a,b⟩).
inline ComplexCertificate edge_star_collapse(const Graph& g, const Label& a, const Label& b) {
  if (!is_s_dismantlable_edge(g, a, b)) throw PreconditionError("edge " + a + "-" + b + " is not s-dismantlable");
  auto common = g.induced(common_neighbors(g, g.index(a), g.index(b)));
  auto order = dismantling_order(common);
  auto e = make_edge(a, b);
  return collapse_star_certificate(delta_g(g), {e.first, e.second}, dismantling_collapse(common, *order));
}

/// Graph move on the 1-skeleton induced by one elementary collapse: a free
/// vertex is removed (its neighbourhood is one vertex), a free edge is removed
/// with a witness taken from the skeleton, deeper collapses leave the
/// skeleton unchanged. For flag complexes the edge witness is the single
/// common neighbour; elsewhere the common neighbourhood may not dismantle,
/// which throws.
inline std::optional<GraphMove> skeleton_move(const SimplicialComplex& k, const CollapsePair& p) {
  if (!is_free_pair(k, p)) throw PreconditionError("not a free pair");
  if (p.tau.size() == 1) return GraphMove::remove_vertex(p.tau[0], {});
  if (p.tau.size() != 2) return std::nullopt;
  const Graph g = sk(k);
  auto common = g.induced(common_neighbors(g, g.index(p.tau[0]), g.index(p.tau[1])));
  auto order = common.empty() ? std::nullopt : dismantling_order(common);
  if (!order)
    throw PreconditionError("edge " + p.tau[0] + "-" + p.tau[1] + " is not s-dismantlable in the skeleton");
  return GraphMove::remove_edge(p.tau[0], p.tau[1], *order);
}

/// Maps a collapse certificate to a ws-certificate between the 1-skeleta.
inline MoveCertificate skeleton_certificate(const ComplexCertificate& c) {
  MoveCertificate out{sk(c.start), {}, {}};
  SimplicialComplex current = c.start;
  for (const auto& m : c.moves) {
    if (m.kind != ComplexMoveKind::Collapse) throw PreconditionError("certificate contains an anticollapse");
    if (auto move = skeleton_move(current, m.pair)) out.moves.push_back(std::move(*move));
    current = collapse(current, m.pair);
  }
  out.end = sk(current);
  return out;
}

// ---------------------------------------------------------------------------
// Search

/// Backtracking over free pairs towards a single vertex or, label-exactly,
/// towards `target`. Dead ends are memoized on the exact simplex set.
inline SearchVerdict<ComplexCertificate> collapse_search(const SimplicialComplex& k,
                                                         const std::optional<SimplicialComplex>& target = std::nullopt,
                                                         std::size_t budget = kDefaultSearchBudget) {
  if (k.empty()) throw PreconditionError("collapse search on the empty complex");
  SearchVerdict<ComplexCertificate> verdict;
  verdict.stats.budget = budget;
  if (target) {
    for (const auto& s : target->simplices())
      if (!k.contains(s)) {
        verdict.outcome = Outcome::No;
        return verdict;
      }
  }
  std::unordered_set<std::string> dead;
  std::vector<ComplexMove> path;
  bool exhausted = false;
  auto key = [](const SimplicialComplex& c) {
    std::string out;
    for (const auto& s : c.simplices()) out += detail::simplex_text(s) + '\n';
    return out;
  };
  auto dfs = [&](auto&& self, const SimplicialComplex& current) -> bool {
    if (target ? current == *target : current.size() == 1) return true;
    if (++verdict.stats.nodes > budget) {
      exhausted = true;
      return false;
    }
    // Collapses preserve the Euler characteristic.
    if (target && current.euler_characteristic() != target->euler_characteristic()) return false;
    if (!target && current.euler_characteristic() != 1) return false;
    auto kk = key(current);
    if (dead.count(kk)) return false;
    const bool truncated_before = exhausted;
    for (const auto& p : free_pairs(current)) {
      if (target && target->contains(p.sigma)) continue;
      path.push_back({ComplexMoveKind::Collapse, p});
      if (self(self, current.without({p.sigma, p.tau}))) return true;
      path.pop_back();
      if (exhausted) return false;
    }
    if (!exhausted && !truncated_before) dead.insert(std::move(kk));
    return false;
  };
  if (dfs(dfs, k)) {
    verdict.outcome = Outcome::Yes;
    verdict.certificate = ComplexCertificate{k, path, replay(k, path)};
  } else {
    verdict.outcome = exhausted ? Outcome::Unknown : Outcome::No;
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Text format: `- <sigma labels> | <tau labels>` per collapse, `+ ...` per
// anticollapse.

inline std::string to_text(const std::vector<ComplexMove>& moves) {
  std::string out;
  for (const auto& m : moves)
    out += std::string(m.kind == ComplexMoveKind::Collapse ? "-" : "+") + " " + detail::simplex_text(m.pair.sigma) +
           " | " + detail::simplex_text(m.pair.tau) + "\n";
  return out;
}

inline std::vector<ComplexMove> parse_complex_moves(std::string_view text) {
  std::vector<ComplexMove> moves;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tok = detail::tokenize(line);
    if (tok.empty()) return;
    if (tok[0] != "-" && tok[0] != "+") throw ParseError(lineno, "expected '-' or '+'");
    auto bar = std::find(tok.begin(), tok.end(), "|");
    if (bar == tok.end()) throw ParseError(lineno, "missing '|'");
    Simplex sigma(tok.begin() + 1, bar);
    Simplex tau(bar + 1, tok.end());
    if (sigma.empty() || tau.empty()) throw ParseError(lineno, "empty simplex");
    moves.push_back({tok[0] == "-" ? ComplexMoveKind::Collapse : ComplexMoveKind::Anticollapse,
                     {normalized(sigma), normalized(tau)}});
  });
  return moves;
}

}  // namespace flagsh

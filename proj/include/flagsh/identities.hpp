#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "flagsh/cliques.hpp"
#include "flagsh/collapse.hpp"
#include "flagsh/complex.hpp"
#include "flagsh/corpus.hpp"
#include "flagsh/dismantling.hpp"
#include "flagsh/i_contractibility.hpp"
#include "flagsh/isomorphism.hpp"
#include "flagsh/moves.hpp"
#include "flagsh/poset.hpp"
#include "flagsh/random.hpp"
#include "flagsh/reduction.hpp"
#include "flagsh/subdivision.hpp"
#include "flagsh/weak_points.hpp"

namespace flagsh {

// ---------------------------------------------------------------------------
// Rewriting edge moves as vertex moves

struct WsRewrite {
  MoveCertificate certificate;  // vertex moves only
  IsoWitness witness;           // end of the input -> end of `certificate`
};

/// Replaces each edge move of a valid ws-certificate by the two vertex moves
/// of the edge deletion/addition construction. Each such step renames one
/// endpoint to a fresh label; `witness` records the accumulated renaming.
inline WsRewrite check_ws_equals_s(const MoveCertificate& cert) {
  if (auto check = check_certificate(cert); !check)
    throw CertificateError(check.step, "input certificate is invalid: " + check.reason);

  std::set<Label> taken = detail::labels_used(cert);
  std::map<Label, Label> current_name;
  for (const auto& l : cert.start.labels()) current_name[l] = l;
  auto name = [&](const Label& l) { return current_name.at(l); };
  auto fresh = [&] {
    Label l = fresh_label([&](const Label& x) { return taken.count(x) > 0; }, "_w");
    taken.insert(l);
    return l;
  };

  WsRewrite out{{cert.start, {}, {}}, {}};
  Graph current = cert.start;
  auto push = [&](GraphMove m) {
    current = apply_move(current, m, out.certificate.moves.size());
    out.certificate.moves.push_back(std::move(m));
  };

  for (const auto& m : cert.moves) {
    switch (m.kind) {
      case MoveKind::RemoveVertex:
      case MoveKind::AddVertex: {
        GraphMove lifted = m;
        if (m.kind == MoveKind::AddVertex) current_name[m.a] = m.a;
        // Fresh labels never occur in the input, so renaming is collision free.
        for (const auto& [from, to] : current_name)
          if (from != to) detail::rename_in(lifted, from, to);
        push(std::move(lifted));
        if (m.kind == MoveKind::RemoveVertex) current_name.erase(m.a);
        break;
      }
      case MoveKind::RemoveEdge:
      case MoveKind::AddEdge: {
        const Label x = fresh();
        auto step = m.kind == MoveKind::RemoveEdge ? realize_edge_deletion(current, name(m.a), name(m.b), x)
                                                   : realize_edge_addition(current, name(m.a), name(m.b), x);
        for (auto& mv : step.moves) push(std::move(mv));
        current_name[m.a] = x;
        break;
      }
    }
  }
  out.certificate.end = current;
  for (const auto& [from, to] : current_name) out.witness.mapping[from] = to;
  if (!is_isomorphism(cert.end, current, out.witness))
    throw CertificateError(cert.moves.size(), "rewritten certificate does not end at a relabelling of the input's end");
  return out;
}

// ---------------------------------------------------------------------------
// Graph moves on Γ(K) for an elementary collapse

/// Γ(K) ↘ Γ(K ∖ {σ, τ}) by two vertex deletions: τ is dominated by σ, then
/// σ is s-dismantlable since its neighbourhood is Γ(K[σ] ∖ {σ, τ}).
inline MoveCertificate gamma_collapse_certificate(const SimplicialComplex& k, const CollapsePair& p) {
  if (!is_free_pair(k, p)) throw PreconditionError("not a free pair");
  const Graph g = gamma(k);
  const Label s = bracket_label(p.sigma);
  const Label t = bracket_label(p.tau);
  MoveCertificate cert{g, {}, {}};
  cert.moves.push_back(GraphMove::remove_vertex(t, cone_order(open_neighborhood_subgraph(g, t), s)));
  const Graph without_tau = delete_vertex(g, t);
  auto order = dismantling_order(open_neighborhood_subgraph(without_tau, s));
  if (!order) throw CertificateError(1, "neighbourhood of " + s + " is not dismantlable");
  cert.moves.push_back(GraphMove::remove_vertex(s, std::move(*order)));
  cert.end = delete_vertex(without_tau, s);
  return cert;
}

/// Δ(G) ↘ Δ(H) from a removal-only ws-certificate G → H, one star collapse per move.
inline ComplexCertificate clique_complex_collapse(const MoveCertificate& cert) {
  ComplexCertificate out{delta_g(cert.start), {}, {}};
  Graph current = cert.start;
  for (const auto& m : cert.moves) {
    ComplexCertificate step;
    if (m.kind == MoveKind::RemoveVertex) {
      step = vertex_star_collapse(current, m.a);
    } else if (m.kind == MoveKind::RemoveEdge) {
      step = edge_star_collapse(current, m.a, m.b);
    } else {
      throw PreconditionError("certificate contains an addition");
    }
    out.moves.insert(out.moves.end(), step.moves.begin(), step.moves.end());
    current = detail::apply_unchecked(current, m);
  }
  out.end = delta_g(current);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive dismantlability (all deletion orders, over vertex subsets)

namespace detail {

inline bool exhaustive_dismantlable(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw PreconditionError("dismantlability of the empty graph");
  if (n > 20) throw PreconditionError("exhaustive dismantlability limited to 20 vertices");
  std::vector<std::uint32_t> closed(n);
  for (std::size_t i = 0; i < n; ++i)
    for_each_member(g.closed_neighbors(i), [&](std::size_t j) { closed[i] |= std::uint32_t{1} << j; });
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<char> reach(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) == 1) {
      reach[mask] = 1;
      continue;
    }
    for (std::size_t v = 0; v < n && !reach[mask]; ++v) {
      if (!(mask >> v & 1) || !reach[mask & ~(std::uint32_t{1} << v)]) continue;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && (mask >> w & 1) && (closed[v] & mask & ~(closed[w] & mask)) == 0) {
          reach[mask] = 1;
          break;
        }
    }
  }
  return reach[full];
}

inline bool exhaustive_poset_dismantlable(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw PreconditionError("dismantlability of the empty poset");
  if (n > 20) throw PreconditionError("exhaustive dismantlability limited to 20 elements");
  std::vector<std::uint32_t> below(n), above(n);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_member(p.below(i), [&](std::size_t j) { below[i] |= std::uint32_t{1} << j; });
    for_each_member(p.above(i), [&](std::size_t j) { above[i] |= std::uint32_t{1} << j; });
  }
  // x has a maximum below it (or a minimum above it) inside `mask`.
  auto irreducible = [&](std::uint32_t mask, std::size_t x) {
    const std::uint32_t down = below[x] & mask, up = above[x] & mask;
    for (std::size_t y = 0; y < n; ++y) {
      if (down >> y & 1 && (down & ~((below[y] & mask) | (std::uint32_t{1} << y))) == 0) return true;
      if (up >> y & 1 && (up & ~((above[y] & mask) | (std::uint32_t{1} << y))) == 0) return true;
    }
    return false;
  };
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<char> reach(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) == 1) {
      reach[mask] = 1;
      continue;
    }
    for (std::size_t x = 0; x < n && !reach[mask]; ++x)
      if (mask >> x & 1 && reach[mask & ~(std::uint32_t{1} << x)] && irreducible(mask, x)) reach[mask] = 1;
  }
  return reach[full];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Property suite

enum class Verdict { Pass, Fail, Skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

struct PropertyReport {
  std::string id;
  std::string instance;  // instance family
  Verdict verdict = Verdict::Pass;
  std::size_t instances = 0;
  std::size_t skipped = 0;  // search budget ran out
  std::string counterexample;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t max_size = 8;
  std::size_t instances = 200;
  std::size_t budget = kDefaultSearchBudget;
  bool parallel = true;
  std::vector<std::string> only;  // property ids to run; all when empty
};

inline std::string to_text(const PropertyReport& r) {
  std::string line = "property=" + r.id + " verdict=" + std::string(to_string(r.verdict)) +
                     " instances=" + std::to_string(r.instances) + " skipped=" + std::to_string(r.skipped) +
                     " detail=\"" + r.instance + "\"";
  if (!r.counterexample.empty()) {
    std::string flat = r.counterexample;
    std::replace(flat.begin(), flat.end(), '\n', ';');
    line += " counterexample=\"" + flat + "\"";
  }
  return line;
}

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Tallies one property; the first failure stops the run.
class Trial {
 public:
  Trial(std::string id, std::string family, const SuiteConfig& config)
      : config_(config), rng_(config.seed ^ fnv1a(id)) {
    report_.id = std::move(id);
    report_.instance = std::move(family);
  }

  Rng& rng() { return rng_; }
  const SuiteConfig& config() const { return config_; }
  bool done() const { return report_.verdict == Verdict::Fail || report_.instances >= config_.instances; }
  bool failed() const { return report_.verdict == Verdict::Fail; }
  void pass() { ++report_.instances; }
  void skip() { ++report_.skipped; }
  void fail(const std::string& what, const std::string& payload) {
    report_.verdict = Verdict::Fail;
    report_.counterexample = "seed=" + std::to_string(config_.seed) + " instance=" +
                             std::to_string(report_.instances) + " " + what + "\n" + payload;
  }
  // `ok` false records a failure; returns `ok`.
  bool expect(bool ok, const std::string& what, const std::string& payload) {
    if (!ok) fail(what, payload);
    return ok;
  }

  // Runs `body` until enough instances pass, a failure occurs, or the attempt
  // cap is hit. `body` returns false when the drawn instance was unusable.
  void run(const std::function<bool()>& body, std::size_t attempt_factor = 50) {
    const std::size_t cap = std::max<std::size_t>(config_.instances, 1) * attempt_factor;
    for (std::size_t attempt = 0; attempt < cap && !done(); ++attempt) {
      try {
        if (body() && !failed()) pass();
      } catch (const std::exception& e) {
        fail(std::string("exception: ") + e.what(), last_payload);
      }
    }
  }

  PropertyReport finish() {
    if (report_.verdict != Verdict::Fail && report_.instances == 0 && report_.skipped > 0)
      report_.verdict = Verdict::Skipped;
    return report_;
  }

  std::string last_payload;

 private:
  SuiteConfig config_;
  Rng rng_;
  PropertyReport report_;
};

inline std::string family(std::size_t lo, std::size_t hi, std::string_view what = "graphs") {
  return "random " + std::string(what) + " on " + std::to_string(lo) + ".." + std::to_string(hi) +
         (what == "graphs" ? " vertices, p in {0.3,0.5,0.7}" : " elements");
}

inline Graph draw_graph(Trial& t, std::size_t lo, std::size_t hi) {
  auto n = uniform_size(t.rng(), lo, std::max(lo, hi));
  auto g = random_graph(t.rng(), n, random_density(t.rng()));
  t.last_payload = to_text(g);
  return g;
}

inline Poset draw_poset(Trial& t, std::size_t lo, std::size_t hi) {
  auto n = uniform_size(t.rng(), lo, std::max(lo, hi));
  auto p = random_poset(t.rng(), n, random_density(t.rng()));
  t.last_payload = to_text(p);
  return p;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[uniform_size(rng, 0, items.size() - 1)];
}

// A valid certificate on `h` ending at a vertex that removes some vertices,
// adds a dominated vertex (reusing a removed label when possible), then
// finishes by s-collapse.
inline std::optional<MoveCertificate> mixed_certificate(Rng& rng, const Graph& h, std::size_t budget) {
  auto first = s_collapse_search(h, budget);
  if (!first.yes()) return std::nullopt;
  const auto& moves = first.certificate->moves;
  const std::size_t j = uniform_size(rng, 0, moves.size());
  std::vector<GraphMove> out(moves.begin(), moves.begin() + static_cast<std::ptrdiff_t>(j));
  Graph current = replay(h, out);
  const std::size_t w = uniform_size(rng, 0, current.size() - 1);
  const Label z = j > 0 ? moves[0].a : fresh_label(current);
  VertexSet attach = current.closed_neighbors(w);
  out.push_back(GraphMove::add_vertex(z, current.to_labels(attach), cone_order(current.induced(attach), current.label(w))));
  current = add_vertex(current, z, current.to_labels(attach));
  auto rest = s_collapse_search(current, budget);
  if (!rest.yes()) return std::nullopt;
  out.insert(out.end(), rest.certificate->moves.begin(), rest.certificate->moves.end());
  MoveCertificate cert{h, out, replay(h, out)};
  return cert;
}

// Random walk of ws-moves (vertex and edge deletions and additions).
inline MoveCertificate random_ws_walk(Rng& rng, const Graph& g, std::size_t steps) {
  MoveCertificate cert{g, {}, {}};
  Graph current = g;
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<GraphMove> options;
    if (current.size() > 1)
      for (std::size_t v = 0; v < current.size(); ++v)
        if (auto order = dismantling_order(current.induced(current.neighbors(v))))
          options.push_back(GraphMove::remove_vertex(current.label(v), *order));
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        auto common = current.induced(common_neighbors(current, a, b));
        if (common.empty()) continue;
        auto order = dismantling_order(common);
        if (!order) continue;
        if (current.adjacent(a, b))
          options.push_back(GraphMove::remove_edge(current.label(a), current.label(b), *order));
        else
          options.push_back(GraphMove::add_edge(current.label(a), current.label(b), *order));
      }
    if (current.size() < 8) {
      // A new vertex joined to a closed neighbourhood is dominated.
      const std::size_t w = uniform_size(rng, 0, current.size() - 1);
      VertexSet attach = current.closed_neighbors(w);
      options.push_back(GraphMove::add_vertex(fresh_label(current, "n"), current.to_labels(attach),
                                              cone_order(current.induced(attach), current.label(w))));
    }
    if (options.empty()) break;
    auto m = pick(rng, options);
    current = apply_move(current, m, cert.moves.size());
    cert.moves.push_back(std::move(m));
  }
  cert.end = current;
  return cert;
}

// Random sequence of elementary collapses.
inline ComplexCertificate random_collapse_walk(Rng& rng, const SimplicialComplex& k, std::size_t steps) {
  ComplexCertificate cert{k, {}, {}};
  SimplicialComplex current = k;
  for (std::size_t s = 0; s < steps; ++s) {
    auto pairs = free_pairs(current);
    if (pairs.empty()) break;
    auto p = pick(rng, pairs);
    current = collapse(current, p);
    cert.moves.push_back({ComplexMoveKind::Collapse, std::move(p)});
  }
  cert.end = current;
  return cert;
}

inline std::string why(const CheckResult& c) { return "step " + std::to_string(c.step) + ": " + c.reason; }

// ---------------------------------------------------------------------------
// Properties

using PropertyFn = std::function<PropertyReport(const SuiteConfig&)>;

inline PropertyReport edge_deletion_replay(const SuiteConfig& cfg) {
  Trial t("edge_deletion_replay", family(3, cfg.max_size), cfg);
  t.run([&] {
    auto g = draw_graph(t, 3, cfg.max_size);
    auto edges = s_dismantlable_edges(g);
    if (edges.empty()) return false;
    auto [a, b] = pick(t.rng(), edges);
    if (coin(t.rng(), 0.5)) std::swap(a, b);
    auto cert = realize_edge_deletion(g, a, b);
    auto check = check_certificate(cert);
    if (!t.expect(bool(check), "edge " + a + "-" + b + " " + why(check), t.last_payload)) return true;
    t.expect(cert.moves.size() == 2 && are_isomorphic(cert.end, delete_edge(g, a, b)).has_value(),
             "edge " + a + "-" + b + " end differs from G minus the edge", t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport neighborhood_deletion_replay(const SuiteConfig& cfg) {
  Trial t("neighborhood_deletion_replay", family(3, cfg.max_size) + "; expansion certificates on odd instances", cfg);
  std::size_t k = 0;
  t.run([&] {
    auto g = draw_graph(t, 3, cfg.max_size);
    const Label v = g.label(uniform_size(t.rng(), 0, g.size() - 1));
    auto around = open_neighborhood_subgraph(g, v);
    if (around.empty()) return false;
    std::optional<MoveCertificate> local;
    if (k++ % 2 == 1) local = mixed_certificate(t.rng(), around, cfg.budget);
    auto verdict = realize_s_neighborhood_deletion(g, v, cfg.budget, local);
    if (verdict.outcome == Outcome::Unknown) {
      t.skip();
      return false;
    }
    if (!verdict.yes()) return false;
    auto check = check_certificate(*verdict.certificate);
    if (!t.expect(bool(check), "vertex " + v + " " + why(check), t.last_payload)) return true;
    t.expect(are_isomorphic(verdict.certificate->end, delete_vertex(g, v)).has_value(),
             "vertex " + v + " end differs from G minus v", t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport normalization_replay(const SuiteConfig& cfg) {
  Trial t("normalization_replay", family(2, cfg.max_size) + "; certificates with late additions", cfg);
  t.run([&] {
    auto g = draw_graph(t, 2, cfg.max_size);
    auto cert = mixed_certificate(t.rng(), g, cfg.budget);
    if (!cert) return false;
    auto norm = normalize_certificate(*cert);
    auto check = check_certificate(norm);
    if (!t.expect(bool(check), why(check), t.last_payload)) return true;
    auto first_removal = std::find_if(norm.moves.begin(), norm.moves.end(),
                                      [](const GraphMove& m) { return m.kind == MoveKind::RemoveVertex; });
    bool adds_first = std::all_of(first_removal, norm.moves.end(),
                                  [](const GraphMove& m) { return m.kind == MoveKind::RemoveVertex; });
    t.expect(adds_first && norm.end.size() == 1, "additions not moved to the front", t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport prisner_collapse_replay(const SuiteConfig& cfg) {
  Trial t("prisner_collapse_replay", family(2, cfg.max_size), cfg);
  t.run([&] {
    auto g = draw_graph(t, 2, cfg.max_size);
    auto dominated = dominated_vertices(g);
    if (dominated.empty()) return false;
    auto [v, w] = pick(t.rng(), dominated);
    auto cert = prisner_collapse(g, v, w);
    auto check = check_complex_certificate(cert);
    t.expect(check && cert.end == delta_g(delete_vertex(g, v)), v + " dominated by " + w + " " + why(check),
             t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport star_collapse_replay(const SuiteConfig& cfg) {
  Trial t("star_collapse_replay", family(2, cfg.max_size) + "; every s-dismantlable vertex", cfg);
  t.run([&] {
    auto g = draw_graph(t, 2, cfg.max_size);
    auto vertices = s_dismantlable_vertices(g);
    if (vertices.empty()) return false;
    for (const auto& v : vertices) {
      auto cert = vertex_star_collapse(g, v);
      auto check = check_complex_certificate(cert);
      if (!t.expect(check && cert.end == delta_g(delete_vertex(g, v)), "vertex " + v + " " + why(check),
                    t.last_payload))
        break;
    }
    return true;
  });
  return t.finish();
}

inline PropertyReport face_complement_dismantlable(const SuiteConfig& cfg) {
  Trial t("face_complement_dismantlable", "simplices of dimension 1..4 with random labels, every maximal face", cfg);
  t.run([&] {
    const std::size_t size = uniform_size(t.rng(), 2, 5);
    auto pool = letter_labels(12);
    std::shuffle(pool.begin(), pool.end(), t.rng());
    Simplex sigma(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    normalize(sigma);
    auto full = full_simplex(sigma);
    t.last_payload = to_text(full);
    for (const auto& tau : detail::facets(sigma)) {
      auto g = gamma(full.without({sigma, tau}));
      if (!t.expect(is_dismantlable(g).dismantlable, "face " + bracket_label(tau), t.last_payload)) break;
    }
    return true;
  });
  return t.finish();
}

inline PropertyReport collapse_to_gamma_moves(const SuiteConfig& cfg) {
  Trial t("collapse_to_gamma_moves", "random complexes on 2..6 vertices, random collapse sequences", cfg);
  t.run([&] {
    auto k = random_complex(t.rng(), uniform_size(t.rng(), 2, 6), 40);
    t.last_payload = to_text(k);
    auto walk = random_collapse_walk(t.rng(), k, 4);
    if (walk.moves.empty()) return false;
    SimplicialComplex current = k;
    for (const auto& m : walk.moves) {
      const Graph g = gamma(current);
      const auto ti = g.index(bracket_label(m.pair.tau));
      const auto si = g.index(bracket_label(m.pair.sigma));
      if (!t.expect(g.closed_neighbors(ti).is_subset_of(g.closed_neighbors(si)),
                    "tau not dominated by sigma for " + bracket_label(m.pair.sigma), t.last_payload))
        return true;
      if (!t.expect(is_s_dismantlable_vertex(delete_vertex(g, g.label(ti)), g.label(si)),
                    "sigma not s-dismantlable after removing tau", t.last_payload))
        return true;
      auto cert = gamma_collapse_certificate(current, m.pair);
      current = collapse(current, m.pair);
      auto check = check_certificate(cert);
      if (!t.expect(check && cert.end == gamma(current), "gamma moves " + why(check), t.last_payload)) return true;
    }
    return true;
  });
  return t.finish();
}

inline PropertyReport subdivision_equivalence(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 6);
  Trial t("subdivision_equivalence", family(1, hi), cfg);
  t.run([&] {
    auto g = draw_graph(t, 1, hi);
    auto cert = check_bd_equivalence(g);
    auto check = check_certificate(cert);
    t.expect(check && cert.end == bd_graph(g), why(check), t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport weak_point_cascade(const SuiteConfig& cfg) {
  Trial t("weak_point_cascade", family(2, cfg.max_size), cfg);
  t.run([&] {
    auto g = draw_graph(t, 2, cfg.max_size);
    auto vertices = s_dismantlable_vertices(g);
    if (vertices.empty()) return false;
    const auto& v = pick(t.rng(), vertices);
    auto cert = realize_weak_point_cascade(g, v);
    auto check = check_poset_certificate(cert);
    t.expect(check && cert.end == clique_poset(delete_vertex(g, v)), "vertex " + v + " " + why(check),
             t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport suspension_dismantlable(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 7);
  Trial t("suspension_dismantlable", family(1, hi), cfg);
  t.run([&] {
    auto g = draw_graph(t, 1, hi);
    bool plain = is_dismantlable(g).dismantlable;
    bool suspended = is_dismantlable(suspension(g)).dismantlable;
    t.expect(plain == suspended, "dismantlable(G) != dismantlable(SG)", t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport suspension_s_collapsible(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 7);
  Trial t("suspension_s_collapsible", family(1, hi), cfg);
  t.run([&] {
    auto g = draw_graph(t, 1, hi);
    auto plain = s_collapse_search(g, cfg.budget);
    auto suspended = s_collapse_search(suspension(g), cfg.budget);
    if (plain.outcome == Outcome::Unknown || suspended.outcome == Outcome::Unknown) {
      t.skip();
      return false;
    }
    if (!t.expect(plain.outcome == suspended.outcome, "s-collapsible(G) != s-collapsible(SG)", t.last_payload))
      return true;
    for (const auto* v : {&plain, &suspended})
      if (v->yes() && !t.expect(bool(check_certificate(*v->certificate)), "invalid certificate", t.last_payload))
        break;
    return true;
  });
  return t.finish();
}

inline PropertyReport weak_point_three_way(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 6);
  Trial t("weak_point_three_way", family(1, hi, "posets"), cfg);
  t.run([&] {
    auto p = draw_poset(t, 1, hi);
    auto direct = weak_points(p);
    auto joined = weak_points_by_join(p);
    auto graph = s_dismantlable_vertices(comp(p));
    t.expect(direct == joined && joined == graph, "weak points disagree", t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport join_dismantlable(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 5);
  Trial t("join_dismantlable", "pairs of " + family(1, hi, "posets") + ", exhaustive check on the join", cfg);
  t.run([&] {
    auto p = draw_poset(t, 1, hi);
    auto q = draw_poset(t, 1, hi);
    t.last_payload = to_text(p) + "--\n" + to_text(q);
    bool joined = detail::exhaustive_poset_dismantlable(join(p, q));
    bool either = is_dismantlable_poset(p).dismantlable || is_dismantlable_poset(q).dismantlable;
    t.expect(joined == either, "dismantlable(P*Q) != dismantlable(P) or dismantlable(Q)", t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport triangle_identities(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 6);
  Trial t("triangle_identities", "random posets, graphs and complexes on 1.." + std::to_string(hi) +
                                     " elements or vertices; all nine identities label-exact",
          cfg);
  t.run([&] {
    auto p = draw_poset(t, 1, hi);
    auto g = random_graph(t.rng(), uniform_size(t.rng(), 1, hi), random_density(t.rng()));
    auto k = random_complex(t.rng(), uniform_size(t.rng(), 1, hi), 30);
    t.last_payload = to_text(p) + "--\n" + to_text(g) + "--\n" + to_text(k);
    auto check = [&](bool ok, const char* name) { return t.expect(ok, name, t.last_payload); };

    LabelSet chains;
    const auto chain_complex = order_complex(p);
    for (const auto& s : chain_complex.simplices()) chains.push_back(bracket_label(s));
    normalize(chains);
    LabelSet bd_labels = bd_poset(p).labels();
    normalize(bd_labels);

    check(face_poset(order_complex(p)) == bd_poset(p), "Pi o DeltaP = Bd on posets") &&
        check(clique_poset(comp(p)) == bd_poset(p), "C o Comp = Bd on posets") &&
        check(order_complex(face_poset(k)) == bd_complex(k), "DeltaP o Pi = Bd on complexes") &&
        check(delta_g(gamma(k)) == bd_complex(k), "DeltaG o Gamma = Bd on complexes") &&
        check(comp(clique_poset(g)) == bd_graph(g), "Comp o C = Bd on graphs") &&
        check(gamma(delta_g(g)) == bd_graph(g), "Gamma o DeltaG = Bd on graphs") &&
        check(chains == bd_labels, "DeltaP = DeltaG o Comp") &&
        check(clique_poset(g) == face_poset(delta_g(g)), "C = Pi o DeltaG") &&
        check(gamma(k) == comp(face_poset(k)), "Gamma = Comp o Pi") &&
        check(gamma(order_complex(p)) == bd_graph(comp(p)), "Gamma o DeltaP = Bd o Comp") &&
        check(order_complex(clique_poset(g)) == bd_complex(delta_g(g)), "DeltaP o C = Bd o DeltaG") &&
        check(clique_poset(gamma(k)) == bd_poset(face_poset(k)), "C o Gamma = Bd o Pi");
    return true;
  });
  return t.finish();
}

inline PropertyReport ws_single_move_collapse(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 7);
  Trial t("ws_single_move_collapse", family(1, hi) + "; every ws-move and every free pair of the clique complex",
          cfg);
  t.run([&] {
    auto g = draw_graph(t, 1, hi);
    const auto k = delta_g(g);
    for (const auto& v : s_dismantlable_vertices(g)) {
      auto cert = vertex_star_collapse(g, v);
      if (!t.expect(check_complex_certificate(cert) && cert.end == delta_g(delete_vertex(g, v)),
                    "vertex " + v + " gives no collapse", t.last_payload))
        return true;
    }
    for (const auto& [a, b] : s_dismantlable_edges(g)) {
      auto cert = edge_star_collapse(g, a, b);
      if (!t.expect(check_complex_certificate(cert) && cert.end == delta_g(delete_edge(g, a, b)),
                    "edge " + a + "-" + b + " gives no collapse", t.last_payload))
        return true;
    }
    for (const auto& p : free_pairs(k)) {
      auto after = collapse(k, p);
      auto moves = skeleton_certificate({k, {{ComplexMoveKind::Collapse, p}}, after});
      auto check = check_certificate(moves);
      if (!t.expect(check && moves.end == sk(after) && moves.moves.size() == (p.tau.size() <= 2 ? 1u : 0u),
                    "collapse " + bracket_label(p.sigma) + " " + why(check), t.last_payload))
        return true;
      // One collapse between clique complexes is one ws-move between the graphs.
      if (after == delta_g(sk(after)) &&
          !t.expect(moves.moves.size() == 1, "flag collapse with no graph move", t.last_payload))
        return true;
    }
    return true;
  });
  return t.finish();
}

inline PropertyReport s_implies_i_dismantlable(const SuiteConfig& cfg) {
  Trial t("s_implies_i_dismantlable", family(2, cfg.max_size) + "; every s-dismantlable vertex", cfg);
  t.run([&] {
    auto g = draw_graph(t, 2, cfg.max_size);
    auto vertices = s_dismantlable_vertices(g);
    if (vertices.empty()) return false;
    IContractibilityOptions options;
    options.budget = cfg.budget;
    for (const auto& v : vertices) {
      auto r = is_I_dismantlable_vertex(g, v, options);
      if (!t.expect(r.outcome == Outcome::Yes, "vertex " + v + ": " + std::string(to_string(r.outcome)),
                    t.last_payload))
        return true;
    }
    if (g.size() <= 6) {
      auto s = s_collapse_search(g, cfg.budget);
      if (s.yes()) {
        options.additions = false;
        auto r = is_I_contractible(g, options);
        t.expect(r.outcome == Outcome::Yes, "s-collapsible graph not I-contractible", t.last_payload);
      }
    }
    return true;
  });
  return t.finish();
}

inline PropertyReport greedy_vs_exhaustive(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 7);
  SuiteConfig local = cfg;
  local.instances = std::max<std::size_t>(cfg.instances, 500);
  Trial t("greedy_vs_exhaustive", family(1, hi) + "; distinct isomorphism classes", local);
  std::unordered_set<std::string> seen;
  t.run([&] {
    auto g = draw_graph(t, 1, hi);
    if (!seen.insert(canonical_form(g).key).second) return false;
    bool greedy = is_dismantlable(g).dismantlable;
    t.expect(greedy == detail::exhaustive_dismantlable(g), "greedy and exhaustive disagree", t.last_payload);
    return true;
  }, 100);
  return t.finish();
}

inline PropertyReport ws_to_s_rewrite(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 6);
  Trial t("ws_to_s_rewrite", family(1, hi) + "; random walks of ws-moves", cfg);
  t.run([&] {
    auto g = draw_graph(t, 1, hi);
    auto walk = detail::random_ws_walk(t.rng(), g, uniform_size(t.rng(), 1, 6));
    t.last_payload += "--\n" + to_text(walk.moves);
    auto rewrite = check_ws_equals_s(walk);
    auto check = check_certificate(rewrite.certificate);
    bool vertex_only = std::all_of(rewrite.certificate.moves.begin(), rewrite.certificate.moves.end(),
                                   [](const GraphMove& m) { return m.is_vertex_move(); });
    t.expect(check && vertex_only && is_isomorphism(walk.end, rewrite.certificate.end, rewrite.witness),
             why(check), t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport s_collapse_to_complex_collapse(const SuiteConfig& cfg) {
  Trial t("s_collapse_to_complex_collapse", family(1, cfg.max_size) + "; s-collapse and ws-reduction certificates",
          cfg);
  t.run([&] {
    auto g = draw_graph(t, 1, cfg.max_size);
    auto verdict = coin(t.rng(), 0.5) ? s_collapse_search(g, cfg.budget) : ws_reduction_search(g, cfg.budget);
    if (verdict.outcome == Outcome::Unknown) {
      t.skip();
      return false;
    }
    if (!verdict.yes()) return false;
    auto cert = clique_complex_collapse(*verdict.certificate);
    auto check = check_complex_certificate(cert);
    t.expect(check && cert.end == delta_g(verdict.certificate->end), why(check), t.last_payload);
    return true;
  });
  return t.finish();
}

inline PropertyReport weak_point_to_comparability(const SuiteConfig& cfg) {
  const std::size_t hi = std::min<std::size_t>(cfg.max_size, 6);
  Trial t("weak_point_to_comparability", family(2, hi, "posets") + "; every weak point", cfg);
  t.run([&] {
    auto p = draw_poset(t, 2, hi);
    auto points = weak_points(p);
    if (points.empty()) return false;
    for (const auto& x : points) {
      auto move = weak_point_removal(p, x);
      if (!t.expect(move.has_value(), "no witness for " + x, t.last_payload)) return true;
      PosetCertificate poset_cert{p, {*move}, delete_element(p, x)};
      auto g = comp(p);
      auto order_collapse = vertex_star_collapse(g, x);
      bool ok = check_poset_certificate(poset_cert) && is_s_dismantlable_vertex(g, x) &&
                comp(delete_element(p, x)) == delete_vertex(g, x) && check_complex_certificate(order_collapse) &&
                order_collapse.end == order_complex(delete_element(p, x));
      if (!t.expect(ok, "weak point " + x, t.last_payload)) return true;
    }
    return true;
  });
  return t.finish();
}

inline PropertyReport collapse_without_s_move(const SuiteConfig& cfg) {
  SuiteConfig single = cfg;
  single.instances = 1;
  Trial t("collapse_without_s_move", "fixture edge_collapse_G: a collapse of clique complexes with no s-move on the graph",
          single);
  t.run([&] {
    auto g = corpus::edge_collapse_graph();
    t.last_payload = to_text(g);
    auto cert = edge_star_collapse(g, "b", "c");
    bool ok = s_dismantlable_vertices(g).empty() && check_complex_certificate(cert) &&
              cert.end == delta_g(corpus::edge_collapse_subgraph()) && cert.moves.size() == 1;
    t.expect(ok, "expected asymmetry not observed", t.last_payload);
    return true;
  }, 1);
  return t.finish();
}

inline const std::vector<std::pair<std::string, PropertyFn>>& properties() {
  static const std::vector<std::pair<std::string, PropertyFn>> all{
      {"collapse_to_gamma_moves", collapse_to_gamma_moves},
      {"collapse_without_s_move", collapse_without_s_move},
      {"edge_deletion_replay", edge_deletion_replay},
      {"face_complement_dismantlable", face_complement_dismantlable},
      {"greedy_vs_exhaustive", greedy_vs_exhaustive},
      {"join_dismantlable", join_dismantlable},
      {"neighborhood_deletion_replay", neighborhood_deletion_replay},
      {"normalization_replay", normalization_replay},
      {"prisner_collapse_replay", prisner_collapse_replay},
      {"s_collapse_to_complex_collapse", s_collapse_to_complex_collapse},
      {"s_implies_i_dismantlable", s_implies_i_dismantlable},
      {"star_collapse_replay", star_collapse_replay},
      {"subdivision_equivalence", subdivision_equivalence},
      {"suspension_dismantlable", suspension_dismantlable},
      {"suspension_s_collapsible", suspension_s_collapsible},
      {"triangle_identities", triangle_identities},
      {"weak_point_cascade", weak_point_cascade},
      {"weak_point_three_way", weak_point_three_way},
      {"weak_point_to_comparability", weak_point_to_comparability},
      {"ws_single_move_collapse", ws_single_move_collapse},
      {"ws_to_s_rewrite", ws_to_s_rewrite},
  };
  return all;
}

}  // namespace detail

inline std::vector<std::string> property_ids() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : detail::properties()) out.push_back(id);
  return out;
}

/// Runs the property suite; reports come back sorted by property id.
inline std::vector<PropertyReport> run_property_suite(const SuiteConfig& config = {}) {
  std::vector<std::pair<std::string, detail::PropertyFn>> selected;
  for (const auto& entry : detail::properties())
    if (config.only.empty() || std::find(config.only.begin(), config.only.end(), entry.first) != config.only.end())
      selected.push_back(entry);
  for (const auto& id : config.only)
    if (std::none_of(selected.begin(), selected.end(), [&](const auto& e) { return e.first == id; }))
      throw PreconditionError("unknown property '" + id + "'");

  std::vector<PropertyReport> reports;
  if (config.parallel) {
    std::vector<std::future<PropertyReport>> running;
    for (const auto& [id, fn] : selected) running.push_back(std::async(std::launch::async, fn, config));
    for (auto& f : running) reports.push_back(f.get());
  } else {
    for (const auto& [id, fn] : selected) reports.push_back(fn(config));
  }
  return reports;
}

inline bool all_passed(const std::vector<PropertyReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.verdict == Verdict::Fail; });
}

}  // namespace flagsh

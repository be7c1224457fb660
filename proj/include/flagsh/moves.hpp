#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagsh/dismantling.hpp"
#include "flagsh/graph.hpp"

namespace flagsh {

enum class MoveKind { RemoveVertex, AddVertex, RemoveEdge, AddEdge };

/// One elementary s-move or ws-move. `a` is the vertex (or first edge
/// endpoint), `b` the second edge endpoint, `attachment` the open
/// neighbourhood of an added vertex. `witness` dismantles the local graph:
/// N(a) for vertex moves, N(a) ∩ N(b) for edge moves.
struct GraphMove {
  MoveKind kind = MoveKind::RemoveVertex;
  Label a;
  Label b;
  LabelSet attachment;
  DismantlingOrder witness;

  static GraphMove remove_vertex(Label v, DismantlingOrder w) {
    return {MoveKind::RemoveVertex, std::move(v), {}, {}, std::move(w)};
  }
  static GraphMove add_vertex(Label v, LabelSet attachment, DismantlingOrder w) {
    normalize(attachment);
    return {MoveKind::AddVertex, std::move(v), {}, std::move(attachment), std::move(w)};
  }
  static GraphMove remove_edge(Label a, Label b, DismantlingOrder w) {
    auto e = make_edge(std::move(a), std::move(b));
    return {MoveKind::RemoveEdge, std::move(e.first), std::move(e.second), {}, std::move(w)};
  }
  static GraphMove add_edge(Label a, Label b, DismantlingOrder w) {
    auto e = make_edge(std::move(a), std::move(b));
    return {MoveKind::AddEdge, std::move(e.first), std::move(e.second), {}, std::move(w)};
  }

  bool is_vertex_move() const noexcept { return kind == MoveKind::RemoveVertex || kind == MoveKind::AddVertex; }
  friend bool operator==(const GraphMove&, const GraphMove&) = default;
};

struct MoveCertificate {
  Graph start;
  std::vector<GraphMove> moves;
  Graph end;
};

namespace detail {

inline std::string describe(const GraphMove& m) {
  switch (m.kind) {
    case MoveKind::RemoveVertex: return "remove vertex '" + m.a + "'";
    case MoveKind::AddVertex: return "add vertex '" + m.a + "'";
    case MoveKind::RemoveEdge: return "remove edge " + m.a + "-" + m.b;
    case MoveKind::AddEdge: return "add edge " + m.a + "-" + m.b;
  }
  return "?";
}

/// Graph the move's witness must dismantle, or an error message.
inline std::pair<std::optional<Graph>, std::string> local_graph(const Graph& g, const GraphMove& m) {
  switch (m.kind) {
    case MoveKind::RemoveVertex: {
      auto v = g.find(m.a);
      if (!v) return {std::nullopt, "vertex '" + m.a + "' is not present"};
      return {g.induced(g.neighbors(*v)), {}};
    }
    case MoveKind::AddVertex: {
      if (g.contains(m.a)) return {std::nullopt, "vertex '" + m.a + "' is already present"};
      if (!valid_label(m.a)) return {std::nullopt, "invalid label '" + m.a + "'"};
      for (const auto& u : m.attachment)
        if (!g.contains(u)) return {std::nullopt, "attachment vertex '" + u + "' is not present"};
      return {g.induced(m.attachment), {}};
    }
    case MoveKind::RemoveEdge:
    case MoveKind::AddEdge: {
      auto i = g.find(m.a);
      auto j = g.find(m.b);
      if (!i || !j) return {std::nullopt, "edge endpoint is not present"};
      if (*i == *j) return {std::nullopt, "edge endpoints coincide"};
      bool present = g.adjacent(*i, *j);
      if (m.kind == MoveKind::RemoveEdge && !present) return {std::nullopt, "edge is not present"};
      if (m.kind == MoveKind::AddEdge && present) return {std::nullopt, "edge is already present"};
      return {g.induced(common_neighbors(g, *i, *j)), {}};
    }
  }
  return {std::nullopt, "unknown move"};
}

inline Graph apply_unchecked(const Graph& g, const GraphMove& m) {
  switch (m.kind) {
    case MoveKind::RemoveVertex: return delete_vertex(g, m.a);
    case MoveKind::AddVertex: return add_vertex(g, m.a, m.attachment);
    case MoveKind::RemoveEdge: return delete_edge(g, m.a, m.b);
    case MoveKind::AddEdge: return add_edge(g, m.a, m.b);
  }
  return g;
}

inline std::optional<std::string> validate_move(const Graph& g, const GraphMove& m) {
  auto [local, error] = local_graph(g, m);
  if (!local) return error;
  if (local->empty()) return describe(m) + ": local graph is empty";
  auto check = check_dismantling(*local, m.witness);
  if (!check) return describe(m) + ": witness step " + std::to_string(check.step) + ": " + check.reason;
  return std::nullopt;
}

}  // namespace detail

/// Applies `m` after validating its witness; step index is reported as 0.
inline Graph apply_move(const Graph& g, const GraphMove& m, std::size_t step = 0) {
  if (auto error = detail::validate_move(g, m)) throw CertificateError(step, *error);
  return detail::apply_unchecked(g, m);
}

/// Replays the moves from `start`; each witness must validate and the final
/// graph must equal `end` label for label.
inline CheckResult check_certificate(const MoveCertificate& c) {
  Graph current = c.start;
  for (std::size_t k = 0; k < c.moves.size(); ++k) {
    if (auto error = detail::validate_move(current, c.moves[k])) return CheckResult::fail(k, *error);
    current = detail::apply_unchecked(current, c.moves[k]);
  }
  if (current != c.end) return CheckResult::fail(c.moves.size(), "final graph differs from the stated end");
  return CheckResult::pass();
}

/// Replays without validation and returns the final graph.
inline Graph replay(const Graph& start, const std::vector<GraphMove>& moves) {
  Graph current = start;
  for (const auto& m : moves) current = detail::apply_unchecked(current, m);
  return current;
}

// ---------------------------------------------------------------------------
// Normalization: expansions first, then reductions.

namespace detail {

inline void rename_in(GraphMove& m, const Label& from, const Label& to) {
  auto fix = [&](Label& l) {
    if (l == from) l = to;
  };
  fix(m.a);
  fix(m.b);
  for (auto& l : m.attachment) fix(l);
  normalize(m.attachment);
  for (auto& [r, d] : m.witness.steps) {
    fix(r);
    fix(d);
  }
  if (m.kind == MoveKind::RemoveEdge || m.kind == MoveKind::AddEdge) {
    auto e = make_edge(m.a, m.b);
    m.a = e.first;
    m.b = e.second;
  }
}

inline std::set<Label> labels_used(const MoveCertificate& c) {
  std::set<Label> used(c.start.labels().begin(), c.start.labels().end());
  used.insert(c.end.labels().begin(), c.end.labels().end());
  for (const auto& m : c.moves) {
    used.insert(m.a);
    if (!m.b.empty()) used.insert(m.b);
    used.insert(m.attachment.begin(), m.attachment.end());
  }
  return used;
}

}  // namespace detail

/// Moves every vertex addition in front of every vertex removal. A removal
/// of g1 followed by the addition of g2 is swapped; g2 cannot be adjacent to
/// g1, so both witnesses stay valid. When g2 reuses g1's label it is renamed
/// to a fresh label in all later moves. The end graph may differ from the
/// input's by such renamings.
inline MoveCertificate normalize_certificate(const MoveCertificate& c) {
  for (const auto& m : c.moves)
    if (!m.is_vertex_move()) throw PreconditionError("normalization needs a certificate of vertex moves only");
  if (auto check = check_certificate(c); !check)
    throw PreconditionError("certificate is invalid at step " + std::to_string(check.step) + ": " + check.reason);

  MoveCertificate out{c.start, c.moves, c.end};
  auto used = detail::labels_used(c);
  auto& moves = out.moves;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < moves.size(); ++k) {
      if (moves[k].kind != MoveKind::RemoveVertex || moves[k + 1].kind != MoveKind::AddVertex) continue;
      if (moves[k + 1].a == moves[k].a) {
        Label fresh = fresh_label([&](const Label& l) { return used.count(l) > 0; });
        used.insert(fresh);
        const Label old = moves[k].a;
        for (std::size_t j = k + 1; j < moves.size(); ++j) detail::rename_in(moves[j], old, fresh);
      }
      std::swap(moves[k], moves[k + 1]);
      swapped = true;
    }
  }
  out.end = replay(out.start, out.moves);
  return out;
}

// ---------------------------------------------------------------------------
// Constructive edge moves as vertex moves.

/// Deletes edge g–g' (g = `g`) by two vertex moves: add x joined to
/// N[g] ∖ {g'} (a cone on g), then remove g. The end graph is G ∖ gg' with g
/// renamed to x.
inline MoveCertificate realize_edge_deletion(const Graph& graph, const Label& g, const Label& g2,
                                             std::optional<Label> fresh = std::nullopt) {
  if (!is_s_dismantlable_edge(graph, g, g2))
    throw PreconditionError("edge " + g + "-" + g2 + " is not s-dismantlable");
  const auto gi = graph.index(g);
  const auto hi = graph.index(g2);
  const Label x = fresh ? *fresh : fresh_label(graph);
  if (graph.contains(x)) throw PreconditionError("label '" + x + "' is already in use");

  VertexSet attach = graph.closed_neighbors(gi);
  attach.reset(hi);
  LabelSet attachment = graph.to_labels(attach);
  DismantlingOrder add_witness = cone_order(graph.induced(attach), g);
  Graph expanded = add_vertex(graph, x, attachment);

  // In N(g) ∪ {x}: vertices outside N[g'] are dominated by x; what is left is
  // the suspension of N(g) ∩ N(g') with apexes x and g'.
  DismantlingOrder remove_witness;
  VertexSet outside = graph.neighbors(gi) - graph.closed_neighbors(hi);
  for_each_member(outside, [&](std::size_t y) { remove_witness.steps.emplace_back(graph.label(y), x); });
  Graph common = graph.induced(common_neighbors(graph, gi, hi));
  auto order = dismantling_order(common);
  if (!order) throw PreconditionError("common neighbourhood is not dismantlable");
  remove_witness.steps.insert(remove_witness.steps.end(), order->steps.begin(), order->steps.end());
  const Label last = apply_dismantling(common, *order).label(0);
  remove_witness.steps.emplace_back(x, last);
  remove_witness.steps.emplace_back(g2, last);

  MoveCertificate cert{graph, {}, {}};
  cert.moves.push_back(GraphMove::add_vertex(x, std::move(attachment), std::move(add_witness)));
  cert.moves.push_back(GraphMove::remove_vertex(g, std::move(remove_witness)));
  cert.end = delete_vertex(expanded, g);
  return cert;
}

/// Adds the missing edge g–g' (N(g) ∩ N(g') nonempty and dismantlable) by
/// two vertex moves: add x joined to N[g] ∪ {g'}, then remove g. The end
/// graph is G + gg' with g renamed to x.
inline MoveCertificate realize_edge_addition(const Graph& graph, const Label& g, const Label& g2,
                                             std::optional<Label> fresh = std::nullopt) {
  const auto gi = graph.index(g);
  const auto hi = graph.index(g2);
  if (gi == hi || graph.adjacent(gi, hi)) throw PreconditionError("edge " + g + "-" + g2 + " cannot be added");
  Graph common = graph.induced(common_neighbors(graph, gi, hi));
  auto order = dismantling_order(common);
  if (!order) throw PreconditionError("edge " + g + "-" + g2 + " is not s-dismantlable");
  const Label x = fresh ? *fresh : fresh_label(graph);
  if (graph.contains(x)) throw PreconditionError("label '" + x + "' is already in use");

  VertexSet attach = graph.closed_neighbors(gi);
  attach.set(hi);
  LabelSet attachment = graph.to_labels(attach);
  // Mirror of the deletion witness: g plays x's role and x plays g's.
  DismantlingOrder add_witness;
  VertexSet outside = graph.neighbors(gi) - graph.closed_neighbors(hi);
  for_each_member(outside, [&](std::size_t y) { add_witness.steps.emplace_back(graph.label(y), g); });
  add_witness.steps.insert(add_witness.steps.end(), order->steps.begin(), order->steps.end());
  const Label last = apply_dismantling(common, *order).label(0);
  add_witness.steps.emplace_back(g, last);
  add_witness.steps.emplace_back(g2, last);

  Graph expanded = add_vertex(graph, x, attachment);
  DismantlingOrder remove_witness = cone_order(open_neighborhood_subgraph(expanded, g), x);

  MoveCertificate cert{graph, {}, {}};
  cert.moves.push_back(GraphMove::add_vertex(x, std::move(attachment), std::move(add_witness)));
  cert.moves.push_back(GraphMove::remove_vertex(g, std::move(remove_witness)));
  cert.end = delete_vertex(expanded, g);
  return cert;
}

// ---------------------------------------------------------------------------
// Text format. One move per line followed by its witness line:
//   +v <label> <a,b,...>     -v <label>     +e <a> <b>     -e <a> <b>
//   w <removed>:<dominator> ...

inline std::string to_text(const std::vector<GraphMove>& moves) {
  std::string out;
  for (const auto& m : moves) {
    switch (m.kind) {
      case MoveKind::RemoveVertex: out += "-v " + m.a; break;
      case MoveKind::AddVertex: {
        out += "+v " + m.a;
        if (!m.attachment.empty()) {
          out += ' ';
          for (std::size_t i = 0; i < m.attachment.size(); ++i) out += (i ? "," : "") + m.attachment[i];
        }
        break;
      }
      case MoveKind::RemoveEdge: out += "-e " + m.a + " " + m.b; break;
      case MoveKind::AddEdge: out += "+e " + m.a + " " + m.b; break;
    }
    out += "\nw";
    for (const auto& [r, d] : m.witness.steps) out += " " + r + ":" + d;
    out += '\n';
  }
  return out;
}

inline std::vector<GraphMove> parse_moves(std::string_view text) {
  std::vector<GraphMove> moves;
  bool awaiting_witness = false;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tok = detail::tokenize(line);
    if (tok.empty()) return;
    const auto& head = tok[0];
    if (head == "w") {
      if (!awaiting_witness) throw ParseError(lineno, "witness line without a move");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto parts = detail::split_top_level(tok[i], ':');
        if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
          throw ParseError(lineno, "expected '<removed>:<dominator>', got '" + tok[i] + "'");
        moves.back().witness.steps.emplace_back(parts[0], parts[1]);
      }
      awaiting_witness = false;
      return;
    }
    if (awaiting_witness) throw ParseError(lineno, "expected a witness line");
    if (head == "+v") {
      if (tok.size() != 2 && tok.size() != 3) throw ParseError(lineno, "expected '+v <label> <attachment>'");
      LabelSet attachment;
      if (tok.size() == 3)
        for (auto& l : detail::split_top_level(tok[2], ',')) {
          if (!valid_label(l)) throw ParseError(lineno, "invalid label '" + l + "'");
          attachment.push_back(std::move(l));
        }
      moves.push_back(GraphMove::add_vertex(tok[1], std::move(attachment), {}));
    } else if (head == "-v") {
      if (tok.size() != 2) throw ParseError(lineno, "expected '-v <label>'");
      moves.push_back(GraphMove::remove_vertex(tok[1], {}));
    } else if (head == "+e" || head == "-e") {
      if (tok.size() != 3) throw ParseError(lineno, "expected '" + head + " <a> <b>'");
      moves.push_back(head == "+e" ? GraphMove::add_edge(tok[1], tok[2], {})
                                   : GraphMove::remove_edge(tok[1], tok[2], {}));
    } else {
      throw ParseError(lineno, "unknown move '" + head + "'");
    }
    awaiting_witness = true;
  });
  if (awaiting_witness) throw ParseError(0, "last move has no witness line");
  return moves;
}

}  // namespace flagsh

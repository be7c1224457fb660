#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagsh/dismantling.hpp"
#include "flagsh/poset.hpp"

namespace flagsh {

enum class PosetMoveKind { RemoveWeakPoint, AddWeakPoint };
enum class Side { Below, Above };

/// Removal or addition of a weak point. `witness` dismantles the elements
/// strictly below (`side == Below`) or above the point. Additions state the
/// strict down set and up set of the new element.
struct PosetMove {
  PosetMoveKind kind = PosetMoveKind::RemoveWeakPoint;
  Label element;
  LabelSet below;
  LabelSet above;
  Side side = Side::Below;
  PosetDismantlingOrder witness;
  friend bool operator==(const PosetMove&, const PosetMove&) = default;
};

struct PosetCertificate {
  Poset start;
  std::vector<PosetMove> moves;
  Poset end;
};

namespace detail {

inline std::optional<std::string> validate_poset_move(const Poset& p, const PosetMove& m) {
  Poset local;
  if (m.kind == PosetMoveKind::RemoveWeakPoint) {
    auto x = p.find(m.element);
    if (!x) return "element '" + m.element + "' is not present";
    local = p.induced(m.side == Side::Below ? p.below(*x) : p.above(*x));
  } else {
    if (p.contains(m.element)) return "element '" + m.element + "' is already present";
    try {
      (void)add_element(p, m.element, m.below, m.above);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    local = p.induced(p.to_set(m.side == Side::Below ? m.below : m.above));
  }
  if (local.empty()) return "witness side of '" + m.element + "' is empty";
  auto check = check_poset_dismantling(local, m.witness);
  if (!check) return "witness step " + std::to_string(check.step) + ": " + check.reason;
  return std::nullopt;
}

inline Poset apply_poset_unchecked(const Poset& p, const PosetMove& m) {
  if (m.kind == PosetMoveKind::RemoveWeakPoint) return delete_element(p, m.element);
  return add_element(p, m.element, m.below, m.above);
}

}  // namespace detail

inline CheckResult check_poset_certificate(const PosetCertificate& c) {
  Poset current = c.start;
  for (std::size_t k = 0; k < c.moves.size(); ++k) {
    if (auto error = detail::validate_poset_move(current, c.moves[k])) return CheckResult::fail(k, *error);
    current = detail::apply_poset_unchecked(current, c.moves[k]);
  }
  if (current != c.end) return CheckResult::fail(c.moves.size(), "final poset differs from the stated end");
  return CheckResult::pass();
}

/// Removal of weak point `x` with a witness found greedily on either side.
inline std::optional<PosetMove> weak_point_removal(const Poset& p, const Label& x) {
  const auto i = p.index(x);
  for (Side side : {Side::Below, Side::Above}) {
    Poset local = p.induced(side == Side::Below ? p.below(i) : p.above(i));
    if (local.empty()) continue;
    if (auto r = is_dismantlable_poset(local))
      return PosetMove{PosetMoveKind::RemoveWeakPoint, x, {}, {}, side, std::move(*r.order)};
  }
  return std::nullopt;
}

/// C(G) ↘ C(G ∖ v) for an s-dismantlable vertex v: remove [v], then the
/// cliques c ∪ {v} following the greedy dismantling order of C(N(v)), the
/// element left last being removed last.
inline PosetCertificate realize_weak_point_cascade(const Graph& g, const Label& v) {
  if (!is_s_dismantlable_vertex(g, v)) throw PreconditionError("'" + v + "' is not s-dismantlable");
  const Poset start = clique_poset(g);
  const Graph neighborhood = open_neighborhood_subgraph(g, v);
  const Poset around = clique_poset(neighborhood);
  auto order = is_dismantlable_poset(around);
  if (!order) throw PreconditionError("clique poset of N(v) is not dismantlable");

  std::map<Label, LabelSet> members_of;
  for (const auto& c : enumerate_complete_subgraphs(neighborhood, CliqueMode::All).cliques)
    members_of[bracket_label(c)] = c;
  auto lift = [&](const Label& bracketed) {
    LabelSet members = members_of.at(bracketed);
    members.push_back(v);
    return bracket_label(members);
  };
  std::vector<Label> sequence{bracket_label({v})};
  VertexSet left = around.all();
  for (const auto& [x, partner] : order.order->steps) {
    sequence.push_back(lift(x));
    left.reset(around.index(x));
  }
  sequence.push_back(lift(around.label(left.find_first())));

  PosetCertificate cert{start, {}, {}};
  Poset current = start;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    auto move = weak_point_removal(current, sequence[k]);
    if (!move) throw CertificateError(k, "'" + sequence[k] + "' is not a weak point");
    cert.moves.push_back(std::move(*move));
    current = delete_element(current, sequence[k]);
  }
  cert.end = current;
  return cert;
}

}  // namespace flagsh

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagsh/cliques.hpp"
#include "flagsh/complex.hpp"
#include "flagsh/graph.hpp"
#include "flagsh/verdict.hpp"

namespace flagsh {

using Relation = std::pair<Label, Label>;  // first < second

/// Finite strict partial order, stored transitively closed. Elements are
/// kept sorted by label, like graph vertices.
class Poset {
 public:
  Poset() = default;

  /// Closes `less` transitively. Throws InvalidStructure on unknown
  /// elements, duplicates, or cycles.
  Poset(LabelSet elements, const std::vector<Relation>& less) {
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      require_valid_label(elements[i]);
      if (i && elements[i] == elements[i - 1]) throw InvalidStructure("duplicate element '" + elements[i] + "'");
    }
    labels_ = std::move(elements);
    const std::size_t n = labels_.size();
    above_.assign(n, VertexSet(n));
    for (const auto& [a, b] : less) {
      auto i = find(a);
      auto j = find(b);
      if (!i) throw InvalidStructure("relation mentions unknown element '" + a + "'");
      if (!j) throw InvalidStructure("relation mentions unknown element '" + b + "'");
      if (*i == *j) throw InvalidStructure("element '" + a + "' below itself");
      above_[*i].set(*j);
    }
    // Warshall closure on bitsets.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (above_[i][k]) above_[i] |= above_[k];
    for (std::size_t i = 0; i < n; ++i)
      if (above_[i][i]) throw InvalidStructure("order relation has a cycle through '" + labels_[i] + "'");
    rebuild_below();
  }

  /// Induced subposet on `keep`.
  Poset(const Poset& base, const VertexSet& keep) {
    const auto kept = members(keep);
    for (auto i : kept) labels_.push_back(base.labels_[i]);
    above_.assign(kept.size(), VertexSet(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t b = 0; b < kept.size(); ++b)
        if (base.above_[kept[a]][kept[b]]) above_[a].set(b);
    rebuild_below();
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const LabelSet& labels() const noexcept { return labels_; }
  const Label& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  std::size_t index(std::string_view label) const {
    auto i = find(label);
    if (!i) throw UnknownLabel(std::string(label));
    return *i;
  }
  bool contains(std::string_view label) const { return find(label).has_value(); }

  bool less(std::size_t i, std::size_t j) const { return above_[i][j]; }
  bool less(std::string_view a, std::string_view b) const { return above_[index(a)][index(b)]; }
  bool comparable(std::size_t i, std::size_t j) const { return above_[i][j] || above_[j][i]; }

  const VertexSet& above(std::size_t i) const { return above_[i]; }
  const VertexSet& below(std::size_t i) const { return below_[i]; }

  VertexSet all() const {
    VertexSet out(size());
    out.set();
    return out;
  }
  VertexSet to_set(std::span<const Label> labels) const {
    VertexSet out(size());
    for (const auto& l : labels) out.set(index(l));
    return out;
  }
  LabelSet to_labels(const VertexSet& set) const {
    LabelSet out;
    for_each_member(set, [&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
  }

  Poset induced(const VertexSet& keep) const { return Poset(*this, keep); }

  /// All strict relations, sorted.
  std::vector<Relation> relations() const {
    std::vector<Relation> out;
    for (std::size_t i = 0; i < size(); ++i)
      for_each_member(above_[i], [&](std::size_t j) { out.emplace_back(labels_[i], labels_[j]); });
    return out;
  }

  /// Hasse diagram: a < b with nothing strictly between.
  std::vector<Relation> covers() const {
    std::vector<Relation> out;
    for (std::size_t i = 0; i < size(); ++i)
      for_each_member(above_[i], [&](std::size_t j) {
        if ((above_[i] & below_[j]).none()) out.emplace_back(labels_[i], labels_[j]);
      });
    return out;
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.labels_ == b.labels_ && a.above_ == b.above_; }

 private:
  void rebuild_below() {
    const std::size_t n = labels_.size();
    below_.assign(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for_each_member(above_[i], [&](std::size_t j) { below_[j].set(i); });
  }

  LabelSet labels_;
  std::vector<VertexSet> above_;
  std::vector<VertexSet> below_;
};

inline Poset down_set(const Poset& p, std::string_view x) { return p.induced(p.below(p.index(x))); }
inline Poset up_set(const Poset& p, std::string_view x) { return p.induced(p.above(p.index(x))); }

inline Poset delete_elements(const Poset& p, std::span<const Label> removed) {
  VertexSet keep = p.all();
  for (const auto& l : removed) keep.reset(p.index(l));
  return p.induced(keep);
}

inline Poset delete_element(const Poset& p, const Label& x) { return delete_elements(p, std::span<const Label>(&x, 1)); }

/// Adds `x` with the given strict down and up sets (which must already be
/// down- and up-closed, with everything in `below` less than everything in `above`).
inline Poset add_element(const Poset& p, const Label& x, const LabelSet& below, const LabelSet& above) {
  if (p.contains(x)) throw PreconditionError("element '" + x + "' already present");
  VertexSet down = p.to_set(below);
  VertexSet up = p.to_set(above);
  if ((down & up).any()) throw PreconditionError("element cannot be both below and above '" + x + "'");
  for_each_member(down, [&](std::size_t d) {
    if (!p.below(d).is_subset_of(down)) throw PreconditionError("set below '" + x + "' is not down-closed");
    if (!up.is_subset_of(p.above(d))) throw PreconditionError("adding '" + x + "' would create new relations");
  });
  for_each_member(up, [&](std::size_t u) {
    if (!p.above(u).is_subset_of(up)) throw PreconditionError("set above '" + x + "' is not up-closed");
  });
  auto labels = p.labels();
  labels.push_back(x);
  auto rel = p.relations();
  for (const auto& d : below) rel.emplace_back(d, x);
  for (const auto& u : above) rel.emplace_back(x, u);
  return Poset(std::move(labels), rel);
}

// ---------------------------------------------------------------------------
// Irreducible points and dismantlability

namespace detail {

inline std::optional<std::size_t> maximum_of(const Poset& p, const VertexSet& alive, const VertexSet& set) {
  VertexSet s = set & alive;
  std::optional<std::size_t> found;
  for_each_member(s, [&](std::size_t m) {
    VertexSet rest = s;
    rest.reset(m);
    if (!found && rest.is_subset_of(p.below(m))) found = m;
  });
  return found;
}

inline std::optional<std::size_t> minimum_of(const Poset& p, const VertexSet& alive, const VertexSet& set) {
  VertexSet s = set & alive;
  std::optional<std::size_t> found;
  for_each_member(s, [&](std::size_t m) {
    VertexSet rest = s;
    rest.reset(m);
    if (!found && rest.is_subset_of(p.above(m))) found = m;
  });
  return found;
}

/// Maximum of P_{<x} if any, else minimum of P_{>x}, within `alive`.
inline std::optional<std::size_t> irreducible_partner(const Poset& p, const VertexSet& alive, std::size_t x) {
  if (auto m = maximum_of(p, alive, p.below(x))) return m;
  return minimum_of(p, alive, p.above(x));
}

struct PosetGreedyRun {
  VertexSet residual;
  std::vector<std::pair<std::size_t, std::size_t>> steps;
};

inline PosetGreedyRun greedy_poset_dismantle(const Poset& p, VertexSet alive) {
  PosetGreedyRun run{std::move(alive), {}};
  for (bool progress = true; progress && run.residual.count() > 1;) {
    progress = false;
    for (auto x = run.residual.find_first(); x != VertexSet::npos; x = run.residual.find_next(x)) {
      if (auto m = irreducible_partner(p, run.residual, x)) {
        run.residual.reset(x);
        run.steps.emplace_back(x, *m);
        progress = true;
        break;
      }
    }
  }
  return run;
}

}  // namespace detail

/// Removal log over a poset: each step deletes `first`, where `second` is the
/// maximum of the elements below it or the minimum of those above it.
struct PosetDismantlingOrder {
  std::vector<std::pair<Label, Label>> steps;
  friend bool operator==(const PosetDismantlingOrder&, const PosetDismantlingOrder&) = default;
};

inline LabelSet irreducible_points(const Poset& p) {
  LabelSet out;
  const VertexSet alive = p.all();
  for (std::size_t x = 0; x < p.size(); ++x)
    if (detail::irreducible_partner(p, alive, x)) out.push_back(p.label(x));
  return out;
}

struct PosetDismantlability {
  bool dismantlable = false;
  std::optional<PosetDismantlingOrder> order;
  explicit operator bool() const noexcept { return dismantlable; }
};

/// Greedy removal of irreducible points; dismantlable iff one element is left.
inline PosetDismantlability is_dismantlable_poset(const Poset& p) {
  if (p.empty()) throw PreconditionError("dismantlability of the empty poset");
  auto run = detail::greedy_poset_dismantle(p, p.all());
  if (run.residual.count() != 1) return {};
  PosetDismantlingOrder order;
  for (auto [x, m] : run.steps) order.steps.emplace_back(p.label(x), p.label(m));
  return {true, std::move(order)};
}

/// Nonempty and dismantlable; the empty poset is not dismantlable.
inline bool dismantlable_or_false(const Poset& p) { return !p.empty() && is_dismantlable_poset(p).dismantlable; }

inline CheckResult check_poset_dismantling(const Poset& p, const PosetDismantlingOrder& order) {
  VertexSet alive = p.all();
  for (std::size_t k = 0; k < order.steps.size(); ++k) {
    const auto& [x, m] = order.steps[k];
    auto xi = p.find(x);
    auto mi = p.find(m);
    if (!xi || !alive[*xi]) return CheckResult::fail(k, "'" + x + "' is not present");
    if (!mi || !alive[*mi]) return CheckResult::fail(k, "'" + m + "' is not present");
    auto is_max = detail::maximum_of(p, alive, p.below(*xi));
    auto is_min = detail::minimum_of(p, alive, p.above(*xi));
    if (is_max != mi && is_min != mi)
      return CheckResult::fail(k, "'" + m + "' is neither the maximum below nor the minimum above '" + x + "'");
    alive.reset(*xi);
  }
  if (alive.count() != 1) return CheckResult::fail(order.steps.size(), "residual is not a single element");
  return CheckResult::pass();
}

/// Weak points: P_{<x} or P_{>x} is dismantlable.
inline LabelSet weak_points(const Poset& p) {
  LabelSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (dismantlable_or_false(p.induced(p.below(x))) || dismantlable_or_false(p.induced(p.above(x))))
      out.push_back(p.label(x));
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

/// Every element of `p` below every element of `q`. Labels of `q` clashing
/// with labels of `p` get "'" appended until unique.
inline Poset join(const Poset& p, const Poset& q) {
  std::set<Label> taken(p.labels().begin(), p.labels().end());
  std::map<Label, Label> rename;
  for (const auto& l : q.labels()) {
    Label n = l;
    while (taken.count(n) || (n != l && q.contains(n))) n += "'";
    rename[l] = n;
    taken.insert(n);
  }
  LabelSet labels = p.labels();
  for (const auto& l : q.labels()) labels.push_back(rename[l]);
  auto rel = p.relations();
  for (const auto& [a, b] : q.relations()) rel.emplace_back(rename[a], rename[b]);
  for (const auto& a : p.labels())
    for (const auto& b : q.labels()) rel.emplace_back(a, rename[b]);
  return Poset(std::move(labels), rel);
}

/// Weak points via P_{>x} * P_{<x} being dismantlable.
inline LabelSet weak_points_by_join(const Poset& p) {
  LabelSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (dismantlable_or_false(join(p.induced(p.above(x)), p.induced(p.below(x))))) out.push_back(p.label(x));
  return out;
}

inline Label pair_label(const Label& x, const Label& side) { return "(" + x + "," + side + ")"; }

/// P × {a < b}: (x,s) ≤ (y,t) iff x ≤ y and s ≤ t.
inline Poset product_with_two_chain(const Poset& p) {
  LabelSet labels;
  std::vector<Relation> rel;
  for (const auto& x : p.labels()) {
    labels.push_back(pair_label(x, "a"));
    labels.push_back(pair_label(x, "b"));
    rel.emplace_back(pair_label(x, "a"), pair_label(x, "b"));
  }
  for (const auto& [x, y] : p.relations()) {
    rel.emplace_back(pair_label(x, "a"), pair_label(y, "a"));
    rel.emplace_back(pair_label(x, "b"), pair_label(y, "b"));
    rel.emplace_back(pair_label(x, "a"), pair_label(y, "b"));
  }
  return Poset(std::move(labels), rel);
}

/// Comparability graph.
inline Graph comp(const Poset& p) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : p.relations()) edges.push_back(make_edge(a, b));
  return Graph(p.labels(), edges);
}

/// Complete subgraphs of `g` ordered by inclusion, bracket-labelled.
inline Poset clique_poset(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  auto cliques = clique_sets(g, CliqueMode::All, cap);
  LabelSet labels;
  for (const auto& c : cliques) labels.push_back(bracket_label(g.to_labels(c)));
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = 0; j < cliques.size(); ++j)
      if (cliques[i].is_proper_subset_of(cliques[j])) rel.emplace_back(labels[i], labels[j]);
  return Poset(std::move(labels), rel);
}

/// Chains of `p` as simplices.
inline SimplicialComplex order_complex(const Poset& p) { return delta_g(comp(p)); }

/// Simplices of `k` ordered by inclusion, bracket-labelled.
inline Poset face_poset(const SimplicialComplex& k) {
  std::vector<Simplex> all(k.simplices().begin(), k.simplices().end());
  LabelSet labels;
  for (const auto& s : all) labels.push_back(bracket_label(s));
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      if (all[i].size() < all[j].size() && is_face_of(all[i], all[j])) rel.emplace_back(labels[i], labels[j]);
  return Poset(std::move(labels), rel);
}

/// Nonempty chains under inclusion, bracket-labelled.
inline Poset bd_poset(const Poset& p) {
  std::vector<LabelSet> chains;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    chains.push_back(normalized(p.to_labels([&] {
      VertexSet s(p.size());
      for (auto i : chain) s.set(i);
      return s;
    }())));
    for_each_member(p.above(last), [&](std::size_t j) {
      chain.push_back(j);
      self(self, j);
      chain.pop_back();
    });
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    chain = {i};
    extend(extend, i);
  }
  LabelSet labels;
  for (const auto& c : chains) labels.push_back(bracket_label(c));
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = 0; j < chains.size(); ++j)
      if (chains[i].size() < chains[j].size() && is_face_of(chains[i], chains[j])) rel.emplace_back(labels[i], labels[j]);
  return Poset(std::move(labels), rel);
}

inline Poset chain_poset(const LabelSet& labels) {
  std::vector<Relation> rel;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) rel.emplace_back(labels[i], labels[i + 1]);
  return Poset(labels, rel);
}

inline Poset antichain_poset(const LabelSet& labels) { return Poset(labels, {}); }

// ---------------------------------------------------------------------------
// Text format: `p <label>` declares an element, `< <a> <b>` a cover a < b.
// Output lists elements then Hasse covers, both sorted.

inline std::string to_text(const Poset& p) {
  std::string out;
  for (const auto& l : p.labels()) out += "p " + l + "\n";
  for (const auto& [a, b] : p.covers()) out += "< " + a + " " + b + "\n";
  return out;
}

inline Poset parse_poset(std::string_view text) {
  LabelSet elements;
  std::set<Label> seen;
  std::vector<Relation> rel;
  std::set<Relation> seen_rel;
  std::vector<std::size_t> rel_line;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tok = detail::tokenize(line);
    if (tok.empty()) return;
    if (tok[0] == "p") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'p <label>'");
      if (!valid_label(tok[1])) throw ParseError(lineno, "invalid label '" + tok[1] + "'");
      if (!seen.insert(tok[1]).second) throw ParseError(lineno, "duplicate element '" + tok[1] + "'");
      elements.push_back(tok[1]);
    } else if (tok[0] == "<") {
      if (tok.size() != 3) throw ParseError(lineno, "expected '< <a> <b>'");
      if (tok[1] == tok[2]) throw ParseError(lineno, "element '" + tok[1] + "' below itself");
      if (!seen_rel.insert({tok[1], tok[2]}).second) throw ParseError(lineno, "duplicate relation");
      rel.emplace_back(tok[1], tok[2]);
      rel_line.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  });
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (const auto& end : {rel[i].first, rel[i].second})
      if (!seen.count(end)) throw ParseError(rel_line[i], "undeclared element '" + end + "'");
  try {
    return Poset(std::move(elements), rel);
  } catch (const InvalidStructure& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace flagsh

#include <gtest/gtest.h>

#include "flagsh/corpus.hpp"
#include "flagsh/identities.hpp"
#include "flagsh/poset.hpp"
#include "flagsh/random.hpp"
#include "flagsh/weak_points.hpp"
#include "oracles.hpp"

using namespace flagsh;

namespace {

// Two minima below two maxima, all four relations: not dismantlable.
Poset crown() { return Poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}); }

}  // namespace

TEST(Poset, TransitiveClosure) {
  auto p = chain_poset({"a", "b", "c"});
  EXPECT_TRUE(p.less("a", "c"));
  EXPECT_FALSE(p.less("c", "a"));
  EXPECT_EQ(p.relations().size(), 3u);
  EXPECT_EQ(p.covers().size(), 2u);
}

TEST(Poset, RejectsCycles) {
  EXPECT_THROW(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidStructure);
  EXPECT_THROW(Poset({"a"}, {{"a", "a"}}), InvalidStructure);
}

TEST(Poset, UpAndDownSets) {
  auto p = crown();
  EXPECT_EQ(down_set(p, "c").labels(), (LabelSet{"a", "b"}));
  EXPECT_EQ(up_set(p, "a").labels(), (LabelSet{"c", "d"}));
}

TEST(Poset, AddElementValidates) {
  auto p = chain_poset({"a", "b"});
  auto q = add_element(p, "m", {"a"}, {"b"});
  EXPECT_TRUE(q.less("a", "m"));
  EXPECT_THROW(add_element(p, "m", {"b"}, {"a"}), Error);
}

TEST(Poset, IrreduciblePointsAndDismantling) {
  EXPECT_TRUE(irreducible_points(crown()).empty());
  EXPECT_FALSE(is_dismantlable_poset(crown()).dismantlable);
  EXPECT_TRUE(is_dismantlable_poset(chain_poset({"a", "b", "c"})).dismantlable);
  EXPECT_FALSE(is_dismantlable_poset(antichain_poset({"a", "b"})).dismantlable);
  EXPECT_THROW(is_dismantlable_poset(Poset{}), PreconditionError);
}

TEST(Poset, GreedyMatchesExhaustiveSearch) {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    auto p = random_poset(rng, uniform_size(rng, 1, 8), random_density(rng));
    auto r = is_dismantlable_poset(p);
    EXPECT_EQ(r.dismantlable, oracle::poset_dismantlable(p)) << to_text(p);
    if (r.dismantlable) {
      EXPECT_TRUE(check_poset_dismantling(p, *r.order));
    }
    EXPECT_EQ(detail::exhaustive_poset_dismantlable(p), oracle::poset_dismantlable(p));
  }
}

TEST(Poset, ComparabilityDismantlableIffPosetDismantlable) {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poset(rng, uniform_size(rng, 1, 7), random_density(rng));
    EXPECT_EQ(is_dismantlable_poset(p).dismantlable, is_dismantlable(comp(p)).dismantlable) << to_text(p);
  }
}

TEST(Poset, WeakPointsThreeWays) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poset(rng, uniform_size(rng, 1, 6), random_density(rng));
    auto direct = weak_points(p);
    EXPECT_EQ(direct, weak_points_by_join(p));
    EXPECT_EQ(direct, s_dismantlable_vertices(comp(p)));
  }
}

TEST(Poset, JoinRenamesClashes) {
  auto j = join(chain_poset({"a", "b"}), antichain_poset({"a", "c"}));
  EXPECT_EQ(j.size(), 4u);
  EXPECT_TRUE(j.contains("a'"));
  EXPECT_TRUE(j.less("b", "a'"));
  EXPECT_TRUE(j.less("a", "c"));
}

TEST(Poset, ProductWithTwoChain) {
  auto p = product_with_two_chain(chain_poset({"x", "y"}));
  EXPECT_EQ(p.size(), 4u);
  EXPECT_TRUE(p.less("(x,a)", "(y,b)"));
  EXPECT_TRUE(p.less("(x,a)", "(x,b)"));
  EXPECT_FALSE(p.comparable(p.index("(x,b)"), p.index("(y,a)")));
}

TEST(Poset, CliquePosetAndFacePoset) {
  auto k3 = complete_graph({"a", "b", "c"});
  auto c = clique_poset(k3);
  EXPECT_EQ(c.size(), 7u);
  EXPECT_TRUE(c.less("[a]", "[a,b,c]"));
  EXPECT_EQ(c, face_poset(delta_g(k3)));
}

TEST(Poset, OrderComplexIsChains) {
  Rng rng(44);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poset(rng, uniform_size(rng, 1, 6), random_density(rng));
    auto k = order_complex(p);
    std::set<std::vector<std::string>> got(k.simplices().begin(), k.simplices().end());
    EXPECT_EQ(got, oracle::chains(p));
    EXPECT_EQ(bd_poset(p).size(), oracle::chains(p).size());
  }
}

TEST(Poset, TextRoundTrip) {
  Rng rng(45);
  for (int i = 0; i < 30; ++i) {
    auto p = random_poset(rng, uniform_size(rng, 0, 7), random_density(rng));
    EXPECT_EQ(parse_poset(to_text(p)), p);
  }
  EXPECT_THROW(parse_poset("p a\np b\n< a b\n< b a\n"), Error);
  EXPECT_THROW(parse_poset("p a\n< a z\n"), ParseError);
}

TEST(WeakPoints, RemovalWitness) {
  auto p = crown();
  // No point of the crown is weak: each side is empty or a 2-antichain.
  EXPECT_FALSE(weak_point_removal(p, "a").has_value());
  auto q = add_element(p, "t", {"a"}, {});
  auto m = weak_point_removal(q, "t");
  ASSERT_TRUE(m.has_value());
  PosetCertificate cert{q, {*m}, p};
  EXPECT_TRUE(check_poset_certificate(cert));
}

TEST(WeakPoints, CascadeOnCliquePoset) {
  auto g1 = corpus::g1_graph();
  for (const auto& v : s_dismantlable_vertices(g1)) {
    auto cert = realize_weak_point_cascade(g1, v);
    EXPECT_TRUE(check_poset_certificate(cert));
    EXPECT_EQ(cert.end, clique_poset(delete_vertex(g1, v)));
  }
  EXPECT_THROW(realize_weak_point_cascade(cycle_graph({"a", "b", "c", "d"}), "a"), PreconditionError);
}

TEST(WeakPoints, CertificateRejectsNonWeakPoint) {
  auto p = crown();
  PosetMove m{PosetMoveKind::RemoveWeakPoint, "a", {}, {}, Side::Above, {}};
  EXPECT_FALSE(check_poset_certificate({p, {m}, delete_element(p, "a")}));
}

#include <gtest/gtest.h>

#include "algf/error.hpp"
#include "corpus.hpp"

namespace algf {
namespace {

using test::zn;

TEST(Union, Counts) {
  const auto u = disjoint_union_almost(zn(2, "a"), zn(3, "b"));
  EXPECT_EQ(u.kind(), StructureKind::almost_groupoid);
  EXPECT_EQ(u.size(), 5u);
  EXPECT_EQ(u.units().size(), 2u);
  EXPECT_TRUE(verify_almost_groupoid(u).passed());
  EXPECT_FALSE(u.lookup_product(u.index_of("a1"), u.index_of("b1")));
  EXPECT_THROW(disjoint_union_almost(zn(2), zn(3)), Error);
}

TEST(Direct, Examples) {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  const auto p = direct_product_almost(z2, z3);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.label(1 * 3 + 2), "(1,2)");
  EXPECT_EQ(p.label(p.entry(p.index_of("(1,2)"), p.index_of("(1,2)"))),
            "(0,1)");
  EXPECT_TRUE(are_isomorphic(p, zn(6)));

  const auto q = direct_product_almost(b2_zn_almost_groupoid(2),
                                       null_almost_groupoid({"u", "v"}));
  EXPECT_EQ(q.size(), 8u);
  EXPECT_EQ(q.units().size(), 4u);
  EXPECT_TRUE(verify_almost_groupoid(q).passed());
  EXPECT_FALSE(q.lookup_product(q.index_of("((0,1),u)"),
                                q.index_of("((0,1),v)")));
}

TEST(Action, TrivialAndNegation) {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  EXPECT_TRUE(verify_action(z2, z3, trivial_action(z2, z3)).passed());
  const auto r = verify_action(z2, z3, test::negation_action(z2, z3));
  EXPECT_TRUE(r.passed());
  ASSERT_NE(r.find_note("axiom-3-every-unit"), nullptr);
  EXPECT_TRUE(r.find_note("axiom-3-every-unit")->passed);
}

TEST(Action, CollapseFailsAxiom3) {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  const auto collapse =
      make_action(z2, z3, [](ElementIndex, ElementIndex) { return 0u; });
  const auto r = verify_action(z2, z3, collapse);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->name, "action-axiom-3");
  ASSERT_TRUE(r.first_failure()->witness);
  EXPECT_EQ(r.first_failure()->witness->elements,
            (std::vector<std::string>{"1"}));
  try {
    semidirect_product(z2, z3, collapse);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::action_verification_failed);
  }
}

TEST(Action, NonAdditiveFailsAxiom2) {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  const auto bad = make_action(z2, z3, [](ElementIndex g, ElementIndex h) {
    return static_cast<ElementIndex>(g == 1 && h == 1 ? 2 : h);
  });
  const auto r = verify_action(z2, z3, bad);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("action-axiom-2")->passed);
}

TEST(Action, MapNotTotal) {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  AlmostAction a{3, {0, 1}};
  EXPECT_THROW(verify_action(z2, z3, a), Error);
  AlmostAction b{3, {0, 1, 2, 0, 1, 7}};
  EXPECT_THROW(verify_action(z2, z3, b), Error);
}

TEST(Semidirect, TrivialActionIsDirectProduct) {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  EXPECT_EQ(semidirect_product(z2, z3, trivial_action(z2, z3)),
            direct_product_almost(z2, z3));
  const auto b = b2_zn_almost_groupoid(2);
  EXPECT_EQ(semidirect_product(b, z2, trivial_action(b, z2)),
            direct_product_almost(b, z2));
}

TEST(Semidirect, NegationGivesS3) {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  const auto s = semidirect_product(z2, z3, test::negation_action(z2, z3));
  EXPECT_TRUE(verify_almost_groupoid(s).passed());
  ASSERT_EQ(s.units().size(), 1u);
  EXPECT_FALSE(is_commutative_almost(s));
  const auto g = isotropy_group_almost(s, s.units()[0]);
  EXPECT_TRUE(are_isomorphic(g, test::s3_table()));
  EXPECT_FALSE(are_isomorphic(g, zn(6)));
}

TEST(Semidirect, InverseFormula) {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  const auto act = test::negation_action(z2, z3);
  const auto s = semidirect_product(z2, z3, act);
  for (ElementIndex g = 0; g < 2; ++g) {
    for (ElementIndex h = 0; h < 3; ++h) {
      const ElementIndex x = g * 3 + h;
      const ElementIndex ig = z2.inverse(g);
      EXPECT_EQ(s.inverse(x), ig * 3 + act(ig, z3.inverse(h)));
      EXPECT_EQ(s.entry(x, s.inverse(x)), s.source(x));
      EXPECT_EQ(s.entry(s.inverse(x), x), s.source(x));
    }
  }
}

TEST(Semidirect, OtherBracketingIsNotAssociative) {
  // (g1,h1)(g2,h2) = (g1 g2, h1 (g2 . h2)) on the same carrier.
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  const auto act = test::negation_action(z2, z3);
  RawTable raw = semidirect_product(z2, z3, act).raw();
  for (ElementIndex g1 = 0; g1 < 2; ++g1) {
    for (ElementIndex h1 = 0; h1 < 3; ++h1) {
      for (ElementIndex g2 = 0; g2 < 2; ++g2) {
        for (ElementIndex h2 = 0; h2 < 3; ++h2) {
          raw.product[(g1 * 3 + h1) * 6 + g2 * 3 + h2] =
              z2.entry(g1, g2) * 3 + z3.entry(h1, act(g2, h2));
        }
      }
    }
  }
  const auto r = verify_almost_groupoid(build_finite_table(raw));
  EXPECT_FALSE(r.find("AG1-associativity")->passed);
}

TEST(Semidirect, MultiUnitFactors) {
  const auto b = b2_zn_almost_groupoid(2);
  const auto z3 = zn(3);
  const auto act = make_action(b, z3, [&](ElementIndex g, ElementIndex h) {
    return static_cast<ElementIndex>(g % 2 == 0 ? h : (3 - h) % 3);
  });
  ASSERT_TRUE(verify_action(b, z3, act).passed());
  const auto s = semidirect_product(b, z3, act);
  EXPECT_EQ(s.size(), 12u);
  EXPECT_EQ(s.units().size(), 2u);
  EXPECT_TRUE(verify_almost_groupoid(s).passed());
  EXPECT_TRUE(derived_almost_properties(s).passed());
  for (ElementIndex u : s.units()) {
    EXPECT_TRUE(are_isomorphic(isotropy_group_almost(s, u), test::s3_table()));
  }
}

}  // namespace
}  // namespace algf

#include <gtest/gtest.h>

#include "algf/error.hpp"
#include "corpus.hpp"

namespace algf {
namespace {

ElementIndex at(const FiniteStructureTable& t, std::string_view label) {
  return t.index_of(label);
}

TEST(VerifyAlmost, B2Z4) {
  const auto t = b2_zn_almost_groupoid(4);
  EXPECT_EQ(t.size(), 8u);
  EXPECT_EQ(t.units().size(), 2u);
  EXPECT_TRUE(verify_almost_groupoid(t).passed());
}

TEST(VerifyAlmost, NullAndGroups) {
  const auto null3 = null_almost_groupoid({"u", "v", "w"});
  EXPECT_TRUE(verify_almost_groupoid(null3).passed());
  EXPECT_EQ(null3.units().size(), 3u);
  EXPECT_TRUE(verify_almost_groupoid(test::zn(5)).passed());
  EXPECT_THROW(null_almost_groupoid({}), Error);
}

TEST(VerifyAlmost, PairGroupoidIsNotAlmost) {
  const auto r = verify_almost_groupoid(pair_groupoid(test::points(2)));
  ASSERT_FALSE(r.passed());
  const Check* c = r.first_failure();
  EXPECT_EQ(c->name, "product-outside-composable");
  ASSERT_TRUE(c->witness);
  EXPECT_EQ(c->witness->elements,
            (std::vector<std::string>{"(1,2)", "(2,1)"}));
}

TEST(VerifyAlmost, WholeCorpus) {
  for (const auto& [name, t] : test::almost_corpus()) {
    EXPECT_TRUE(verify_almost_groupoid(t).passed())
        << name << ": " << verify_almost_groupoid(t).first_failure()->name;
    const auto d = derived_almost_properties(t);
    EXPECT_TRUE(d.passed()) << name << ": " << d.first_failure()->name;
    // With source = target = theta the same table is a groupoid.
    EXPECT_TRUE(verify_groupoid(as_groupoid(t)).passed()) << name;
  }
}

TEST(VerifyAlmost, BrokenTables) {
  RawTable raw = b2_zn_almost_groupoid(3).raw();
  raw.inverse[1] = 1;
  const auto r = verify_almost_groupoid(build_finite_table(raw));
  EXPECT_FALSE(r.find("AG3-inverses")->passed);

  raw = test::zn(4).raw();
  raw.product[1 * 4 + 2] = 0;
  EXPECT_FALSE(verify_almost_groupoid(build_finite_table(raw))
                   .find("AG1-associativity")
                   ->passed);
}

TEST(B2Zn, Examples) {
  const auto t = b2_zn_almost_groupoid(6);
  EXPECT_EQ(t.size(), 12u);
  const ElementIndex x = at(t, "(1,5)");
  EXPECT_EQ(t.label(t.inverse(x)), "(1,1)");
  EXPECT_EQ(t.label(t.source(x)), "(1,0)");
  const ElementIndex y = at(t, "(1,2)");
  EXPECT_EQ(t.label(t.entry(y, y)), "(1,4)");
  EXPECT_EQ(t.label(t.entry(t.entry(y, y), y)), "(1,0)");
  EXPECT_FALSE(t.lookup_product(x, at(t, "(0,1)")));
  try {
    b2_zn_almost_groupoid(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::nonpositive_n);
  }
}

TEST(B2Zn, IsotropyIsCyclic) {
  const auto t = b2_zn_almost_groupoid(6);
  for (ElementIndex u : t.units()) {
    const auto g = isotropy_group_almost(t, u);
    EXPECT_EQ(g.size(), 6u);
    EXPECT_TRUE(are_isomorphic(g, test::zn(6)));
    EXPECT_FALSE(are_isomorphic(g, test::s3_table()));
  }
  EXPECT_THROW(isotropy_group_almost(t, at(t, "(0,1)")), Error);
}

TEST(Commutativity, Examples) {
  EXPECT_TRUE(is_commutative_almost(b2_zn_almost_groupoid(4)));
  EXPECT_TRUE(is_commutative_almost(null_almost_groupoid({"a", "b"})));
  const auto s3 = test::s3_table();
  EXPECT_FALSE(is_commutative_almost(s3));
  const auto w = commutativity_witness(s3);
  ASSERT_TRUE(w);
  ASSERT_EQ(w->indices.size(), 2u);
  EXPECT_NE(s3.entry(w->indices[0], w->indices[1]),
            s3.entry(w->indices[1], w->indices[0]));
}

TEST(Classify, Examples) {
  const auto t = b2_zn_almost_groupoid(4);
  // The units form a normal almost subgroupoid.
  EXPECT_EQ(classify_almost_substructure(t, t.units(), t.units()).kind,
            AlmostSubstructureClass::normal);
  // One fiber's subgroup of order 2.
  const std::vector<ElementIndex> half = {at(t, "(0,0)"), at(t, "(0,2)")};
  const auto c = classify_almost_substructure(t, half, {at(t, "(0,0)")});
  EXPECT_EQ(c.kind, AlmostSubstructureClass::sub);
  ASSERT_TRUE(c.witness);
  // Not closed under products.
  const auto n = classify_almost_substructure(
      t, {at(t, "(0,0)"), at(t, "(0,1)")}, {at(t, "(0,0)")});
  EXPECT_EQ(n.kind, AlmostSubstructureClass::not_sub);
  // Wide but not normal inside S3 x null1.
  const auto s3 = test::s3_table();
  const auto w = classify_almost_substructure(
      s3, {at(s3, "s012"), at(s3, "s021")}, s3.units());
  EXPECT_EQ(w.kind, AlmostSubstructureClass::wide);
  EXPECT_EQ(to_string(AlmostSubstructureClass::not_sub), "not-sub");
  EXPECT_THROW(classify_almost_substructure(t, {}, {}), Error);
}

TEST(Morphism, ProjectionToZn) {
  const auto t = b2_zn_almost_groupoid(6);
  const auto z6 = test::zn(6);
  MorphismPair p;
  for (ElementIndex x = 0; x < t.size(); ++x) p.element_map.push_back(x % 6);
  p.unit_map.assign(t.units().size(), 0);
  const auto r = check_almost_morphism(t, z6, p);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(is_isomorphism(r));
}

TEST(Morphism, FiberSwapIsAnIsomorphism) {
  const auto t = b2_zn_almost_groupoid(3);
  std::vector<ElementIndex> swap(t.size());
  for (ElementIndex x = 0; x < t.size(); ++x) swap[x] = (x + 3) % 6;
  const auto r = check_almost_morphism(t, t, induced_pair(t, swap));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(is_isomorphism(r));
}

TEST(Morphism, NonMultiplicativeMap) {
  const auto z4 = test::zn(4);
  const auto z2 = test::zn(2);
  MorphismPair p{{0, 1, 1, 0}, {0}};
  EXPECT_FALSE(check_almost_morphism(z4, z2, p).passed());
}

TEST(Bridge, GroupoidWithEqualSourceAndTarget) {
  // A groupoid whose source equals its target is an almost groupoid.
  for (const auto& [name, g] : test::groupoid_corpus()) {
    if (g.source_map() != g.target_map()) continue;
    EXPECT_TRUE(verify_almost_groupoid(g).passed()) << name;
  }
  // Isotropy bundles of groupoids are almost groupoids.
  for (const auto& [name, g] : test::groupoid_corpus()) {
    const auto is = restrict_to(g, isotropy_bundle(g),
                                StructureKind::almost_groupoid);
    EXPECT_TRUE(verify_almost_groupoid(is).passed()) << name;
  }
}

}  // namespace
}  // namespace algf

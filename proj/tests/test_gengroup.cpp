#include <gtest/gtest.h>

#include "algf/error.hpp"
#include "corpus.hpp"

namespace algf {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

RationalMatrix tri(long a, long b, long c) {
  return RationalMatrix{{q(a), q(b), q(c)}, {q(0), q(1), q(0)},
                        {q(0), q(0), q(0)}};
}

const RationalMatrix kA1{{q(-1), q(1)}, {q(-2), q(-2)}};
const RationalMatrix kA2{{q(1), q(-2)}, {q(3), q(3)}};

TEST(SqrtDet, CalculationExercise) {
  const auto g = sqrtdet_generalized_group_rational();
  EXPECT_EQ(determinant(kA1), q(4));
  EXPECT_EQ(determinant(kA2), q(9));
  ASSERT_TRUE(g.contains(kA1));
  ASSERT_TRUE(g.contains(kA2));
  EXPECT_EQ(g.multiply(kA1, kA2),
            (RationalMatrix{{q(2), q(-4)}, {q(6), q(6)}}));
  EXPECT_EQ(g.multiply(kA2, kA1),
            (RationalMatrix{{q(-3), q(3)}, {q(-6), q(-6)}}));
  EXPECT_EQ(g.source(kA1), q(1, 2) * kA1);
  EXPECT_EQ(g.source(kA2), q(1, 3) * kA2);
  EXPECT_EQ(g.inverse(kA1), q(1, 4) * kA1);
  EXPECT_EQ(g.inverse(kA2), q(1, 9) * kA2);
}

TEST(SqrtDet, Membership) {
  const auto g = sqrtdet_generalized_group_rational();
  EXPECT_FALSE(g.contains(RationalMatrix{{q(1), q(0)}, {q(0), q(2)}}));
  EXPECT_FALSE(g.contains(RationalMatrix{{q(-1), q(0)}, {q(0), q(1)}}));
  EXPECT_TRUE(g.contains(RationalMatrix::identity(2)));
}

TEST(SqrtDet, SampledAxioms) {
  const auto g = sqrtdet_generalized_group_rational();
  const auto r = verify_generalized_group(g, SampleOptions{500, 0});
  EXPECT_TRUE(r.passed());
  EXPECT_NE(r.find_note("identity-uniqueness-trusted"), nullptr);
  EXPECT_TRUE(derived_gg_properties(g, SampleOptions{300, 1}).passed());
  EXPECT_TRUE(verify_generalized_group(sqrtdet_generalized_group_float(),
                                       SampleOptions{500, 2})
                  .passed());
}

TEST(Triangular, Products) {
  const auto m = triangular_generalized_group();
  const auto c = tri(1, -1, 2);
  const auto d = tri(2, 1, -1);
  ASSERT_TRUE(m.contains(c));
  ASSERT_TRUE(m.contains(d));
  EXPECT_EQ(m.multiply(c, d), tri(2, 0, -1));
  EXPECT_NE(m.multiply(c, d), m.multiply(d, c));
  // The entries the matrix product actually yields.
  EXPECT_EQ(m.multiply(d, c), tri(2, -1, 4));
}

TEST(Triangular, IdentityAndInverse) {
  const auto m = triangular_generalized_group();
  const auto a = tri(2, 3, 5);
  const RationalMatrix e{{q(1), q(0), q(5, 2)}, {q(0), q(1), q(0)},
                         {q(0), q(0), q(0)}};
  const RationalMatrix inv{{q(1, 2), q(-3, 2), q(5, 4)}, {q(0), q(1), q(0)},
                           {q(0), q(0), q(0)}};
  EXPECT_EQ(m.source(a), e);
  EXPECT_EQ(m.inverse(a), inv);
  EXPECT_EQ(m.multiply(a, m.inverse(a)), e);
  EXPECT_EQ(m.multiply(m.inverse(a), a), e);
  EXPECT_FALSE(m.contains(tri(0, 1, 1)));
}

TEST(Triangular, SampledChecks) {
  const auto m = triangular_generalized_group();
  EXPECT_TRUE(verify_generalized_group(m, SampleOptions{500, 0}).passed());
  EXPECT_TRUE(derived_gg_properties(m, SampleOptions{500, 0}).passed());
  EXPECT_TRUE(is_normal_gg(m, SampleOptions{100, 0}).holds);
  EXPECT_TRUE(check_gg_homomorphism(m, nonzero_rationals(),
                                    triangular_corner_morphism(),
                                    SampleOptions{200, 0})
                  .passed());
}

TEST(SqrtDet, IsNormal) {
  // e(A (.) B) = e(B) = e(A) (.) e(B) since det e(A) = 1.
  const auto g = sqrtdet_generalized_group_rational();
  EXPECT_TRUE(is_normal_gg(g, SampleOptions{200, 0}).holds);
  EXPECT_EQ(g.source(g.multiply(kA1, kA2)),
            g.multiply(g.source(kA1), g.source(kA2)));
}

TEST(Triangular, BrokenIdentityIsNotNormal) {
  auto m = triangular_generalized_group();
  m.source = [](const RationalMatrix& a) { return a * a; };
  const auto r = is_normal_gg(m, SampleOptions{50, 0});
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
}

TEST(FiniteGG, CorpusPasses) {
  for (const auto& [name, t] : test::gengroup_corpus()) {
    EXPECT_TRUE(verify_generalized_group(t).passed()) << name;
    EXPECT_TRUE(derived_gg_properties(t).passed()) << name;
  }
}

FiniteStructureTable max_semilattice() {
  RawTable raw;
  raw.kind = StructureKind::generalized_group;
  raw.labels = {"0", "1"};
  raw.source = raw.target = raw.inverse = {0, 1};
  raw.product = {0, 1, 1, 1};
  return build_finite_table(raw);
}

TEST(FiniteGG, TwoLocalIdentitiesFailUniqueness) {
  const auto t = max_semilattice();
  const auto r = verify_generalized_group(t);
  EXPECT_FALSE(r.passed());
  const Check* c = r.find("identity-uniqueness");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  ASSERT_TRUE(c->witness);
  EXPECT_EQ(c->witness->elements.front(), "1");
}

TEST(FiniteGG, ComponentSubgroup) {
  const auto right_zero = [] {
    RawTable raw;
    raw.kind = StructureKind::generalized_group;
    raw.labels = {"a", "b"};
    raw.source = raw.target = raw.inverse = {0, 1};
    raw.product = {0, 1, 0, 1};
    return build_finite_table(raw);
  }();
  ASSERT_TRUE(verify_generalized_group(right_zero).passed());
  const auto g = component_subgroup(right_zero, 1);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(verify_group(reinterpret(g, StructureKind::groupoid)).passed());

  const auto z4 = cyclic_group(4, StructureKind::generalized_group);
  EXPECT_EQ(component_subgroup(z4, 2).size(), 4u);
  EXPECT_THROW(component_subgroup(z4, 9), Error);
}

TEST(FiniteGG, Normality) {
  EXPECT_TRUE(is_normal_gg(cyclic_group(3, StructureKind::generalized_group))
                  .holds);
  // Right-zero band: e(ab) = e(b) = b and e(a)e(b) = ab = b.
  RawTable raw;
  raw.kind = StructureKind::generalized_group;
  raw.labels = {"a", "b"};
  raw.source = raw.target = raw.inverse = {0, 1};
  raw.product = {0, 1, 0, 1};
  EXPECT_TRUE(is_normal_gg(build_finite_table(raw)).holds);
}

TEST(FiniteGG, Subgroups) {
  const auto z4 = cyclic_group(4, StructureKind::generalized_group);
  EXPECT_TRUE(check_generalized_subgroup(z4, {0, 2}).holds);
  const auto bad = check_generalized_subgroup(z4, {0, 1});
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness);
  try {
    check_generalized_subgroup(z4, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_subset);
  }
}

TEST(FiniteGG, Homomorphisms) {
  const auto z4 = cyclic_group(4, StructureKind::generalized_group);
  const auto z2 = cyclic_group(2, StructureKind::generalized_group);
  const std::vector<ElementIndex> mod2 = {0, 1, 0, 1};
  EXPECT_TRUE(check_gg_homomorphism(z4, z2, mod2).passed());
  const std::vector<ElementIndex> bad = {0, 1, 1, 1};
  EXPECT_FALSE(check_gg_homomorphism(z4, z2, bad).passed());
  EXPECT_THROW(check_gg_homomorphism(z4, z2, {0, 1}), Error);

  // Images and preimages of subgroups are subgroups.
  const auto img = image_of(mod2, {0, 2});
  EXPECT_EQ(img, (std::vector<ElementIndex>{0}));
  EXPECT_TRUE(check_generalized_subgroup(z2, img).holds);
  const auto pre = preimage_of(mod2, {0}, 2);
  EXPECT_EQ(pre, (std::vector<ElementIndex>{0, 2}));
  EXPECT_TRUE(check_generalized_subgroup(z4, pre).holds);
}

TEST(FiniteGG, CommutativeMeansGroup) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_generalized_groups(n)) {
      bool commutative = true;
      for (ElementIndex a = 0; a < n; ++a) {
        for (ElementIndex b = 0; b < n; ++b) {
          commutative = commutative && t.entry(a, b) == t.entry(b, a);
        }
      }
      if (!commutative) continue;
      EXPECT_EQ(t.units().size(), 1u);
      EXPECT_TRUE(verify_group(reinterpret(t, StructureKind::groupoid)).passed());
    }
  }
}

}  // namespace
}  // namespace algf

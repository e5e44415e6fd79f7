#include <gtest/gtest.h>

#include "algf/error.hpp"
#include "corpus.hpp"

namespace algf {
namespace {

using test::points;

ElementIndex at(const FiniteStructureTable& t, std::string_view label) {
  return t.index_of(label);
}

TEST(VerifyGroupoid, PairGroupoidPasses) {
  const auto r = verify_groupoid(pair_groupoid(points(3)));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks().size(), 9u);
}

TEST(VerifyGroupoid, Rstar2Sampled) {
  const auto r = verify_groupoid(rstar2_groupoid(make_rational(2)),
                                 SampleOptions{1000, 0});
  EXPECT_TRUE(r.passed());
}

TEST(VerifyGroupoid, MutatedInverseFailsAxiom3) {
  RawTable raw = pair_groupoid(points(3)).raw();
  for (ElementIndex x = 0; x < raw.inverse.size(); ++x) raw.inverse[x] = x;
  const auto t = build_finite_table(raw);
  const auto r = verify_groupoid(t);
  ASSERT_FALSE(r.passed());
  const Check* c = r.first_failure();
  EXPECT_EQ(c->name, "inverses");
  ASSERT_TRUE(c->witness);
  EXPECT_EQ(c->witness->elements.front(), "(1,2)");
}

TEST(VerifyGroupoid, NonAssociativeTable) {
  // Z3 with one product entry changed.
  RawTable raw = test::zn_groupoid(3).raw();
  raw.product[1 * 3 + 1] = 0;
  const auto r = verify_groupoid(build_finite_table(raw));
  ASSERT_FALSE(r.passed());
  EXPECT_FALSE(r.find("associativity")->passed);
}

TEST(VerifyGroupoid, RuleFailureCarriesWitness) {
  auto s = rstar2_groupoid(make_rational(2));
  s.multiply = [](const RationalMatrix& x, const RationalMatrix&) { return x; };
  const auto r = verify_groupoid(s, SampleOptions{50, 1});
  ASSERT_FALSE(r.passed());
  ASSERT_TRUE(r.first_failure()->witness);
  EXPECT_FALSE(r.first_failure()->witness->elements.empty());
}

TEST(DerivedProperties, WholeCorpus) {
  for (const auto& [name, t] : test::groupoid_corpus()) {
    ASSERT_TRUE(verify_groupoid(t).passed()) << name;
    const auto r = derived_property_report(t);
    EXPECT_TRUE(r.passed()) << name << ": "
                            << (r.first_failure() ? r.first_failure()->name
                                                  : "");
  }
}

TEST(DerivedProperties, InverseOfProductInPair2) {
  const auto t = pair_groupoid(points(2));
  const ElementIndex x = at(t, "(1,2)");
  const ElementIndex y = at(t, "(2,1)");
  const ElementIndex xy = t.entry(x, y);
  EXPECT_EQ(t.label(xy), "(1,1)");
  EXPECT_EQ(t.inverse(xy), t.entry(t.inverse(y), t.inverse(x)));
}

TEST(Transitivity, Examples) {
  EXPECT_TRUE(is_transitive(pair_groupoid(points(3))).transitive);

  const auto u = disjoint_union_groupoids(
      {test::zn_groupoid(2, "a"), test::zn_groupoid(3, "b")});
  const auto r = is_transitive(u);
  EXPECT_FALSE(r.transitive);
  ASSERT_TRUE(r.missing);
  EXPECT_EQ(u.label(r.missing->first), "a0");
  EXPECT_EQ(u.label(r.missing->second), "b0");

  const auto b = as_groupoid(b2_zn_almost_groupoid(4));
  const auto rb = is_transitive(b);
  EXPECT_FALSE(rb.transitive);
  EXPECT_EQ(b.label(rb.missing->first), "(0,0)");
  EXPECT_EQ(b.label(rb.missing->second), "(1,0)");
}

TEST(Transitivity, RuleStructureUnsupported) {
  try {
    is_transitive(rstar2_groupoid(make_rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported_for_rule_structure);
  }
}

TEST(Isotropy, Examples) {
  const auto p = pair_groupoid(points(3));
  EXPECT_EQ(isotropy_group(p, at(p, "(1,1)")).size(), 1u);

  const auto b = as_groupoid(b2_zn_almost_groupoid(6));
  const auto g = isotropy_group(b, at(b, "(0,0)"));
  EXPECT_EQ(g.size(), 6u);
  EXPECT_TRUE(verify_group(g).passed());
  EXPECT_TRUE(are_isomorphic(g, test::zn_groupoid(6)));

  const auto s = symmetric_groupoid(points(2)).table;
  const auto sym = isotropy_group(s, at(s, "{1->1,2->2}"));
  EXPECT_EQ(sym.size(), 2u);
  EXPECT_TRUE(verify_group(sym).passed());

  EXPECT_THROW(isotropy_group(p, at(p, "(1,2)")), Error);
}

TEST(Isotropy, GroupsInWholeCorpus) {
  for (const auto& [name, t] : test::groupoid_corpus()) {
    for (ElementIndex u : t.units()) {
      EXPECT_TRUE(verify_group(isotropy_group(t, u)).passed()) << name;
    }
    // Gamma(source x) and Gamma(target x) are isomorphic.
    for (ElementIndex x = 0; x < t.size(); ++x) {
      EXPECT_TRUE(are_isomorphic(isotropy_group(t, t.source(x)),
                                 isotropy_group(t, t.target(x))))
          << name << " " << t.label(x);
    }
    if (is_transitive(t).transitive) {
      for (ElementIndex u : t.units()) {
        for (ElementIndex v : t.units()) {
          EXPECT_TRUE(are_isomorphic(isotropy_group(t, u),
                                     isotropy_group(t, v)))
              << name;
        }
      }
    }
  }
}

TEST(IsotropyBundle, Examples) {
  const auto p = pair_groupoid(points(3));
  EXPECT_EQ(isotropy_bundle(p), p.units());

  const auto b = as_groupoid(b2_zn_almost_groupoid(3));
  EXPECT_EQ(isotropy_bundle(b).size(), b.size());

  const auto u = disjoint_union_groupoids(
      {test::zn_groupoid(2, "a"), test::zn_groupoid(3, "b")});
  EXPECT_EQ(isotropy_bundle(u).size(), 5u);
  EXPECT_EQ(classify_substructure(u, isotropy_bundle(u), u.units()).kind,
            SubstructureClass::normal);
}

TEST(IsotropyBundle, NormalInWholeCorpus) {
  for (const auto& [name, t] : test::groupoid_corpus()) {
    EXPECT_EQ(classify_substructure(t, isotropy_bundle(t), t.units()).kind,
              SubstructureClass::normal)
        << name;
    EXPECT_EQ(classify_substructure(t, t.units(), t.units()).kind,
              SubstructureClass::normal)
        << name;
  }
}

TEST(Classify, NotClosed) {
  const auto t = disjoint_union_groupoids(
      {test::zn_groupoid(4, "a"), test::zn_groupoid(2, "b")});
  const auto c = classify_substructure(t, {at(t, "a1")}, {at(t, "a0")});
  EXPECT_EQ(c.kind, SubstructureClass::not_closed);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->elements, (std::vector<std::string>{"a1", "a1"}));
}

TEST(Classify, SubgroupoidWideNormal) {
  const auto p = pair_groupoid(points(3));
  const std::vector<ElementIndex> k = {at(p, "(1,1)"), at(p, "(1,2)"),
                                       at(p, "(2,1)"), at(p, "(2,2)")};
  const auto c = classify_substructure(p, k, {at(p, "(1,1)"), at(p, "(2,2)")});
  EXPECT_EQ(c.kind, SubstructureClass::subgroupoid);
  ASSERT_TRUE(c.witness);

  // A non-normal subgroup of S3 is wide but not normal.
  const auto s3 = reinterpret(test::s3_table(), StructureKind::groupoid);
  const auto w = classify_substructure(s3, {at(s3, "s012"), at(s3, "s102")},
                                       s3.units());
  EXPECT_EQ(w.kind, SubstructureClass::wide);
  ASSERT_TRUE(w.witness);

  const auto n = classify_substructure(
      s3, {at(s3, "s012"), at(s3, "s120"), at(s3, "s201")}, s3.units());
  EXPECT_EQ(n.kind, SubstructureClass::normal);
  EXPECT_FALSE(n.witness);
  EXPECT_EQ(to_string(SubstructureClass::not_closed), "not-closed");
}

TEST(Classify, EmptySubset) {
  const auto p = pair_groupoid(points(2));
  try {
    classify_substructure(p, {}, p.units());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_subset);
  }
}

TEST(Morphism, Identity) {
  const auto p = pair_groupoid(points(3));
  std::vector<ElementIndex> id(p.size());
  for (ElementIndex x = 0; x < p.size(); ++x) id[x] = x;
  const auto r = check_groupoid_morphism(p, p, induced_pair(p, id));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(is_isomorphism(r));
}

TEST(Morphism, ConstantToNonUnitFailsCondition2) {
  const auto p = pair_groupoid(points(3));
  MorphismPair m;
  m.element_map.assign(p.size(), at(p, "(1,2)"));
  m.unit_map.assign(p.units().size(), at(p, "(1,1)"));
  const auto r = check_groupoid_morphism(p, p, m);
  EXPECT_FALSE(r.passed());
  const Check* c = r.find("morphism-units");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  ASSERT_TRUE(c->witness);
  EXPECT_EQ(c->witness->elements.front(), "(1,1)");
  EXPECT_FALSE(is_isomorphism(r));
}

TEST(Morphism, MapNotTotal) {
  const auto p = pair_groupoid(points(2));
  MorphismPair m;
  m.element_map = {0, 1};
  m.unit_map = {0, 3};
  try {
    check_groupoid_morphism(p, p, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::map_not_total);
  }
}

TEST(Morphism, DeterminantOnGeneralLinearGroupoid) {
  const auto r = check_groupoid_morphism(general_linear_groupoid(2),
                                         nonzero_reals(),
                                         determinant_morphism(),
                                         SampleOptions{500, 0});
  EXPECT_TRUE(r.passed());
  const auto g = check_groupoid_morphism(general_linear_group(2),
                                         nonzero_reals(),
                                         determinant_morphism(),
                                         SampleOptions{500, 4});
  EXPECT_TRUE(g.passed());
}

TEST(Morphism, TraceIsNotMultiplicative) {
  RuleMorphism<double, double> trace{
      "trace",
      [](const RealMatrix& a) {
        return RealMatrix{{a.rows() == 1 ? a(0, 0) : a(0, 0) + a(1, 1)}};
      },
      [](const RealMatrix&) { return RealMatrix{{1.0}}; }};
  const auto r = check_groupoid_morphism(general_linear_group(2),
                                         nonzero_reals(), trace,
                                         SampleOptions{100, 0});
  EXPECT_FALSE(r.passed());
}

TEST(PairGroupoid, Examples) {
  const auto one = pair_groupoid(points(1));
  EXPECT_EQ(one.size(), 1u);
  EXPECT_TRUE(verify_group(one).passed());

  const auto three = pair_groupoid(points(3));
  EXPECT_EQ(three.size(), 9u);
  EXPECT_EQ(three.units().size(), 3u);
  EXPECT_TRUE(is_transitive(three).transitive);
  for (ElementIndex u : three.units()) {
    EXPECT_EQ(isotropy_group(three, u).size(), 1u);
  }

  EXPECT_FALSE(verify_almost_groupoid(pair_groupoid(points(2))).passed());
  EXPECT_THROW(pair_groupoid({}), Error);
}

TEST(Rstar2, Examples) {
  const auto one = rstar2_groupoid(make_rational(1));
  const RationalMatrix x{{make_rational(3), make_rational(5)}};
  EXPECT_EQ(one.source(x), (RationalMatrix{{make_rational(3), make_rational(3)}}));
  EXPECT_EQ(one.target(x), (RationalMatrix{{make_rational(5), make_rational(5)}}));

  const auto two = rstar2_groupoid(make_rational(2));
  const RationalMatrix u{{make_rational(3), make_rational(6)}};
  EXPECT_EQ(two.source(u), u);
  EXPECT_EQ(two.target(u), u);

  const RationalMatrix a{{make_rational(1), make_rational(4)}};
  const RationalMatrix b{{make_rational(2), make_rational(10)}};
  ASSERT_TRUE(two.product(a, b));
  EXPECT_EQ(*two.product(a, b),
            (RationalMatrix{{make_rational(1), make_rational(10)}}));
  EXPECT_FALSE(two.product(b, a));

  try {
    rstar2_groupoid(make_rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_parameter);
  }
}

TEST(SymmetricGroupoid, Sizes) {
  EXPECT_EQ(symmetric_groupoid(points(1)).table.size(), 1u);
  EXPECT_EQ(symmetric_groupoid(points(2)).table.size(), 6u);
  EXPECT_EQ(symmetric_groupoid(points(3)).table.size(), 33u);
  EXPECT_EQ(symmetric_groupoid(points(4)).table.size(), 208u);
  try {
    symmetric_groupoid(points(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::carrier_too_large);
  }
}

TEST(SymmetricGroupoid, Certified) {
  for (int m = 1; m <= 3; ++m) {
    const auto s = symmetric_groupoid(points(m));
    EXPECT_TRUE(verify_groupoid(s.table).passed()) << m;
    EXPECT_TRUE(derived_property_report(s.table).passed()) << m;
    EXPECT_EQ(s.maps.size(), s.table.size());
  }
}

TEST(SymmetricGroupoid, CompositionLandsOnIdentity) {
  const auto s = symmetric_groupoid(points(2)).table;
  const ElementIndex f = at(s, "{1->2}");
  const ElementIndex g = at(s, "{2->1}");
  const auto fg = s.lookup_product(f, g);
  ASSERT_TRUE(fg);
  EXPECT_EQ(s.label(*fg), "{1->1}");
  EXPECT_TRUE(s.is_unit(*fg));
}

TEST(SymmetricGroupoid, Quasipermutation) {
  const Quasipermutation q{{1, -1, 0}};
  EXPECT_EQ(q.domain(), (std::vector<int>{0, 2}));
  EXPECT_EQ(q.range(), (std::vector<int>{0, 1}));
}

TEST(Cayley, Examples) {
  const auto one = left_translation_groupoid(pair_groupoid(points(1)));
  EXPECT_EQ(one.translations.size(), 1u);
  EXPECT_TRUE(one.report.passed());

  const auto two = left_translation_groupoid(pair_groupoid(points(2)));
  EXPECT_EQ(two.translations.size(), 4u);
  EXPECT_TRUE(two.report.find("phi-injective")->passed);
  EXPECT_TRUE(two.report.find("left-unit-law")->passed);
  EXPECT_TRUE(two.report.find("right-unit-law")->passed);
}

TEST(Cayley, WholeCorpus) {
  for (const auto& [name, t] : test::groupoid_corpus()) {
    const auto emb = left_translation_groupoid(t);
    EXPECT_TRUE(emb.report.passed())
        << name << ": " << emb.report.first_failure()->name;
    EXPECT_EQ(emb.translations.size(), t.size()) << name;
  }
}

TEST(Cayley, Errors) {
  try {
    left_translation_groupoid(pair_groupoid(points(3)), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::carrier_too_large);
  }
  RawTable raw = test::zn_groupoid(3).raw();
  raw.product[4] = 0;
  try {
    left_translation_groupoid(build_finite_table(raw));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_certified);
  }
}

TEST(DisjointUnion, Examples) {
  const auto u = disjoint_union_groupoids(
      {test::zn_groupoid(2, "a"), test::zn_groupoid(3, "b")});
  EXPECT_EQ(u.size(), 5u);
  EXPECT_EQ(u.units().size(), 2u);
  EXPECT_TRUE(verify_groupoid(u).passed());
  EXPECT_TRUE(are_isomorphic(isotropy_group(u, at(u, "a0")),
                             test::zn_groupoid(2)));
  EXPECT_TRUE(are_isomorphic(isotropy_group(u, at(u, "b0")),
                             test::zn_groupoid(3)));

  const auto p = pair_groupoid(points(2));
  EXPECT_EQ(disjoint_union_groupoids({p}), p);

  try {
    disjoint_union_groupoids({test::zn_groupoid(2), test::zn_groupoid(3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::label_collision);
  }
}

TEST(DisjointUnion, GeneralLinearGroupoidSampled) {
  EXPECT_TRUE(
      verify_groupoid(general_linear_groupoid(2), SampleOptions{500, 0})
          .passed());
  EXPECT_TRUE(
      verify_groupoid(general_linear_groupoid(3), SampleOptions{200, 1})
          .passed());
}

}  // namespace
}  // namespace algf

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "algf/error.hpp"
#include "corpus.hpp"

namespace algf {
namespace {

using test::zn;

/// Moves element x to position perm[x].
FiniteStructureTable relabel(const FiniteStructureTable& t,
                             const std::vector<ElementIndex>& perm) {
  const std::size_t n = t.size();
  RawTable raw;
  raw.kind = t.kind();
  raw.labels.resize(n);
  raw.source.resize(n);
  raw.target.resize(n);
  raw.inverse.resize(n);
  raw.product.assign(n * n, kUndefined);
  for (ElementIndex x = 0; x < n; ++x) {
    raw.labels[perm[x]] = t.label(x);
    raw.source[perm[x]] = perm[t.source(x)];
    raw.target[perm[x]] = perm[t.target(x)];
    raw.inverse[perm[x]] = perm[t.inverse(x)];
    for (ElementIndex y = 0; y < n; ++y) {
      const ElementIndex z = t.entry(x, y);
      if (z != kUndefined) raw.product[perm[x] * n + perm[y]] = perm[z];
    }
  }
  for (ElementIndex u : t.units()) raw.units.push_back(perm[u]);
  return build_finite_table(std::move(raw));
}

std::vector<ElementIndex> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<ElementIndex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (const auto& [name, t] : test::almost_corpus()) {
    if (t.size() > kCanonicalFormLimit) continue;
    const auto form = canonical_form(t);
    for (int trial = 0; trial < 5; ++trial) {
      EXPECT_EQ(canonical_form(relabel(t, shuffled(t.size(), rng))), form)
          << name;
    }
  }
}

TEST(CanonicalForm, SeparatesAndLimits) {
  EXPECT_NE(canonical_form(zn(4)),
            canonical_form(direct_product_almost(zn(2), zn(2))));
  EXPECT_EQ(canonical_form(zn(1)).str().substr(0, 11), "n=1;units=1");
  try {
    canonical_form(zn(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::order_too_large);
  }
}

TEST(CanonicalForm, PermutationOrder) {
  EXPECT_EQ(nth_unit_preserving_permutation({2}, {0, 1}, 0),
            (std::vector<ElementIndex>{2, 0, 1}));
  EXPECT_EQ(nth_unit_preserving_permutation({2}, {0, 1}, 1),
            (std::vector<ElementIndex>{2, 1, 0}));
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(are_isomorphic(zn(4), direct_product_almost(zn(2), zn(2))));
  const auto b = b2_zn_almost_groupoid(3);
  const auto u = disjoint_union_almost(zn(3, "a"), zn(3, "b"));
  const auto m = are_isomorphic(b, u);
  ASSERT_TRUE(m);
  const auto r = check_almost_morphism(b, u, *m);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(is_isomorphism(r));
  EXPECT_FALSE(are_isomorphic(b, zn(6)));
}

TEST(Isomorphism, RandomRelabelingsAreFound) {
  std::mt19937_64 rng(5);
  for (const auto& [name, t] : test::almost_corpus()) {
    const auto s = relabel(t, shuffled(t.size(), rng));
    const auto m = are_isomorphic(t, s);
    ASSERT_TRUE(m) << name;
    EXPECT_TRUE(is_isomorphism(check_almost_morphism(t, s, *m))) << name;
  }
  for (const auto& [name, t] : test::groupoid_corpus()) {
    const auto s = relabel(t, shuffled(t.size(), rng));
    const auto m = are_isomorphic(t, s);
    ASSERT_TRUE(m) << name;
    EXPECT_TRUE(is_isomorphism(check_groupoid_morphism(t, s, *m))) << name;
  }
}

TEST(Isomorphism, Errors) {
  try {
    are_isomorphic(pair_groupoid(test::points(2)), b2_zn_almost_groupoid(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kind_mismatch);
  }
  // One-unit tables compare across kinds.
  EXPECT_TRUE(are_isomorphic(zn(3), test::zn_groupoid(3)));
  try {
    are_isomorphic(zn(65), zn(65));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::carrier_too_large);
  }
}

TEST(Signature, InvariantAndDescriptive) {
  std::mt19937_64 rng(3);
  for (const auto& [name, t] : test::almost_corpus()) {
    const auto sig = isotropy_signature(t);
    EXPECT_EQ(sig.total_fiber_size(), t.size()) << name;
    EXPECT_EQ(isotropy_signature(relabel(t, shuffled(t.size(), rng))), sig)
        << name;
  }
  const auto sig = isotropy_signature(b2_zn_almost_groupoid(4));
  ASSERT_EQ(sig.entries.size(), 2u);
  EXPECT_EQ(sig.entries[0].group_order, 4u);
  EXPECT_EQ(sig.entries[0].fiber_size, 4u);
  EXPECT_NE(isotropy_signature(zn(4)), isotropy_signature(
                                          direct_product_almost(zn(2), zn(2))));
}

TEST(EnumerateGroups, LabeledCounts) {
  const std::vector<std::size_t> expected = {1, 1, 1, 4, 6, 80};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto groups = enumerate_groups(n);
    EXPECT_EQ(groups.size(), expected[n - 1]) << n;
    for (const auto& g : groups) {
      EXPECT_TRUE(verify_almost_groupoid(g).passed());
    }
  }
  EXPECT_THROW(enumerate_groups(7), Error);
}

TEST(EnumerateAlmost, SmallCounts) {
  EXPECT_EQ(enumerate_almost_groupoids(1, 1).size(), 1u);
  const auto z3 = enumerate_almost_groupoids(3, 1);
  ASSERT_EQ(z3.size(), 1u);
  EXPECT_TRUE(are_isomorphic(z3[0], zn(3)));

  const auto twos = enumerate_almost_groupoids(4, 2, std::vector<std::size_t>{2, 2});
  ASSERT_EQ(twos.size(), 1u);
  EXPECT_TRUE(are_isomorphic(twos[0], disjoint_union_almost(zn(2, "a"),
                                                            zn(2, "b"))));

  EXPECT_EQ(enumerate_almost_groupoids(4, 1).size(), 2u);  // Z4, Z2xZ2
  EXPECT_EQ(enumerate_almost_groupoids(4, 2).size(), 2u);  // 3+1, 2+2
  EXPECT_EQ(enumerate_almost_groupoids(4, 4).size(), 1u);  // null
  EXPECT_EQ(enumerate_almost_groupoids(6, 1).size(), 2u);  // Z6, S3
}

TEST(EnumerateAlmost, MatchesPartitionOracle) {
  // Number of groups of order 1..6 up to isomorphism.
  const std::vector<std::size_t> groups = {1, 1, 1, 2, 1, 2};
  // Multisets of fiber sizes, each fiber any group, counted up to
  // reordering equal-size fibers.
  auto oracle = [&](std::size_t n, std::size_t k) {
    std::size_t total = 0;
    std::vector<std::size_t> parts;
    std::function<void(std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t left, std::size_t slots, std::size_t max) {
          if (slots == 0) {
            if (left != 0) return;
            // For each size s with multiplicity m, choose a multiset of m
            // groups from groups[s-1] classes.
            std::size_t count = 1;
            for (std::size_t i = 0; i < parts.size();) {
              std::size_t j = i;
              while (j < parts.size() && parts[j] == parts[i]) ++j;
              const std::size_t m = j - i;
              const std::size_t c = groups[parts[i] - 1];
              // C(c + m - 1, m)
              std::size_t num = 1, den = 1;
              for (std::size_t r = 1; r <= m; ++r) {
                num *= c + m - r;
                den *= r;
              }
              count *= num / den;
              i = j;
            }
            total += count;
            return;
          }
          for (std::size_t s = std::min(left, max); s >= 1; --s) {
            parts.push_back(s);
            rec(left - s, slots - 1, s);
            parts.pop_back();
          }
        };
    rec(n, k, n);
    return total;
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto found = enumerate_almost_groupoids(n, k);
      EXPECT_EQ(found.size(), oracle(n, k)) << n << "," << k;
      std::set<CanonicalForm> forms;
      for (const auto& t : found) {
        ASSERT_TRUE(verify_almost_groupoid(t).passed());
        EXPECT_EQ(t.units().size(), k);
        if (n <= kCanonicalFormLimit) forms.insert(canonical_form(t));
      }
      EXPECT_EQ(forms.size(), found.size());
    }
  }
}

TEST(EnumerateAlmost, Errors) {
  EXPECT_THROW(enumerate_almost_groupoids(7, 2), Error);
  EXPECT_THROW(enumerate_almost_groupoids(0, 0), Error);
  EXPECT_THROW(enumerate_almost_groupoids(3, 4), Error);
  EXPECT_THROW(enumerate_almost_groupoids(4, 2, std::vector<std::size_t>{3, 2}),
               Error);
}

TEST(EnumerateSemigroups, KnownCounts) {
  EXPECT_EQ(enumerate_semigroup_tables(1).size(), 1u);
  EXPECT_EQ(enumerate_semigroup_tables(2).size(), 8u);
  EXPECT_EQ(enumerate_semigroup_tables(3).size(), 113u);
  EXPECT_EQ(enumerate_semigroup_tables(4).size(), 3492u);
}

/// Direct reading of the definition on a total table: associative, every a
/// has exactly one e with ae = ea = a, and some b with ab = ba = e.
bool oracle_is_generalized_group(const std::vector<ElementIndex>& m,
                                 std::size_t n) {
  auto mul = [&](std::size_t a, std::size_t b) { return m[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> ids;
    for (std::size_t e = 0; e < n; ++e)
      if (mul(a, e) == a && mul(e, a) == a) ids.push_back(e);
    if (ids.size() != 1) return false;
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b)
      has_inverse = has_inverse || (mul(a, b) == ids[0] && mul(b, a) == ids[0]);
    if (!has_inverse) return false;
  }
  return true;
}

/// Smallest product table over all relabelings.
std::vector<ElementIndex> oracle_min_table(const std::vector<ElementIndex>& m,
                                           std::size_t n) {
  std::vector<ElementIndex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<ElementIndex> best;
  do {
    std::vector<ElementIndex> r(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) r[p[a] * n + p[b]] = p[m[a * n + b]];
    if (best.empty() || r < best) best = r;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

TEST(EnumerateGeneralized, TableScanOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= n;
    std::set<std::vector<ElementIndex>> classes;
    std::vector<ElementIndex> m(n * n);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto& v : m) {
        v = static_cast<ElementIndex>(c % n);
        c /= n;
      }
      if (oracle_is_generalized_group(m, n)) classes.insert(oracle_min_table(m, n));
    }
    const auto found = enumerate_generalized_groups(n);
    EXPECT_EQ(found.size(), classes.size()) << n;
    for (const auto& t : found) {
      EXPECT_TRUE(verify_generalized_group(t).passed());
      EXPECT_TRUE(classes.count(oracle_min_table(t.product_array(), n))) << n;
    }
  }
}

TEST(EnumerateGeneralized, CommutativeOnesAreGroups) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_generalized_groups(n)) {
      bool commutative = true;
      for (ElementIndex a = 0; a < n; ++a)
        for (ElementIndex b = 0; b < n; ++b)
          commutative = commutative && t.entry(a, b) == t.entry(b, a);
      if (!commutative) continue;
      const auto& e = t.source_map();
      EXPECT_TRUE(std::all_of(e.begin(), e.end(),
                              [&](ElementIndex u) { return u == e[0]; }));
      EXPECT_TRUE(verify_group(reinterpret(t, StructureKind::groupoid)).passed());
    }
  }
  EXPECT_THROW(enumerate_generalized_groups(5), Error);
}

TEST(EnumerateGeneralized, FromProduct) {
  EXPECT_FALSE(generalized_group_from_product({0, 1, 1, 1}, 2));
  const auto t = generalized_group_from_product({0, 1, 0, 1}, 2);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->units().size(), 2u);
}

}  // namespace
}  // namespace algf

#pragma once

// Finite structures shared by the test files.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "algf/almost.hpp"
#include "algf/constructions.hpp"
#include "algf/enumerate.hpp"
#include "algf/gengroup.hpp"
#include "algf/groupoid.hpp"
#include "algf/kernel.hpp"

namespace algf::test {

struct Named {
  std::string name;
  FiniteStructureTable table;
};

inline FiniteStructureTable zn(std::size_t n, std::string_view prefix = "") {
  return cyclic_group(n, StructureKind::almost_groupoid, prefix);
}

inline FiniteStructureTable zn_groupoid(std::size_t n,
                                        std::string_view prefix = "") {
  return cyclic_group(n, StructureKind::groupoid, prefix);
}

inline std::vector<std::string> points(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Permutations of {0,1,2} under composition, written out by hand.
inline FiniteStructureTable s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  RawTable raw;
  raw.kind = StructureKind::almost_groupoid;
  raw.units = {0};
  raw.product.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    raw.labels.push_back("s" + std::to_string(perms[i][0]) +
                         std::to_string(perms[i][1]) +
                         std::to_string(perms[i][2]));
    raw.source.push_back(0);
    for (std::size_t j = 0; j < n; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      const auto at = std::find(perms.begin(), perms.end(), c) - perms.begin();
      raw.product[i * n + j] = static_cast<ElementIndex>(at);
      if (at == 0) raw.inverse.push_back(static_cast<ElementIndex>(j));
    }
  }
  raw.target = raw.source;
  return build_finite_table(std::move(raw));
}

/// g . h = h for g = 0 and -h for g = 1, on Z2 x Z3.
inline AlmostAction negation_action(const FiniteStructureTable& z2,
                                    const FiniteStructureTable& z3) {
  return make_action(z2, z3, [](ElementIndex g, ElementIndex h) {
    return static_cast<ElementIndex>(g == 0 ? h : (3 - h) % 3);
  });
}

inline std::vector<Named> groupoid_corpus() {
  return {
      {"pair1", pair_groupoid(points(1))},
      {"pair2", pair_groupoid(points(2))},
      {"pair3", pair_groupoid(points(3))},
      {"pair4", pair_groupoid(points(4))},
      {"b2z4-as-groupoid", as_groupoid(b2_zn_almost_groupoid(4))},
      {"S(M) |M|=2", symmetric_groupoid(points(2)).table},
      {"S(M) |M|=3", symmetric_groupoid(points(3)).table},
      {"Z2+Z3",
       disjoint_union_groupoids({zn_groupoid(2, "a"), zn_groupoid(3, "b")})},
      {"Z4+Z2",
       disjoint_union_groupoids({zn_groupoid(4, "a"), zn_groupoid(2, "b")})},
      {"pair2+Z3",
       disjoint_union_groupoids({pair_groupoid(points(2)),
                                 zn_groupoid(3, "b")})},
  };
}

inline std::vector<Named> almost_corpus() {
  const auto z2 = zn(2);
  const auto z3 = zn(3);
  return {
      {"Z1", zn(1)},
      {"Z4", zn(4)},
      {"Z2xZ2", direct_product_almost(z2, z2)},
      {"b2z1", b2_zn_almost_groupoid(1)},
      {"b2z4", b2_zn_almost_groupoid(4)},
      {"b2z6", b2_zn_almost_groupoid(6)},
      {"null3", null_almost_groupoid({"u", "v", "w"})},
      {"Z2+Z3", disjoint_union_almost(zn(2, "a"), zn(3, "b"))},
      {"Z2xZ3", direct_product_almost(z2, z3)},
      {"Z2 x| Z3", semidirect_product(z2, z3, negation_action(z2, z3))},
      {"b2z2 x null2", direct_product_almost(b2_zn_almost_groupoid(2),
                                             null_almost_groupoid({"u", "v"}))},
      {"S3", s3_table()},
  };
}

inline std::vector<Named> gengroup_corpus() {
  std::vector<Named> out = {
      {"Z3", cyclic_group(3, StructureKind::generalized_group)},
      {"Z4", cyclic_group(4, StructureKind::generalized_group)},
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = enumerate_generalized_groups(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      out.push_back({"gg" + std::to_string(n) + "#" + std::to_string(i),
                     all[i]});
    }
  }
  return out;
}

}  // namespace algf::test

#include "algf/detail/partial_verify.hpp"

namespace algf::detail {

std::optional<std::size_t> first_nonassociative_triple(
    const FiniteStructureTable& table, ExecutionPolicy policy) {
  const std::size_t n = table.size();
  return scan::first_failure(
      n * n * n,
      [&](std::size_t t) {
        const auto x = static_cast<ElementIndex>(t / (n * n));
        const auto y = static_cast<ElementIndex>((t / n) % n);
        const auto z = static_cast<ElementIndex>(t % n);
        const ElementIndex xy = table.entry(x, y);
        const ElementIndex yz = table.entry(y, z);
        const ElementIndex left = xy == kUndefined ? kUndefined
                                                   : table.entry(xy, z);
        const ElementIndex right = yz == kUndefined ? kUndefined
                                                    : table.entry(x, yz);
        return left != right;
      },
      policy);
}

namespace {

Witness associativity_witness(const FiniteStructureTable& table,
                              std::size_t flat) {
  const std::size_t n = table.size();
  const auto x = static_cast<ElementIndex>(flat / (n * n));
  const auto y = static_cast<ElementIndex>((flat / n) % n);
  const auto z = static_cast<ElementIndex>(flat % n);
  const ElementIndex xy = table.entry(x, y);
  const ElementIndex yz = table.entry(y, z);
  const ElementIndex left = xy == kUndefined ? kUndefined : table.entry(xy, z);
  const ElementIndex right = yz == kUndefined ? kUndefined : table.entry(x, yz);
  std::string detail;
  if (left == kUndefined) {
    detail = "x*(y*z) is defined but (x*y)*z is not";
  } else if (right == kUndefined) {
    detail = "(x*y)*z is defined but x*(y*z) is not";
  } else {
    detail = "(x*y)*z = " + table.label(left) + " but x*(y*z) = " +
             table.label(right);
  }
  return make_witness(table, {x, y, z}, std::move(detail));
}

}  // namespace

VerificationReport verify_partial_structure(
    const FiniteStructureTable& table, const std::vector<ElementIndex>& src,
    const std::vector<ElementIndex>& tgt, const AxiomNames& names,
    ExecutionPolicy policy) {
  VerificationReport report;
  const std::size_t n = table.size();

  // Structure maps land in the unit set.
  {
    std::optional<ElementIndex> bad;
    for (ElementIndex x = 0; x < n && !bad; ++x) {
      if (!table.is_unit(src[x]) || !table.is_unit(tgt[x])) bad = x;
    }
    if (bad) {
      report.add_fail(names.maps_into_units,
                      make_witness(table, {*bad}, "image is not a unit"));
    } else {
      report.add_pass(names.maps_into_units);
    }
  }

  auto surjectivity = [&](const std::vector<ElementIndex>& map,
                          const std::string& name) {
    std::vector<char> hit(n, 0);
    for (ElementIndex x = 0; x < n; ++x) hit[map[x]] = 1;
    for (ElementIndex u : table.units()) {
      if (!hit[u]) {
        report.add_fail(name, make_witness(table, {u}, "unit not reached"));
        return;
      }
    }
    report.add_pass(name);
  };
  surjectivity(src, names.source_surjective);
  if (!names.target_surjective.empty()) {
    surjectivity(tgt, names.target_surjective);
  }

  // Stored entries versus the composability rule, both directions.
  {
    auto outside = scan::first_failure(
        n * n,
        [&](std::size_t t) {
          const auto x = static_cast<ElementIndex>(t / n);
          const auto y = static_cast<ElementIndex>(t % n);
          return table.entry(x, y) != kUndefined && tgt[x] != src[y];
        },
        policy);
    if (outside) {
      const auto x = static_cast<ElementIndex>(*outside / n);
      const auto y = static_cast<ElementIndex>(*outside % n);
      report.add_fail(names.product_outside,
                      make_witness(table, {x, y},
                                   "product is defined on a pair that is "
                                   "not composable"));
    } else {
      report.add_pass(names.product_outside);
    }
    auto missing = scan::first_failure(
        n * n,
        [&](std::size_t t) {
          const auto x = static_cast<ElementIndex>(t / n);
          const auto y = static_cast<ElementIndex>(t % n);
          return table.entry(x, y) == kUndefined && tgt[x] == src[y];
        },
        policy);
    if (missing) {
      const auto x = static_cast<ElementIndex>(*missing / n);
      const auto y = static_cast<ElementIndex>(*missing % n);
      report.add_fail(names.composable_undefined,
                      make_witness(table, {x, y},
                                   "composable pair has no product"));
    } else {
      report.add_pass(names.composable_undefined);
    }
  }

  if (auto bad = first_nonassociative_triple(table, policy)) {
    report.add_fail(names.associativity, associativity_witness(table, *bad));
  } else {
    report.add_pass(names.associativity);
  }

  {
    auto bad = scan::first_failure(
        n,
        [&](std::size_t i) {
          const auto x = static_cast<ElementIndex>(i);
          return table.entry(src[x], x) != x || table.entry(x, tgt[x]) != x;
        },
        policy);
    if (bad) {
      const auto x = static_cast<ElementIndex>(*bad);
      const bool left_ok = table.entry(src[x], x) == x;
      report.add_fail(
          names.identities,
          make_witness(table, {x},
                       left_ok ? "x * target(x) is undefined or not x"
                               : "source(x) * x is undefined or not x"));
    } else {
      report.add_pass(names.identities);
    }
  }

  {
    const auto& inv = table.inverse_map();
    auto bad = scan::first_failure(
        n,
        [&](std::size_t i) {
          const auto x = static_cast<ElementIndex>(i);
          return table.entry(x, inv[x]) != src[x] ||
                 table.entry(inv[x], x) != tgt[x];
        },
        policy);
    if (bad) {
      const auto x = static_cast<ElementIndex>(*bad);
      const bool right_ok = table.entry(x, inv[x]) == src[x];
      report.add_fail(
          names.inverses,
          make_witness(table, {x},
                       right_ok ? "inv(x) * x is undefined or not target(x)"
                                : "x * inv(x) is undefined or not source(x)"));
    } else {
      report.add_pass(names.inverses);
    }
  }

  if (!names.inverse_injective.empty()) {
    std::vector<ElementIndex> seen(n, kUndefined);
    std::optional<Witness> clash;
    for (ElementIndex x = 0; x < n && !clash; ++x) {
      const ElementIndex image = table.inverse(x);
      if (seen[image] != kUndefined) {
        clash = make_witness(table, {seen[image], x},
                             "two elements share the inverse " +
                                 table.label(image));
      }
      seen[image] = x;
    }
    if (clash) {
      report.add_fail(names.inverse_injective, std::move(*clash));
    } else {
      report.add_pass(names.inverse_injective);
    }
  }
  return report;
}

}  // namespace algf::detail

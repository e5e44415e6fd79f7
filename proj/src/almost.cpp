#include "algf/almost.hpp"

#include "algf/detail/partial_verify.hpp"
#include "algf/error.hpp"
#include "algf/groupoid.hpp"

namespace algf {

namespace {

const detail::AxiomNames kAlmostNames{
    "theta-into-units",
    "theta-surjective",
    "",
    "product-outside-composable",
    "composable-undefined",
    "AG1-associativity",
    "AG2-units",
    "AG3-inverses",
    "",
};

std::vector<char> flags_of(const FiniteStructureTable& table,
                           const std::vector<ElementIndex>& subset) {
  std::vector<char> in(table.size(), 0);
  for (ElementIndex x : subset) {
    if (x >= table.size()) {
      throw Error(ErrorCode::element_not_in_carrier,
                  "subset index outside the carrier");
    }
    in[x] = 1;
  }
  return in;
}

}  // namespace

VerificationReport verify_almost_groupoid(const FiniteStructureTable& table,
                                          ExecutionPolicy policy) {
  VerificationReport report("almost groupoid");
  const auto& theta = table.source_map();
  report.append(
      detail::verify_partial_structure(table, theta, theta, kAlmostNames,
                                       policy));
  return report;
}

VerificationReport derived_almost_properties(const FiniteStructureTable& table,
                                             ExecutionPolicy policy) {
  VerificationReport report("almost groupoid derived properties");
  const std::size_t n = table.size();
  const auto& theta = table.source_map();
  const auto& inv = table.inverse_map();
  const auto& units = table.units();
  auto e = [&](ElementIndex x, ElementIndex y) { return table.entry(x, y); };
  auto one = [&](std::string detail) {
    return [&table, detail](std::size_t i) {
      return make_witness(table, {static_cast<ElementIndex>(i)}, detail);
    };
  };
  auto two = [&](std::string detail) {
    return [&table, n, detail](std::size_t t) {
      return make_witness(table,
                          {static_cast<ElementIndex>(t / n),
                           static_cast<ElementIndex>(t % n)},
                          detail);
    };
  };
  auto unit_witness = [&](std::string detail) {
    return [&table, &units, detail](std::size_t i) {
      return make_witness(table, {units[i]}, detail);
    };
  };

  detail::record_scan(
      report, "unit-theta-fixed", units.size(),
      [&](std::size_t i) { return theta[units[i]] != units[i]; },
      unit_witness("theta(u) != u"), policy);
  detail::record_scan(
      report, "unit-square-and-inverse", units.size(),
      [&](std::size_t i) {
        const ElementIndex u = units[i];
        return e(u, u) != u || inv[u] != u;
      },
      unit_witness("u*u != u or inv(u) != u"), policy);
  detail::record_scan(
      report, "theta-of-product", n * n,
      [&](std::size_t t) {
        const ElementIndex xy = e(t / n, t % n);
        return xy != kUndefined && theta[xy] != theta[t / n];
      },
      two("theta(x*y) != theta(x)"), policy);
  detail::record_scan(
      report, "theta-of-inverse", n,
      [&](std::size_t x) { return theta[inv[x]] != theta[x]; },
      one("theta(inv(x)) != theta(x)"), policy);
  detail::record_scan(
      report, "theta-idempotent", n,
      [&](std::size_t x) { return theta[theta[x]] != theta[x]; },
      one("theta(theta(x)) != theta(x)"), policy);
  detail::record_scan(
      report, "inverse-of-product", n * n,
      [&](std::size_t t) {
        const auto x = static_cast<ElementIndex>(t / n);
        const auto y = static_cast<ElementIndex>(t % n);
        const ElementIndex xy = e(x, y);
        if (xy == kUndefined) return false;
        return theta[inv[y]] != theta[inv[x]] || e(inv[y], inv[x]) != inv[xy];
      },
      two("(inv(y), inv(x)) not composable or inv(x*y) != inv(y)*inv(x)"),
      policy);
  detail::record_scan(
      report, "inverse-involutive", n,
      [&](std::size_t x) { return inv[inv[x]] != x; },
      one("inv(inv(x)) != x"), policy);
  detail::record_scan(
      report, "definedness-symmetric", n * n,
      [&](std::size_t t) {
        const auto x = static_cast<ElementIndex>(t / n);
        const auto y = static_cast<ElementIndex>(t % n);
        return (e(x, y) == kUndefined) != (e(y, x) == kUndefined);
      },
      two("x*y and y*x differ in definedness"), policy);
  detail::record_scan(
      report, "squares-and-cubes-defined", n,
      [&](std::size_t i) {
        const auto a = static_cast<ElementIndex>(i);
        const ElementIndex sq = e(a, a);
        return sq == kUndefined || e(sq, a) == kUndefined;
      },
      one("a*a or (a*a)*a is undefined"), policy);

  // theta-fibers are groups and partition the carrier.
  std::optional<Witness> bad;
  std::size_t covered = 0;
  for (ElementIndex u : units) {
    const auto fiber = isotropy_group_almost(table, u);
    covered += fiber.size();
    if (!bad && !verify_group(fiber, policy).passed()) {
      bad = make_witness(table, {u}, "theta-fiber fails the group axioms");
    }
  }
  if (bad) {
    report.add_fail("fibers-are-groups", std::move(*bad));
  } else {
    report.add_pass("fibers-are-groups");
  }
  if (covered == n) {
    report.add_pass("fibers-partition");
  } else {
    report.add_fail("fibers-partition",
                    Witness{{}, {}, "theta-fibers over the units cover " +
                                        std::to_string(covered) + " of " +
                                        std::to_string(n) + " elements"});
  }
  return report;
}

FiniteStructureTable as_groupoid(const FiniteStructureTable& table) {
  RawTable raw = table.raw();
  raw.kind = StructureKind::groupoid;
  raw.target = raw.source;
  return build_finite_table(std::move(raw));
}

FiniteStructureTable isotropy_group_almost(const FiniteStructureTable& table,
                                           ElementIndex unit) {
  if (unit >= table.size() || !table.is_unit(unit)) {
    throw Error(ErrorCode::unit_not_found, "not a unit of the structure");
  }
  std::vector<ElementIndex> fiber;
  for (ElementIndex x = 0; x < table.size(); ++x) {
    if (table.source(x) == unit) fiber.push_back(x);
  }
  RawTable raw = restrict_to(as_groupoid(table), fiber,
                             StructureKind::groupoid)
                     .raw();
  raw.kind = StructureKind::almost_groupoid;
  return build_finite_table(std::move(raw));
}

std::optional<Witness> commutativity_witness(
    const FiniteStructureTable& table) {
  for (ElementIndex x = 0; x < table.size(); ++x) {
    for (ElementIndex y = 0; y < table.size(); ++y) {
      if (table.source(x) != table.source(y)) continue;
      if (table.entry(x, y) != table.entry(y, x)) {
        return make_witness(table, {x, y}, "x*y != y*x inside one fiber");
      }
    }
  }
  return std::nullopt;
}

bool is_commutative_almost(const FiniteStructureTable& table) {
  return !commutativity_witness(table).has_value();
}

std::string_view to_string(AlmostSubstructureClass c) {
  switch (c) {
    case AlmostSubstructureClass::not_sub: return "not-sub";
    case AlmostSubstructureClass::sub: return "sub";
    case AlmostSubstructureClass::wide: return "wide";
    case AlmostSubstructureClass::normal: return "normal";
  }
  return "unknown";
}

AlmostClassification classify_almost_substructure(
    const FiniteStructureTable& table, const std::vector<ElementIndex>& h,
    const std::vector<ElementIndex>& h0) {
  if (h.empty() || h0.empty()) {
    throw Error(ErrorCode::empty_subset, "H and H0 must be nonempty");
  }
  const auto in_h = flags_of(table, h);
  const auto in_h0 = flags_of(table, h0);
  const std::size_t n = table.size();
  AlmostClassification result;

  // (1.1) theta(H) = H0
  std::vector<char> image(n, 0);
  for (ElementIndex x = 0; x < n; ++x) {
    if (!in_h[x]) continue;
    image[table.source(x)] = 1;
    if (!in_h0[table.source(x)]) {
      result.witness = make_witness(table, {x}, "theta(x) is not in H0");
      return result;
    }
  }
  for (ElementIndex u = 0; u < n; ++u) {
    if (in_h0[u] && !image[u]) {
      result.witness = make_witness(table, {u}, "H0 element not in theta(H)");
      return result;
    }
  }
  // (1.2) closure
  for (ElementIndex x = 0; x < n; ++x) {
    if (!in_h[x]) continue;
    for (ElementIndex y = 0; y < n; ++y) {
      if (!in_h[y]) continue;
      const ElementIndex xy = table.entry(x, y);
      if (xy != kUndefined && !in_h[xy]) {
        result.witness = make_witness(
            table, {x, y}, "x*y = " + table.label(xy) + " is not in H");
        return result;
      }
    }
    if (!in_h[table.inverse(x)]) {
      result.witness = make_witness(table, {x}, "inv(x) is not in H");
      return result;
    }
  }
  result.kind = AlmostSubstructureClass::sub;

  for (ElementIndex u : table.units()) {
    if (!in_h0[u]) {
      result.witness = make_witness(table, {u}, "unit missing from H0");
      return result;
    }
  }
  result.kind = AlmostSubstructureClass::wide;

  for (ElementIndex g = 0; g < n; ++g) {
    for (ElementIndex x = 0; x < n; ++x) {
      if (!in_h[x]) continue;
      const ElementIndex gx = table.entry(g, x);
      if (gx == kUndefined) continue;
      const ElementIndex conj = table.entry(gx, table.inverse(g));
      if (conj != kUndefined && !in_h[conj]) {
        result.witness = make_witness(
            table, {g, x}, "g*h*inv(g) = " + table.label(conj) +
                               " is not in H");
        return result;
      }
    }
  }
  result.kind = AlmostSubstructureClass::normal;
  result.witness.reset();
  return result;
}

VerificationReport check_almost_morphism(const FiniteStructureTable& from,
                                         const FiniteStructureTable& to,
                                         const MorphismPair& morphism) {
  // With source = target = theta the groupoid conditions are exactly the
  // almost-groupoid ones.
  VerificationReport inner =
      check_groupoid_morphism(as_groupoid(from), as_groupoid(to), morphism);
  VerificationReport report("almost morphism");
  report.append(inner);
  return report;
}

FiniteStructureTable b2_zn_almost_groupoid(long long n) {
  if (n <= 0) {
    throw Error(ErrorCode::nonpositive_n, "n must be positive");
  }
  const auto m = static_cast<std::size_t>(n);
  const std::size_t size = 2 * m;
  RawTable raw;
  raw.kind = StructureKind::almost_groupoid;
  auto at = [m](std::size_t a, std::size_t c) {
    return static_cast<ElementIndex>(a * m + c);
  };
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      raw.labels.push_back("(" + std::to_string(a) + "," + std::to_string(c) +
                           ")");
      raw.source.push_back(at(a, 0));
      raw.inverse.push_back(at(a, (m - c) % m));
    }
    raw.units.push_back(at(a, 0));
  }
  raw.target = raw.source;
  raw.product.assign(size * size, kUndefined);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        raw.product[at(a, j) * size + at(a, k)] = at(a, (j + k) % m);
      }
    }
  }
  return build_finite_table(std::move(raw));
}

FiniteStructureTable null_almost_groupoid(
    const std::vector<std::string>& units) {
  if (units.empty()) throw Error(ErrorCode::empty_set, "G0 is empty");
  const std::size_t n = units.size();
  RawTable raw;
  raw.kind = StructureKind::almost_groupoid;
  raw.labels = units;
  raw.product.assign(n * n, kUndefined);
  for (ElementIndex u = 0; u < n; ++u) {
    raw.units.push_back(u);
    raw.source.push_back(u);
    raw.inverse.push_back(u);
    raw.product[u * n + u] = u;
  }
  raw.target = raw.source;
  return build_finite_table(std::move(raw));
}

}  // namespace algf

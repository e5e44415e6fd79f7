#include "algf/groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "algf/detail/partial_verify.hpp"
#include "algf/enumerate.hpp"

namespace algf {

namespace {

const detail::AxiomNames kGroupoidNames{
    "source-target-into-units",
    "source-surjective",
    "target-surjective",
    "product-outside-composable",
    "composable-undefined",
    "associativity",
    "identities",
    "inverses",
    "inverse-injective",
};

std::pair<ElementIndex, ElementIndex> unpack_pair(std::size_t t,
                                                  std::size_t n) {
  return {static_cast<ElementIndex>(t / n), static_cast<ElementIndex>(t % n)};
}

}  // namespace

VerificationReport verify_groupoid(const FiniteStructureTable& table,
                                   ExecutionPolicy policy) {
  VerificationReport report("groupoid");
  report.append(detail::verify_partial_structure(
      table, table.source_map(), table.target_map(), kGroupoidNames, policy));
  return report;
}

VerificationReport verify_group(const FiniteStructureTable& table,
                                ExecutionPolicy policy) {
  VerificationReport report = verify_groupoid(table, policy);
  if (table.units().size() == 1) {
    report.add_pass("single-unit");
  } else {
    report.add_fail("single-unit",
                    make_witness(table, {table.units()[0], table.units()[1]},
                                 "more than one unit"));
  }
  return report;
}

TransitivityResult is_transitive(const FiniteStructureTable& table) {
  const auto& units = table.units();
  std::set<std::pair<ElementIndex, ElementIndex>> anchor;
  for (ElementIndex x = 0; x < table.size(); ++x) {
    anchor.emplace(table.source(x), table.target(x));
  }
  for (ElementIndex u : units) {
    for (ElementIndex v : units) {
      if (!anchor.count({u, v})) return {false, std::make_pair(u, v)};
    }
  }
  return {true, std::nullopt};
}

FiniteStructureTable isotropy_group(const FiniteStructureTable& table,
                                    ElementIndex unit) {
  if (unit >= table.size() || !table.is_unit(unit)) {
    throw Error(ErrorCode::unit_not_found, "not a unit of the structure");
  }
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < table.size(); ++x) {
    if (table.source(x) == unit && table.target(x) == unit) {
      members.push_back(x);
    }
  }
  return restrict_to(table, members, table.kind() == StructureKind::groupoid
                                         ? StructureKind::groupoid
                                         : StructureKind::almost_groupoid);
}

std::vector<ElementIndex> isotropy_bundle(const FiniteStructureTable& table) {
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < table.size(); ++x) {
    if (table.source(x) == table.target(x)) out.push_back(x);
  }
  return out;
}

VerificationReport derived_property_report(const FiniteStructureTable& table,
                                           ExecutionPolicy policy) {
  VerificationReport report("groupoid derived properties");
  const std::size_t n = table.size();
  const auto& src = table.source_map();
  const auto& tgt = table.target_map();
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
      auto [x, y] = unpack_pair(t, n);
      return make_witness(table, {x, y}, detail);
    };
  };

  detail::record_scan(
      report, "unit-fixed-points", units.size(),
      [&](std::size_t i) {
        const ElementIndex u = units[i];
        return src[u] != u || tgt[u] != u || inv[u] != u || e(u, u) != u;
      },
      [&](std::size_t i) {
        return make_witness(table, {units[i]},
                            "a unit is moved by source, target, inverse or "
                            "its own square");
      },
      policy);
  detail::record_scan(
      report, "source-of-product", n * n,
      [&](std::size_t t) {
        auto [x, y] = unpack_pair(t, n);
        const ElementIndex xy = e(x, y);
        return xy != kUndefined && src[xy] != src[x];
      },
      two("source(x*y) != source(x)"), policy);
  detail::record_scan(
      report, "target-of-product", n * n,
      [&](std::size_t t) {
        auto [x, y] = unpack_pair(t, n);
        const ElementIndex xy = e(x, y);
        return xy != kUndefined && tgt[xy] != tgt[y];
      },
      two("target(x*y) != target(y)"), policy);
  detail::record_scan(
      report, "source-of-inverse", n,
      [&](std::size_t x) { return src[inv[x]] != tgt[x]; },
      one("source(inv(x)) != target(x)"), policy);
  detail::record_scan(
      report, "target-of-inverse", n,
      [&](std::size_t x) { return tgt[inv[x]] != src[x]; },
      one("target(inv(x)) != source(x)"), policy);
  detail::record_scan(
      report, "inverse-involutive", n,
      [&](std::size_t x) { return inv[inv[x]] != x; },
      one("inv(inv(x)) != x"), policy);

  auto cancellation = [&](bool left) {
    return [&, left](std::size_t t) {
      const auto x = static_cast<ElementIndex>(t / (n * n));
      const auto z1 = static_cast<ElementIndex>((t / n) % n);
      const auto z2 = static_cast<ElementIndex>(t % n);
      if (z1 == z2) return false;
      const ElementIndex a = left ? e(x, z1) : e(z1, x);
      const ElementIndex b = left ? e(x, z2) : e(z2, x);
      return a != kUndefined && a == b;
    };
  };
  auto triple = [&](std::string detail) {
    return [&table, n, detail](std::size_t t) {
      return make_witness(table,
                          {static_cast<ElementIndex>(t / (n * n)),
                           static_cast<ElementIndex>((t / n) % n),
                           static_cast<ElementIndex>(t % n)},
                          detail);
    };
  };
  detail::record_scan(report, "left-cancellation", n * n * n,
                      cancellation(true),
                      triple("x*z1 == x*z2 with z1 != z2"), policy);
  detail::record_scan(report, "right-cancellation", n * n * n,
                      cancellation(false),
                      triple("z1*x == z2*x with z1 != z2"), policy);
  detail::record_scan(
      report, "inverse-of-product", n * n,
      [&](std::size_t t) {
        auto [x, y] = unpack_pair(t, n);
        const ElementIndex xy = e(x, y);
        if (xy == kUndefined) return false;
        return e(inv[y], inv[x]) != inv[xy];
      },
      two("inv(x*y) != inv(y)*inv(x)"), policy);

  // Isotropy groups, conjugate isotropy groups, transitive case.
  std::map<ElementIndex, FiniteStructureTable> groups;
  for (ElementIndex u : units) groups.emplace(u, isotropy_group(table, u));
  {
    std::optional<Witness> bad;
    for (ElementIndex u : units) {
      if (!verify_group(groups.at(u), policy).passed()) {
        bad = make_witness(table, {u}, "isotropy group fails the group axioms");
        break;
      }
    }
    if (bad) {
      report.add_fail("isotropy-groups", std::move(*bad));
    } else {
      report.add_pass("isotropy-groups");
    }
  }
  std::map<std::pair<ElementIndex, ElementIndex>, bool> iso_cache;
  auto isomorphic = [&](ElementIndex u, ElementIndex v) {
    if (u == v) return true;
    auto key = std::minmax(u, v);
    auto it = iso_cache.find(key);
    if (it != iso_cache.end()) return it->second;
    const bool found =
        are_isomorphic(groups.at(key.first), groups.at(key.second))
            .has_value();
    iso_cache.emplace(key, found);
    return found;
  };
  {
    std::optional<Witness> bad;
    for (ElementIndex x = 0; x < n && !bad; ++x) {
      if (!isomorphic(src[x], tgt[x])) {
        bad = make_witness(table, {x},
                           "isotropy groups at source(x) and target(x) are "
                           "not isomorphic");
      }
    }
    if (bad) {
      report.add_fail("isotropy-conjugate", std::move(*bad));
    } else {
      report.add_pass("isotropy-conjugate");
    }
  }
  const bool transitive = is_transitive(table).transitive;
  report.note({"transitive", transitive, std::nullopt});
  {
    std::optional<Witness> bad;
    if (transitive) {
      for (std::size_t i = 0; i < units.size() && !bad; ++i) {
        for (std::size_t j = i + 1; j < units.size() && !bad; ++j) {
          if (!isomorphic(units[i], units[j])) {
            bad = make_witness(table, {units[i], units[j]},
                               "transitive but isotropy groups differ");
          }
        }
      }
    }
    if (bad) {
      report.add_fail("transitive-isotropy-isomorphic", std::move(*bad));
    } else {
      report.add_pass("transitive-isotropy-isomorphic");
    }
  }
  return report;
}

std::string_view to_string(SubstructureClass c) {
  switch (c) {
    case SubstructureClass::not_closed: return "not-closed";
    case SubstructureClass::subgroupoid: return "subgroupoid";
    case SubstructureClass::wide: return "wide";
    case SubstructureClass::normal: return "normal";
  }
  return "unknown";
}

namespace {

std::vector<char> membership(const FiniteStructureTable& table,
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

Classification classify_substructure(const FiniteStructureTable& table,
                                     const std::vector<ElementIndex>& k,
                                     const std::vector<ElementIndex>& k0) {
  if (k.empty() || k0.empty()) {
    throw Error(ErrorCode::empty_subset, "K and K0 must be nonempty");
  }
  const auto in_k = membership(table, k);
  const auto in_k0 = membership(table, k0);
  for (ElementIndex u : k0) {
    if (!table.is_unit(u)) {
      throw Error(ErrorCode::unit_not_found,
                  "'" + table.label(u) + "' in K0 is not a unit");
    }
  }
  auto members = [&](const std::vector<char>& flags) {
    std::vector<ElementIndex> out;
    for (ElementIndex x = 0; x < flags.size(); ++x) {
      if (flags[x]) out.push_back(x);
    }
    return out;
  };
  const auto ks = members(in_k);
  const auto k0s = members(in_k0);
  Classification result;

  for (ElementIndex x : ks) {
    for (ElementIndex y : ks) {
      const ElementIndex xy = table.entry(x, y);
      if (xy != kUndefined && !in_k[xy]) {
        result.witness =
            make_witness(table, {x, y}, "x*y = " + table.label(xy) +
                                            " is not in K");
        return result;
      }
    }
  }
  for (ElementIndex x : ks) {
    if (!in_k[table.inverse(x)]) {
      result.witness = make_witness(table, {x}, "inv(x) is not in K");
      return result;
    }
  }
  std::vector<char> reached(table.size(), 0);
  for (ElementIndex x : ks) {
    for (ElementIndex u : {table.source(x), table.target(x)}) {
      if (!in_k0[u]) {
        result.witness = make_witness(
            table, {x, u}, "source/target of an element of K is not in K0");
        return result;
      }
      reached[u] = 1;
    }
  }
  for (ElementIndex u : k0s) {
    if (!reached[u]) {
      result.witness =
          make_witness(table, {u}, "unit of K0 is not the source of any "
                                   "element of K");
      return result;
    }
  }
  result.kind = SubstructureClass::subgroupoid;

  for (ElementIndex u : table.units()) {
    if (!in_k0[u]) {
      result.witness = make_witness(table, {u}, "unit missing from K0");
      return result;
    }
  }
  result.kind = SubstructureClass::wide;

  for (ElementIndex x = 0; x < table.size(); ++x) {
    for (ElementIndex a : ks) {
      const ElementIndex xa = table.entry(x, a);
      if (xa == kUndefined) continue;
      const ElementIndex conj = table.entry(xa, table.inverse(x));
      if (conj != kUndefined && !in_k[conj]) {
        result.witness = make_witness(
            table, {x, a}, "x*a*inv(x) = " + table.label(conj) +
                               " is not in K");
        return result;
      }
    }
  }
  result.kind = SubstructureClass::normal;
  result.witness.reset();
  return result;
}

VerificationReport check_groupoid_morphism(const FiniteStructureTable& from,
                                           const FiniteStructureTable& to,
                                           const MorphismPair& morphism) {
  const auto& f = morphism.element_map;
  const auto& f0 = morphism.unit_map;
  if (f.size() != from.size() || f0.size() != from.units().size()) {
    throw Error(ErrorCode::map_not_total,
                "morphism maps must cover every element and every unit");
  }
  for (ElementIndex y : f) {
    if (y >= to.size()) {
      throw Error(ErrorCode::map_not_total, "element map leaves the codomain");
    }
  }
  for (ElementIndex y : f0) {
    if (y >= to.size()) {
      throw Error(ErrorCode::map_not_total, "unit map leaves the codomain");
    }
  }
  std::vector<ElementIndex> unit_slot(from.size(), kUndefined);
  for (ElementIndex i = 0; i < from.units().size(); ++i) {
    unit_slot[from.units()[i]] = i;
  }
  auto f0_of = [&](ElementIndex u) { return f0[unit_slot[u]]; };

  VerificationReport report("morphism");
  const std::size_t n = from.size();
  detail::record_scan(
      report, "morphism-multiplicative", n * n,
      [&](std::size_t t) {
        auto [x, y] = unpack_pair(t, n);
        const ElementIndex xy = from.entry(x, y);
        if (xy == kUndefined) return false;
        return to.entry(f[x], f[y]) != f[xy];
      },
      [&](std::size_t t) {
        auto [x, y] = unpack_pair(t, n);
        const ElementIndex image = to.entry(f[x], f[y]);
        return make_witness(
            from, {x, y},
            image == kUndefined ? "f(x)*f(y) is undefined"
                                : "f(x*y) != f(x)*f(y) = " + to.label(image));
      },
      ExecutionPolicy::serial);
  detail::record_scan(
      report, "morphism-units", n,
      [&](std::size_t x) {
        return to.source(f[x]) != f0_of(from.source(x)) ||
               to.target(f[x]) != f0_of(from.target(x));
      },
      [&](std::size_t x) {
        return make_witness(from, {static_cast<ElementIndex>(x)},
                            "source'(f(x)) != f0(source(x)) or "
                            "target'(f(x)) != f0(target(x))");
      },
      ExecutionPolicy::serial);

  auto bijective = [](const std::vector<ElementIndex>& map, std::size_t size) {
    if (map.size() != size) return false;
    std::vector<char> hit(size, 0);
    for (ElementIndex y : map) {
      if (y >= size || hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  };
  std::vector<ElementIndex> f0_local;
  std::vector<ElementIndex> to_slot(to.size(), kUndefined);
  for (ElementIndex i = 0; i < to.units().size(); ++i) {
    to_slot[to.units()[i]] = i;
  }
  bool units_ok = true;
  for (ElementIndex y : f0) {
    if (to_slot[y] == kUndefined) units_ok = false;
    f0_local.push_back(to_slot[y]);
  }
  const bool iso = report.passed() && bijective(f, to.size()) && units_ok &&
                   bijective(f0_local, to.units().size());
  report.note({"isomorphism", iso, std::nullopt});
  return report;
}

bool is_isomorphism(const VerificationReport& morphism_report) {
  const Check* note = morphism_report.find_note("isomorphism");
  return morphism_report.passed() && note != nullptr && note->passed;
}

// ---------------------------------------------------------------------------

FiniteStructureTable pair_groupoid(const std::vector<std::string>& points) {
  if (points.empty()) throw Error(ErrorCode::empty_set, "X is empty");
  const std::size_t m = points.size();
  const std::size_t n = m * m;
  RawTable raw;
  raw.kind = StructureKind::groupoid;
  auto at = [m](std::size_t x, std::size_t y) {
    return static_cast<ElementIndex>(x * m + y);
  };
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      raw.labels.push_back("(" + points[x] + "," + points[y] + ")");
      raw.source.push_back(at(x, x));
      raw.target.push_back(at(y, y));
      raw.inverse.push_back(at(y, x));
    }
    raw.units.push_back(at(x, x));
  }
  raw.product.assign(n * n, kUndefined);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        raw.product[at(x, y) * n + at(y, z)] = at(x, z);
      }
    }
  }
  return build_finite_table(std::move(raw));
}

RuleStructure<Rational> rstar2_groupoid(const Rational& a) {
  if (sgn(a) == 0) throw Error(ErrorCode::zero_parameter, "a must be nonzero");
  const Rational b = 1 / a;
  using M = RationalMatrix;
  RuleStructure<Rational> s;
  s.name = "R*2(" + a.get_str() + "," + b.get_str() + ")";
  s.kind = StructureKind::groupoid;
  s.domain = ValueDomain::rational_pair;
  s.contains = [](const M& p) {
    return p.rows() == 1 && p.cols() == 2 && sgn(p(0, 0)) != 0 &&
           sgn(p(0, 1)) != 0;
  };
  s.source = [a](const M& p) { return M{{p(0, 0), a * p(0, 0)}}; };
  s.target = [b](const M& p) { return M{{b * p(0, 1), p(0, 1)}}; };
  s.inverse = [a, b](const M& p) {
    return M{{b * p(0, 1), a * p(0, 0)}};
  };
  s.composable = [b](const M& p, const M& q) {
    return q(0, 0) == b * p(0, 1);
  };
  s.multiply = [](const M& p, const M& q) { return M{{p(0, 0), q(0, 1)}}; };
  s.draw = [](std::mt19937_64& rng) {
    Rational x = random_nonzero_rational(rng);
    Rational y = random_nonzero_rational(rng);
    return M{{x, y}};
  };
  s.draw_with_source = [](const M& unit, std::mt19937_64& rng) {
    return M{{unit(0, 0), random_nonzero_rational(rng)}};
  };
  return s;
}

// ---------------------------------------------------------------------------

std::vector<int> Quasipermutation::domain() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(image.size()); ++i) {
    if (image[i] >= 0) out.push_back(i);
  }
  return out;
}

std::vector<int> Quasipermutation::range() const {
  std::vector<int> out;
  for (int v : image) {
    if (v >= 0) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string quasipermutation_label(const Quasipermutation& f,
                                   const std::vector<std::string>& points) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < f.image.size(); ++i) {
    if (f.image[i] < 0) continue;
    if (!first) out += ",";
    first = false;
    out += points[i] + "->" + points[f.image[i]];
  }
  return out + "}";
}

// All injections from the points of `mask` into {0..m-1}, images in
// lexicographic order.
void injections(std::size_t m, unsigned mask, std::size_t pos,
                Quasipermutation& current, std::vector<char>& used,
                std::vector<Quasipermutation>& out) {
  if (pos == m) {
    out.push_back(current);
    return;
  }
  if (!(mask & (1u << pos))) {
    current.image[pos] = -1;
    injections(m, mask, pos + 1, current, used, out);
    return;
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    current.image[pos] = static_cast<int>(v);
    injections(m, mask, pos + 1, current, used, out);
    used[v] = 0;
  }
  current.image[pos] = -1;
}

}  // namespace

SymmetricGroupoid symmetric_groupoid(const std::vector<std::string>& points,
                                     std::size_t max_size_guard) {
  if (points.empty()) throw Error(ErrorCode::empty_set, "M is empty");
  const std::size_t m = points.size();
  if (m > max_size_guard || m > 16) {
    throw Error(ErrorCode::carrier_too_large,
                "|M| = " + std::to_string(m) + " exceeds the guard " +
                    std::to_string(max_size_guard));
  }
  std::vector<Quasipermutation> maps;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Quasipermutation current{std::vector<int>(m, -1)};
    std::vector<char> used(m, 0);
    injections(m, mask, 0, current, used, maps);
  }
  std::map<std::vector<int>, ElementIndex> index;
  for (ElementIndex i = 0; i < maps.size(); ++i) index[maps[i].image] = i;
  auto identity_on = [&](const std::vector<int>& set) {
    std::vector<int> image(m, -1);
    for (int p : set) image[p] = p;
    return index.at(image);
  };

  const std::size_t n = maps.size();
  RawTable raw;
  raw.kind = StructureKind::groupoid;
  std::vector<std::vector<int>> domains(n), ranges(n);
  for (ElementIndex i = 0; i < n; ++i) {
    const auto& f = maps[i];
    domains[i] = f.domain();
    ranges[i] = f.range();
    raw.labels.push_back(quasipermutation_label(f, points));
    raw.source.push_back(identity_on(domains[i]));
    raw.target.push_back(identity_on(ranges[i]));
    std::vector<int> inverse(m, -1);
    for (int p : domains[i]) inverse[f.image[p]] = p;
    raw.inverse.push_back(index.at(inverse));
    if (domains[i] == ranges[i] &&
        std::all_of(domains[i].begin(), domains[i].end(),
                    [&](int p) { return f.image[p] == p; })) {
      raw.units.push_back(i);
    }
  }
  raw.product.assign(n * n, kUndefined);
  for (ElementIndex i = 0; i < n; ++i) {
    for (ElementIndex j = 0; j < n; ++j) {
      if (ranges[i] != domains[j]) continue;
      // mu(f, g) = g o f
      std::vector<int> image(m, -1);
      for (int p : domains[i]) image[p] = maps[j].image[maps[i].image[p]];
      raw.product[i * n + j] = index.at(image);
    }
  }
  return {build_finite_table(std::move(raw)), std::move(maps)};
}

// ---------------------------------------------------------------------------

namespace {

using PartialMap = std::vector<ElementIndex>;

// f o g on the carrier, kUndefined where either side is.
PartialMap compose(const PartialMap& f, const PartialMap& g) {
  PartialMap out(g.size(), kUndefined);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g[x] != kUndefined) out[x] = f[g[x]];
  }
  return out;
}

std::vector<char> domain_of(const PartialMap& f) {
  std::vector<char> out(f.size(), 0);
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[x] != kUndefined;
  return out;
}

std::vector<char> range_of(const PartialMap& f) {
  std::vector<char> out(f.size(), 0);
  for (ElementIndex y : f) {
    if (y != kUndefined) out[y] = 1;
  }
  return out;
}

PartialMap identity_on(const std::vector<char>& set) {
  PartialMap out(set.size(), kUndefined);
  for (std::size_t x = 0; x < set.size(); ++x) {
    if (set[x]) out[x] = static_cast<ElementIndex>(x);
  }
  return out;
}

PartialMap inverse_of(const PartialMap& f) {
  PartialMap out(f.size(), kUndefined);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] != kUndefined) out[f[x]] = static_cast<ElementIndex>(x);
  }
  return out;
}

}  // namespace

CayleyEmbedding left_translation_groupoid(const FiniteStructureTable& table,
                                          std::size_t max_size) {
  const std::size_t n = table.size();
  if (n > max_size) {
    throw Error(ErrorCode::carrier_too_large,
                "carrier of size " + std::to_string(n) + " exceeds " +
                    std::to_string(max_size));
  }
  if (!verify_groupoid(table).passed()) {
    throw Error(ErrorCode::not_certified, "input is not a groupoid");
  }

  CayleyEmbedding out;
  VerificationReport& report = out.report;
  report = VerificationReport("cayley");

  std::vector<PartialMap> translation(n, PartialMap(n, kUndefined));
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex x = 0; x < n; ++x) {
      if (table.target(a) == table.source(x)) {
        translation[a][x] = table.entry(a, x);
      }
    }
  }

  // Distinct translations in order of first appearance.
  std::map<PartialMap, ElementIndex> index;
  std::vector<ElementIndex> phi(n);
  std::optional<Witness> clash;
  for (ElementIndex a = 0; a < n; ++a) {
    auto [it, fresh] = index.emplace(
        translation[a], static_cast<ElementIndex>(out.maps.size()));
    if (fresh) {
      out.maps.push_back(translation[a]);
    } else if (!clash) {
      clash = make_witness(table, {a},
                           "L_a coincides with an earlier translation");
    }
    phi[a] = it->second;
  }
  if (clash) {
    report.add_fail("phi-injective", std::move(*clash));
  } else {
    report.add_pass("phi-injective");
  }

  const std::size_t m = out.maps.size();
  auto find_map = [&](const PartialMap& f) -> std::optional<ElementIndex> {
    auto it = index.find(f);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  auto require = [&](const PartialMap& f, const char* what) {
    if (auto i = find_map(f)) return *i;
    throw Error(ErrorCode::not_certified,
                std::string("translations not closed: ") + what);
  };

  // L(Gamma) with f.g = f o g when D(f) = R(g); source Id_R(f), target
  // Id_D(f).
  RawTable raw;
  raw.kind = StructureKind::groupoid;
  std::vector<std::vector<char>> dom(m), ran(m);
  for (ElementIndex i = 0; i < m; ++i) {
    dom[i] = domain_of(out.maps[i]);
    ran[i] = range_of(out.maps[i]);
  }
  for (ElementIndex a = 0; a < n; ++a) {
    if (phi[a] == raw.labels.size()) {
      raw.labels.push_back("L[" + table.label(a) + "]");
    }
  }
  for (ElementIndex i = 0; i < m; ++i) {
    raw.source.push_back(require(identity_on(ran[i]), "Id_R(f)"));
    raw.target.push_back(require(identity_on(dom[i]), "Id_D(f)"));
    raw.inverse.push_back(require(inverse_of(out.maps[i]), "inverse"));
    if (out.maps[i] == identity_on(dom[i])) raw.units.push_back(i);
  }
  raw.product.assign(m * m, kUndefined);
  for (ElementIndex i = 0; i < m; ++i) {
    for (ElementIndex j = 0; j < m; ++j) {
      if (dom[i] != ran[j]) continue;
      raw.product[i * m + j] = require(compose(out.maps[i], out.maps[j]),
                                       "composition");
    }
  }
  out.translations = build_finite_table(std::move(raw));
  out.phi = induced_pair(table, phi);

  report.append(verify_groupoid(out.translations));
  VerificationReport morphism =
      check_groupoid_morphism(table, out.translations, out.phi);
  report.append(morphism);
  if (is_isomorphism(morphism)) {
    report.add_pass("phi-isomorphism");
  } else {
    report.add_fail("phi-isomorphism",
                    Witness{{}, {}, "phi is not bijective onto L(Gamma)"});
  }

  detail::record_scan(
      report, "left-unit-law", n,
      [&](std::size_t x) {
        return compose(translation[table.source(x)], translation[x]) !=
               translation[x];
      },
      [&](std::size_t x) {
        return make_witness(table, {static_cast<ElementIndex>(x)},
                            "L_source(x) o L_x != L_x");
      },
      ExecutionPolicy::serial);
  detail::record_scan(
      report, "right-unit-law", n,
      [&](std::size_t x) {
        return compose(translation[x], translation[table.target(x)]) !=
               translation[x];
      },
      [&](std::size_t x) {
        return make_witness(table, {static_cast<ElementIndex>(x)},
                            "L_x o L_target(x) != L_x");
      },
      ExecutionPolicy::serial);

  // Closure inside S(Gamma) under its own product g o f (R(f) = D(g)),
  // inversion and units.
  std::optional<Witness> open;
  for (ElementIndex i = 0; i < m && !open; ++i) {
    if (!find_map(inverse_of(out.maps[i])) ||
        !find_map(identity_on(dom[i])) || !find_map(identity_on(ran[i]))) {
      open = Witness{{out.translations.label(i)}, {i},
                     "inverse or unit of a translation is not a translation"};
    }
    for (ElementIndex j = 0; j < m && !open; ++j) {
      if (ran[i] != dom[j]) continue;
      if (!find_map(compose(out.maps[j], out.maps[i]))) {
        open = Witness{{out.translations.label(i), out.translations.label(j)},
                       {i, j},
                       "symmetric-groupoid product leaves the translations"};
      }
    }
  }
  if (open) {
    report.add_fail("closed-in-symmetric-groupoid", std::move(*open));
  } else {
    report.add_pass("closed-in-symmetric-groupoid");
  }
  return out;
}

FiniteStructureTable disjoint_union_groupoids(
    const std::vector<FiniteStructureTable>& parts) {
  if (parts.empty()) throw Error(ErrorCode::empty_set, "no summands");
  StructureKind kind = parts.front().kind();
  std::set<std::string> seen;
  std::size_t n = 0;
  for (const auto& part : parts) {
    if (part.kind() == StructureKind::generalized_group &&
        part.units().size() > 1) {
      throw Error(ErrorCode::kind_mismatch,
                  "disjoint union needs groupoids or almost groupoids");
    }
    if (part.kind() != kind) kind = StructureKind::groupoid;
    for (const auto& label : part.labels()) {
      if (!seen.insert(label).second) {
        throw Error(ErrorCode::label_collision,
                    "label '" + label + "' occurs in two summands");
      }
    }
    n += part.size();
  }
  if (kind == StructureKind::generalized_group) {
    kind = parts.size() == 1 ? kind : StructureKind::almost_groupoid;
  }
  RawTable raw;
  raw.kind = kind;
  raw.product.assign(n * n, kUndefined);
  ElementIndex offset = 0;
  for (const auto& part : parts) {
    const std::size_t m = part.size();
    for (ElementIndex x = 0; x < m; ++x) {
      raw.labels.push_back(part.label(x));
      raw.source.push_back(offset + part.source(x));
      raw.target.push_back(offset + part.target(x));
      raw.inverse.push_back(offset + part.inverse(x));
      for (ElementIndex y = 0; y < m; ++y) {
        const ElementIndex z = part.entry(x, y);
        if (z != kUndefined) {
          raw.product[(offset + x) * n + offset + y] = offset + z;
        }
      }
    }
    for (ElementIndex u : part.units()) raw.units.push_back(offset + u);
    offset += static_cast<ElementIndex>(m);
  }
  return build_finite_table(std::move(raw));
}

// ---------------------------------------------------------------------------

namespace {

RealMatrix invert(const RealMatrix& a) {
  const std::size_t n = a.rows();
  RealMatrix work = a;
  RealMatrix inv = RealMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(work(r, c)) > std::fabs(work(pivot, c))) pivot = r;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(work(c, k), work(pivot, k));
      std::swap(inv(c, k), inv(pivot, k));
    }
    const double d = work(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      work(c, k) /= d;
      inv(c, k) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double factor = work(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        work(r, k) -= factor * work(c, k);
        inv(r, k) -= factor * inv(c, k);
      }
    }
  }
  return inv;
}

constexpr double kMinSampleDet = 0.1;
constexpr double kSingular = 1e-12;

}  // namespace

RuleStructure<double> general_linear_group(std::size_t n) {
  if (n == 0 || n > 3) {
    throw Error(ErrorCode::order_too_large, "GL(n) is provided for 1 <= n <= 3");
  }
  RuleStructure<double> s;
  s.name = "GL(" + std::to_string(n) + ")";
  s.kind = StructureKind::groupoid;
  s.domain = n == 1 ? ValueDomain::float_scalar : ValueDomain::float_matrix;
  s.contains = [n](const RealMatrix& a) {
    return a.rows() == n && a.cols() == n &&
           std::fabs(determinant(a)) > kSingular;
  };
  s.source = [n](const RealMatrix&) { return RealMatrix::identity(n); };
  s.target = s.source;
  s.inverse = [](const RealMatrix& a) { return invert(a); };
  s.composable = [n](const RealMatrix& a, const RealMatrix& b) {
    return a.rows() == n && b.rows() == n;
  };
  s.multiply = [](const RealMatrix& a, const RealMatrix& b) { return a * b; };
  s.draw = [n](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    RealMatrix a(n, n);
    for (int attempt = 0; attempt < kSamplerRetryBudget; ++attempt) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
      }
      if (std::fabs(determinant(a)) >= kMinSampleDet) return a;
    }
    return RealMatrix(n, n);  // singular; rejected by membership
  };
  s.draw_with_source = [s](const RealMatrix&, std::mt19937_64& rng) {
    return s.draw(rng);
  };
  return s;
}

RuleStructure<double> general_linear_groupoid(std::size_t n) {
  std::vector<RuleStructure<double>> parts;
  for (std::size_t k = 1; k <= n; ++k) parts.push_back(general_linear_group(k));
  auto out = disjoint_union_rule("GL-groupoid(" + std::to_string(n) + ")",
                                 std::move(parts));
  out.kind = StructureKind::groupoid;
  out.domain = ValueDomain::float_matrix;
  return out;
}

RuleStructure<double> nonzero_reals() {
  RuleStructure<double> s = general_linear_group(1);
  s.name = "R*";
  return s;
}

RuleMorphism<double, double> determinant_morphism() {
  RuleMorphism<double, double> f;
  f.name = "det";
  f.map = [](const RealMatrix& a) { return RealMatrix{{determinant(a)}}; };
  f.unit_map = [](const RealMatrix&) { return RealMatrix{{1.0}}; };
  return f;
}

}  // namespace algf

#include "algf/constructions.hpp"

#include "algf/detail/partial_verify.hpp"
#include "algf/error.hpp"
#include "algf/groupoid.hpp"

namespace algf {

FiniteStructureTable disjoint_union_almost(const FiniteStructureTable& g,
                                           const FiniteStructureTable& h) {
  RawTable raw = disjoint_union_groupoids({g, h}).raw();
  raw.kind = StructureKind::almost_groupoid;
  raw.target = raw.source;
  return build_finite_table(std::move(raw));
}

namespace {

std::string pair_label(const FiniteStructureTable& a, ElementIndex x,
                       const FiniteStructureTable& b, ElementIndex y) {
  return "(" + a.label(x) + "," + b.label(y) + ")";
}

// Carrier, theta and units of G x H; the product is left undefined.
RawTable product_carrier(const FiniteStructureTable& g,
                         const FiniteStructureTable& h) {
  const std::size_t m = h.size();
  const std::size_t n = g.size() * m;
  RawTable raw;
  raw.kind = StructureKind::almost_groupoid;
  for (ElementIndex x = 0; x < g.size(); ++x) {
    for (ElementIndex y = 0; y < m; ++y) {
      raw.labels.push_back(pair_label(g, x, h, y));
      raw.source.push_back(
          static_cast<ElementIndex>(g.source(x) * m + h.source(y)));
      if (g.is_unit(x) && h.is_unit(y)) {
        raw.units.push_back(static_cast<ElementIndex>(x * m + y));
      }
    }
  }
  raw.target = raw.source;
  raw.product.assign(n * n, kUndefined);
  return raw;
}

}  // namespace

FiniteStructureTable direct_product_almost(const FiniteStructureTable& g1,
                                           const FiniteStructureTable& g2) {
  const std::size_t m = g2.size();
  const std::size_t n = g1.size() * m;
  RawTable raw = product_carrier(g1, g2);
  for (ElementIndex x1 = 0; x1 < g1.size(); ++x1) {
    for (ElementIndex x2 = 0; x2 < m; ++x2) {
      raw.inverse.push_back(
          static_cast<ElementIndex>(g1.inverse(x1) * m + g2.inverse(x2)));
      for (ElementIndex y1 = 0; y1 < g1.size(); ++y1) {
        const ElementIndex p1 = g1.entry(x1, y1);
        if (p1 == kUndefined) continue;
        for (ElementIndex y2 = 0; y2 < m; ++y2) {
          const ElementIndex p2 = g2.entry(x2, y2);
          if (p2 == kUndefined) continue;
          raw.product[(x1 * m + x2) * n + y1 * m + y2] =
              static_cast<ElementIndex>(p1 * m + p2);
        }
      }
    }
  }
  return build_finite_table(std::move(raw));
}

AlmostAction make_action(
    const FiniteStructureTable& g, const FiniteStructureTable& h,
    const std::function<ElementIndex(ElementIndex, ElementIndex)>& fn) {
  AlmostAction action;
  action.h_size = h.size();
  for (ElementIndex x = 0; x < g.size(); ++x) {
    for (ElementIndex y = 0; y < h.size(); ++y) {
      action.act.push_back(fn(x, y));
    }
  }
  return action;
}

AlmostAction trivial_action(const FiniteStructureTable& g,
                            const FiniteStructureTable& h) {
  return make_action(g, h, [](ElementIndex, ElementIndex y) { return y; });
}

VerificationReport verify_action(const FiniteStructureTable& g,
                                 const FiniteStructureTable& h,
                                 const AlmostAction& action) {
  const std::size_t gn = g.size();
  const std::size_t hn = h.size();
  if (action.h_size != hn || action.act.size() != gn * hn) {
    throw Error(ErrorCode::map_not_total,
                "action must be defined on every pair (g, h)");
  }
  for (ElementIndex y : action.act) {
    if (y >= hn) throw Error(ErrorCode::map_not_total, "action leaves H");
  }
  auto witness = [&](ElementIndex x, std::vector<ElementIndex> hs,
                     std::string detail) {
    Witness w;
    w.elements.push_back(g.label(x));
    w.indices.push_back(x);
    for (ElementIndex y : hs) {
      w.elements.push_back(h.label(y));
      w.indices.push_back(y);
    }
    w.detail = std::move(detail);
    return w;
  };
  auto h_witness = [&](ElementIndex y, std::string detail) {
    return Witness{{h.label(y)}, {y}, std::move(detail)};
  };

  VerificationReport report("action");
  // (1) (g1 g2) . h = g1 . (g2 . h) on composable (g1, g2).
  detail::record_scan(
      report, "action-axiom-1", gn * gn * hn,
      [&](std::size_t t) {
        const auto g1 = static_cast<ElementIndex>(t / (gn * hn));
        const auto g2 = static_cast<ElementIndex>((t / hn) % gn);
        const auto y = static_cast<ElementIndex>(t % hn);
        const ElementIndex g12 = g.entry(g1, g2);
        if (g12 == kUndefined) return false;
        return action(g12, y) != action(g1, action(g2, y));
      },
      [&](std::size_t t) {
        const auto g1 = static_cast<ElementIndex>(t / (gn * hn));
        const auto g2 = static_cast<ElementIndex>((t / hn) % gn);
        const auto y = static_cast<ElementIndex>(t % hn);
        Witness w = witness(g1, {y}, "(g1 g2) . h != g1 . (g2 . h)");
        w.elements.insert(w.elements.begin() + 1, g.label(g2));
        w.indices.insert(w.indices.begin() + 1, g2);
        return w;
      },
      ExecutionPolicy::serial);
  // (2) g . (h1 h2) = (g . h1)(g . h2) on composable (h1, h2).
  detail::record_scan(
      report, "action-axiom-2", gn * hn * hn,
      [&](std::size_t t) {
        const auto x = static_cast<ElementIndex>(t / (hn * hn));
        const auto h1 = static_cast<ElementIndex>((t / hn) % hn);
        const auto h2 = static_cast<ElementIndex>(t % hn);
        const ElementIndex h12 = h.entry(h1, h2);
        if (h12 == kUndefined) return false;
        return action(x, h12) != h.entry(action(x, h1), action(x, h2));
      },
      [&](std::size_t t) {
        const auto x = static_cast<ElementIndex>(t / (hn * hn));
        const auto h1 = static_cast<ElementIndex>((t / hn) % hn);
        const auto h2 = static_cast<ElementIndex>(t % hn);
        return witness(x, {h1, h2},
                       "g . (h1 h2) != (g . h1)(g . h2) or the right side is "
                       "undefined");
      },
      ExecutionPolicy::serial);
  // (3) every h is fixed by some unit of G.
  auto fixed_by_some_unit = [&](ElementIndex y) {
    for (ElementIndex u : g.units()) {
      if (action(u, y) == y) return true;
    }
    return false;
  };
  detail::record_scan(
      report, "action-axiom-3", hn,
      [&](std::size_t y) {
        return !fixed_by_some_unit(static_cast<ElementIndex>(y));
      },
      [&](std::size_t y) {
        return h_witness(static_cast<ElementIndex>(y),
                         "no theta1(g) with theta1(g) . h = h");
      },
      ExecutionPolicy::serial);
  // (4) g . theta2(h) = theta2(h).
  detail::record_scan(
      report, "action-axiom-4", gn * hn,
      [&](std::size_t t) {
        const auto x = static_cast<ElementIndex>(t / hn);
        const auto y = static_cast<ElementIndex>(t % hn);
        return action(x, h.source(y)) != h.source(y);
      },
      [&](std::size_t t) {
        return witness(static_cast<ElementIndex>(t / hn),
                       {static_cast<ElementIndex>(t % hn)},
                       "g . theta2(h) != theta2(h)");
      },
      ExecutionPolicy::serial);
  detail::record_scan(
      report, "closure-compatibility", gn * hn,
      [&](std::size_t t) {
        const auto x = static_cast<ElementIndex>(t / hn);
        const auto y = static_cast<ElementIndex>(t % hn);
        return h.source(action(x, y)) != h.source(y);
      },
      [&](std::size_t t) {
        return witness(static_cast<ElementIndex>(t / hn),
                       {static_cast<ElementIndex>(t % hn)},
                       "theta2(g . h) != theta2(h)");
      },
      ExecutionPolicy::serial);

  std::optional<Witness> strong;
  for (ElementIndex u : g.units()) {
    for (ElementIndex y = 0; y < hn && !strong; ++y) {
      if (action(u, y) != y) {
        strong = witness(u, {y}, "a unit of G moves h");
      }
    }
  }
  report.note({"axiom-3-every-unit", !strong.has_value(), strong});
  return report;
}

FiniteStructureTable semidirect_product(const FiniteStructureTable& g,
                                        const FiniteStructureTable& h,
                                        const AlmostAction& action) {
  const VerificationReport check = verify_action(g, h, action);
  if (!check.passed()) {
    throw Error(ErrorCode::action_verification_failed,
                "action fails " + check.first_failure()->name);
  }
  const std::size_t m = h.size();
  const std::size_t n = g.size() * m;
  RawTable raw = product_carrier(g, h);
  for (ElementIndex g1 = 0; g1 < g.size(); ++g1) {
    for (ElementIndex h1 = 0; h1 < m; ++h1) {
      const ElementIndex ig = g.inverse(g1);
      raw.inverse.push_back(
          static_cast<ElementIndex>(ig * m + action(ig, h.inverse(h1))));
      for (ElementIndex g2 = 0; g2 < g.size(); ++g2) {
        if (g.source(g1) != g.source(g2)) continue;
        for (ElementIndex h2 = 0; h2 < m; ++h2) {
          if (h.source(h1) != h.source(h2)) continue;
          const ElementIndex left = g.entry(g1, g2);
          const ElementIndex right = h.entry(h1, action(g1, h2));
          raw.product[(g1 * m + h1) * n + g2 * m + h2] =
              static_cast<ElementIndex>(left * m + right);
        }
      }
    }
  }
  return build_finite_table(std::move(raw));
}

}  // namespace algf

#include "algf/gengroup.hpp"

#include <algorithm>
#include <cmath>

#include "algf/detail/partial_verify.hpp"
#include "algf/error.hpp"

namespace algf {

VerificationReport verify_generalized_group(const FiniteStructureTable& table,
                                            ExecutionPolicy policy) {
  VerificationReport report("generalized group");
  const std::size_t n = table.size();
  const auto& e = table.source_map();
  const auto& inv = table.inverse_map();
  auto m = [&](ElementIndex a, ElementIndex b) { return table.entry(a, b); };
  auto one = [&](std::string detail) {
    return [&table, detail](std::size_t i) {
      return make_witness(table, {static_cast<ElementIndex>(i)}, detail);
    };
  };

  detail::record_scan(
      report, "total-product", n * n,
      [&](std::size_t t) { return table.product_array()[t] == kUndefined; },
      [&](std::size_t t) {
        return make_witness(table,
                            {static_cast<ElementIndex>(t / n),
                             static_cast<ElementIndex>(t % n)},
                            "product is undefined");
      },
      policy);
  if (!report.passed()) return report;

  if (auto bad = detail::first_nonassociative_triple(table, policy)) {
    const auto a = static_cast<ElementIndex>(*bad / (n * n));
    const auto b = static_cast<ElementIndex>((*bad / n) % n);
    const auto c = static_cast<ElementIndex>(*bad % n);
    report.add_fail("associativity",
                    make_witness(table, {a, b, c},
                                 "(ab)c = " + table.label(m(m(a, b), c)) +
                                     " but a(bc) = " +
                                     table.label(m(a, m(b, c)))));
  } else {
    report.add_pass("associativity");
  }
  detail::record_scan(
      report, "identity", n,
      [&](std::size_t a) { return m(a, e[a]) != a || m(e[a], a) != a; },
      one("a*e(a) or e(a)*a != a"), policy);

  // Uniqueness: no candidate other than e(a) satisfies the identity laws.
  auto other_identity = [&](ElementIndex a) -> std::optional<ElementIndex> {
    for (ElementIndex c = 0; c < n; ++c) {
      if (c != e[a] && m(a, c) == a && m(c, a) == a) return c;
    }
    return std::nullopt;
  };
  detail::record_scan(
      report, "identity-uniqueness", n,
      [&](std::size_t a) {
        return other_identity(static_cast<ElementIndex>(a)).has_value();
      },
      [&](std::size_t i) {
        const auto a = static_cast<ElementIndex>(i);
        return make_witness(table, {a, e[a], *other_identity(a)},
                            "two local identities for one element");
      },
      policy);
  detail::record_scan(
      report, "inverse", n,
      [&](std::size_t a) { return m(a, inv[a]) != e[a] || m(inv[a], a) != e[a]; },
      one("a*inv(a) or inv(a)*a != e(a)"), policy);
  return report;
}

VerificationReport derived_gg_properties(const FiniteStructureTable& table,
                                         ExecutionPolicy policy) {
  VerificationReport report("generalized group derived properties");
  const std::size_t n = table.size();
  const auto& e = table.source_map();
  const auto& inv = table.inverse_map();
  auto m = [&](ElementIndex a, ElementIndex b) { return table.entry(a, b); };
  auto one = [&](std::string detail) {
    return [&table, detail](std::size_t i) {
      return make_witness(table, {static_cast<ElementIndex>(i)}, detail);
    };
  };
  detail::record_scan(
      report, "inverse-unique", n,
      [&](std::size_t i) {
        const auto a = static_cast<ElementIndex>(i);
        std::size_t count = 0;
        for (ElementIndex b = 0; b < n; ++b) {
          if (m(a, b) == e[a] && m(b, a) == e[a]) ++count;
        }
        return count != 1;
      },
      one("a does not have exactly one inverse"), policy);
  detail::record_scan(
      report, "identity-of-inverse", n,
      [&](std::size_t a) { return e[inv[a]] != e[a]; },
      one("e(inv(a)) != e(a)"), policy);
  detail::record_scan(
      report, "identity-idempotent", n,
      [&](std::size_t a) { return e[e[a]] != e[a]; },
      one("e(e(a)) != e(a)"), policy);
  detail::record_scan(
      report, "identity-squares", n,
      [&](std::size_t a) { return m(e[a], e[a]) != e[a]; },
      one("e(a)*e(a) != e(a)"), policy);
  detail::record_scan(
      report, "inverse-involutive", n,
      [&](std::size_t a) { return inv[inv[a]] != a; },
      one("inv(inv(a)) != a"), policy);
  return report;
}

PredicateResult is_normal_gg(const FiniteStructureTable& table) {
  const auto& e = table.source_map();
  for (ElementIndex a = 0; a < table.size(); ++a) {
    for (ElementIndex b = 0; b < table.size(); ++b) {
      const ElementIndex ab = table.entry(a, b);
      if (ab == kUndefined || e[ab] != table.entry(e[a], e[b])) {
        return {false, make_witness(table, {a, b}, "e(ab) != e(a)e(b)")};
      }
    }
  }
  return {};
}

PredicateResult check_generalized_subgroup(const FiniteStructureTable& table,
                                           const std::vector<ElementIndex>& h) {
  if (h.empty()) throw Error(ErrorCode::empty_subset, "H is empty");
  std::vector<char> in(table.size(), 0);
  for (ElementIndex x : h) {
    if (x >= table.size()) {
      throw Error(ErrorCode::element_not_in_carrier,
                  "subset index outside the carrier");
    }
    in[x] = 1;
  }
  for (ElementIndex a = 0; a < table.size(); ++a) {
    if (!in[a]) continue;
    for (ElementIndex b = 0; b < table.size(); ++b) {
      if (!in[b]) continue;
      const ElementIndex q = table.entry(a, table.inverse(b));
      if (q == kUndefined || !in[q]) {
        return {false, make_witness(table, {a, b}, "a*inv(b) is not in H")};
      }
    }
  }
  return {};
}

FiniteStructureTable component_subgroup(const FiniteStructureTable& table,
                                        ElementIndex a) {
  if (a >= table.size()) {
    throw Error(ErrorCode::element_not_in_carrier,
                "index outside the carrier");
  }
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < table.size(); ++x) {
    if (table.source(x) == table.source(a)) members.push_back(x);
  }
  return restrict_to(table, members, StructureKind::generalized_group);
}

VerificationReport check_gg_homomorphism(const FiniteStructureTable& from,
                                         const FiniteStructureTable& to,
                                         const std::vector<ElementIndex>& f) {
  if (f.size() != from.size()) {
    throw Error(ErrorCode::map_not_total, "f must cover every element");
  }
  for (ElementIndex y : f) {
    if (y >= to.size()) {
      throw Error(ErrorCode::map_not_total, "f leaves the codomain");
    }
  }
  VerificationReport report("generalized group homomorphism");
  const std::size_t n = from.size();
  detail::record_scan(
      report, "homomorphism-multiplicative", n * n,
      [&](std::size_t t) {
        const auto a = static_cast<ElementIndex>(t / n);
        const auto b = static_cast<ElementIndex>(t % n);
        return f[from.entry(a, b)] != to.entry(f[a], f[b]);
      },
      [&](std::size_t t) {
        return make_witness(from,
                            {static_cast<ElementIndex>(t / n),
                             static_cast<ElementIndex>(t % n)},
                            "f(ab) != f(a)f(b)");
      },
      ExecutionPolicy::serial);
  detail::record_scan(
      report, "preserves-identity", n,
      [&](std::size_t a) { return f[from.source(a)] != to.source(f[a]); },
      [&](std::size_t a) {
        return make_witness(from, {static_cast<ElementIndex>(a)},
                            "f(e(a)) != e(f(a))");
      },
      ExecutionPolicy::serial);
  detail::record_scan(
      report, "preserves-inverse", n,
      [&](std::size_t a) { return f[from.inverse(a)] != to.inverse(f[a]); },
      [&](std::size_t a) {
        return make_witness(from, {static_cast<ElementIndex>(a)},
                            "f(inv(a)) != inv(f(a))");
      },
      ExecutionPolicy::serial);
  return report;
}

std::vector<ElementIndex> image_of(const std::vector<ElementIndex>& f,
                                   const std::vector<ElementIndex>& h) {
  std::vector<ElementIndex> out;
  for (ElementIndex x : h) out.push_back(f.at(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementIndex> preimage_of(const std::vector<ElementIndex>& f,
                                      const std::vector<ElementIndex>& h_prime,
                                      std::size_t codomain_size) {
  std::vector<char> in(codomain_size, 0);
  for (ElementIndex y : h_prime) in.at(y) = 1;
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < f.size(); ++x) {
    if (in.at(f[x])) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class Scalar>
RuleStructure<Scalar> total_structure(std::string name, ValueDomain domain) {
  RuleStructure<Scalar> s;
  s.name = std::move(name);
  s.kind = StructureKind::generalized_group;
  s.domain = domain;
  s.composable = [](const Matrix<Scalar>&, const Matrix<Scalar>&) {
    return true;
  };
  return s;
}

bool is_2x2(const auto& a) { return a.rows() == 2 && a.cols() == 2; }

}  // namespace

RuleStructure<Rational> sqrtdet_generalized_group_rational() {
  using M = RationalMatrix;
  auto s = total_structure<Rational>("sqrtdet", ValueDomain::rational_matrix_2x2);
  auto root = [](const M& a) { return *exact_sqrt(determinant(a)); };
  s.contains = [](const M& a) {
    if (!is_2x2(a)) return false;
    const Rational d = determinant(a);
    return sgn(d) > 0 && exact_sqrt(d).has_value();
  };
  s.multiply = [root](const M& a, const M& b) { return root(a) * b; };
  s.source = [root](const M& a) { return Rational(1 / root(a)) * a; };
  s.target = s.source;
  s.inverse = [](const M& a) { return Rational(1 / determinant(a)) * a; };
  // det = ad - bc = s^2 with d = (s^2 + bc) / a.
  s.draw = [](std::mt19937_64& rng) {
    const Rational a = random_nonzero_rational(rng);
    const Rational b = random_nonzero_rational(rng);
    const Rational c = random_nonzero_rational(rng);
    const Rational root = random_positive_rational(rng);
    const Rational d = (root * root + b * c) / a;
    return M{{a, b}, {c, d}};
  };
  return s;
}

RuleStructure<double> sqrtdet_generalized_group_float() {
  using M = RealMatrix;
  auto s = total_structure<double>("sqrtdet-float", ValueDomain::float_matrix);
  s.contains = [](const M& a) { return is_2x2(a) && determinant(a) > 1e-12; };
  s.multiply = [](const M& a, const M& b) {
    return std::sqrt(determinant(a)) * b;
  };
  s.source = [](const M& a) { return (1.0 / std::sqrt(determinant(a))) * a; };
  s.target = s.source;
  s.inverse = [](const M& a) { return (1.0 / determinant(a)) * a; };
  s.draw = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (int attempt = 0; attempt < kSamplerRetryBudget; ++attempt) {
      M a{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
      if (determinant(a) >= 0.1) return a;
    }
    return M(2, 2);
  };
  return s;
}

RuleStructure<Rational> triangular_generalized_group() {
  using M = RationalMatrix;
  auto s = total_structure<Rational>("triangular",
                                     ValueDomain::rational_matrix_3x3);
  const Rational zero(0), one(1);
  auto make = [zero, one](const Rational& a, const Rational& b,
                          const Rational& c) {
    return M{{a, b, c}, {zero, one, zero}, {zero, zero, zero}};
  };
  s.contains = [zero, one](const M& x) {
    return x.rows() == 3 && x.cols() == 3 && sgn(x(0, 0)) != 0 &&
           x(1, 0) == zero && x(1, 1) == one && x(1, 2) == zero &&
           x(2, 0) == zero && x(2, 1) == zero && x(2, 2) == zero;
  };
  s.multiply = [](const M& x, const M& y) { return x * y; };
  s.source = [make](const M& x) {
    return make(Rational(1), Rational(0), Rational(x(0, 2) / x(0, 0)));
  };
  s.target = s.source;
  s.inverse = [make](const M& x) {
    const Rational& a = x(0, 0);
    return make(Rational(1 / a), Rational(-x(0, 1) / a),
                Rational(x(0, 2) / (a * a)));
  };
  s.draw = [make](std::mt19937_64& rng) {
    Rational a = random_nonzero_rational(rng);
    Rational b = random_nonzero_rational(rng);
    Rational c = random_nonzero_rational(rng);
    return make(a, b, c);
  };
  return s;
}

RuleStructure<Rational> nonzero_rationals() {
  using M = RationalMatrix;
  RuleStructure<Rational> s;
  s.name = "Q*";
  s.kind = StructureKind::generalized_group;
  s.domain = ValueDomain::rational_scalar;
  s.contains = [](const M& x) {
    return x.rows() == 1 && x.cols() == 1 && sgn(x(0, 0)) != 0;
  };
  s.composable = [](const M&, const M&) { return true; };
  s.multiply = [](const M& x, const M& y) { return x * y; };
  s.source = [](const M&) { return M{{Rational(1)}}; };
  s.target = s.source;
  s.inverse = [](const M& x) { return M{{Rational(1 / x(0, 0))}}; };
  s.draw = [](std::mt19937_64& rng) {
    return M{{random_nonzero_rational(rng)}};
  };
  return s;
}

RuleMorphism<Rational, Rational> triangular_corner_morphism() {
  RuleMorphism<Rational, Rational> f;
  f.name = "A -> a";
  f.map = [](const RationalMatrix& x) { return RationalMatrix{{x(0, 0)}}; };
  f.unit_map = [](const RationalMatrix&) {
    return RationalMatrix{{Rational(1)}};
  };
  return f;
}

}  // namespace algf

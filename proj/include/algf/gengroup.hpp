#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algf/detail/sampled.hpp"
#include "algf/kernel.hpp"
#include "algf/rational.hpp"
#include "algf/report.hpp"
#include "algf/rule_structure.hpp"
#include "algf/scan.hpp"

namespace algf {

struct PredicateResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

/// Exhaustive check with e read from the table's source map: total
/// product, associativity, a*e(a) = e(a)*a = a, no other element with that
/// property, and a*inv(a) = inv(a)*a = e(a).
VerificationReport verify_generalized_group(
    const FiniteStructureTable& table,
    ExecutionPolicy policy = default_policy());

/// Inverse uniqueness, e(inv(a)) = e(a), e(e(a)) = e(a), e(a)*e(a) = e(a),
/// inv(inv(a)) = a.
VerificationReport derived_gg_properties(
    const FiniteStructureTable& table,
    ExecutionPolicy policy = default_policy());

/// e(ab) = e(a)e(b) for all pairs.
PredicateResult is_normal_gg(const FiniteStructureTable& table);

/// a*inv(b) in H for all a, b in H.  Throws Error(empty_subset).
PredicateResult check_generalized_subgroup(const FiniteStructureTable& table,
                                           const std::vector<ElementIndex>& h);

/// {x : e(x) = e(a)} as a one-unit table.  Throws
/// Error(element_not_in_carrier).
FiniteStructureTable component_subgroup(const FiniteStructureTable& table,
                                        ElementIndex a);

/// f(ab) = f(a)f(b) for all pairs, plus f(e(a)) = e(f(a)) and
/// f(inv(a)) = inv(f(a)).  Throws Error(map_not_total).
VerificationReport check_gg_homomorphism(const FiniteStructureTable& from,
                                         const FiniteStructureTable& to,
                                         const std::vector<ElementIndex>& f);

/// f(H), sorted.
std::vector<ElementIndex> image_of(const std::vector<ElementIndex>& f,
                                   const std::vector<ElementIndex>& h);

/// f^-1(H'), sorted.
std::vector<ElementIndex> preimage_of(const std::vector<ElementIndex>& f,
                                      const std::vector<ElementIndex>& h_prime,
                                      std::size_t codomain_size);

// ---------------------------------------------------------------------------
// Examples

/// 2x2 matrices with det > 0, A (.) B = sqrt(det A) B, e(A) = A/sqrt(det A),
/// inv(A) = A/det A.  The rational version only admits matrices whose
/// determinant is the square of a rational.
RuleStructure<Rational> sqrtdet_generalized_group_rational();
RuleStructure<double> sqrtdet_generalized_group_float();

/// [[a,b,c],[0,1,0],[0,0,0]] with a != 0 under matrix product,
/// e(A) = [[1,0,c/a],...], inv(A) = [[1/a,-b/a,c/a^2],...].
RuleStructure<Rational> triangular_generalized_group();

/// Nonzero rationals as 1x1 matrices, a group.
RuleStructure<Rational> nonzero_rationals();

/// A -> [[a]] for the triangular example.
RuleMorphism<Rational, Rational> triangular_corner_morphism();

// ---------------------------------------------------------------------------
// Sampled checks

/// Samples a, b, c per draw.  Uniqueness of e cannot be scanned on an
/// infinite carrier; the check "identity-idempotent" asserts the provided e
/// satisfies e(a)e(a) = e(a) and e(e(a)) = e(a), and a note records that
/// uniqueness is trusted.
template <class Scalar>
VerificationReport verify_generalized_group(
    const RuleStructure<Scalar>& s, const SampleOptions& options,
    ExecutionPolicy policy = default_policy()) {
  using Element = Matrix<Scalar>;
  using detail::SampleFailure;
  using detail::value_witness;
  const std::vector<std::string> names = {"membership", "associativity",
                                          "identity", "identity-idempotent",
                                          "inverse"};
  auto probe = [&](std::mt19937_64& rng) -> std::optional<SampleFailure> {
    const Element a = s.sample(rng);
    const Element b = s.sample(rng);
    const Element c = s.sample(rng);
    const Element ab = s.multiply(a, b);
    const Element bc = s.multiply(b, c);
    if (!s.contains(ab) || !s.contains(bc)) {
      return SampleFailure{0, value_witness<Scalar>({a, b, c},
                                                    "product left the carrier")};
    }
    if (!s.equal(s.multiply(ab, c), s.multiply(a, bc))) {
      return SampleFailure{1, value_witness<Scalar>({a, b, c}, "(ab)c != a(bc)")};
    }
    const Element ea = s.source(a);
    if (!s.contains(ea) || !s.equal(s.multiply(a, ea), a) ||
        !s.equal(s.multiply(ea, a), a)) {
      return SampleFailure{2, value_witness<Scalar>({a, ea},
                                                    "a*e(a) or e(a)*a != a")};
    }
    if (!s.equal(s.multiply(ea, ea), ea) || !s.equal(s.source(ea), ea)) {
      return SampleFailure{
          3, value_witness<Scalar>({a, ea}, "e(a) is not idempotent")};
    }
    const Element inv = s.inverse(a);
    if (!s.contains(inv) || !s.equal(s.multiply(a, inv), ea) ||
        !s.equal(s.multiply(inv, a), ea)) {
      return SampleFailure{
          4, value_witness<Scalar>({a, inv}, "a*inv(a) or inv(a)*a != e(a)")};
    }
    return std::nullopt;
  };
  VerificationReport report =
      detail::sampled_report(s.name, names, options, probe, policy);
  report.note({"identity-uniqueness-trusted", true,
               Witness{{}, {}, "uniqueness of e(a) is not sampled"}});
  return report;
}

template <class Scalar>
VerificationReport derived_gg_properties(
    const RuleStructure<Scalar>& s, const SampleOptions& options,
    ExecutionPolicy policy = default_policy()) {
  using Element = Matrix<Scalar>;
  using detail::SampleFailure;
  using detail::value_witness;
  const std::vector<std::string> names = {
      "identity-of-inverse", "identity-idempotent", "identity-squares",
      "inverse-involutive"};
  auto probe = [&](std::mt19937_64& rng) -> std::optional<SampleFailure> {
    const Element a = s.sample(rng);
    const Element ea = s.source(a);
    const Element inv = s.inverse(a);
    if (!s.equal(s.source(inv), ea)) {
      return SampleFailure{0, value_witness<Scalar>({a}, "e(inv(a)) != e(a)")};
    }
    if (!s.equal(s.source(ea), ea)) {
      return SampleFailure{1, value_witness<Scalar>({a}, "e(e(a)) != e(a)")};
    }
    if (!s.equal(s.multiply(ea, ea), ea)) {
      return SampleFailure{2, value_witness<Scalar>({a}, "e(a)*e(a) != e(a)")};
    }
    if (!s.equal(s.inverse(inv), a)) {
      return SampleFailure{3, value_witness<Scalar>({a}, "inv(inv(a)) != a")};
    }
    return std::nullopt;
  };
  return detail::sampled_report(s.name + " derived properties", names, options,
                                probe, policy);
}

template <class Scalar>
PredicateResult is_normal_gg(const RuleStructure<Scalar>& s,
                             const SampleOptions& options,
                             ExecutionPolicy policy = default_policy()) {
  using Element = Matrix<Scalar>;
  using detail::SampleFailure;
  auto probe = [&](std::mt19937_64& rng) -> std::optional<SampleFailure> {
    const Element a = s.sample(rng);
    const Element b = s.sample(rng);
    if (!s.equal(s.source(s.multiply(a, b)),
                 s.multiply(s.source(a), s.source(b)))) {
      return SampleFailure{
          0, detail::value_witness<Scalar>({a, b}, "e(ab) != e(a)e(b)")};
    }
    return std::nullopt;
  };
  VerificationReport r = detail::sampled_report(s.name, {"normal"}, options,
                                                probe, policy);
  const Check& c = r.checks().front();
  return {c.passed, c.witness};
}

/// Sampled f(ab) = f(a)f(b), f(e(a)) = e'(f(a)), f(inv a) = inv'(f(a)).
template <class From, class To>
VerificationReport check_gg_homomorphism(
    const RuleStructure<From>& from, const RuleStructure<To>& to,
    const RuleMorphism<From, To>& f, const SampleOptions& options,
    ExecutionPolicy policy = default_policy()) {
  using Element = Matrix<From>;
  using detail::SampleFailure;
  using detail::value_witness;
  auto probe = [&](std::mt19937_64& rng) -> std::optional<SampleFailure> {
    const Element a = from.sample(rng);
    const Element b = from.sample(rng);
    const auto fa = f.map(a);
    const auto fb = f.map(b);
    if (!to.contains(fa) || !to.contains(fb) ||
        !to.equal(f.map(from.multiply(a, b)), to.multiply(fa, fb))) {
      return SampleFailure{0, value_witness<From>({a, b}, "f(ab) != f(a)f(b)")};
    }
    if (!to.equal(f.map(from.source(a)), to.source(fa))) {
      return SampleFailure{1, value_witness<From>({a}, "f(e(a)) != e(f(a))")};
    }
    if (!to.equal(f.map(from.inverse(a)), to.inverse(fa))) {
      return SampleFailure{2, value_witness<From>({a}, "f(inv(a)) != inv(f(a))")};
    }
    return std::nullopt;
  };
  return detail::sampled_report(
      from.name + " -> " + to.name,
      {"homomorphism-multiplicative", "preserves-identity", "preserves-inverse"},
      options, probe, policy);
}

}  // namespace algf

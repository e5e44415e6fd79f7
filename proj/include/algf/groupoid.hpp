#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algf/kernel.hpp"
#include "algf/rational.hpp"
#include "algf/report.hpp"
#include "algf/rule_structure.hpp"
#include "algf/scan.hpp"
#include "algf/detail/sampled.hpp"

namespace algf {

// ---------------------------------------------------------------------------
// Verification

/// Exhaustive Brandt-groupoid check: source/target surjective onto the
/// units, product defined exactly when target(x) == source(y),
/// associativity including definedness, identities, inverses, injective
/// inversion.  The table's kind is ignored; its source and target are used.
VerificationReport verify_groupoid(const FiniteStructureTable& table,
                                   ExecutionPolicy policy = default_policy());

/// Groupoid axioms plus a single unit.
VerificationReport verify_group(const FiniteStructureTable& table,
                                ExecutionPolicy policy = default_policy());

/// Consequences of the axioms for a certified groupoid: unit fixed points,
/// source/target of products, inversion laws, cancellation, inverse of a
/// product, isotropy groups being groups, isotropy groups at the two ends of
/// an arrow being isomorphic, and all isotropy groups isomorphic when the
/// groupoid is transitive.
VerificationReport derived_property_report(
    const FiniteStructureTable& table,
    ExecutionPolicy policy = default_policy());

struct TransitivityResult {
  bool transitive = false;
  /// First (u, v) in unit order that no arrow joins.
  std::optional<std::pair<ElementIndex, ElementIndex>> missing;
};

TransitivityResult is_transitive(const FiniteStructureTable& table);

template <class Scalar>
TransitivityResult is_transitive(const RuleStructure<Scalar>& s) {
  throw Error(ErrorCode::unsupported_for_rule_structure,
              s.name + ": transitivity cannot be decided from samples");
}

/// Gamma(u) = {x : source(x) = target(x) = u} as a one-unit table.
FiniteStructureTable isotropy_group(const FiniteStructureTable& table,
                                    ElementIndex unit);

/// Is(Gamma) = {x : source(x) = target(x)}, sorted indices.
std::vector<ElementIndex> isotropy_bundle(const FiniteStructureTable& table);

enum class SubstructureClass { not_closed, subgroupoid, wide, normal };

std::string_view to_string(SubstructureClass c);

struct Classification {
  SubstructureClass kind = SubstructureClass::not_closed;
  /// Why the next stronger class does not hold (absent for `normal`).
  std::optional<Witness> witness;
};

/// Strongest class of (K, K0).  Closure means products of composable
/// elements of K and inverses stay in K, and source/target of K is K0;
/// normal additionally needs K0 = Gamma0 and x*a*inv(x) in K whenever
/// defined.  Throws Error(empty_subset).
Classification classify_substructure(const FiniteStructureTable& table,
                                     const std::vector<ElementIndex>& k,
                                     const std::vector<ElementIndex>& k0);

/// Conditions (1) f(xy) = f(x)f(y) on composable pairs and (2)
/// source'/target' compatibility with f0.  Whether both maps are bijective
/// is reported as the note "isomorphism".  Throws Error(map_not_total).
VerificationReport check_groupoid_morphism(const FiniteStructureTable& from,
                                           const FiniteStructureTable& to,
                                           const MorphismPair& morphism);

bool is_isomorphism(const VerificationReport& morphism_report);

// ---------------------------------------------------------------------------
// Examples

/// X x X with (x,y)(y,z) = (x,z).  Throws Error(empty_set).
FiniteStructureTable pair_groupoid(const std::vector<std::string>& points);

/// Pairs of nonzero rationals with source (x, ax), target (y/a, y),
/// (x,y)(y/a,u) = (x,u) and inverse (y/a, ax).  Throws Error(zero_parameter).
RuleStructure<Rational> rstar2_groupoid(const Rational& a);

/// Injective map from a nonempty subset of {0..m-1} into itself.
struct Quasipermutation {
  /// image[i] is f(i), or -1 outside the domain.
  std::vector<int> image;

  std::vector<int> domain() const;
  std::vector<int> range() const;
  friend bool operator==(const Quasipermutation&,
                         const Quasipermutation&) = default;
};

struct SymmetricGroupoid {
  FiniteStructureTable table;
  std::vector<Quasipermutation> maps;  // parallel to table elements
};

/// All quasipermutations of `points`; (f,g) composable when R(f) = D(g),
/// product g o f, source Id_D(f), target Id_R(f).  Throws
/// Error(carrier_too_large) above the guard and Error(empty_set).
SymmetricGroupoid symmetric_groupoid(const std::vector<std::string>& points,
                                     std::size_t max_size_guard = 4);

/// Left translations of a finite groupoid.  `translations` composes as
/// functions: L_a * L_b = L_a o L_b when D(L_a) = R(L_b).
struct CayleyEmbedding {
  FiniteStructureTable translations;
  /// L_a as a partial map on the carrier, kUndefined outside D(L_a).
  std::vector<std::vector<ElementIndex>> maps;
  MorphismPair phi;
  /// Injectivity, morphism conditions, isomorphism onto the translations,
  /// the unit laws L_source(x) o L_x = L_x o L_target(x) = L_x, and closure
  /// of the translations inside the symmetric groupoid of the carrier.
  VerificationReport report;
};

/// Throws Error(carrier_too_large) above `max_size`, Error(not_certified)
/// when the input fails verify_groupoid.
CayleyEmbedding left_translation_groupoid(const FiniteStructureTable& table,
                                          std::size_t max_size = 64);

/// Union of groupoids with pairwise disjoint labels; products only within a
/// summand.  Throws Error(label_collision).
FiniteStructureTable disjoint_union_groupoids(
    const std::vector<FiniteStructureTable>& parts);

/// GL(n; R) as a float rule group; entries drawn in [-2, 2], |det| >= 0.1.
RuleStructure<double> general_linear_group(std::size_t n);

/// GL(1) u ... u GL(n), n <= 3.
RuleStructure<double> general_linear_groupoid(std::size_t n);

/// Nonzero reals as 1x1 float matrices.
RuleStructure<double> nonzero_reals();

/// A -> det(A), units to 1.
RuleMorphism<double, double> determinant_morphism();

// ---------------------------------------------------------------------------
// Sampled checks on rule structures

/// Sampled Brandt-groupoid check.  Sample i draws x, y composable with x,
/// and z composable with xy from sample_rng(seed, i), then checks every
/// axiom instance on them.  Surjectivity is checked as: the source and
/// target of every sampled element are fixed by source and target.
template <class Scalar>
VerificationReport verify_groupoid(const RuleStructure<Scalar>& s,
                                   const SampleOptions& options,
                                   ExecutionPolicy policy = default_policy()) {
  using Element = Matrix<Scalar>;
  using detail::SampleFailure;
  using detail::value_witness;
  const std::vector<std::string> names = {
      "membership", "units",    "associativity",
      "identities", "inverses", "inverse-injective"};
  auto probe = [&](std::mt19937_64& rng) -> std::optional<SampleFailure> {
    const Element x = s.sample(rng);
    const Element y = s.sample_right_partner(x, rng);
    const Element xy = s.multiply(x, y);
    if (!s.contains(xy)) {
      return SampleFailure{0, value_witness<Scalar>({x, y}, "x*y left the carrier")};
    }
    const Element z = s.sample_right_partner(xy, rng);
    for (const Element* e : {&x, &y, &z}) {
      for (const Element& u : {s.source(*e), s.target(*e)}) {
        if (!s.contains(u) || !s.equal(s.source(u), u) ||
            !s.equal(s.target(u), u)) {
          return SampleFailure{
              1, value_witness<Scalar>({*e, u},
                                       "source/target image is not a fixed unit")};
        }
      }
    }
    // Both bracketings, including the definedness direction.
    const bool yz_defined = s.composable(y, z);
    if (!yz_defined) {
      return SampleFailure{
          2, value_witness<Scalar>({x, y, z},
                                   "(x*y)*z is defined but y*z is not")};
    }
    const Element w = s.sample_right_partner(y, rng);
    if (!s.composable(xy, w)) {
      return SampleFailure{
          2, value_witness<Scalar>({x, y, w},
                                   "x*(y*w) is defined but (x*y)*w is not")};
    }
    const Element yz = s.multiply(y, z);
    if (!s.composable(x, yz)) {
      return SampleFailure{
          2, value_witness<Scalar>({x, y, z},
                                   "(x*y)*z is defined but x*(y*z) is not")};
    }
    if (!s.equal(s.multiply(xy, z), s.multiply(x, yz))) {
      return SampleFailure{
          2, value_witness<Scalar>({x, y, z}, "(x*y)*z != x*(y*z)")};
    }
    const Element ax = s.source(x);
    const Element bx = s.target(x);
    if (!s.composable(ax, x) || !s.equal(s.multiply(ax, x), x) ||
        !s.composable(x, bx) || !s.equal(s.multiply(x, bx), x)) {
      return SampleFailure{
          3, value_witness<Scalar>({x}, "source(x)*x or x*target(x) != x")};
    }
    const Element inv = s.inverse(x);
    if (!s.contains(inv) || !s.composable(x, inv) ||
        !s.equal(s.multiply(x, inv), ax) || !s.composable(inv, x) ||
        !s.equal(s.multiply(inv, x), bx)) {
      return SampleFailure{
          4, value_witness<Scalar>(
                 {x, inv}, "x*inv(x) != source(x) or inv(x)*x != target(x)")};
    }
    if (!s.equal(x, y) && s.equal(inv, s.inverse(y))) {
      return SampleFailure{
          5, value_witness<Scalar>({x, y}, "distinct elements share an inverse")};
    }
    return std::nullopt;
  };
  return detail::sampled_report(s.name, names, options, probe, policy);
}

/// Sampled morphism check: f(xy) = f(x)f(y) on sampled composable pairs,
/// source'(f(x)) = f0(source(x)) and target'(f(x)) = f0(target(x)).
template <class From, class To>
VerificationReport check_groupoid_morphism(
    const RuleStructure<From>& from, const RuleStructure<To>& to,
    const RuleMorphism<From, To>& morphism, const SampleOptions& options,
    ExecutionPolicy policy = default_policy()) {
  using Element = Matrix<From>;
  using detail::SampleFailure;
  using detail::value_witness;
  auto probe = [&](std::mt19937_64& rng) -> std::optional<SampleFailure> {
    const Element x = from.sample(rng);
    const Element y = from.sample_right_partner(x, rng);
    const auto fx = morphism.map(x);
    const auto fy = morphism.map(y);
    if (!to.contains(fx) || !to.contains(fy) || !to.composable(fx, fy) ||
        !to.equal(morphism.map(from.multiply(x, y)), to.multiply(fx, fy))) {
      return SampleFailure{0, value_witness<From>({x, y}, "f(x*y) != f(x)*f(y)")};
    }
    if (!to.equal(to.source(fx), morphism.unit_map(from.source(x))) ||
        !to.equal(to.target(fx), morphism.unit_map(from.target(x)))) {
      return SampleFailure{
          1, value_witness<From>(
                 {x}, "source'(f(x)) != f0(source(x)) or target mismatch")};
    }
    return std::nullopt;
  };
  return detail::sampled_report(from.name + " -> " + to.name,
                                {"morphism-multiplicative", "morphism-units"},
                                options, probe, policy);
}

}  // namespace algf

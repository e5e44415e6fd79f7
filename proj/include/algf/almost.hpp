#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algf/kernel.hpp"
#include "algf/report.hpp"
#include "algf/scan.hpp"

namespace algf {

/// Exhaustive almost-groupoid check with theta read from the table's source
/// map (the target map is ignored): theta lands in and hits every unit, the
/// product is defined exactly on theta-equal pairs, AG1 with definedness,
/// AG2 units, AG3 inverses.  Any table may be passed, so a groupoid can be
/// tested against the almost axioms with theta = source.
VerificationReport verify_almost_groupoid(
    const FiniteStructureTable& table,
    ExecutionPolicy policy = default_policy());

/// Consequences for a certified almost groupoid: unit fixed points,
/// theta of products and inverses, theta idempotent, inverse of a product,
/// involutive inversion, symmetric definedness, squares and cubes defined,
/// and the theta-fibers being groups that partition the carrier.
VerificationReport derived_almost_properties(
    const FiniteStructureTable& table,
    ExecutionPolicy policy = default_policy());

/// Same carrier with source = target = theta, kind groupoid.
FiniteStructureTable as_groupoid(const FiniteStructureTable& table);

/// theta^-1(u) as a one-unit almost groupoid.  Throws Error(unit_not_found).
FiniteStructureTable isotropy_group_almost(const FiniteStructureTable& table,
                                           ElementIndex unit);

/// Commutative in the almost-groupoid sense: every isotropy group abelian.
/// Returns the first non-commuting pair inside a fiber, or nullopt.
std::optional<Witness> commutativity_witness(const FiniteStructureTable& table);
bool is_commutative_almost(const FiniteStructureTable& table);

enum class AlmostSubstructureClass { not_sub, sub, wide, normal };

std::string_view to_string(AlmostSubstructureClass c);

struct AlmostClassification {
  AlmostSubstructureClass kind = AlmostSubstructureClass::not_sub;
  std::optional<Witness> witness;  // why the next class fails
};

/// theta(H) = H0, closure under defined products and inversion, wide when
/// H0 = G0, normal when also g*h*inv(g) in H whenever defined.  Throws
/// Error(empty_subset).
AlmostClassification classify_almost_substructure(
    const FiniteStructureTable& table, const std::vector<ElementIndex>& h,
    const std::vector<ElementIndex>& h0);

/// f(m(x,y)) = m'(f(x), f(y)) on composable pairs and theta' o f = f0 o
/// theta; note "isomorphism" when both maps are bijective.
VerificationReport check_almost_morphism(const FiniteStructureTable& from,
                                         const FiniteStructureTable& to,
                                         const MorphismPair& morphism);

/// B2 x Z_n with labels "(a,c)", theta(a,c) = (a,0).  Throws
/// Error(nonpositive_n).
FiniteStructureTable b2_zn_almost_groupoid(long long n);

/// G0 with theta = inverse = identity and u*u = u.  Throws Error(empty_set).
FiniteStructureTable null_almost_groupoid(const std::vector<std::string>& units);

}  // namespace algf

#pragma once

#include <functional>
#include <vector>

#include "algf/kernel.hpp"
#include "algf/report.hpp"

namespace algf {

/// Carrier union; products only inside one summand.  Throws
/// Error(label_collision).
FiniteStructureTable disjoint_union_almost(const FiniteStructureTable& g,
                                           const FiniteStructureTable& h);

/// G1 x G2 with componentwise product, theta1 x theta2, inv1 x inv2.
/// Element (x1, x2) sits at index x1 * |G2| + x2 with label "(x1,x2)".
FiniteStructureTable direct_product_almost(const FiniteStructureTable& g1,
                                           const FiniteStructureTable& g2);

/// A map G x H -> H stored densely: act[g * h_size + h].
struct AlmostAction {
  std::size_t h_size = 0;
  std::vector<ElementIndex> act;

  ElementIndex operator()(ElementIndex g, ElementIndex h) const {
    return act[static_cast<std::size_t>(g) * h_size + h];
  }
};

AlmostAction make_action(
    const FiniteStructureTable& g, const FiniteStructureTable& h,
    const std::function<ElementIndex(ElementIndex, ElementIndex)>& fn);

/// g . h = h.
AlmostAction trivial_action(const FiniteStructureTable& g,
                            const FiniteStructureTable& h);

/// Action axioms (1)-(4) plus closure-compatibility
/// theta2(g . h) = theta2(h).  Axiom (3) is read as: every h has some g with
/// theta1(g) . h = h; the stronger reading (every unit acts trivially on
/// every h) is the note "axiom-3-every-unit".  Throws Error(map_not_total).
VerificationReport verify_action(const FiniteStructureTable& g,
                                 const FiniteStructureTable& h,
                                 const AlmostAction& action);

/// G x H with (g1,h1)(g2,h2) = (g1 g2, h1 (g1 . h2)) on pairs that are
/// theta-equal in both coordinates, theta(g,h) = (theta1 g, theta2 h) and
/// inv(g,h) = (inv1 g, inv1(g) . inv2(h)).  Indexing and labels as in
/// direct_product_almost.  Throws Error(action_verification_failed).
FiniteStructureTable semidirect_product(const FiniteStructureTable& g,
                                        const FiniteStructureTable& h,
                                        const AlmostAction& action);

}  // namespace algf

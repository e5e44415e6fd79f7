#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algf/kernel.hpp"
#include "algf/scan.hpp"

namespace algf {

inline constexpr std::size_t kCanonicalFormLimit = 8;
inline constexpr std::size_t kMaxAlmostOrder = 6;
inline constexpr std::size_t kMaxGeneralizedOrder = 4;
inline constexpr std::size_t kIsomorphismLimit = 64;

/// Lexicographically least relabeled (source, target, product, inverse)
/// over all carrier permutations that send the units to the first
/// positions.  The kind is not part of the form: a one-unit table is a
/// group whichever kind it was built as.
struct CanonicalForm {
  std::size_t size = 0;
  std::size_t unit_count = 0;
  std::vector<ElementIndex> code;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string str() const;
};

/// Throws Error(order_too_large) above kCanonicalFormLimit elements.
CanonicalForm canonical_form(const FiniteStructureTable& table,
                             ExecutionPolicy policy = default_policy());

/// Reference permutation order used by canonical_form: index i decodes to
/// the i-th permutation with units first, units and non-units each in
/// lexicographic order.
std::vector<ElementIndex> nth_unit_preserving_permutation(
    const std::vector<ElementIndex>& units,
    const std::vector<ElementIndex>& others, std::size_t index);

struct IsotropyEntry {
  std::size_t fiber_size = 0;   // |source^-1(u)|
  std::size_t group_order = 0;  // |Gamma(u)|
  /// Canonical form of Gamma(u), or its element-order profile when the
  /// group is above kCanonicalFormLimit.
  std::string group;

  auto operator<=>(const IsotropyEntry&) const = default;
};

/// Sorted multiset of per-unit entries.
struct IsotropySignature {
  std::vector<IsotropyEntry> entries;

  std::size_t total_fiber_size() const;
  std::string str() const;
  auto operator<=>(const IsotropySignature&) const = default;
};

IsotropySignature isotropy_signature(const FiniteStructureTable& table);

/// Structure-preserving bijection (f, f0), or nullopt.  Kinds must agree
/// unless both tables have a single unit.  Throws Error(kind_mismatch),
/// Error(carrier_too_large) above kIsomorphismLimit.
std::optional<MorphismPair> are_isomorphic(const FiniteStructureTable& a,
                                           const FiniteStructureTable& b);

/// Every group table on {0..n-1} with identity 0, as one-unit almost
/// groupoids.  Throws Error(order_too_large) above kMaxAlmostOrder.
std::vector<FiniteStructureTable> enumerate_groups(std::size_t n);

/// Almost groupoids of order n with k units up to isomorphism, sorted by
/// canonical form.  Fibers are laid out as consecutive blocks; each block
/// takes every group table of its size.  `fiber_sizes` restricts to one
/// multiset of fiber sizes.  Throws Error(order_too_large), Error(usage).
std::vector<FiniteStructureTable> enumerate_almost_groupoids(
    std::size_t n, std::size_t k,
    const std::optional<std::vector<std::size_t>>& fiber_sizes = std::nullopt,
    ExecutionPolicy policy = default_policy());

/// Associative total tables of order n, found by backtracking with
/// associativity pruning.
std::vector<std::vector<ElementIndex>> enumerate_semigroup_tables(
    std::size_t n);

/// Generalized groups of order n up to isomorphism, sorted by canonical
/// form.  Throws Error(order_too_large) above kMaxGeneralizedOrder.
std::vector<FiniteStructureTable> enumerate_generalized_groups(
    std::size_t n, ExecutionPolicy policy = default_policy());

/// Builds a generalized-group table from a total product when every element
/// has exactly one local identity and an inverse; nullopt otherwise.
std::optional<FiniteStructureTable> generalized_group_from_product(
    const std::vector<ElementIndex>& product, std::size_t n);

}  // namespace algf

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algf {

using ElementIndex = std::uint32_t;
inline constexpr ElementIndex kUndefined =
    std::numeric_limits<ElementIndex>::max();

enum class StructureKind { groupoid, almost_groupoid, generalized_group };

std::string_view to_string(StructureKind kind);
std::optional<StructureKind> parse_kind(std::string_view text);

struct ElementId {
  ElementIndex index = 0;
  std::string label;

  friend bool operator==(const ElementId&, const ElementId&) = default;
};

/// Index-based input for the table builder.  For almost groupoids pass theta
/// as both source and target; for generalized groups pass e as both and leave
/// `units` empty (it is derived as the image of e).  `product` is a dense
/// size x size array holding kUndefined outside the composable set.
struct RawTable {
  StructureKind kind = StructureKind::groupoid;
  std::vector<std::string> labels;
  std::vector<ElementIndex> units;
  std::vector<ElementIndex> source;
  std::vector<ElementIndex> target;
  std::vector<ElementIndex> inverse;
  std::vector<ElementIndex> product;
};

struct ProductEntry {
  std::string left;
  std::string right;
  std::string result;
};

/// Label-based input, the shape structure files use.
struct TableSpec {
  StructureKind kind = StructureKind::groupoid;
  std::vector<std::string> elements;
  std::vector<std::string> units;
  std::map<std::string, std::string> source;
  std::map<std::string, std::string> target;
  std::map<std::string, std::string> inverse;
  std::vector<ProductEntry> product;
};

/// Finite carrier with unit set, structure maps and a partial product.  The
/// builder guarantees: labels unique, units a nonempty subset landing point
/// of source and target, inverse total, and the product defined exactly on
/// the composable set of the declared kind.  Algebraic axioms are not
/// checked here; that is the verifiers' job.
class FiniteStructureTable {
 public:
  StructureKind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }

  const std::string& label(ElementIndex x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  ElementId element(ElementIndex x) const { return {x, label(x)}; }
  std::vector<ElementId> elements() const;

  /// Throws Error(element_not_in_carrier).
  ElementIndex index_of(std::string_view label) const;
  std::optional<ElementIndex> find(std::string_view label) const;

  const std::vector<ElementIndex>& units() const { return units_; }
  bool is_unit(ElementIndex x) const { return unit_flags_[x] != 0; }

  ElementIndex source(ElementIndex x) const { return source_[x]; }
  ElementIndex target(ElementIndex x) const { return target_[x]; }
  ElementIndex inverse(ElementIndex x) const { return inverse_[x]; }
  /// theta for almost groupoids, e for generalized groups.
  ElementIndex unit_of(ElementIndex x) const { return source_[x]; }

  const std::vector<ElementIndex>& source_map() const { return source_; }
  const std::vector<ElementIndex>& target_map() const { return target_; }
  const std::vector<ElementIndex>& inverse_map() const { return inverse_; }
  const std::vector<ElementIndex>& product_array() const { return product_; }

  /// Composability under the table's own kind, from the structure maps only.
  bool composable(ElementIndex x, ElementIndex y) const;

  /// Stored entry, kUndefined when absent.  No kind-based composability test.
  ElementIndex entry(ElementIndex x, ElementIndex y) const {
    return product_[static_cast<std::size_t>(x) * size() + y];
  }

  /// m(x, y) when composable, nullopt otherwise.  Throws
  /// Error(element_not_in_carrier) for indices outside the carrier.
  std::optional<ElementIndex> lookup_product(ElementIndex x,
                                             ElementIndex y) const;

  RawTable raw() const;

  friend bool operator==(const FiniteStructureTable&,
                         const FiniteStructureTable&) = default;

 private:
  friend FiniteStructureTable build_finite_table(RawTable raw);

  StructureKind kind_ = StructureKind::groupoid;
  std::vector<std::string> labels_;
  std::map<std::string, ElementIndex, std::less<>> index_;
  std::vector<ElementIndex> units_;
  std::vector<char> unit_flags_;
  std::vector<ElementIndex> source_;
  std::vector<ElementIndex> target_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> product_;
};

/// A map on elements plus a map on units.  `unit_map[i]` is the image of
/// the i-th entry of the domain's units().
struct MorphismPair {
  std::vector<ElementIndex> element_map;
  std::vector<ElementIndex> unit_map;
};

/// The morphism pair induced by an element map that sends units to units.
MorphismPair induced_pair(const FiniteStructureTable& domain,
                          std::vector<ElementIndex> element_map);

FiniteStructureTable build_finite_table(RawTable raw);
FiniteStructureTable build_finite_table(const TableSpec& spec);

/// Label-level lookup; nullopt when the pair is not composable.
std::optional<ElementId> lookup_product(const FiniteStructureTable& table,
                                        const ElementId& x,
                                        const ElementId& y);

/// Rebuilds the same data under another kind.  Throws the builder's errors
/// when the product does not match the new kind's composable set.
FiniteStructureTable reinterpret(const FiniteStructureTable& table,
                                 StructureKind kind);

/// Same structure with every label prefixed.
FiniteStructureTable with_label_prefix(const FiniteStructureTable& table,
                                       std::string_view prefix);

/// Substructure on `subset` (sorted, deduplicated indices), with the units
/// that lie in it.  Caller guarantees closure.
FiniteStructureTable restrict_to(const FiniteStructureTable& table,
                                 const std::vector<ElementIndex>& subset,
                                 StructureKind kind);

/// Z_n with labels "0".."n-1" as a one-unit table of the given kind.
FiniteStructureTable cyclic_group(std::size_t n,
                                  StructureKind kind =
                                      StructureKind::almost_groupoid,
                                  std::string_view prefix = "");

}  // namespace algf

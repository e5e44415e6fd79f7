#include "algf/kernel.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "algf/error.hpp"

namespace algf {

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::groupoid: return "groupoid";
    case StructureKind::almost_groupoid: return "almost_groupoid";
    case StructureKind::generalized_group: return "generalized_group";
  }
  return "unknown";
}

std::optional<StructureKind> parse_kind(std::string_view text) {
  if (text == "groupoid") return StructureKind::groupoid;
  if (text == "almost_groupoid" || text == "almost") {
    return StructureKind::almost_groupoid;
  }
  if (text == "generalized_group" || text == "gengroup") {
    return StructureKind::generalized_group;
  }
  return std::nullopt;
}

std::vector<ElementId> FiniteStructureTable::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (ElementIndex x = 0; x < size(); ++x) out.push_back(element(x));
  return out;
}

std::optional<ElementIndex> FiniteStructureTable::find(
    std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex FiniteStructureTable::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorCode::element_not_in_carrier,
              "no element labelled '" + std::string(label) + "'");
}

bool FiniteStructureTable::composable(ElementIndex x, ElementIndex y) const {
  switch (kind_) {
    case StructureKind::groupoid: return target_[x] == source_[y];
    case StructureKind::almost_groupoid: return source_[x] == source_[y];
    case StructureKind::generalized_group: return true;
  }
  return false;
}

std::optional<ElementIndex> FiniteStructureTable::lookup_product(
    ElementIndex x, ElementIndex y) const {
  if (x >= size() || y >= size()) {
    throw Error(ErrorCode::element_not_in_carrier,
                "index outside carrier of size " + std::to_string(size()));
  }
  if (!composable(x, y)) return std::nullopt;
  return entry(x, y);
}

RawTable FiniteStructureTable::raw() const {
  return RawTable{kind_, labels_, units_, source_, target_, inverse_,
                  product_};
}

namespace {

bool composable_in(StructureKind kind, const RawTable& raw, ElementIndex x,
                   ElementIndex y) {
  switch (kind) {
    case StructureKind::groupoid: return raw.target[x] == raw.source[y];
    case StructureKind::almost_groupoid: return raw.source[x] == raw.source[y];
    case StructureKind::generalized_group: return true;
  }
  return false;
}

void require_total(const std::vector<ElementIndex>& map, std::size_t n,
                   const char* name) {
  if (map.size() != n) {
    throw Error(ErrorCode::map_not_total,
                std::string(name) + " has " + std::to_string(map.size()) +
                    " entries for " + std::to_string(n) + " elements");
  }
  for (ElementIndex v : map) {
    if (v >= n) {
      throw Error(ErrorCode::map_not_total,
                  std::string(name) + " points outside the carrier");
    }
  }
}

}  // namespace

FiniteStructureTable build_finite_table(RawTable raw) {
  const std::size_t n = raw.labels.size();
  if (n == 0) throw Error(ErrorCode::empty_set, "carrier is empty");

  FiniteStructureTable t;
  t.kind_ = raw.kind;
  for (ElementIndex x = 0; x < n; ++x) {
    if (!t.index_.emplace(raw.labels[x], x).second) {
      throw Error(ErrorCode::duplicate_label,
                  "label '" + raw.labels[x] + "' appears twice");
    }
  }

  require_total(raw.source, n, "source");
  require_total(raw.target, n, "target");
  require_total(raw.inverse, n, "inverse");

  if (raw.kind != StructureKind::groupoid && raw.source != raw.target) {
    throw Error(ErrorCode::source_target_mismatch,
                std::string(to_string(raw.kind)) +
                    " needs a single unit map (source == target)");
  }
  if (raw.kind == StructureKind::generalized_group) {
    raw.units.assign(raw.source.begin(), raw.source.end());
  }
  std::sort(raw.units.begin(), raw.units.end());
  raw.units.erase(std::unique(raw.units.begin(), raw.units.end()),
                  raw.units.end());
  if (raw.units.empty()) {
    throw Error(ErrorCode::unit_not_in_elements, "unit set is empty");
  }
  t.unit_flags_.assign(n, 0);
  for (ElementIndex u : raw.units) {
    if (u >= n) {
      throw Error(ErrorCode::unit_not_in_elements,
                  "unit index outside the carrier");
    }
    t.unit_flags_[u] = 1;
  }
  for (ElementIndex x = 0; x < n; ++x) {
    if (!t.unit_flags_[raw.source[x]] || !t.unit_flags_[raw.target[x]]) {
      throw Error(ErrorCode::map_not_into_units,
                  "source/target of '" + raw.labels[x] + "' is not a unit");
    }
  }

  if (raw.product.size() != n * n) {
    throw Error(ErrorCode::map_not_total, "product array has wrong size");
  }
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      const ElementIndex z = raw.product[std::size_t{x} * n + y];
      const bool composable = composable_in(raw.kind, raw, x, y);
      if (z == kUndefined) {
        if (composable) {
          throw Error(ErrorCode::product_entry_missing,
                      "no product for composable pair (" + raw.labels[x] +
                          ", " + raw.labels[y] + ")");
        }
        continue;
      }
      if (z >= n) {
        throw Error(ErrorCode::element_not_in_carrier,
                    "product of (" + raw.labels[x] + ", " + raw.labels[y] +
                        ") outside the carrier");
      }
      if (!composable) {
        throw Error(ErrorCode::product_entry_outside_composable_set,
                    "(" + raw.labels[x] + ", " + raw.labels[y] +
                        ") is not composable");
      }
    }
  }

  t.labels_ = std::move(raw.labels);
  t.units_ = std::move(raw.units);
  t.source_ = std::move(raw.source);
  t.target_ = std::move(raw.target);
  t.inverse_ = std::move(raw.inverse);
  t.product_ = std::move(raw.product);
  return t;
}

FiniteStructureTable build_finite_table(const TableSpec& spec) {
  RawTable raw;
  raw.kind = spec.kind;
  raw.labels = spec.elements;
  const std::size_t n = raw.labels.size();

  std::map<std::string, ElementIndex, std::less<>> index;
  for (ElementIndex x = 0; x < n; ++x) {
    if (!index.emplace(raw.labels[x], x).second) {
      throw Error(ErrorCode::duplicate_label,
                  "label '" + raw.labels[x] + "' appears twice");
    }
  }
  auto resolve = [&](const std::string& label, ErrorCode code,
                     const std::string& where) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw Error(code, where + " refers to unknown element '" + label + "'");
    }
    return it->second;
  };
  auto resolve_map = [&](const std::map<std::string, std::string>& map,
                         const char* name) {
    std::vector<ElementIndex> out(n, kUndefined);
    for (const auto& [from, to] : map) {
      out[resolve(from, ErrorCode::element_not_in_carrier, name)] =
          resolve(to, ErrorCode::element_not_in_carrier, name);
    }
    for (ElementIndex x = 0; x < n; ++x) {
      if (out[x] == kUndefined) {
        throw Error(ErrorCode::map_not_total, std::string(name) +
                                                  " has no value for '" +
                                                  raw.labels[x] + "'");
      }
    }
    return out;
  };

  if (spec.kind != StructureKind::generalized_group) {
    for (const auto& u : spec.units) {
      raw.units.push_back(resolve(u, ErrorCode::unit_not_in_elements, "units"));
    }
  }
  raw.source = resolve_map(spec.source, "source");
  raw.target = resolve_map(spec.target, "target");
  raw.inverse = resolve_map(spec.inverse, "inverse");
  if (spec.kind != StructureKind::generalized_group) {
    for (ElementIndex x = 0; x < n; ++x) {
      for (ElementIndex u : {raw.source[x], raw.target[x]}) {
        if (std::find(raw.units.begin(), raw.units.end(), u) ==
            raw.units.end()) {
          throw Error(ErrorCode::map_not_into_units,
                      "source/target of '" + raw.labels[x] +
                          "' is not a unit");
        }
      }
    }
  }

  raw.product.assign(n * n, kUndefined);
  for (std::size_t i = 0; i < spec.product.size(); ++i) {
    const auto& e = spec.product[i];
    const std::string where = "product entry " + std::to_string(i);
    try {
      const auto x = resolve(e.left, ErrorCode::element_not_in_carrier, where);
      const auto y = resolve(e.right, ErrorCode::element_not_in_carrier, where);
      const auto z =
          resolve(e.result, ErrorCode::element_not_in_carrier, where);
      ElementIndex& slot = raw.product[x * n + y];
      if (slot != kUndefined) {
        throw Error(ErrorCode::duplicate_product_entry,
                    where + " repeats (" + e.left + ", " + e.right + ")", i);
      }
      if (!composable_in(spec.kind, raw, x, y)) {
        throw Error(ErrorCode::product_entry_outside_composable_set,
                    where + " (" + e.left + ", " + e.right + ", " + e.result +
                        ") is outside the composable set",
                    i);
      }
      slot = z;
    } catch (const Error& err) {
      if (err.item()) throw;
      throw Error(err.code(), err.message(), i);
    }
  }
  return build_finite_table(std::move(raw));
}

std::optional<ElementId> lookup_product(const FiniteStructureTable& table,
                                        const ElementId& x,
                                        const ElementId& y) {
  const ElementIndex xi = table.index_of(x.label);
  const ElementIndex yi = table.index_of(y.label);
  if (auto z = table.lookup_product(xi, yi)) return table.element(*z);
  return std::nullopt;
}

FiniteStructureTable reinterpret(const FiniteStructureTable& table,
                                 StructureKind kind) {
  RawTable raw = table.raw();
  raw.kind = kind;
  return build_finite_table(std::move(raw));
}

FiniteStructureTable with_label_prefix(const FiniteStructureTable& table,
                                       std::string_view prefix) {
  RawTable raw = table.raw();
  for (auto& label : raw.labels) label = std::string(prefix) + label;
  return build_finite_table(std::move(raw));
}

FiniteStructureTable restrict_to(const FiniteStructureTable& table,
                                 const std::vector<ElementIndex>& subset,
                                 StructureKind kind) {
  std::vector<ElementIndex> position(table.size(), kUndefined);
  for (ElementIndex i = 0; i < subset.size(); ++i) position[subset[i]] = i;
  auto local = [&](ElementIndex x) {
    if (x == kUndefined || position[x] == kUndefined) {
      throw Error(ErrorCode::element_not_in_carrier,
                  "subset is not closed under the structure maps");
    }
    return position[x];
  };

  RawTable raw;
  raw.kind = kind;
  const std::size_t m = subset.size();
  for (ElementIndex x : subset) {
    raw.labels.push_back(table.label(x));
    if (table.is_unit(x)) raw.units.push_back(position[x]);
    raw.source.push_back(local(table.source(x)));
    raw.target.push_back(local(table.target(x)));
    raw.inverse.push_back(local(table.inverse(x)));
  }
  raw.product.assign(m * m, kUndefined);
  for (ElementIndex i = 0; i < m; ++i) {
    for (ElementIndex j = 0; j < m; ++j) {
      const ElementIndex z = table.entry(subset[i], subset[j]);
      if (z != kUndefined) raw.product[i * m + j] = local(z);
    }
  }
  return build_finite_table(std::move(raw));
}

MorphismPair induced_pair(const FiniteStructureTable& domain,
                          std::vector<ElementIndex> element_map) {
  MorphismPair pair;
  for (ElementIndex u : domain.units()) {
    pair.unit_map.push_back(u < element_map.size() ? element_map[u]
                                                   : kUndefined);
  }
  pair.element_map = std::move(element_map);
  return pair;
}

FiniteStructureTable cyclic_group(std::size_t n, StructureKind kind,
                                  std::string_view prefix) {
  if (n == 0) throw Error(ErrorCode::nonpositive_n, "Z_0 is not a group");
  RawTable raw;
  raw.kind = kind;
  raw.units = {0};
  for (ElementIndex a = 0; a < n; ++a) {
    raw.labels.push_back(std::string(prefix) + std::to_string(a));
    raw.source.push_back(0);
    raw.target.push_back(0);
    raw.inverse.push_back(static_cast<ElementIndex>((n - a) % n));
  }
  raw.product.resize(n * n);
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      raw.product[a * n + b] = static_cast<ElementIndex>((a + b) % n);
    }
  }
  return build_finite_table(std::move(raw));
}

}  // namespace algf

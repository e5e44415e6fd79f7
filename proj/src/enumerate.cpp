#include "algf/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "algf/almost.hpp"
#include "algf/error.hpp"
#include "algf/gengroup.hpp"

namespace algf {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// index-th permutation of `items` in lexicographic order of positions.
std::vector<ElementIndex> nth_permutation(std::vector<ElementIndex> items,
                                          std::size_t index) {
  std::vector<ElementIndex> out;
  out.reserve(items.size());
  while (!items.empty()) {
    const std::size_t block = factorial(items.size() - 1);
    const std::size_t pick = index / block;
    index %= block;
    out.push_back(items[pick]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

// Relabeled (source, target, product, inverse) where new element j is old
// element perm[j].
std::vector<ElementIndex> relabeled_code(const FiniteStructureTable& t,
                                         const std::vector<ElementIndex>& perm) {
  const std::size_t n = t.size();
  std::vector<ElementIndex> back(n);
  for (ElementIndex j = 0; j < n; ++j) back[perm[j]] = j;
  std::vector<ElementIndex> code;
  code.reserve(3 * n + n * n);
  for (ElementIndex j = 0; j < n; ++j) code.push_back(back[t.source(perm[j])]);
  for (ElementIndex j = 0; j < n; ++j) code.push_back(back[t.target(perm[j])]);
  for (ElementIndex i = 0; i < n; ++i) {
    for (ElementIndex j = 0; j < n; ++j) {
      const ElementIndex z = t.entry(perm[i], perm[j]);
      code.push_back(z == kUndefined ? kUndefined : back[z]);
    }
  }
  for (ElementIndex j = 0; j < n; ++j) code.push_back(back[t.inverse(perm[j])]);
  return code;
}

std::string join_code(const std::vector<ElementIndex>& code) {
  std::string s;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += ',';
    s += code[i] == kUndefined ? std::string("-") : std::to_string(code[i]);
  }
  return s;
}

FiniteStructureTable group_from_cayley(const std::vector<ElementIndex>& mul,
                                       std::size_t n) {
  RawTable raw;
  raw.kind = StructureKind::almost_groupoid;
  raw.units = {0};
  raw.product = mul;
  for (ElementIndex a = 0; a < n; ++a) {
    raw.labels.push_back(std::to_string(a));
    raw.source.push_back(0);
    for (ElementIndex b = 0; b < n; ++b) {
      if (mul[a * n + b] == 0) {
        raw.inverse.push_back(b);
        break;
      }
    }
  }
  raw.target = raw.source;
  return build_finite_table(std::move(raw));
}

// Deduplicates candidates by canonical form; the first candidate of each
// class (in input order) is kept.  Output sorted by canonical form.
std::vector<FiniteStructureTable> dedupe(
    std::vector<FiniteStructureTable> candidates, ExecutionPolicy policy) {
  std::vector<std::optional<CanonicalForm>> forms(candidates.size());
  scan::for_each_index(
      candidates.size(),
      [&](std::size_t i) {
        forms[i] = canonical_form(candidates[i], ExecutionPolicy::serial);
      },
      policy);
  std::map<CanonicalForm, std::size_t> first;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    first.emplace(*forms[i], i);
  }
  std::vector<FiniteStructureTable> out;
  out.reserve(first.size());
  for (const auto& [form, i] : first) out.push_back(std::move(candidates[i]));
  return out;
}

void partitions(std::size_t n, std::size_t k, std::size_t max_part,
                std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(current);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    if (n - p < k - 1) continue;
    current.push_back(p);
    partitions(n - p, k - 1, p, current, out);
    current.pop_back();
  }
}

// Cheap isomorphism invariants of one element.
using ElementInvariant =
    std::tuple<bool, std::size_t, std::size_t, bool, std::size_t>;

std::vector<ElementInvariant> element_invariants(const FiniteStructureTable& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> from(n, 0);
  std::vector<std::size_t> to(n, 0);
  for (ElementIndex x = 0; x < n; ++x) {
    ++from[t.source(x)];
    ++to[t.target(x)];
  }
  std::vector<ElementInvariant> inv(n);
  for (ElementIndex x = 0; x < n; ++x) {
    // Smallest k with x^k a unit, 0 when powers become undefined or never
    // reach one.
    std::size_t order = 0;
    ElementIndex p = x;
    for (std::size_t k = 1; k <= n; ++k) {
      if (t.is_unit(p)) {
        order = k;
        break;
      }
      p = t.entry(p, x);
      if (p == kUndefined) break;
    }
    inv[x] = {t.is_unit(x), from[t.source(x)], to[t.target(x)],
              t.source(x) == t.target(x), order};
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteStructureTable& a, const FiniteStructureTable& b)
      : a_(a), b_(b), ia_(element_invariants(a)), ib_(element_invariants(b)) {
    for (ElementIndex u : a.units()) order_.push_back(u);
    for (ElementIndex x = 0; x < a.size(); ++x) {
      if (!a.is_unit(x)) order_.push_back(x);
    }
    f_.assign(a.size(), kUndefined);
    used_.assign(b.size(), 0);
  }

  std::optional<std::vector<ElementIndex>> run() {
    if (search(0)) return f_;
    return std::nullopt;
  }

 private:
  ElementIndex image(ElementIndex x) const { return f_[x]; }

  // Every relation between x and already-mapped elements is preserved.
  bool consistent(ElementIndex x) const {
    const ElementIndex y = f_[x];
    auto same = [&](ElementIndex ax, ElementIndex by) {
      return image(ax) == kUndefined || image(ax) == by;
    };
    if (!same(a_.source(x), b_.source(y)) ||
        !same(a_.target(x), b_.target(y)) ||
        !same(a_.inverse(x), b_.inverse(y))) {
      return false;
    }
    for (ElementIndex z = 0; z < a_.size(); ++z) {
      if (f_[z] == kUndefined) continue;
      // relations where x appears as an output
      if (a_.inverse(z) == x && b_.inverse(f_[z]) != y) return false;
      const ElementIndex w = f_[z];
      const ElementIndex xz = a_.entry(x, z);
      const ElementIndex yw = b_.entry(y, w);
      if ((xz == kUndefined) != (yw == kUndefined)) return false;
      if (xz != kUndefined && !same(xz, yw)) return false;
      const ElementIndex zx = a_.entry(z, x);
      const ElementIndex wy = b_.entry(w, y);
      if ((zx == kUndefined) != (wy == kUndefined)) return false;
      if (zx != kUndefined && !same(zx, wy)) return false;
    }
    return true;
  }

  bool full_check() const {
    const std::size_t n = a_.size();
    for (ElementIndex x = 0; x < n; ++x) {
      const ElementIndex y = f_[x];
      if (f_[a_.source(x)] != b_.source(y) ||
          f_[a_.target(x)] != b_.target(y) ||
          f_[a_.inverse(x)] != b_.inverse(y) || a_.is_unit(x) != b_.is_unit(y)) {
        return false;
      }
      for (ElementIndex z = 0; z < n; ++z) {
        const ElementIndex xz = a_.entry(x, z);
        const ElementIndex yw = b_.entry(y, f_[z]);
        if (xz == kUndefined ? yw != kUndefined : yw != f_[xz]) return false;
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return full_check();
    const ElementIndex x = order_[depth];
    for (ElementIndex y = 0; y < b_.size(); ++y) {
      if (used_[y] || ia_[x] != ib_[y]) continue;
      f_[x] = y;
      used_[y] = 1;
      if (consistent(x) && search(depth + 1)) return true;
      used_[y] = 0;
      f_[x] = kUndefined;
    }
    return false;
  }

  const FiniteStructureTable& a_;
  const FiniteStructureTable& b_;
  std::vector<ElementInvariant> ia_;
  std::vector<ElementInvariant> ib_;
  std::vector<ElementIndex> order_;
  std::vector<ElementIndex> f_;
  std::vector<char> used_;
};

}  // namespace

std::string CanonicalForm::str() const {
  return "n=" + std::to_string(size) + ";units=" + std::to_string(unit_count) +
         ";" + join_code(code);
}

std::vector<ElementIndex> nth_unit_preserving_permutation(
    const std::vector<ElementIndex>& units,
    const std::vector<ElementIndex>& others, std::size_t index) {
  const std::size_t block = factorial(others.size());
  std::vector<ElementIndex> perm = nth_permutation(units, index / block);
  std::vector<ElementIndex> rest = nth_permutation(others, index % block);
  perm.insert(perm.end(), rest.begin(), rest.end());
  return perm;
}

CanonicalForm canonical_form(const FiniteStructureTable& table,
                             ExecutionPolicy policy) {
  const std::size_t n = table.size();
  if (n > kCanonicalFormLimit) {
    throw Error(ErrorCode::order_too_large,
                "canonical form is limited to " +
                    std::to_string(kCanonicalFormLimit) + " elements");
  }
  const std::vector<ElementIndex>& units = table.units();
  std::vector<ElementIndex> others;
  for (ElementIndex x = 0; x < n; ++x) {
    if (!table.is_unit(x)) others.push_back(x);
  }
  const std::size_t count = factorial(units.size()) * factorial(others.size());
  auto best = scan::minimum<std::vector<ElementIndex>>(
      count,
      [&](std::size_t i) -> std::optional<std::vector<ElementIndex>> {
        return relabeled_code(
            table, nth_unit_preserving_permutation(units, others, i));
      },
      policy);
  return CanonicalForm{n, units.size(), std::move(best->second)};
}

std::size_t IsotropySignature::total_fiber_size() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.fiber_size;
  return total;
}

std::string IsotropySignature::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += "; ";
    s += "fiber " + std::to_string(entries[i].fiber_size) + ", group order " +
         std::to_string(entries[i].group_order) + ", " + entries[i].group;
  }
  return s + "]";
}

IsotropySignature isotropy_signature(const FiniteStructureTable& table) {
  IsotropySignature sig;
  for (ElementIndex u : table.units()) {
    IsotropyEntry entry;
    std::vector<ElementIndex> members;
    for (ElementIndex x = 0; x < table.size(); ++x) {
      if (table.source(x) == u) ++entry.fiber_size;
      if (table.source(x) == u && table.target(x) == u) members.push_back(x);
    }
    entry.group_order = members.size();
    try {
      const FiniteStructureTable group =
          restrict_to(table, members, StructureKind::almost_groupoid);
      if (group.size() <= kCanonicalFormLimit) {
        entry.group = canonical_form(group, ExecutionPolicy::serial).str();
      } else {
        std::vector<std::size_t> orders;
        for (const auto& inv : element_invariants(group)) {
          orders.push_back(std::get<4>(inv));
        }
        std::sort(orders.begin(), orders.end());
        entry.group = "element orders";
        for (std::size_t o : orders) entry.group += " " + std::to_string(o);
      }
    } catch (const Error&) {
      entry.group = "not a subgroup";
    }
    sig.entries.push_back(std::move(entry));
  }
  std::sort(sig.entries.begin(), sig.entries.end());
  return sig;
}

std::optional<MorphismPair> are_isomorphic(const FiniteStructureTable& a,
                                           const FiniteStructureTable& b) {
  if (a.kind() != b.kind() &&
      !(a.units().size() == 1 && b.units().size() == 1)) {
    throw Error(ErrorCode::kind_mismatch,
                std::string(to_string(a.kind())) + " vs " +
                    std::string(to_string(b.kind())));
  }
  if (a.size() > kIsomorphismLimit || b.size() > kIsomorphismLimit) {
    throw Error(ErrorCode::carrier_too_large,
                "isomorphism search is limited to " +
                    std::to_string(kIsomorphismLimit) + " elements");
  }
  if (a.size() != b.size() || a.units().size() != b.units().size()) {
    return std::nullopt;
  }
  auto sorted_invariants = [](const FiniteStructureTable& t) {
    auto v = element_invariants(t);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted_invariants(a) != sorted_invariants(b)) return std::nullopt;
  auto f = IsoSearch(a, b).run();
  if (!f) return std::nullopt;
  return induced_pair(a, std::move(*f));
}

std::vector<FiniteStructureTable> enumerate_groups(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::usage, "order must be positive");
  if (n > kMaxAlmostOrder) {
    throw Error(ErrorCode::order_too_large,
                "group enumeration is limited to order " +
                    std::to_string(kMaxAlmostOrder));
  }
  std::vector<ElementIndex> mul(n * n, kUndefined);
  for (ElementIndex i = 0; i < n; ++i) {
    mul[i] = i;
    mul[i * n] = i;
  }
  std::vector<FiniteStructureTable> out;
  auto associative = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (mul[mul[x * n + y] * n + z] != mul[x * n + mul[y * n + z]]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  // Latin-square fill of the cells off the identity row and column.
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    if (cell == n * n) {
      if (associative()) out.push_back(group_from_cayley(mul, n));
      return;
    }
    const std::size_t r = cell / n;
    const std::size_t c = cell % n;
    if (r == 0 || c == 0) {
      self(self, cell + 1);
      return;
    }
    for (ElementIndex v = 0; v < n; ++v) {
      bool clash = false;
      for (std::size_t k = 0; k < c && !clash; ++k) clash = mul[r * n + k] == v;
      for (std::size_t k = 0; k < r && !clash; ++k) clash = mul[k * n + c] == v;
      if (clash) continue;
      mul[cell] = v;
      self(self, cell + 1);
    }
    mul[cell] = kUndefined;
  };
  fill(fill, 0);
  return out;
}

std::vector<FiniteStructureTable> enumerate_almost_groupoids(
    std::size_t n, std::size_t k,
    const std::optional<std::vector<std::size_t>>& fiber_sizes,
    ExecutionPolicy policy) {
  if (n > kMaxAlmostOrder) {
    throw Error(ErrorCode::order_too_large,
                "almost-groupoid enumeration is limited to order " +
                    std::to_string(kMaxAlmostOrder));
  }
  if (n == 0 || k == 0 || k > n) {
    throw Error(ErrorCode::usage, "need 1 <= k <= n");
  }
  std::vector<std::vector<std::size_t>> shapes;
  if (fiber_sizes) {
    std::vector<std::size_t> shape = *fiber_sizes;
    std::sort(shape.rbegin(), shape.rend());
    const std::size_t total =
        std::accumulate(shape.begin(), shape.end(), std::size_t{0});
    if (shape.size() != k || total != n ||
        std::find(shape.begin(), shape.end(), 0) != shape.end()) {
      throw Error(ErrorCode::usage,
                  "fiber sizes must be k positive parts summing to n");
    }
    shapes.push_back(std::move(shape));
  } else {
    std::vector<std::size_t> current;
    partitions(n, k, n, current, shapes);
  }

  std::map<std::size_t, std::vector<FiniteStructureTable>> groups;
  std::vector<FiniteStructureTable> candidates;
  for (const auto& shape : shapes) {
    for (std::size_t s : shape) {
      if (!groups.count(s)) groups.emplace(s, enumerate_groups(s));
    }
    std::vector<std::size_t> pick(shape.size(), 0);
    while (true) {
      RawTable raw;
      raw.kind = StructureKind::almost_groupoid;
      raw.product.assign(n * n, kUndefined);
      ElementIndex start = 0;
      for (std::size_t b = 0; b < shape.size(); ++b) {
        const FiniteStructureTable& g = groups.at(shape[b])[pick[b]];
        raw.units.push_back(start);
        for (ElementIndex i = 0; i < shape[b]; ++i) {
          raw.source.push_back(start);
          raw.inverse.push_back(start + g.inverse(i));
          for (ElementIndex j = 0; j < shape[b]; ++j) {
            raw.product[(start + i) * n + start + j] = start + g.entry(i, j);
          }
        }
        start += static_cast<ElementIndex>(shape[b]);
      }
      for (ElementIndex x = 0; x < n; ++x) {
        raw.labels.push_back(std::to_string(x));
      }
      raw.target = raw.source;
      candidates.push_back(build_finite_table(std::move(raw)));

      std::size_t b = 0;
      while (b < shape.size() && ++pick[b] == groups.at(shape[b]).size()) {
        pick[b++] = 0;
      }
      if (b == shape.size()) break;
    }
  }
  std::vector<FiniteStructureTable> verified;
  for (auto& c : candidates) {
    if (verify_almost_groupoid(c, ExecutionPolicy::serial).passed()) {
      verified.push_back(std::move(c));
    }
  }
  return dedupe(std::move(verified), policy);
}

std::vector<std::vector<ElementIndex>> enumerate_semigroup_tables(
    std::size_t n) {
  if (n == 0) throw Error(ErrorCode::usage, "order must be positive");
  if (n > kMaxGeneralizedOrder) {
    throw Error(ErrorCode::order_too_large,
                "semigroup enumeration is limited to order " +
                    std::to_string(kMaxGeneralizedOrder));
  }
  std::vector<ElementIndex> mul(n * n, kUndefined);
  std::vector<std::vector<ElementIndex>> out;
  // Every fully assigned triple is associative.
  auto consistent = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const ElementIndex xy = mul[x * n + y];
        if (xy == kUndefined) continue;
        for (std::size_t z = 0; z < n; ++z) {
          const ElementIndex yz = mul[y * n + z];
          if (yz == kUndefined) continue;
          const ElementIndex left = mul[xy * n + z];
          const ElementIndex right = mul[x * n + yz];
          if (left != kUndefined && right != kUndefined && left != right) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    if (cell == n * n) {
      out.push_back(mul);
      return;
    }
    for (ElementIndex v = 0; v < n; ++v) {
      mul[cell] = v;
      if (consistent()) self(self, cell + 1);
    }
    mul[cell] = kUndefined;
  };
  fill(fill, 0);
  return out;
}

std::optional<FiniteStructureTable> generalized_group_from_product(
    const std::vector<ElementIndex>& product, std::size_t n) {
  if (product.size() != n * n || n == 0) return std::nullopt;
  auto m = [&](ElementIndex x, ElementIndex y) { return product[x * n + y]; };
  RawTable raw;
  raw.kind = StructureKind::generalized_group;
  raw.product = product;
  for (ElementIndex a = 0; a < n; ++a) {
    std::optional<ElementIndex> e;
    for (ElementIndex c = 0; c < n; ++c) {
      if (m(a, c) == a && m(c, a) == a) {
        if (e) return std::nullopt;
        e = c;
      }
    }
    if (!e) return std::nullopt;
    std::optional<ElementIndex> inv;
    for (ElementIndex b = 0; b < n && !inv; ++b) {
      if (m(a, b) == *e && m(b, a) == *e) inv = b;
    }
    if (!inv) return std::nullopt;
    raw.labels.push_back(std::to_string(a));
    raw.source.push_back(*e);
    raw.inverse.push_back(*inv);
  }
  raw.target = raw.source;
  return build_finite_table(std::move(raw));
}

std::vector<FiniteStructureTable> enumerate_generalized_groups(
    std::size_t n, ExecutionPolicy policy) {
  if (n > kMaxGeneralizedOrder) {
    throw Error(ErrorCode::order_too_large,
                "generalized-group enumeration is limited to order " +
                    std::to_string(kMaxGeneralizedOrder));
  }
  std::vector<FiniteStructureTable> found;
  for (const auto& mul : enumerate_semigroup_tables(n)) {
    auto gg = generalized_group_from_product(mul, n);
    if (gg && verify_generalized_group(*gg, ExecutionPolicy::serial).passed()) {
      found.push_back(std::move(*gg));
    }
  }
  return dedupe(std::move(found), policy);
}

}  // namespace algf

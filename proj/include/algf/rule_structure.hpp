#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algf/error.hpp"
#include "algf/kernel.hpp"
#include "algf/matrix.hpp"

namespace algf {

enum class ValueDomain {
  rational_pair,
  rational_matrix_2x2,
  rational_matrix_3x3,
  rational_scalar,
  float_matrix,
  float_scalar,
};

std::string_view to_string(ValueDomain domain);

inline constexpr int kSamplerRetryBudget = 1000;

/// Independent generator for sample `index` of a run seeded with `seed`, so
/// sampled checks can be split across workers without changing the draws.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

struct SampleOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

/// Structure on an infinite carrier given by rules.  Elements are small
/// matrices; equality is exact for rationals and within kFloatTolerance for
/// doubles.  For generalized groups source and target both hold e and
/// `composable` is always true.
template <class Scalar>
struct RuleStructure {
  using Element = Matrix<Scalar>;

  std::string name;
  StructureKind kind = StructureKind::groupoid;
  ValueDomain domain = ValueDomain::rational_pair;

  std::function<bool(const Element&)> contains;
  std::function<Element(const Element&)> source;
  std::function<Element(const Element&)> target;
  std::function<Element(const Element&)> inverse;
  std::function<bool(const Element&, const Element&)> composable;
  /// Only called on composable pairs.
  std::function<Element(const Element&, const Element&)> multiply;
  /// Raw candidate generator; sample() filters through `contains`.
  std::function<Element(std::mt19937_64&)> draw;
  /// Optional: candidate whose source is the given unit.  Without it,
  /// composable partners are found by rejection.
  std::function<Element(const Element&, std::mt19937_64&)> draw_with_source;

  bool equal(const Element& a, const Element& b) const { return same(a, b); }

  std::optional<Element> product(const Element& x, const Element& y) const {
    if (!composable(x, y)) return std::nullopt;
    return multiply(x, y);
  }

  Element sample(std::mt19937_64& rng) const {
    for (int attempt = 0; attempt < kSamplerRetryBudget; ++attempt) {
      Element candidate = draw(rng);
      if (contains(candidate)) return candidate;
    }
    throw Error(ErrorCode::sampler_exhausted,
                name + ": no member found within the retry budget");
  }

  /// A member y with (x, y) composable.
  Element sample_right_partner(const Element& x, std::mt19937_64& rng) const {
    const Element anchor =
        kind == StructureKind::groupoid ? target(x) : source(x);
    for (int attempt = 0; attempt < kSamplerRetryBudget; ++attempt) {
      Element candidate =
          draw_with_source ? draw_with_source(anchor, rng) : draw(rng);
      if (contains(candidate) && composable(x, candidate)) return candidate;
    }
    throw Error(ErrorCode::sampler_exhausted,
                name + ": no composable partner within the retry budget");
  }
};

template <class Scalar>
using ComposablePair =
    std::pair<typename RuleStructure<Scalar>::Element,
              typename RuleStructure<Scalar>::Element>;

/// `count` composable pairs; pair i is drawn from sample_rng(seed, i).
template <class Scalar>
std::vector<ComposablePair<Scalar>> sample_composable_pairs(
    const RuleStructure<Scalar>& s, std::uint64_t seed, std::size_t count) {
  if (count == 0) {
    throw Error(ErrorCode::usage, "sample count must be at least 1");
  }
  std::vector<ComposablePair<Scalar>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = sample_rng(seed, i);
    auto x = s.sample(rng);
    auto y = s.sample_right_partner(x, rng);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

/// Element map plus unit map between rule structures.
template <class From, class To>
struct RuleMorphism {
  std::string name;
  std::function<Matrix<To>(const Matrix<From>&)> map;
  std::function<Matrix<To>(const Matrix<From>&)> unit_map;
};

/// Disjoint union of rule structures whose memberships do not overlap (the
/// parts are told apart by `contains`).  Products only inside one part.
template <class Scalar>
RuleStructure<Scalar> disjoint_union_rule(
    std::string name, std::vector<RuleStructure<Scalar>> parts) {
  using Element = Matrix<Scalar>;
  if (parts.empty()) throw Error(ErrorCode::empty_set, "no summands");
  auto shared = std::make_shared<std::vector<RuleStructure<Scalar>>>(
      std::move(parts));
  auto part_of = [shared](const Element& x) -> const RuleStructure<Scalar>* {
    for (const auto& p : *shared) {
      if (p.contains(x)) return &p;
    }
    return nullptr;
  };
  RuleStructure<Scalar> out;
  out.name = std::move(name);
  out.kind = shared->front().kind;
  out.domain = shared->front().domain;
  out.contains = [part_of](const Element& x) { return part_of(x) != nullptr; };
  out.source = [part_of](const Element& x) { return part_of(x)->source(x); };
  out.target = [part_of](const Element& x) { return part_of(x)->target(x); };
  out.inverse = [part_of](const Element& x) { return part_of(x)->inverse(x); };
  out.composable = [part_of](const Element& x, const Element& y) {
    const auto* p = part_of(x);
    return p != nullptr && p == part_of(y) && p->composable(x, y);
  };
  out.multiply = [part_of](const Element& x, const Element& y) {
    return part_of(x)->multiply(x, y);
  };
  out.draw = [shared](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, shared->size() - 1);
    return (*shared)[pick(rng)].sample(rng);
  };
  out.draw_with_source = [part_of](const Element& unit, std::mt19937_64& rng) {
    const auto* p = part_of(unit);
    if (p->draw_with_source) return p->draw_with_source(unit, rng);
    return p->sample(rng);
  };
  return out;
}

}  // namespace algf

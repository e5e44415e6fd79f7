#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algf/kernel.hpp"
#include "algf/report.hpp"
#include "algf/scan.hpp"

namespace algf::detail {

/// Check names differ between the groupoid and almost-groupoid vocabularies.
struct AxiomNames {
  std::string maps_into_units;
  std::string source_surjective;
  std::string target_surjective;  // empty: single unit map, checked once
  std::string product_outside;
  std::string composable_undefined;
  std::string associativity;
  std::string identities;
  std::string inverses;
  std::string inverse_injective;  // empty: not required
};

/// Exhaustive check of a partial product read from the table's stored
/// entries against composability tgt(x) == src(y).  Scans run in carrier
/// (lexicographic) order and each failing check carries its first witness.
VerificationReport verify_partial_structure(
    const FiniteStructureTable& table, const std::vector<ElementIndex>& src,
    const std::vector<ElementIndex>& tgt, const AxiomNames& names,
    ExecutionPolicy policy);

/// Adds `name` as passed, or failed with describe(first failing index).
template <class Failing, class Describe>
void record_scan(VerificationReport& report, const std::string& name,
                 std::size_t count, Failing&& failing, Describe&& describe,
                 ExecutionPolicy policy) {
  if (auto bad = scan::first_failure(count, failing, policy)) {
    report.add_fail(name, describe(*bad));
  } else {
    report.add_pass(name);
  }
}

/// Lowest failing associativity triple over stored entries, as the flat index
/// x*n*n + y*n + z.  Shared by every verifier and the benchmark.
std::optional<std::size_t> first_nonassociative_triple(
    const FiniteStructureTable& table, ExecutionPolicy policy);

}  // namespace algf::detail

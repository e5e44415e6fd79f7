#include "algf/error.hpp"

namespace algf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_label: return "duplicate-label";
    case ErrorCode::map_not_total: return "map-not-total";
    case ErrorCode::product_entry_outside_composable_set:
      return "product-entry-outside-composable-set";
    case ErrorCode::product_entry_missing: return "product-entry-missing";
    case ErrorCode::unit_not_in_elements: return "unit-not-in-elements";
    case ErrorCode::element_not_in_carrier: return "element-not-in-carrier";
    case ErrorCode::unit_not_found: return "unit-not-found";
    case ErrorCode::sampler_exhausted: return "sampler-exhausted";
    case ErrorCode::unsupported_for_rule_structure:
      return "unsupported-for-rule-structure";
    case ErrorCode::empty_set: return "empty-set";
    case ErrorCode::empty_subset: return "empty-subset";
    case ErrorCode::zero_parameter: return "zero-parameter";
    case ErrorCode::carrier_too_large: return "carrier-too-large";
    case ErrorCode::label_collision: return "label-collision";
    case ErrorCode::nonpositive_n: return "nonpositive-n";
    case ErrorCode::action_verification_failed:
      return "action-verification-failed";
    case ErrorCode::order_too_large: return "order-too-large";
    case ErrorCode::kind_mismatch: return "kind-mismatch";
    case ErrorCode::syntax_error: return "syntax-error";
    case ErrorCode::schema_violation: return "schema-violation";
    case ErrorCode::unknown_subcommand: return "unknown-subcommand";
    case ErrorCode::file_not_found: return "file-not-found";
    case ErrorCode::usage: return "usage";
    case ErrorCode::map_not_into_units: return "map-not-into-units";
    case ErrorCode::source_target_mismatch: return "source-target-mismatch";
    case ErrorCode::duplicate_product_entry: return "duplicate-product-entry";
    case ErrorCode::not_certified: return "not-certified";
  }
  return "unknown";
}

}  // namespace algf

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace algf {

enum class ErrorCode {
  duplicate_label,
  map_not_total,
  product_entry_outside_composable_set,
  product_entry_missing,
  unit_not_in_elements,
  element_not_in_carrier,
  unit_not_found,
  sampler_exhausted,
  unsupported_for_rule_structure,
  empty_set,
  empty_subset,
  zero_parameter,
  carrier_too_large,
  label_collision,
  nonpositive_n,
  action_verification_failed,
  order_too_large,
  kind_mismatch,
  syntax_error,
  schema_violation,
  unknown_subcommand,
  file_not_found,
  usage,
  map_not_into_units,
  source_target_mismatch,
  duplicate_product_entry,
  not_certified,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> item = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message),
        item_(item) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

  // Position of the offending input item (e.g. product entry), if known.
  std::optional<std::size_t> item() const noexcept { return item_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> item_;
};

}  // namespace algf

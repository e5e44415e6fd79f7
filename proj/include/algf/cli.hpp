#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algf/constructions.hpp"
#include "algf/kernel.hpp"

namespace algf::cli {

/// Structure file (JSON):
///   kind      "groupoid" | "almost_groupoid" | "generalized_group"
///   elements  [label, ...]
///   units     [label, ...]            (not for generalized_group)
///   source, target {label: label}     (groupoid)
///   theta     {label: label}          (almost_groupoid)
///   e         {label: label}          (generalized_group)
///   inverse   {label: label}
///   product   [[x, y, x*y], ...]      (defined pairs only)
/// Unknown fields are rejected.  Throws Error(syntax_error) with line:column,
/// Error(schema_violation) with a JSON pointer; kernel errors keep their
/// code and gain the pointer of the offending item.
FiniteStructureTable parse_structure_file(std::string_view text,
                                          std::string_view origin = "<input>");

/// Reads and parses a file.  Throws Error(file_not_found).
FiniteStructureTable load_structure_file(const std::string& path);

/// The inverse of parse_structure_file; field order and product order are
/// fixed, so equal tables serialize to equal text.
std::string serialize(const FiniteStructureTable& table);

/// JSON list of [g, h, g . h] label triples covering G x H.
AlmostAction parse_action_file(std::string_view text,
                               const FiniteStructureTable& g,
                               const FiniteStructureTable& h,
                               std::string_view origin = "<action>");

struct CommandResult {
  int exit_code = 0;
  std::string output;       // report, unless written to --out
  std::string diagnostics;  // for stderr
};

/// Exit 0 on success, 1 when a verification fails or structures are not
/// isomorphic, 2 on usage and input errors.  `args` excludes the program
/// name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace algf::cli

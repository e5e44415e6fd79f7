#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algf/kernel.hpp"

namespace algf {

/// The offending elements of a failed check and the equality that broke.
/// `indices` is filled for finite structures so the failure can be
/// re-evaluated; rule structures carry formatted values only.
struct Witness {
  std::vector<std::string> elements;
  std::vector<ElementIndex> indices;
  std::string detail;
};

struct Check {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject)
      : subject_(std::move(subject)) {}

  void add(Check check) { checks_.push_back(std::move(check)); }
  void add_pass(std::string name) {
    checks_.push_back({std::move(name), true, std::nullopt});
  }
  void add_fail(std::string name, Witness witness) {
    checks_.push_back({std::move(name), false, std::move(witness)});
  }

  /// Informational results that do not take part in the verdict.
  void note(Check check) { notes_.push_back(std::move(check)); }

  void append(const VerificationReport& other);

  bool passed() const;
  const Check* first_failure() const;
  const Check* find(std::string_view name) const;
  const Check* find_note(std::string_view name) const;

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<Check>& notes() const { return notes_; }

 private:
  std::string subject_;
  std::vector<Check> checks_;
  std::vector<Check> notes_;
};

/// Witness built from finite-table indices.
Witness make_witness(const FiniteStructureTable& table,
                     std::vector<ElementIndex> indices, std::string detail);

}  // namespace algf

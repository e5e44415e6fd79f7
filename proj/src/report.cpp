#include "algf/report.hpp"

namespace algf {

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Check* VerificationReport::find_note(std::string_view name) const {
  for (const auto& c : notes_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Witness make_witness(const FiniteStructureTable& table,
                     std::vector<ElementIndex> indices, std::string detail) {
  Witness w;
  for (ElementIndex x : indices) w.elements.push_back(table.label(x));
  w.indices = std::move(indices);
  w.detail = std::move(detail);
  return w;
}

}  // namespace algf

#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algf/error.hpp"
#include "algf/matrix.hpp"
#include "algf/report.hpp"
#include "algf/rule_structure.hpp"
#include "algf/scan.hpp"

namespace algf::detail {

struct SampleFailure {
  std::size_t check = 0;  // index into the check names
  Witness witness;
};

template <class Scalar>
Witness value_witness(std::vector<Matrix<Scalar>> values, std::string detail) {
  Witness w;
  for (const auto& v : values) w.elements.push_back(v.str());
  w.detail = std::move(detail);
  return w;
}

/// Runs probe(rng) once per sample with rng = sample_rng(seed, i).  A probe
/// returns the first check it saw fail on that sample.  Each named check
/// reports the lowest-numbered sample that failed it, so the report does not
/// depend on the policy.  Exceptions from the probes are rethrown for the
/// lowest failing sample.
template <class Probe>
VerificationReport sampled_report(std::string subject,
                                  const std::vector<std::string>& names,
                                  const SampleOptions& options, Probe&& probe,
                                  ExecutionPolicy policy) {
  if (options.samples == 0) {
    throw Error(ErrorCode::usage, "sample count must be at least 1");
  }
  std::vector<std::optional<SampleFailure>> failures(options.samples);
  std::vector<std::exception_ptr> errors(options.samples);
  scan::for_each_index(
      options.samples,
      [&](std::size_t i) {
        try {
          auto rng = sample_rng(options.seed, i);
          failures[i] = probe(rng);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      },
      policy);
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  VerificationReport report(std::move(subject));
  for (std::size_t c = 0; c < names.size(); ++c) {
    const SampleFailure* first = nullptr;
    for (const auto& f : failures) {
      if (f && f->check == c) {
        first = &*f;
        break;
      }
    }
    if (first) {
      report.add_fail(names[c], first->witness);
    } else {
      report.add_pass(names[c]);
    }
  }
  return report;
}

}  // namespace algf::detail

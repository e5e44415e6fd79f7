#include "algf/rule_structure.hpp"

namespace algf {

std::string_view to_string(ValueDomain domain) {
  switch (domain) {
    case ValueDomain::rational_pair: return "rational-pair";
    case ValueDomain::rational_matrix_2x2: return "rational-matrix-2x2";
    case ValueDomain::rational_matrix_3x3: return "rational-matrix-3x3";
    case ValueDomain::rational_scalar: return "rational-scalar";
    case ValueDomain::float_matrix: return "float-matrix";
    case ValueDomain::float_scalar: return "float-scalar";
  }
  return "unknown";
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace algf

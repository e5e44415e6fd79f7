#include "algf/scan.hpp"

#include <atomic>

namespace algf {

namespace {
std::atomic<ExecutionPolicy> g_policy{ExecutionPolicy::parallel};
}

ExecutionPolicy default_policy() { return g_policy.load(); }

void set_default_policy(ExecutionPolicy policy) { g_policy.store(policy); }

}  // namespace algf

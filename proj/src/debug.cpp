#include "quantoid/debug.hpp"

#include <atomic>

namespace quantoid {
namespace {

#ifdef NDEBUG
std::atomic<bool> g_debug_checks{false};
#else
std::atomic<bool> g_debug_checks{true};
#endif

}  // namespace

bool debug_checks() noexcept { return g_debug_checks.load(std::memory_order_relaxed); }

void set_debug_checks(bool enabled) noexcept {
  g_debug_checks.store(enabled, std::memory_order_relaxed);
}

}  // namespace quantoid

#pragma once

namespace quantoid {

// Process-wide switch for the expensive internal cross-checks (all-pairs
// submodularity, full minimization in expansions, polyquantoid/hat sharing
// agreement, simplified duality form). Defaults to on in non-NDEBUG builds.
bool debug_checks() noexcept;
void set_debug_checks(bool enabled) noexcept;

class ScopedDebugChecks {
 public:
  explicit ScopedDebugChecks(bool enabled) : previous_(debug_checks()) {
    set_debug_checks(enabled);
  }
  ~ScopedDebugChecks() { set_debug_checks(previous_); }
  ScopedDebugChecks(const ScopedDebugChecks&) = delete;
  ScopedDebugChecks& operator=(const ScopedDebugChecks&) = delete;

 private:
  bool previous_;
};

}  // namespace quantoid

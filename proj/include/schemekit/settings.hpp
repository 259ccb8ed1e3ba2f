#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <optional>

namespace schemekit {

class GroebnerBasis;

/// Per-thread engine knobs used by the CLI: basis-completion tracing and a soft deadline.
struct EngineSettings {
  std::ostream* gb_trace = nullptr;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Called with every basis the engine completes on this thread.
  std::function<void(const GroebnerBasis&)> basis_observer;
};

EngineSettings& engine_settings();

/// Throws TimeBudgetExceeded once the current thread's deadline has passed.
void check_deadline();

/// Installs a deadline `seconds` from now for the lifetime of the scope.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(double seconds);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> saved_;
};

}  // namespace schemekit

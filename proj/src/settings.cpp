#include "schemekit/settings.hpp"

#include "schemekit/error.hpp"

namespace schemekit {

EngineSettings& engine_settings() {
  thread_local EngineSettings settings;
  return settings;
}

void check_deadline() {
  const auto& d = engine_settings().deadline;
  if (d && std::chrono::steady_clock::now() > *d) throw TimeBudgetExceeded();
}

ScopedDeadline::ScopedDeadline(double seconds) : saved_(engine_settings().deadline) {
  const auto budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(seconds));
  engine_settings().deadline = std::chrono::steady_clock::now() + budget;
}

ScopedDeadline::~ScopedDeadline() { engine_settings().deadline = saved_; }

}  // namespace schemekit

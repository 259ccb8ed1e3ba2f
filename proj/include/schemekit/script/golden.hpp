#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schemekit/script/interpreter.hpp"

namespace schemekit::script {

/// Expected-output lines: one record per line; blank lines and `#` comments are skipped.
std::vector<std::string> read_expected(std::string_view text);

/// Parses `ideal 1`, `ideal x`, `ideal (f, g)` or `ideal(f, g)` in `ring`.
Ideal parse_ideal_line(const RingPtr& ring, std::string_view line);

struct GoldenMismatch {
  /// Zero-based record index; equals the shorter length on a count mismatch.
  std::size_t record;
  std::string expected;
  std::string actual;
};

/// Lines starting with `ideal` are compared by ideal equality in the actual value's
/// ring; every other line must match the printed record exactly.
std::optional<GoldenMismatch> compare_golden(const std::vector<OutputRecord>& actual,
                                             const std::vector<std::string>& expected);

}  // namespace schemekit::script

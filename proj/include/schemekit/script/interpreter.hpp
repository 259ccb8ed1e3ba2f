#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schemekit/script/ast.hpp"
#include "schemekit/script/value.hpp"

namespace schemekit::script {

/// Evaluation failure at a known source position.
class RuntimeError : public Error {
 public:
  RuntimeError(SourcePos pos, const std::string& message)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}
  [[nodiscard]] SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct OutputRecord {
  std::size_t statement;
  SourcePos pos;
  Value value;
  std::string text;
};

struct InterpreterOptions {
  /// Soft time budget for each statement, enforced inside basis computations.
  std::optional<double> max_seconds_per_statement;
};

/// Evaluates scripts statement by statement against a global environment.
///
/// Statements not ending in `;` produce an output record, assignments included.
/// Assigning or evaluating a ring makes its variables visible, as does `use R`.
class Interpreter {
 public:
  explicit Interpreter(InterpreterOptions options = {});

  /// Runs every statement, handing each output record to `sink` as it is produced.
  /// Throws RuntimeError at the first failing statement.
  void run(const Script& script, const std::function<void(const OutputRecord&)>& sink);

  /// Convenience wrapper collecting the records.
  std::vector<OutputRecord> run(const Script& script);

  [[nodiscard]] const RingPtr& current_ring() const { return current_ring_; }

 private:
  friend class Evaluator;

  Value eval(const Node& node);
  void use_ring(const Value& ring_value);

  InterpreterOptions options_;
  std::map<std::string, Value> globals_;
  RingPtr current_ring_;
};

/// Parses and runs a whole script.
std::vector<OutputRecord> evaluate_source(std::string_view source, InterpreterOptions options = {});

}  // namespace schemekit::script

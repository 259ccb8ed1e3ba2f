#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "schemekit/error.hpp"

namespace schemekit::script {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Syntax error carrying the offending position.
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}
  [[nodiscard]] SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

enum class NodeKind {
  Number,     // text: decimal digits
  String,     // text: contents without quotes
  Identifier, // text: name
  List,       // children: items of {...}
  Sequence,   // children: items of a parenthesized comma list, or () when empty
  RingDecl,   // text: "QQ" or "ZZ"; children: items between the brackets
  Unary,      // text: "-"; children: operand
  Binary,     // text: operator; children: left, right
  Apply,      // children: function, argument (juxtaposition or call syntax)
  Subscript,  // children: base, index (the `_` operator)
};

struct Node {
  NodeKind kind;
  SourcePos pos;
  std::string text;
  std::vector<std::unique_ptr<Node>> children;
};
using NodePtr = std::unique_ptr<Node>;

struct Statement {
  SourcePos pos;
  /// Empty for a bare expression.
  std::string target;
  NodePtr expr;
  /// A trailing `;` suppresses the output record.
  bool silent = false;
};

struct Script {
  std::vector<Statement> statements;
};

Script parse_script(std::string_view source);

/// Canonical source text: every compound subexpression is parenthesized, so the
/// output reparses to a structurally identical tree.
std::string to_source(const Script& script);
std::string to_source(const Node& node);

/// Structural equality ignoring source positions.
bool same_tree(const Node& a, const Node& b);
bool same_script(const Script& a, const Script& b);

}  // namespace schemekit::script

#include <cctype>
#include <string>

#include "schemekit/script/ast.hpp"

namespace schemekit::script {

namespace {

enum class Tok { Number, String, Ident, Op, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Operators after which a line break continues the statement.
bool continues_line(const Token& t) {
  if (t.kind != Tok::Op) return false;
  return t.text != ")" && t.text != "}" && t.text != "]" && t.text != ";";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    int depth = 0;
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == '\n') {
        const bool suppressed = depth > 0 || (!out.empty() && continues_line(out.back()));
        if (!suppressed && (out.empty() || out.back().kind != Tok::Newline)) out.push_back({Tok::Newline, "\n", here()});
        advance();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      if (c == '-' && peek(1) == '-') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
        continue;
      }
      const SourcePos pos = here();
      if (is_digit(c)) {
        std::string text;
        while (i_ < src_.size() && is_digit(src_[i_])) text += take();
        out.push_back({Tok::Number, text, pos});
        continue;
      }
      if (is_ident_start(c)) {
        std::string text;
        while (i_ < src_.size() && is_ident_char(src_[i_])) text += take();
        // Subscripted names such as y_0 are single identifiers.
        while (i_ + 1 < src_.size() && src_[i_] == '_' && is_digit(src_[i_ + 1])) {
          text += take();
          while (i_ < src_.size() && is_digit(src_[i_])) text += take();
        }
        out.push_back({Tok::Ident, text, pos});
        continue;
      }
      if (c == '"') {
        advance();
        std::string text;
        for (;;) {
          if (i_ >= src_.size() || src_[i_] == '\n') throw ParseError(pos, "unterminated string literal");
          char d = take();
          if (d == '"') break;
          if (d == '\\') {
            if (i_ >= src_.size()) throw ParseError(pos, "unterminated string literal");
            d = take();
          }
          text += d;
        }
        out.push_back({Tok::String, text, pos});
        continue;
      }
      static const char* const kOps[] = {"||", "**", "==", "!=", "=>", "..", "+", "-", "*", "/", "^", "_", "|",
                                         ":", "=", ",", ";", "(", ")", "{", "}", "[", "]"};
      bool matched = false;
      for (const char* op : kOps) {
        const std::string_view sv(op);
        if (src_.substr(i_, sv.size()) == sv) {
          for (std::size_t k = 0; k < sv.size(); ++k) advance();
          if (sv == "(" || sv == "{" || sv == "[") ++depth;
          if (sv == ")" || sv == "}" || sv == "]") depth = depth > 0 ? depth - 1 : 0;
          out.push_back({Tok::Op, std::string(sv), pos});
          matched = true;
          break;
        }
      }
      if (!matched) throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", here()});
    return out;
  }

 private:
  [[nodiscard]] char peek(std::size_t k) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }
  [[nodiscard]] SourcePos here() const { return {line_, col_}; }
  char take() {
    const char c = src_[i_];
    advance();
    return c;
  }
  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

NodePtr make(NodeKind kind, SourcePos pos, std::string text = {}) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->pos = pos;
  n->text = std::move(text);
  return n;
}

NodePtr make_binary(const std::string& op, NodePtr l, NodePtr r) {
  auto n = make(NodeKind::Binary, l->pos, op);
  n->children.push_back(std::move(l));
  n->children.push_back(std::move(r));
  return n;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script run() {
    Script script;
    for (;;) {
      while (is_op(";") || cur().kind == Tok::Newline) ++p_;
      if (cur().kind == Tok::End) break;
      Statement st;
      st.pos = cur().pos;
      if (cur().kind == Tok::Ident && next().kind == Tok::Op && next().text == "=") {
        st.target = cur().text;
        p_ += 2;
      }
      st.expr = expr();
      if (is_op(";")) {
        st.silent = true;
        ++p_;
      } else if (cur().kind != Tok::Newline && cur().kind != Tok::End) {
        fail("unexpected " + describe(cur()));
      }
      script.statements.push_back(std::move(st));
    }
    return script;
  }

 private:
  [[nodiscard]] const Token& cur() const { return toks_[p_]; }
  [[nodiscard]] const Token& next() const { return toks_[std::min(p_ + 1, toks_.size() - 1)]; }
  [[nodiscard]] bool is_op(std::string_view op) const { return cur().kind == Tok::Op && cur().text == op; }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::Newline: return "end of line";
      case Tok::End: return "end of input";
      case Tok::String: return "string \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur().pos, msg); }

  void expect(std::string_view op) {
    if (!is_op(op)) fail("expected '" + std::string(op) + "' but found " + describe(cur()));
    ++p_;
  }

  NodePtr expr() { return option(); }

  NodePtr option() {
    NodePtr l = equality();
    if (is_op("=>")) {
      ++p_;
      return make_binary("=>", std::move(l), option());
    }
    return l;
  }

  NodePtr equality() {
    NodePtr l = range();
    if (is_op("==") || is_op("!=")) {
      const std::string op = cur().text;
      ++p_;
      return make_binary(op, std::move(l), range());
    }
    return l;
  }

  NodePtr range() {
    NodePtr l = vconcat();
    if (is_op("..")) {
      ++p_;
      return make_binary("..", std::move(l), vconcat());
    }
    return l;
  }

  NodePtr vconcat() {
    NodePtr l = hconcat();
    while (is_op("||")) {
      ++p_;
      l = make_binary("||", std::move(l), hconcat());
    }
    return l;
  }

  NodePtr hconcat() {
    NodePtr l = colon();
    while (is_op("|")) {
      ++p_;
      l = make_binary("|", std::move(l), colon());
    }
    return l;
  }

  NodePtr colon() {
    NodePtr l = sum();
    while (is_op(":")) {
      ++p_;
      l = make_binary(":", std::move(l), sum());
    }
    return l;
  }

  NodePtr sum() {
    NodePtr l = product();
    while (is_op("+") || is_op("-")) {
      const std::string op = cur().text;
      ++p_;
      l = make_binary(op, std::move(l), product());
    }
    return l;
  }

  NodePtr product() {
    NodePtr l = application();
    while (is_op("*") || is_op("/") || is_op("**")) {
      const std::string op = cur().text;
      ++p_;
      l = make_binary(op, std::move(l), application());
    }
    return l;
  }

  [[nodiscard]] bool starts_primary() const {
    const Token& t = cur();
    return t.kind == Tok::Number || t.kind == Tok::String || t.kind == Tok::Ident ||
           (t.kind == Tok::Op && (t.text == "(" || t.text == "{"));
  }

  NodePtr application() {
    if (is_op("-")) {
      const SourcePos pos = cur().pos;
      ++p_;
      auto n = make(NodeKind::Unary, pos, "-");
      n->children.push_back(application());
      return n;
    }
    NodePtr f = postfix();
    if (!starts_primary()) return f;
    auto n = make(NodeKind::Apply, f->pos);
    n->children.push_back(std::move(f));
    n->children.push_back(application());
    return n;
  }

  NodePtr postfix() {
    NodePtr base = primary();
    for (;;) {
      if (is_op("^")) {
        ++p_;
        base = make_binary("^", std::move(base), exponent());
      } else if (is_op("_")) {
        ++p_;
        auto n = make(NodeKind::Subscript, base->pos);
        n->children.push_back(std::move(base));
        n->children.push_back(primary());
        base = std::move(n);
      } else {
        return base;
      }
    }
  }

  NodePtr exponent() {
    if (is_op("-")) {
      const SourcePos pos = cur().pos;
      ++p_;
      auto n = make(NodeKind::Unary, pos, "-");
      n->children.push_back(exponent());
      return n;
    }
    return postfix();
  }

  std::vector<NodePtr> items(std::string_view close) {
    std::vector<NodePtr> out;
    if (is_op(close)) {
      ++p_;
      return out;
    }
    for (;;) {
      out.push_back(expr());
      if (is_op(",")) {
        ++p_;
        continue;
      }
      expect(close);
      return out;
    }
  }

  NodePtr primary() {
    const Token t = cur();
    switch (t.kind) {
      case Tok::Number:
        ++p_;
        return make(NodeKind::Number, t.pos, t.text);
      case Tok::String:
        ++p_;
        return make(NodeKind::String, t.pos, t.text);
      case Tok::Ident: {
        ++p_;
        if ((t.text == "QQ" || t.text == "ZZ") && is_op("[")) {
          ++p_;
          auto n = make(NodeKind::RingDecl, t.pos, t.text);
          n->children = items("]");
          return n;
        }
        return make(NodeKind::Identifier, t.pos, t.text);
      }
      case Tok::Op:
        if (t.text == "(") {
          ++p_;
          auto parts = items(")");
          if (parts.size() == 1) return std::move(parts.front());
          auto n = make(NodeKind::Sequence, t.pos);
          n->children = std::move(parts);
          return n;
        }
        if (t.text == "{") {
          ++p_;
          auto n = make(NodeKind::List, t.pos);
          n->children = items("}");
          return n;
        }
        break;
      default:
        break;
    }
    fail("expected an expression but found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t p_ = 0;
};

bool is_atom(const Node& n) {
  return n.kind == NodeKind::Identifier || n.kind == NodeKind::Number || n.kind == NodeKind::String;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<NodePtr>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_source(*xs[i]);
  }
  return out;
}

}  // namespace

Script parse_script(std::string_view source) { return Parser(Lexer(source).run()).run(); }

std::string to_source(const Node& n) {
  switch (n.kind) {
    case NodeKind::Number:
    case NodeKind::Identifier:
      return n.text;
    case NodeKind::String:
      return quote(n.text);
    case NodeKind::List:
      return "{" + join(n.children) + "}";
    case NodeKind::Sequence:
      return "(" + join(n.children) + ")";
    case NodeKind::RingDecl:
      return n.text + "[" + join(n.children) + "]";
    case NodeKind::Unary:
      return "-(" + to_source(*n.children[0]) + ")";
    case NodeKind::Binary:
      return "(" + to_source(*n.children[0]) + " " + n.text + " " + to_source(*n.children[1]) + ")";
    case NodeKind::Apply: {
      const Node& f = *n.children[0];
      const Node& arg = *n.children[1];
      const std::string head = is_atom(f) ? to_source(f) : "(" + to_source(f) + ")";
      return head + " " + (arg.kind == NodeKind::Sequence ? to_source(arg) : "(" + to_source(arg) + ")");
    }
    case NodeKind::Subscript: {
      const Node& base = *n.children[0];
      const Node& index = *n.children[1];
      const std::string head = is_atom(base) ? to_source(base) : "(" + to_source(base) + ")";
      const bool bare = index.kind == NodeKind::Identifier || index.kind == NodeKind::String;
      return head + "_" + (bare ? to_source(index) : "(" + to_source(index) + ")");
    }
  }
  return {};
}

std::string to_source(const Script& script) {
  std::string out;
  for (const auto& st : script.statements) {
    if (!st.target.empty()) out += st.target + " = ";
    out += to_source(*st.expr);
    if (st.silent) out += ";";
    out += "\n";
  }
  return out;
}

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_tree(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

bool same_script(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    const auto& x = a.statements[i];
    const auto& y = b.statements[i];
    if (x.target != y.target || x.silent != y.silent || !same_tree(*x.expr, *y.expr)) return false;
  }
  return true;
}

}  // namespace schemekit::script

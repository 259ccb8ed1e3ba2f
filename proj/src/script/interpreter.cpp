#include "schemekit/script/interpreter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "schemekit/settings.hpp"

namespace schemekit::script {

namespace {

using Args = std::vector<Value>;

[[noreturn]] void fail(const std::string& message) { throw Error(message); }

const ListValue& as_list(const Value& v) { return *v.as<std::shared_ptr<const ListValue>>(); }
bool is_list(const Value& v) { return v.is<std::shared_ptr<const ListValue>>(); }
bool is_sequence(const Value& v) { return is_list(v) && as_list(v).sequence; }

long to_int(const Value& v, const char* what) {
  if (v.is<BigRational>()) {
    const auto& q = v.as<BigRational>();
    if (q.is_integer() && q.numerator().fits_long()) return q.numerator().to_long();
  }
  fail(std::string(what) + ": expected an integer, got " + type_name(v));
}

std::size_t to_index(const Value& v, const char* what) {
  const long k = to_int(v, what);
  if (k < 0) fail(std::string(what) + ": expected a nonnegative integer");
  return static_cast<std::size_t>(k);
}

/// Ring of a ring-carrying value, or null for scalars and the like.
RingPtr ring_of(const Value& v) {
  if (v.is<Polynomial>()) return v.as<Polynomial>().ring();
  if (v.is<Ideal>()) return v.as<Ideal>().ring();
  if (v.is<PolyMatrix>()) return v.as<PolyMatrix>().ring();
  if (v.is<BasisValue>()) return v.as<BasisValue>().ideal.ring();
  return nullptr;
}

RingPtr to_ring(const Value& v, const char* what) {
  if (v.is<RingPtr>()) return v.as<RingPtr>();
  if (v.is<QuotientRingPtr>()) return v.as<QuotientRingPtr>()->base();
  fail(std::string(what) + ": expected a ring, got " + type_name(v));
}

Polynomial to_poly(const Value& v, const RingPtr& ring, const char* what) {
  if (v.is<BigRational>()) return Polynomial::constant(ring, v.as<BigRational>());
  if (v.is<Polynomial>()) {
    require_same_ring(v.as<Polynomial>().ring(), ring, what);
    return v.as<Polynomial>();
  }
  fail(std::string(what) + ": expected a polynomial, got " + type_name(v));
}

bool is_scalar_like(const Value& v) { return v.is<BigRational>() || v.is<Polynomial>(); }

std::size_t variable_index(const Polynomial& p, const char* what) {
  if (p.size() == 1 && p.leading_coeff().is_one() && p.leading_monomial().degree() == 1) {
    const auto& m = p.leading_monomial();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 1) return i;
    }
  }
  fail(std::string(what) + ": " + p.to_string() + " is not a variable");
}

std::string name_of(const Value& v, const char* what) {
  if (v.is<Symbol>()) return v.as<Symbol>().name;
  if (v.is<std::string>()) return v.as<std::string>();
  if (v.is<Polynomial>()) {
    const auto& p = v.as<Polynomial>();
    return p.ring()->variable(variable_index(p, what));
  }
  fail(std::string(what) + ": expected a variable name, got " + type_name(v));
}

void collect_generators(const Value& v, RingPtr& ring, std::vector<Polynomial>& out, std::vector<BigRational>& pending,
                        const char* what) {
  if (v.is<BigRational>()) {
    if (ring) {
      out.push_back(Polynomial::constant(ring, v.as<BigRational>()));
    } else {
      pending.push_back(v.as<BigRational>());
    }
    return;
  }
  if (is_list(v)) {
    for (const auto& item : as_list(v).items) collect_generators(item, ring, out, pending, what);
    return;
  }
  RingPtr r = ring_of(v);
  if (!r) fail(std::string(what) + ": cannot take generators of " + type_name(v));
  if (!ring) ring = r;
  require_same_ring(r, ring, what);
  if (v.is<Polynomial>()) {
    out.push_back(v.as<Polynomial>());
  } else if (v.is<Ideal>()) {
    auto g = v.as<Ideal>().generators();
    out.insert(out.end(), g.begin(), g.end());
  } else if (v.is<PolyMatrix>()) {
    auto e = v.as<PolyMatrix>().entries();
    out.insert(out.end(), e.begin(), e.end());
  } else {
    auto e = v.as<BasisValue>().ideal.basis().elements();
    out.insert(out.end(), e.begin(), e.end());
  }
}

PolyMatrix to_matrix(const Value& v, const RingPtr& hint, const char* what) {
  if (v.is<PolyMatrix>()) return v.as<PolyMatrix>();
  if (is_scalar_like(v)) {
    RingPtr r = ring_of(v) ? ring_of(v) : hint;
    if (!r) fail(std::string(what) + ": no ring for a scalar");
    return PolyMatrix(r, 1, 1, {to_poly(v, r, what)});
  }
  fail(std::string(what) + ": expected a matrix, got " + type_name(v));
}

Ideal to_ideal(const Value& v, const char* what) {
  if (v.is<Ideal>()) return v.as<Ideal>();
  if (v.is<BasisValue>()) return v.as<BasisValue>().ideal;
  if (v.is<Polynomial>() || v.is<PolyMatrix>()) {
    RingPtr ring;
    std::vector<BigRational> pending;
    std::vector<Polynomial> gens;
    collect_generators(v, ring, gens, pending, what);
    return Ideal(ring, std::move(gens));
  }
  fail(std::string(what) + ": expected an ideal, got " + type_name(v));
}

std::vector<std::size_t> to_index_list(const Value& v, const char* what) {
  if (!is_list(v)) fail(std::string(what) + ": expected a list of indices");
  std::vector<std::size_t> out;
  for (const auto& item : as_list(v).items) out.push_back(to_index(item, what));
  return out;
}

/// Variable indices given either as integers or as variables of `ring`.
std::vector<std::size_t> to_variable_list(const Value& v, const RingPtr& ring, const char* what) {
  std::vector<Value> items;
  if (is_list(v)) {
    items = as_list(v).items;
  } else {
    items.push_back(v);
  }
  std::vector<std::size_t> out;
  for (const auto& item : items) {
    std::size_t idx;
    if (item.is<BigRational>()) {
      idx = to_index(item, what);
    } else if (item.is<Polynomial>()) {
      require_same_ring(item.as<Polynomial>().ring(), ring, what);
      idx = variable_index(item.as<Polynomial>(), what);
    } else {
      fail(std::string(what) + ": expected variables, got " + type_name(item));
    }
    if (idx >= ring->num_variables()) fail(std::string(what) + ": variable index out of range");
    out.push_back(idx);
  }
  return out;
}

PolyMatrix map_entries(const PolyMatrix& m, const RingPtr& target, const std::function<Polynomial(const Polynomial&)>& f) {
  std::vector<Polynomial> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(f(e));
  return PolyMatrix(target, m.rows(), m.cols(), std::move(out));
}

bool values_equal(const Value& a, const Value& b) {
  if (a.is<BigRational>() && b.is<BigRational>()) return a.as<BigRational>() == b.as<BigRational>();
  if (a.is<bool>() && b.is<bool>()) return a.as<bool>() == b.as<bool>();
  if (a.is<std::string>() && b.is<std::string>()) return a.as<std::string>() == b.as<std::string>();
  if (is_scalar_like(a) && is_scalar_like(b)) {
    RingPtr r = ring_of(a) ? ring_of(a) : ring_of(b);
    return to_poly(a, r, "==") == to_poly(b, r, "==");
  }
  if ((a.is<Ideal>() || a.is<BasisValue>()) && (b.is<Ideal>() || b.is<BasisValue>())) {
    const Ideal ia = to_ideal(a, "==");
    const Ideal ib = to_ideal(b, "==");
    require_same_ring(ia.ring(), ib.ring(), "==");
    return ideal_equals(ia, ib);
  }
  if (a.is<PolyMatrix>() && b.is<PolyMatrix>()) {
    require_same_ring(a.as<PolyMatrix>().ring(), b.as<PolyMatrix>().ring(), "==");
    return a.as<PolyMatrix>() == b.as<PolyMatrix>();
  }
  if (a.is<RingPtr>() && b.is<RingPtr>()) return same_ring(a.as<RingPtr>(), b.as<RingPtr>());
  if (is_list(a) && is_list(b)) {
    const auto& la = as_list(a).items;
    const auto& lb = as_list(b).items;
    if (la.size() != lb.size()) return false;
    for (std::size_t i = 0; i < la.size(); ++i) {
      if (!values_equal(la[i], lb[i])) return false;
    }
    return true;
  }
  fail("cannot compare " + type_name(a) + " with " + type_name(b));
}

/// Expands `a..c`, `A..E`, `y_0..y_8` and `x1..x4` into the names in between.
std::vector<std::string> expand_name_range(const std::string& lo, const std::string& hi) {
  auto split_digits = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::pair<std::string, std::string>{s.substr(0, k), s.substr(k)};
  };
  auto [plo, dlo] = split_digits(lo);
  auto [phi, dhi] = split_digits(hi);
  std::vector<std::string> out;
  if (!dlo.empty() && !dhi.empty() && plo == phi && !plo.empty()) {
    const long a = std::stol(dlo);
    const long b = std::stol(dhi);
    if (b < a) fail("empty variable range " + lo + ".." + hi);
    for (long k = a; k <= b; ++k) out.push_back(plo + std::to_string(k));
    return out;
  }
  if (lo.size() == 1 && hi.size() == 1 && std::isalpha(static_cast<unsigned char>(lo[0])) &&
      std::isalpha(static_cast<unsigned char>(hi[0])) &&
      (std::islower(static_cast<unsigned char>(lo[0])) != 0) == (std::islower(static_cast<unsigned char>(hi[0])) != 0)) {
    if (hi[0] < lo[0]) fail("empty variable range " + lo + ".." + hi);
    for (char c = lo[0]; c <= hi[0]; ++c) out.emplace_back(1, c);
    return out;
  }
  fail("cannot expand variable range " + lo + ".." + hi);
}

const std::set<std::string>& builtin_names();

}  // namespace

/// Tree-walking evaluation over an interpreter's environment.
class Evaluator {
 public:
  explicit Evaluator(Interpreter& in) : in_(in) {}

  Value eval(const Node& n);

 private:
  template <typename F>
  Value guarded(const Node& n, F&& f) {
    try {
      return f();
    } catch (const RuntimeError&) {
      throw;
    } catch (const Error& e) {
      throw RuntimeError(n.pos, e.what());
    }
  }

  Value lookup(const Node& n);
  Value ring_decl(const Node& n);
  std::vector<Value> eval_items(const std::vector<NodePtr>& nodes);
  Value binary(const std::string& op, const Value& a, const Value& b);
  Value apply(const Value& f, const Args& args);
  Value subscript(const Value& base, const Value& index);
  Value call_builtin(const std::string& name, const Args& args);
  Value substitute(const Value& x, const Value& target_arg);
  Value matrix_from(const Value& rows_arg);
  Value coefficients(const Value& vars, const Value& x);

  Interpreter& in_;
};

namespace {

const std::set<std::string>& builtin_names() {
  static const std::set<std::string> names = {
      "adjoint",     "blowUpIdeal",  "classicalAdjoint", "codim",      "coefficients", "degree",    "det",
      "dim",         "Eliminate",    "eliminate",        "exteriorPower", "flatLimit", "gb",        "genericMatrix",
      "gens",        "hilbertSeries", "id",              "ideal",      "intersect",    "jacobian",  "ker",
      "map",         "matrix",       "minors",           "moduleDegree", "numgens",    "quotient",  "saturate",
      "selectInSubring", "size",     "submatrix",        "substitute", "transpose",    "trim",      "use",
      "vars"};
  return names;
}

}  // namespace

Value Evaluator::lookup(const Node& n) {
  if (auto it = in_.globals_.find(n.text); it != in_.globals_.end()) return it->second;
  if (builtin_names().count(n.text) != 0) return Builtin{n.text};
  if (n.text == "true") return true;
  if (n.text == "false") return false;
  if (n.text == "Lex") return MonomialOrder::lex();
  if (n.text == "GRevLex") return MonomialOrder::grevlex();
  return Symbol{n.text};
}

std::vector<Value> Evaluator::eval_items(const std::vector<NodePtr>& nodes) {
  std::vector<Value> out;
  for (const auto& c : nodes) {
    Value v = eval(*c);
    if (is_sequence(v)) {
      const auto& items = as_list(v).items;
      out.insert(out.end(), items.begin(), items.end());
    } else {
      out.push_back(std::move(v));
    }
  }
  return out;
}

Value Evaluator::ring_decl(const Node& n) {
  std::vector<std::string> names;
  MonomialOrder order = MonomialOrder::grevlex();
  for (const auto& item : n.children) {
    if (item->kind == NodeKind::Identifier) {
      names.push_back(item->text);
      continue;
    }
    if (item->kind == NodeKind::Binary && item->text == ".." && item->children[0]->kind == NodeKind::Identifier &&
        item->children[1]->kind == NodeKind::Identifier) {
      for (auto& s : expand_name_range(item->children[0]->text, item->children[1]->text)) names.push_back(std::move(s));
      continue;
    }
    if (item->kind == NodeKind::Binary && item->text == "=>" && item->children[0]->kind == NodeKind::Identifier &&
        item->children[0]->text == "MonomialOrder") {
      Value o = eval(*item->children[1]);
      if (!o.is<MonomialOrder>()) throw RuntimeError(item->pos, "MonomialOrder expects Lex, GRevLex or Eliminate k");
      order = o.as<MonomialOrder>();
      continue;
    }
    throw RuntimeError(item->pos, "unsupported item in ring declaration");
  }
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (!seen.insert(s).second) throw RuntimeError(n.pos, "duplicate variable " + s);
  }
  const auto domain = n.text == "ZZ" ? CoefficientDomain::Integers : CoefficientDomain::Rationals;
  return guarded(n, [&]() -> Value { return Ring::make(domain, names, order); });
}

Value Evaluator::eval(const Node& n) {
  switch (n.kind) {
    case NodeKind::Number:
      return BigRational(BigInt::parse(n.text));
    case NodeKind::String:
      return n.text;
    case NodeKind::Identifier:
      return lookup(n);
    case NodeKind::List:
      return make_list(eval_items(n.children));
    case NodeKind::Sequence:
      return make_list(eval_items(n.children), true);
    case NodeKind::RingDecl:
      return ring_decl(n);
    case NodeKind::Unary: {
      Value x = eval(*n.children[0]);
      return guarded(n, [&]() -> Value {
        if (x.is<BigRational>()) return -x.as<BigRational>();
        if (x.is<Polynomial>()) return -x.as<Polynomial>();
        if (x.is<PolyMatrix>()) {
          const auto& m = x.as<PolyMatrix>();
          return m.scaled(Polynomial::constant(m.ring(), -1));
        }
        fail("cannot negate " + type_name(x));
      });
    }
    case NodeKind::Binary: {
      Value a = eval(*n.children[0]);
      Value b = eval(*n.children[1]);
      return guarded(n, [&] { return binary(n.text, a, b); });
    }
    case NodeKind::Apply: {
      Value f = eval(*n.children[0]);
      const Node& arg = *n.children[1];
      Args args;
      if (arg.kind == NodeKind::Sequence) {
        args = eval_items(arg.children);
      } else {
        args.push_back(eval(arg));
      }
      return guarded(n, [&] { return apply(f, args); });
    }
    case NodeKind::Subscript: {
      Value base = eval(*n.children[0]);
      Value index = eval(*n.children[1]);
      return guarded(n, [&] { return subscript(base, index); });
    }
  }
  throw RuntimeError(n.pos, "unknown node");
}

Value Evaluator::binary(const std::string& op, const Value& a, const Value& b) {
  if (a.is<Symbol>()) fail("unknown identifier " + a.as<Symbol>().name);
  if (b.is<Symbol>() && op != "=>") fail("unknown identifier " + b.as<Symbol>().name);

  if (op == "=>") {
    auto o = std::make_shared<OptionValue>();
    o->key = a;
    o->value = b;
    return std::shared_ptr<const OptionValue>(std::move(o));
  }
  if (op == "==") return values_equal(a, b);
  if (op == "!=") return !values_equal(a, b);

  const bool numbers = a.is<BigRational>() && b.is<BigRational>();
  if (numbers) {
    const auto& x = a.as<BigRational>();
    const auto& y = b.as<BigRational>();
    if (op == "+") return x + y;
    if (op == "-") return x - y;
    if (op == "*") return x * y;
    if (op == "/") return x / y;
    if (op == "..") {
      const long lo = to_int(a, "..");
      const long hi = to_int(b, "..");
      std::vector<Value> items;
      for (long k = lo; k <= hi; ++k) items.emplace_back(BigRational(k));
      return make_list(std::move(items), true);
    }
    if (op == "^") {
      const long e = to_int(b, "^");
      BigRational r = 1;
      const BigRational base = e < 0 ? BigRational(1) / x : x;
      for (long k = 0; k < std::labs(e); ++k) r *= base;
      return r;
    }
  }

  if (op == "+" || op == "-" || op == "*") {
    if (is_scalar_like(a) && is_scalar_like(b)) {
      RingPtr r = ring_of(a) ? ring_of(a) : ring_of(b);
      const Polynomial x = to_poly(a, r, op.c_str());
      const Polynomial y = to_poly(b, r, op.c_str());
      if (op == "+") return x + y;
      if (op == "-") return x - y;
      return x * y;
    }
    if (a.is<PolyMatrix>() && b.is<PolyMatrix>()) {
      const auto& x = a.as<PolyMatrix>();
      const auto& y = b.as<PolyMatrix>();
      require_same_ring(x.ring(), y.ring(), op);
      if (op == "+") return x + y;
      if (op == "-") return x - y;
      return x * y;
    }
    if (op == "*" && is_scalar_like(a) && b.is<PolyMatrix>()) {
      const auto& m = b.as<PolyMatrix>();
      return m.scaled(to_poly(a, m.ring(), "*"));
    }
    if (op == "*" && a.is<PolyMatrix>() && is_scalar_like(b)) {
      const auto& m = a.as<PolyMatrix>();
      return m.scaled(to_poly(b, m.ring(), "*"));
    }
    if ((op == "+" || op == "*") && (a.is<Ideal>() || b.is<Ideal>())) {
      const Ideal x = to_ideal(a, op.c_str());
      const Ideal y = to_ideal(b, op.c_str());
      require_same_ring(x.ring(), y.ring(), op);
      return op == "+" ? x + y : x * y;
    }
  }

  if (op == "/") {
    if (a.is<Polynomial>() && b.is<BigRational>()) {
      const auto& c = b.as<BigRational>();
      if (c.is_zero()) throw DivisionByZero();
      const Polynomial q = a.as<Polynomial>().scaled(BigRational(1) / c);
      return q;
    }
    if (is_scalar_like(a) && b.is<Polynomial>()) {
      const auto& g = b.as<Polynomial>();
      auto q = exact_divide(to_poly(a, g.ring(), "/"), g);
      if (!q) fail("division is not exact");
      return *q;
    }
    if (a.is<RingPtr>() && (b.is<Ideal>() || b.is<Polynomial>() || b.is<PolyMatrix>())) {
      const Ideal i = to_ideal(b, "/");
      require_same_ring(i.ring(), a.as<RingPtr>(), "/");
      return QuotientRingPtr(std::make_shared<const QuotientRing>(i));
    }
    if ((a.is<Ideal>() || a.is<Polynomial>()) && b.is<Ideal>()) {
      const Ideal sub = to_ideal(a, "/");
      require_same_ring(sub.ring(), b.as<Ideal>().ring(), "/");
      return SubquotientModule{sub, b.as<Ideal>()};
    }
  }

  if (op == "^") {
    if (a.is<RingPtr>()) return FreeModule{a.as<RingPtr>(), to_index(b, "^")};
    const long e = to_int(b, "^");
    if (a.is<Polynomial>()) {
      if (e < 0) fail("negative exponent on a polynomial");
      return a.as<Polynomial>().pow(static_cast<unsigned>(e));
    }
    if (a.is<Ideal>()) {
      if (e < 0) fail("negative exponent on an ideal");
      Ideal r = Ideal::unit(a.as<Ideal>().ring());
      for (long k = 0; k < e; ++k) r = r * a.as<Ideal>();
      return r;
    }
    if (a.is<PolyMatrix>()) {
      const auto& m = a.as<PolyMatrix>();
      if (!m.is_square()) throw DimensionMismatch("^: matrix is not square");
      if (e < 0) fail("negative exponent on a matrix");
      PolyMatrix r = PolyMatrix::identity(m.ring(), m.rows());
      for (long k = 0; k < e; ++k) r = r * m;
      return r;
    }
  }

  if (op == ":") {
    const Ideal i = to_ideal(a, ":");
    if (b.is<Polynomial>()) return quotient(i, b.as<Polynomial>());
    return quotient(i, to_ideal(b, ":"));
  }

  if (op == "|" || op == "||") {
    RingPtr hint = ring_of(a) ? ring_of(a) : ring_of(b);
    const PolyMatrix x = to_matrix(a, hint, op.c_str());
    const PolyMatrix y = to_matrix(b, hint, op.c_str());
    require_same_ring(x.ring(), y.ring(), op);
    return op == "|" ? concat_horizontal(x, y) : concat_vertical(x, y);
  }

  if (op == "**") {
    if (b.is<RingPtr>() || b.is<QuotientRingPtr>()) return substitute(a, b);
  }

  if (op == ".." && a.is<Polynomial>() && b.is<Polynomial>()) {
    const auto& x = a.as<Polynomial>();
    require_same_ring(x.ring(), b.as<Polynomial>().ring(), "..");
    const std::size_t lo = variable_index(x, "..");
    const std::size_t hi = variable_index(b.as<Polynomial>(), "..");
    std::vector<Value> items;
    for (std::size_t k = lo; k <= hi; ++k) items.emplace_back(Polynomial::variable(x.ring(), k));
    return make_list(std::move(items), true);
  }

  fail("no operator " + op + " for " + type_name(a) + " and " + type_name(b));
}

Value Evaluator::subscript(const Value& base, const Value& index) {
  if (is_list(base)) {
    const auto& items = as_list(base).items;
    const std::size_t k = to_index(index, "_");
    if (k >= items.size()) fail("index " + std::to_string(k) + " out of range");
    return items[k];
  }
  if (base.is<PolyMatrix>() && is_sequence(index) && as_list(index).items.size() == 2) {
    const auto& m = base.as<PolyMatrix>();
    const std::size_t i = to_index(as_list(index).items[0], "_");
    const std::size_t j = to_index(as_list(index).items[1], "_");
    if (i >= m.rows() || j >= m.cols()) fail("matrix index out of range");
    return m.at(i, j);
  }
  if (base.is<RingPtr>() || base.is<QuotientRingPtr>()) {
    const RingPtr ring = to_ring(base, "_");
    if (index.is<std::string>()) {
      auto idx = ring->index_of(index.as<std::string>());
      if (!idx) fail("no variable named " + index.as<std::string>() + " in " + ring->to_string());
      return Polynomial::variable(ring, *idx);
    }
    const std::size_t k = to_index(index, "_");
    if (k >= ring->num_variables()) fail("variable index out of range");
    return Polynomial::variable(ring, k);
  }
  if (base.is<Builtin>() && base.as<Builtin>().name == "id" && index.is<FreeModule>()) {
    const auto& f = index.as<FreeModule>();
    return PolyMatrix::identity(f.ring, f.rank);
  }
  fail("cannot subscript " + type_name(base) + " by " + type_name(index));
}

Value Evaluator::apply(const Value& f, const Args& args) {
  if (f.is<Builtin>()) return call_builtin(f.as<Builtin>().name, args);
  if (f.is<RingMap>()) {
    if (args.size() != 1) fail("a ring map takes one argument");
    const auto& map = f.as<RingMap>();
    const Value& x = args[0];
    if (x.is<BigRational>()) return apply_map(map, Polynomial::constant(map.source(), x.as<BigRational>()));
    if (x.is<Polynomial>()) return apply_map(map, to_poly(x, map.source(), "ring map"));
    if (x.is<Ideal>() || x.is<BasisValue>()) {
      const Ideal i = to_ideal(x, "ring map");
      require_same_ring(i.ring(), map.source(), "ring map");
      return apply_map_ideal(map, i);
    }
    if (x.is<PolyMatrix>()) {
      require_same_ring(x.as<PolyMatrix>().ring(), map.source(), "ring map");
      return map_entries(x.as<PolyMatrix>(), map.target(), [&](const Polynomial& p) { return apply_map(map, p); });
    }
    fail("cannot apply a ring map to " + type_name(x));
  }
  if (f.is<Symbol>()) fail("unknown function " + f.as<Symbol>().name);
  fail("a value of type " + type_name(f) + " cannot be applied");
}

Value Evaluator::substitute(const Value& x, const Value& target_arg) {
  if (is_list(x)) {
    std::vector<Value> items;
    for (const auto& item : as_list(x).items) items.push_back(substitute(item, target_arg));
    return make_list(std::move(items), as_list(x).sequence);
  }
  if (x.is<BasisValue>()) return substitute(Value(x.as<BasisValue>().ideal), target_arg);

  std::function<Polynomial(const Polynomial&)> fn;
  RingPtr target;
  if (target_arg.is<RingPtr>() || target_arg.is<QuotientRingPtr>()) {
    target = to_ring(target_arg, "substitute");
    QuotientRingPtr quotient;
    if (target_arg.is<QuotientRingPtr>()) quotient = target_arg.as<QuotientRingPtr>();
    fn = [target, quotient](const Polynomial& p) {
      Polynomial image = substitute_vars(p, target, {});
      return quotient ? quotient->reduce(image) : image;
    };
    if (x.is<BigRational>()) return Polynomial::constant(target, x.as<BigRational>());
  } else if (is_list(target_arg) || target_arg.is<std::shared_ptr<const OptionValue>>()) {
    std::vector<Value> rules;
    if (is_list(target_arg)) {
      rules = as_list(target_arg).items;
    } else {
      rules.push_back(target_arg);
    }
    target = ring_of(x);
    if (!target) {
      if (x.is<BigRational>()) return x;
      fail("substitute: cannot substitute into " + type_name(x));
    }
    std::vector<std::optional<Polynomial>> assignment(target->num_variables());
    for (const auto& rule : rules) {
      if (!rule.is<std::shared_ptr<const OptionValue>>()) fail("substitute: expected rules of the form x => value");
      const auto& o = *rule.as<std::shared_ptr<const OptionValue>>();
      std::size_t idx;
      if (o.key.is<Polynomial>()) {
        const auto& k = o.key.as<Polynomial>();
        idx = variable_index(k, "substitute");
        // A variable of another ring is matched by name.
        if (!same_ring(k.ring(), target)) {
          auto found = target->index_of(k.ring()->variable(idx));
          if (!found) fail("substitute: no variable " + k.ring()->variable(idx) + " in " + target->to_string());
          idx = *found;
        }
      } else {
        const std::string name = name_of(o.key, "substitute");
        auto found = target->index_of(name);
        if (!found) fail("substitute: no variable " + name + " in " + target->to_string());
        idx = *found;
      }
      assignment[idx] = to_poly(o.value, target, "substitute");
    }
    fn = [target, assignment](const Polynomial& p) { return substitute_vars(p, target, assignment); };
  } else {
    fail("substitute: expected a ring or a list of rules, got " + type_name(target_arg));
  }

  if (x.is<Polynomial>()) return fn(x.as<Polynomial>());
  if (x.is<Ideal>()) {
    std::vector<Polynomial> gens;
    for (const auto& g : x.as<Ideal>().generators()) gens.push_back(fn(g));
    return Ideal(target, std::move(gens));
  }
  if (x.is<PolyMatrix>()) return map_entries(x.as<PolyMatrix>(), target, fn);
  fail("substitute: cannot substitute into " + type_name(x));
}

Value Evaluator::matrix_from(const Value& rows_arg) {
  if (!is_list(rows_arg)) fail("matrix: expected a list of rows");
  std::vector<std::vector<Value>> rows;
  const auto& items = as_list(rows_arg).items;
  if (!items.empty() && std::all_of(items.begin(), items.end(), [](const Value& v) { return is_list(v); })) {
    for (const auto& r : items) rows.push_back(as_list(r).items);
  } else {
    rows.push_back(items);
  }
  RingPtr ring;
  for (const auto& r : rows) {
    for (const auto& e : r) {
      if (RingPtr er = ring_of(e)) {
        if (!ring) ring = er;
      } else if (!e.is<BigRational>()) {
        fail("matrix: entries must be numbers or polynomials, got " + type_name(e));
      }
    }
  }
  if (!ring) ring = in_.current_ring_;
  if (!ring) fail("matrix: no ring in scope for numeric entries");
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& r : rows) {
    std::vector<Polynomial> row;
    for (const auto& e : r) row.push_back(to_poly(e, ring, "matrix"));
    polys.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(ring, polys);
}

Value Evaluator::coefficients(const Value& vars, const Value& x) {
  std::vector<Polynomial> entries;
  RingPtr ring;
  if (x.is<PolyMatrix>()) {
    ring = x.as<PolyMatrix>().ring();
    auto e = x.as<PolyMatrix>().entries();
    entries.assign(e.begin(), e.end());
  } else if (x.is<Polynomial>()) {
    ring = x.as<Polynomial>().ring();
    entries.push_back(x.as<Polynomial>());
  } else {
    fail("coefficients: expected a matrix or polynomial, got " + type_name(x));
  }
  const auto idx = to_variable_list(vars, ring, "coefficients");

  std::vector<std::vector<CoefficientEntry>> split;
  std::vector<Monomial> monomials;
  for (const auto& f : entries) {
    split.push_back(coefficients_in(f, idx));
    for (const auto& ce : split.back()) {
      if (std::none_of(monomials.begin(), monomials.end(), [&](const Monomial& m) { return m == ce.monomial; })) {
        monomials.push_back(ce.monomial);
      }
    }
  }
  std::sort(monomials.begin(), monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) > 0; });

  PolyMatrix mons(ring, 1, monomials.size());
  for (std::size_t j = 0; j < monomials.size(); ++j) mons.set(0, j, Polynomial::monomial(ring, monomials[j]));
  PolyMatrix coeffs(ring, entries.size(), monomials.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& ce : split[i]) {
      const auto pos = std::find(monomials.begin(), monomials.end(), ce.monomial) - monomials.begin();
      coeffs.set(i, static_cast<std::size_t>(pos), ce.coefficient);
    }
  }
  return make_list({Value(std::move(mons)), Value(std::move(coeffs))});
}

Value Evaluator::call_builtin(const std::string& name, const Args& args) {
  for (const auto& a : args) {
    if (a.is<Symbol>() && name != "blowUpIdeal") fail("unknown identifier " + a.as<Symbol>().name);
  }
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      const std::string expected =
          lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      fail(name + " expects " + expected + " argument(s), got " + std::to_string(args.size()));
    }
  };
  const char* what = name.c_str();

  if (name == "ideal") {
    if (args.empty()) fail("ideal expects at least one argument");
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::vector<BigRational> pending;
    for (const auto& a : args) collect_generators(a, ring, gens, pending, what);
    if (!ring) ring = in_.current_ring_;
    if (!ring) fail("ideal: no ring in scope");
    for (const auto& c : pending) gens.push_back(Polynomial::constant(ring, c));
    return Ideal(ring, std::move(gens));
  }
  if (name == "gens") {
    arity(1, 1);
    if (args[0].is<RingPtr>() || args[0].is<QuotientRingPtr>()) {
      const RingPtr r = to_ring(args[0], what);
      std::vector<Value> vars;
      for (std::size_t i = 0; i < r->num_variables(); ++i) vars.emplace_back(Polynomial::variable(r, i));
      return make_list(std::move(vars));
    }
    std::vector<Polynomial> elems;
    RingPtr ring;
    if (args[0].is<BasisValue>()) {
      const auto& gb = args[0].as<BasisValue>().ideal.basis();
      ring = gb.ring();
      elems.assign(gb.elements().begin(), gb.elements().end());
    } else {
      const Ideal i = to_ideal(args[0], what);
      ring = i.ring();
      elems.assign(i.generators().begin(), i.generators().end());
    }
    const std::size_t n = elems.size();
    return PolyMatrix(ring, 1, n, std::move(elems));
  }
  if (name == "vars") {
    arity(1, 1);
    const RingPtr r = to_ring(args[0], what);
    PolyMatrix m(r, 1, r->num_variables());
    for (std::size_t i = 0; i < r->num_variables(); ++i) m.set(0, i, Polynomial::variable(r, i));
    return m;
  }
  if (name == "gb") {
    arity(1, 1);
    const Ideal i = to_ideal(args[0], what);
    (void)i.basis();
    return BasisValue{i};
  }
  if (name == "selectInSubring") {
    arity(2, 2);
    const std::size_t k = to_index(args[0], what);
    PolyMatrix m = args[1].is<BasisValue>() ? std::get<PolyMatrix>(call_builtin("gens", {args[1]}).v)
                                            : to_matrix(args[1], nullptr, what);
    const RingPtr& ring = m.ring();
    std::size_t block = 0;
    if (k == 1) {
      switch (ring->order().kind) {
        case MonomialOrder::Kind::Eliminate:
          block = ring->order().block;
          break;
        case MonomialOrder::Kind::Lex:
          block = 1;
          break;
        case MonomialOrder::Kind::GRevLex:
          fail("selectInSubring: the ring's order does not eliminate a block of variables");
      }
    } else if (k != 0) {
      fail("selectInSubring: only blocks 0 and 1 are supported");
    }
    std::vector<Polynomial> kept;
    for (const auto& e : m.entries()) {
      bool free = true;
      for (std::size_t v = 0; v < block && free; ++v) free = !e.involves(v);
      if (free) kept.push_back(e);
    }
    const std::size_t n = kept.size();
    return PolyMatrix(ring, 1, n, std::move(kept));
  }
  if (name == "saturate") {
    arity(1, 2);
    const Ideal i = to_ideal(args[0], what);
    if (args.size() == 1) return saturate(i);
    if (args[1].is<Polynomial>()) {
      require_same_ring(args[1].as<Polynomial>().ring(), i.ring(), what);
      return saturate(i, args[1].as<Polynomial>());
    }
    const Ideal by = to_ideal(args[1], what);
    require_same_ring(by.ring(), i.ring(), what);
    return saturate(i, by);
  }
  if (name == "intersect") {
    std::vector<Ideal> ideals;
    for (const auto& a : args) {
      if (is_list(a)) {
        for (const auto& item : as_list(a).items) ideals.push_back(to_ideal(item, what));
      } else {
        ideals.push_back(to_ideal(a, what));
      }
    }
    if (ideals.empty()) fail("intersect expects at least one ideal");
    for (const auto& i : ideals) require_same_ring(i.ring(), ideals.front().ring(), what);
    return intersect(ideals);
  }
  if (name == "quotient") {
    arity(2, 2);
    return binary(":", args[0], args[1]);
  }
  if (name == "eliminate") {
    arity(2, 2);
    const bool ideal_first = args[0].is<Ideal>() || args[0].is<BasisValue>();
    const Ideal i = to_ideal(ideal_first ? args[0] : args[1], what);
    const auto vars = to_variable_list(ideal_first ? args[1] : args[0], i.ring(), what);
    return eliminate(i, vars);
  }
  if (name == "trim") {
    arity(1, 1);
    return trim(to_ideal(args[0], what));
  }
  if (name == "degree") {
    arity(1, 1);
    if (args[0].is<SubquotientModule>()) {
      const auto& m = args[0].as<SubquotientModule>();
      return BigRational(module_degree(m.sub, m.base));
    }
    if (args[0].is<Polynomial>()) return BigRational(args[0].as<Polynomial>().total_degree());
    return BigRational(degree(to_ideal(args[0], what)));
  }
  if (name == "moduleDegree") {
    arity(2, 2);
    const Ideal i = to_ideal(args[0], what);
    const Ideal j = to_ideal(args[1], what);
    require_same_ring(i.ring(), j.ring(), what);
    return BigRational(module_degree(i, j));
  }
  if (name == "codim" || name == "dim") {
    arity(1, 1);
    const DimCodim dc = dim_and_codim(to_ideal(args[0], what));
    return BigRational(name == "dim" ? dc.dim : dc.codim);
  }
  if (name == "hilbertSeries") {
    arity(1, 1);
    return hilbert_series(to_ideal(args[0], what));
  }
  if (name == "det") {
    arity(1, 1);
    return det(to_matrix(args[0], in_.current_ring_, what));
  }
  if (name == "minors" || name == "exteriorPower") {
    arity(2, 2);
    const std::size_t k = to_index(args[0], what);
    const PolyMatrix m = to_matrix(args[1], in_.current_ring_, what);
    if (name == "minors") return minors(k, m);
    return exterior_power(k, m);
  }
  if (name == "jacobian") {
    arity(1, 1);
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::vector<BigRational> pending;
    if (args[0].is<BigRational>()) fail("jacobian: expected polynomials");
    collect_generators(args[0], ring, gens, pending, what);
    return jacobian(ring, gens);
  }
  if (name == "genericMatrix") {
    arity(4, 4);
    const RingPtr ring = to_ring(args[0], what);
    const std::size_t first = to_variable_list(args[1], ring, what).front();
    return generic_matrix(ring, first, to_index(args[2], what), to_index(args[3], what));
  }
  if (name == "adjoint" || name == "classicalAdjoint") {
    arity(1, 1);
    return classical_adjoint(to_matrix(args[0], in_.current_ring_, what));
  }
  if (name == "map") {
    arity(2, 3);
    const RingPtr source = to_ring(args[1], what);
    const RingPtr target = to_ring(args[0], what);
    std::vector<Polynomial> images;
    if (args.size() == 2) {
      for (std::size_t i = 0; i < source->num_variables(); ++i) {
        auto idx = target->index_of(source->variable(i));
        if (!idx) fail("map: no variable named " + source->variable(i) + " in the target");
        images.push_back(Polynomial::variable(target, *idx));
      }
    } else if (args[2].is<PolyMatrix>()) {
      const auto& m = args[2].as<PolyMatrix>();
      require_same_ring(m.ring(), target, what);
      images.assign(m.entries().begin(), m.entries().end());
    } else if (is_list(args[2])) {
      for (const auto& item : as_list(args[2]).items) images.push_back(to_poly(item, target, what));
    } else {
      fail("map: expected a matrix or list of images, got " + type_name(args[2]));
    }
    if (args[0].is<QuotientRingPtr>()) return RingMap(source, args[0].as<QuotientRingPtr>(), std::move(images));
    return RingMap(source, target, std::move(images));
  }
  if (name == "ker") {
    arity(1, 1);
    if (!args[0].is<RingMap>()) fail("ker: expected a ring map, got " + type_name(args[0]));
    return kernel(args[0].as<RingMap>());
  }
  if (name == "substitute") {
    arity(2, 2);
    return substitute(args[0], args[1]);
  }
  if (name == "coefficients") {
    arity(2, 2);
    return coefficients(args[0], args[1]);
  }
  if (name == "blowUpIdeal") {
    arity(2, 2);
    if (args[0].is<Symbol>()) fail("unknown identifier " + args[0].as<Symbol>().name);
    if (!is_list(args[1])) fail("blowUpIdeal: expected a list of new variable names");
    std::vector<std::string> names;
    for (const auto& item : as_list(args[1]).items) names.push_back(name_of(item, what));
    return blowup_ideal(to_ideal(args[0], what), names);
  }
  if (name == "flatLimit") {
    arity(1, 2);
    BigRational value = 0;
    if (args.size() == 2) {
      if (!args[1].is<BigRational>()) fail("flatLimit: expected a number");
      value = args[1].as<BigRational>();
    }
    return flat_limit(to_ideal(args[0], what), value);
  }
  if (name == "matrix") {
    arity(1, 1);
    return matrix_from(args[0]);
  }
  if (name == "submatrix") {
    arity(2, 3);
    const PolyMatrix m = to_matrix(args[0], nullptr, what);
    std::vector<std::size_t> rows(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    std::vector<std::size_t> cols;
    if (args.size() == 3) {
      rows = to_index_list(args[1], what);
      cols = to_index_list(args[2], what);
    } else {
      cols = to_index_list(args[1], what);
    }
    return m.submatrix(rows, cols);
  }
  if (name == "transpose") {
    arity(1, 1);
    return to_matrix(args[0], in_.current_ring_, what).transpose();
  }
  if (name == "numgens") {
    arity(1, 1);
    if (args[0].is<RingPtr>() || args[0].is<QuotientRingPtr>()) {
      return BigRational(static_cast<long>(to_ring(args[0], what)->num_variables()));
    }
    return BigRational(static_cast<long>(to_ideal(args[0], what).num_generators()));
  }
  if (name == "size") {
    arity(1, 1);
    if (args[0].is<Polynomial>()) return BigRational(static_cast<long>(args[0].as<Polynomial>().size()));
    if (args[0].is<BigRational>()) return BigRational(args[0].as<BigRational>().is_zero() ? 0 : 1);
    if (is_list(args[0])) return BigRational(static_cast<long>(as_list(args[0]).items.size()));
    fail("size: expected a polynomial or list, got " + type_name(args[0]));
  }
  if (name == "use") {
    arity(1, 1);
    (void)to_ring(args[0], what);
    in_.use_ring(args[0]);
    return args[0];
  }
  if (name == "Eliminate") {
    arity(1, 1);
    return MonomialOrder::eliminate(to_index(args[0], what));
  }
  if (name == "id") fail("id must be subscripted by a free module, as in id_(R^n)");
  fail("unknown function " + name);
}

Interpreter::Interpreter(InterpreterOptions options) : options_(options) {}

Value Interpreter::eval(const Node& node) { return Evaluator(*this).eval(node); }

void Interpreter::use_ring(const Value& ring_value) {
  const RingPtr ring = to_ring(ring_value, "use");
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    globals_[ring->variable(i)] = Polynomial::variable(ring, i);
  }
  current_ring_ = ring;
}

void Interpreter::run(const Script& script, const std::function<void(const OutputRecord&)>& sink) {
  for (std::size_t k = 0; k < script.statements.size(); ++k) {
    const Statement& st = script.statements[k];
    std::optional<ScopedDeadline> deadline;
    if (options_.max_seconds_per_statement) deadline.emplace(*options_.max_seconds_per_statement);
    Value v;
    try {
      v = eval(*st.expr);
      if (v.is<Symbol>()) throw RuntimeError(st.expr->pos, "unknown identifier " + v.as<Symbol>().name);
      if (v.is<RingPtr>() || v.is<QuotientRingPtr>()) use_ring(v);
      if (!st.target.empty()) globals_[st.target] = v;
    } catch (const RuntimeError&) {
      throw;
    } catch (const Error& e) {
      throw RuntimeError(st.pos, e.what());
    }
    if (!st.silent) sink(OutputRecord{k, st.pos, v, to_string(v)});
  }
}

std::vector<OutputRecord> Interpreter::run(const Script& script) {
  std::vector<OutputRecord> out;
  run(script, [&out](const OutputRecord& r) { out.push_back(r); });
  return out;
}

std::vector<OutputRecord> evaluate_source(std::string_view source, InterpreterOptions options) {
  const Script script = parse_script(source);
  Interpreter interp(options);
  return interp.run(script);
}

}  // namespace schemekit::script

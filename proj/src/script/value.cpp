#include "schemekit/script/value.hpp"

namespace schemekit::script {

Value make_list(std::vector<Value> items, bool sequence) {
  auto list = std::make_shared<ListValue>();
  list->items = std::move(items);
  list->sequence = sequence;
  return Value(std::shared_ptr<const ListValue>(std::move(list)));
}

namespace {

std::string order_to_string(const MonomialOrder& order) {
  switch (order.kind) {
    case MonomialOrder::Kind::GRevLex:
      return "GRevLex";
    case MonomialOrder::Kind::Lex:
      return "Lex";
    case MonomialOrder::Kind::Eliminate:
      return "Eliminate " + std::to_string(order.block);
  }
  return "?";
}

struct TypeNamer {
  std::string operator()(const std::monostate&) const { return "Nothing"; }
  std::string operator()(bool) const { return "Boolean"; }
  std::string operator()(const BigRational& q) const { return q.is_integer() ? "Integer" : "Rational"; }
  std::string operator()(const std::string&) const { return "String"; }
  std::string operator()(const Polynomial&) const { return "Polynomial"; }
  std::string operator()(const Ideal&) const { return "Ideal"; }
  std::string operator()(const PolyMatrix&) const { return "Matrix"; }
  std::string operator()(const RingPtr&) const { return "Ring"; }
  std::string operator()(const QuotientRingPtr&) const { return "QuotientRing"; }
  std::string operator()(const RingMap&) const { return "RingMap"; }
  std::string operator()(const BasisValue&) const { return "GroebnerBasis"; }
  std::string operator()(const std::shared_ptr<const ListValue>& l) const { return l->sequence ? "Sequence" : "List"; }
  std::string operator()(const std::shared_ptr<const OptionValue>&) const { return "Option"; }
  std::string operator()(const Symbol&) const { return "Symbol"; }
  std::string operator()(const FreeModule&) const { return "Module"; }
  std::string operator()(const SubquotientModule&) const { return "Module"; }
  std::string operator()(const Builtin&) const { return "Function"; }
  std::string operator()(const MonomialOrder&) const { return "MonomialOrder"; }
  std::string operator()(const HilbertSeries&) const { return "HilbertSeries"; }
};

struct Printer {
  std::string operator()(const std::monostate&) const { return "null"; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(const BigRational& q) const { return q.to_string(); }
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(const Polynomial& p) const { return p.to_string(); }
  std::string operator()(const Ideal& i) const { return i.to_string(); }
  std::string operator()(const PolyMatrix& m) const { return m.to_string(); }
  std::string operator()(const RingPtr& r) const { return r->to_string(); }
  std::string operator()(const QuotientRingPtr& q) const { return q->to_string(); }
  std::string operator()(const RingMap& m) const { return m.to_string(); }
  std::string operator()(const BasisValue& b) const {
    std::string s = "gb {";
    bool first = true;
    for (const auto& e : b.ideal.basis().elements()) {
      if (!first) s += ", ";
      first = false;
      s += e.to_string();
    }
    return s + "}";
  }
  std::string operator()(const std::shared_ptr<const ListValue>& l) const {
    std::string s = l->sequence ? "(" : "{";
    for (std::size_t i = 0; i < l->items.size(); ++i) {
      if (i > 0) s += ", ";
      s += to_string(l->items[i]);
    }
    return s + (l->sequence ? ")" : "}");
  }
  std::string operator()(const std::shared_ptr<const OptionValue>& o) const {
    return to_string(o->key) + " => " + to_string(o->value);
  }
  std::string operator()(const Symbol& s) const { return s.name; }
  std::string operator()(const FreeModule& m) const { return m.ring->to_string() + "^" + std::to_string(m.rank); }
  std::string operator()(const SubquotientModule& m) const {
    return "subquotient(" + m.sub.to_string() + ", " + m.base.to_string() + ")";
  }
  std::string operator()(const Builtin& b) const { return b.name; }
  std::string operator()(const MonomialOrder& o) const { return order_to_string(o); }
  std::string operator()(const HilbertSeries& h) const { return h.to_string(); }
};

}  // namespace

std::string type_name(const Value& value) { return std::visit(TypeNamer{}, value.v); }

std::string to_string(const Value& value) { return std::visit(Printer{}, value.v); }

}  // namespace schemekit::script

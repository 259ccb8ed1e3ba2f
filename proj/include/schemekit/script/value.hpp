#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "schemekit/exactnum.hpp"
#include "schemekit/geometry.hpp"
#include "schemekit/ideals.hpp"
#include "schemekit/polymatrix.hpp"
#include "schemekit/polyring.hpp"
#include "schemekit/ringmaps.hpp"

namespace schemekit::script {

struct Value;

/// `{a, b}` or a parenthesized sequence `(a, b)`; sequences splice into lists and
/// argument lists.
struct ListValue {
  std::vector<Value> items;
  bool sequence = false;
};

/// `key => value`
struct OptionValue;

/// Unbound identifier, usable as a fresh variable name (for instance in blowUpIdeal).
struct Symbol {
  std::string name;
};

/// R^n; only used to build identity matrices through `id_(R^n)`.
struct FreeModule {
  RingPtr ring;
  std::size_t rank;
};

/// (sub + base) / base, produced by `I / J` for ideals.
struct SubquotientModule {
  Ideal sub;
  Ideal base;
};

/// A basis computed for an ideal, as returned by `gb`.
struct BasisValue {
  Ideal ideal;
};

struct Builtin {
  std::string name;
};

struct Value {
  using Variant = std::variant<std::monostate, bool, BigRational, std::string, Polynomial, Ideal, PolyMatrix, RingPtr,
                               QuotientRingPtr, RingMap, BasisValue, std::shared_ptr<const ListValue>,
                               std::shared_ptr<const OptionValue>, Symbol, FreeModule, SubquotientModule, Builtin,
                               MonomialOrder, HilbertSeries>;
  Variant v;

  Value() = default;
  template <typename T>
  Value(T x) : v(std::move(x)) {}  // NOLINT(google-explicit-constructor)

  template <typename T>
  [[nodiscard]] bool is() const {
    return std::holds_alternative<T>(v);
  }
  template <typename T>
  [[nodiscard]] const T& as() const {
    return std::get<T>(v);
  }
};

struct OptionValue {
  Value key;
  Value value;
};

Value make_list(std::vector<Value> items, bool sequence = false);

/// Human-readable type name used in error messages.
std::string type_name(const Value& value);

/// Deterministic one-line rendering used for output records.
std::string to_string(const Value& value);

}  // namespace schemekit::script

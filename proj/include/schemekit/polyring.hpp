#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schemekit/error.hpp"
#include "schemekit/exactnum.hpp"

namespace schemekit {

/// Upper bound on the number of variables of any ring, scratch rings included.
inline constexpr std::size_t kMaxVariables = 32;

enum class CoefficientDomain { Integers, Rationals };

struct MonomialOrder {
  enum class Kind { GRevLex, Lex, Eliminate };

  Kind kind = Kind::GRevLex;
  /// Number of leading variables in the eliminated block; only meaningful for Eliminate.
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::GRevLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder eliminate(std::size_t k) { return {Kind::Eliminate, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Exponent vector of fixed capacity with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  static Monomial from_exponents(std::span<const int> exps);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] unsigned operator[](std::size_t i) const { return exps_[i]; }
  [[nodiscard]] unsigned degree() const { return degree_; }
  /// Degree restricted to the first k variables.
  [[nodiscard]] unsigned leading_block_degree(std::size_t k) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < k; ++i) d += exps_[i];
    return d;
  }
  [[nodiscard]] bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned value);

  /// True when this monomial divides `other`.
  [[nodiscard]] bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  [[nodiscard]] bool coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }
  /// Bit i set when variable i (mod 64) occurs; a cheap necessary condition for divisibility.
  [[nodiscard]] std::uint64_t support_mask() const;

  /// this / other; requires other.divides(*this).
  [[nodiscard]] Monomial quotient(const Monomial& other) const;
  [[nodiscard]] Monomial lcm(const Monomial& other) const;
  [[nodiscard]] Monomial gcd(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.size_ != b.size_ || a.degree_ != b.degree_) return false;
    for (std::size_t i = 0; i < a.size_; ++i) {
      if (a.exps_[i] != b.exps_[i]) return false;
    }
    return true;
  }

  [[nodiscard]] std::size_t hash() const;

 private:
  friend int compare(const Monomial&, const Monomial&, const MonomialOrder&);

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t size_ = 0;
};

/// Three-way monomial comparison: negative, zero or positive as m1 <, =, > m2.
inline int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  const std::size_t n = a.size_;
  switch (order.kind) {
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::Kind::Eliminate: {
      const unsigned ba = a.leading_block_degree(order.block);
      const unsigned bb = b.leading_block_degree(order.block);
      if (ba != bb) return ba > bb ? 1 : -1;
      [[fallthrough]];
    }
    case MonomialOrder::Kind::GRevLex:
      if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? 1 : -1;
      }
      return 0;
  }
  return 0;
}

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Coefficient domain, ordered variable names and monomial order. Immutable.
class Ring {
 public:
  static RingPtr make(CoefficientDomain domain, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex());

  [[nodiscard]] CoefficientDomain domain() const { return domain_; }
  [[nodiscard]] bool is_field() const { return domain_ == CoefficientDomain::Rationals; }
  [[nodiscard]] std::size_t num_variables() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& variables() const { return names_; }
  [[nodiscard]] const std::string& variable(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;

  [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const {
    return schemekit::compare(a, b, order_);
  }

  /// "QQ[x, y, z]", with a trailing order clause for non-default orders.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.domain_ == b.domain_ && a.order_ == b.order_ && a.names_ == b.names_;
  }

  Ring(CoefficientDomain domain, std::vector<std::string> names, MonomialOrder order);

 private:
  CoefficientDomain domain_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

[[nodiscard]] bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view context);

struct Term {
  Monomial monomial;
  BigRational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms strictly decreasing in the ring's order with nonzero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const BigRational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const BigRational& c = 1);
  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` is already canonical; used by hot paths.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] std::span<const Term> terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] const Term& leading_term() const;
  [[nodiscard]] const Monomial& leading_monomial() const { return leading_term().monomial; }
  [[nodiscard]] const BigRational& leading_coeff() const { return leading_term().coeff; }
  /// Maximal total degree of a term; -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] bool is_homogeneous() const;
  /// True when some term has a positive exponent in variable i.
  [[nodiscard]] bool involves(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  [[nodiscard]] Polynomial scaled(const BigRational& c) const;
  [[nodiscard]] Polynomial times_monomial(const Monomial& m, const BigRational& c) const;
  [[nodiscard]] Polynomial pow(unsigned exponent) const;
  /// Divides by the leading coefficient (fields only).
  [[nodiscard]] Polynomial monic() const;

  [[nodiscard]] std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Quotient q with q * g = f, or nullopt when g does not divide f.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Homomorphic image of f in `target`. assignment[i] is the image of source variable i;
/// unassigned variables go to the target variable of the same name.
Polynomial substitute_vars(const Polynomial& f, const RingPtr& target,
                           std::span<const std::optional<Polynomial>> assignment);

/// Moves f into `target` by renaming variables: source variable i becomes target
/// variable index_map[i]. Entries equal to kDropVariable must not occur in f.
inline constexpr std::size_t kDropVariable = static_cast<std::size_t>(-1);
Polynomial relabel(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> index_map);

struct CoefficientEntry {
  Monomial monomial;      // supported on the chosen variable subset
  Polynomial coefficient;  // free of the subset variables
};

/// Splits f = sum monomial_i * coefficient_i over the given variable subset, monomials
/// listed in decreasing ring order.
std::vector<CoefficientEntry> coefficients_in(const Polynomial& f, std::span<const std::size_t> vars);

/// f = content * primitive with content > 0; the sign stays with the primitive part.
/// Requires integral coefficients.
std::pair<BigInt, Polynomial> content_and_primitive(const Polynomial& f);

/// Parses the text format: `+ - * / ^`, parentheses, integer and p/q literals, ring variables.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace schemekit

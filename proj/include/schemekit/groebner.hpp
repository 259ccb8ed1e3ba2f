#pragma once

#include <memory>
#include <span>
#include <vector>

#include "schemekit/polyring.hpp"

namespace schemekit {

enum class BasisKind { FieldReduced, IntegerStrong };

struct GroebnerOptions {
  /// Skip pairs with coprime leading monomials (over ZZ only when the leading
  /// coefficients are coprime as well, and only for S-pairs).
  bool product_criterion = true;
  /// Gebauer-Moeller chain pruning; field case only.
  bool chain_criterion = true;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t pairs_skipped = 0;
};

namespace detail {
struct ReducerSet;
}

/// A completed basis of an ideal under its ring's monomial order.
///
/// FieldReduced bases are monic, interreduced and sorted by increasing leading
/// monomial, so equal ideals produce structurally identical bases. IntegerStrong
/// bases have positive leading coefficients and the strong property: every leading
/// term of the ideal is divisible (monomial and coefficient) by a basis leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, BasisKind kind, std::vector<Polynomial> elements, GroebnerStats stats);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] BasisKind kind() const { return kind_; }
  [[nodiscard]] std::span<const Polynomial> elements() const { return elements_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] bool is_unit() const;
  [[nodiscard]] bool is_zero() const { return elements_.empty(); }
  [[nodiscard]] const GroebnerStats& stats() const { return stats_; }

  [[nodiscard]] const detail::ReducerSet& reducers() const { return *reducers_; }

 private:
  RingPtr ring_;
  BasisKind kind_;
  std::vector<Polynomial> elements_;
  GroebnerStats stats_;
  std::shared_ptr<const detail::ReducerSet> reducers_;
};

/// Fully reduced remainder of f. Over QQ this is the exact normal form; over ZZ
/// coefficients are reduced into [0, lc) of the reducing element.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Reduced basis over QQ.
GroebnerBasis buchberger_field(std::span<const Polynomial> gens, const GroebnerOptions& options = {});

/// Strong basis over ZZ, completed with S- and G-polynomials.
GroebnerBasis buchberger_integer(std::span<const Polynomial> gens, const GroebnerOptions& options = {});

/// Dispatches on the ring's coefficient domain. `ring` is used when gens is empty.
GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens,
                             const GroebnerOptions& options = {});

/// Basis elements free of the first block of an elimination order (k = 1), or all
/// elements (k = 0). Throws when the ring's order does not eliminate a first block.
std::vector<Polynomial> select_in_subring(std::size_t k, const GroebnerBasis& basis);

bool is_member(const Polynomial& f, const GroebnerBasis& basis);

/// S-polynomial with coefficient lcm of the leading coefficients.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Bezout combination u*(L/lm f)*f + v*(L/lm g)*g with leading coefficient gcd(lc f, lc g).
Polynomial g_polynomial(const Polynomial& f, const Polynomial& g);

/// Post-hoc certificate: every S-polynomial (and over ZZ every G-polynomial) of
/// basis pairs has normal form zero.
bool pairs_reduce_to_zero(const GroebnerBasis& basis);

}  // namespace schemekit

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "schemekit/groebner.hpp"
#include "schemekit/polyring.hpp"

namespace schemekit {

/// Finitely generated ideal. Copies share one lazily computed basis in the ring's order.
class Ideal {
 public:
  /// Zero generators are dropped; an empty list is the zero ideal.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal unit(RingPtr ring);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] std::span<const Polynomial> generators() const { return gens_; }
  [[nodiscard]] std::size_t num_generators() const { return gens_.size(); }
  [[nodiscard]] bool is_zero() const { return gens_.empty(); }
  [[nodiscard]] bool is_unit() const { return basis().is_unit(); }
  [[nodiscard]] bool is_homogeneous() const;

  /// Computed on first use, then shared by all copies. Safe to call concurrently.
  [[nodiscard]] const GroebnerBasis& basis() const;

  [[nodiscard]] bool contains(const Polynomial& f) const;
  [[nodiscard]] bool contains(const Ideal& other) const;

  /// `ideal (g1, g2)`, `ideal g` for a single atom, `ideal ()` for the zero ideal.
  [[nodiscard]] std::string to_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);

/// Two-sided containment of generators.
bool ideal_equals(const Ideal& a, const Ideal& b);

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(std::span<const Ideal> ideals);

/// I : f. Throws on f = 0.
Ideal quotient(const Ideal& ideal, const Polynomial& f);
/// I : J, the intersection of I : g over the generators g of J; the unit ideal when J = 0.
Ideal quotient(const Ideal& ideal, const Ideal& by);

/// I : f^infinity by iterated quotients.
Ideal saturate(const Ideal& ideal, const Polynomial& f);
Ideal saturate(const Ideal& ideal, const Ideal& by);
/// Saturation with respect to the ideal of all variables.
Ideal saturate(const Ideal& ideal);

/// Generators of I intersected with the subring free of `vars`, returned in the
/// ambient ring.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> vars);
/// Eliminates the first k variables.
Ideal eliminate(const Ideal& ideal, std::size_t k);

/// Drops generators lying in the ideal of the remaining ones, scanning from the
/// highest degree down (ties broken by leading monomial, larger first). Survivors
/// keep their input order, negated where needed so leading coefficients are positive.
/// The unit ideal trims to (1).
Ideal trim(const Ideal& ideal);

/// A variable name not used by `ring`, derived from `base`.
std::string fresh_variable_name(const Ring& ring, const std::string& base);

}  // namespace schemekit

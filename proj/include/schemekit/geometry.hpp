#pragma once

#include <string>
#include <vector>

#include "schemekit/exactnum.hpp"
#include "schemekit/ideals.hpp"

namespace schemekit {

/// numerator(t) / (1 - t)^pole_order with integer numerator coefficients
/// (index = power of t).
struct HilbertSeries {
  std::vector<BigInt> numerator;
  std::size_t pole_order = 0;

  /// Divides numerator and denominator by (1 - t) while possible.
  [[nodiscard]] HilbertSeries reduced() const;
  [[nodiscard]] BigInt numerator_at_one() const;
  /// Coefficient of t^d in the expansion.
  [[nodiscard]] BigInt hilbert_function(std::size_t d) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

enum class PivotStrategy {
  /// The variable occurring in most minimal generators (lowest index on ties).
  MostFrequent,
  /// The lowest-index variable of the first generator that is not a variable.
  FirstVariable,
};

/// Minimal generators of the monomial ideal spanned by `gens`, sorted by the ring's order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens, const Ring& ring);

/// Hilbert series of S / (gens) for S with `nvars` variables, by pivot recursion.
HilbertSeries hilbert_series(const std::vector<Monomial>& gens, std::size_t nvars,
                             PivotStrategy strategy = PivotStrategy::MostFrequent);

/// Leading monomials of the ideal's basis, minimalized. Field coefficients only.
std::vector<Monomial> leading_term_ideal(const Ideal& ideal);

/// Hilbert series of S / in(I).
HilbertSeries hilbert_series(const Ideal& ideal);

struct DimCodim {
  int dim;
  int codim;
};
/// Krull dimension of S/I and codimension; the unit ideal has dim -1 and codim n + 1.
DimCodim dim_and_codim(const Ideal& ideal);

/// Number of monomials outside the monomial ideal; throws when it is infinite.
BigInt standard_monomial_count(const std::vector<Monomial>& gens, std::size_t nvars);

/// Degree of S/I: the reduced Hilbert numerator at 1 for homogeneous I, the number of
/// standard monomials for zero-dimensional I under GRevLex. Other inputs throw.
BigInt degree(const Ideal& ideal);

/// Degree of (I + J) / J, i.e. of HS(S/J) - HS(S/(I+J)). Homogeneous inputs only.
BigInt module_degree(const Ideal& i, const Ideal& j);

/// Relations of the Rees algebra of I in the ring (original variables, new_names).
/// Throws "not enough variables" when fewer names than generators are given.
Ideal blowup_ideal(const Ideal& ideal, const std::vector<std::string>& new_names);

/// Fiber at t = value of the saturation of I with respect to its first variable t,
/// trimmed and returned in the ring of the remaining variables.
Ideal flat_limit(const Ideal& ideal, const BigRational& value);

}  // namespace schemekit

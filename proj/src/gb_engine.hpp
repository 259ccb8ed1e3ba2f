#pragma once

// Integer-coefficient polynomial kernel shared by basis completion and normal forms.
// Over QQ every polynomial is kept primitive with integer coefficients and reduced
// fraction-free; over ZZ reduction is the coefficient-aware division of strong bases.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "schemekit/polyring.hpp"

namespace schemekit::detail {

struct ZTerm {
  Monomial m;
  mpz_class c;
};
using ZTerms = std::vector<ZTerm>;

struct Reducer {
  ZTerms poly;
  Monomial lm;
  std::uint64_t mask = 0;
  unsigned sugar = 0;
  bool active = true;
};

struct ReducerSet {
  MonomialOrder order;
  bool integral = false;
  std::vector<Reducer> entries;

  void add(ZTerms poly, unsigned sugar);
};

/// a*ma*f[fs..] + b*mb*g[gs..]; a null monomial pointer means 1.
ZTerms lincomb(const MonomialOrder& order, const mpz_class& a, const Monomial* ma, const ZTerms& f,
               std::size_t fs, const mpz_class& b, const Monomial* mb, const ZTerms& g, std::size_t gs);

enum class ReduceMode { Top, Full };

struct ReduceOutput {
  ZTerms remainder;
  /// remainder = scale * input - (combination of reducers); always 1 over ZZ.
  mpq_class scale = 1;
  unsigned sugar = 0;
};

/// Reduces h against the active entries of `set`, skipping entry `skip` (or none when
/// skip < 0). Top mode stops at the first irreducible leading term.
ReduceOutput reduce(ZTerms h, unsigned sugar, const ReducerSet& set, ReduceMode mode, std::ptrdiff_t skip = -1,
                    bool track_scale = false);

/// Field case only: whether h reduces to zero modulo `set`. Same answer as a Top-mode
/// reduce, computed with geobuckets so each step touches only the reducer's terms.
bool reduces_to_zero(const ZTerms& h, const ReducerSet& set);

/// Divides out the content and makes the leading coefficient positive.
void make_primitive(ZTerms& p);

/// Integer form of f (denominators cleared) and the multiplier used.
ZTerms to_zterms(const Polynomial& f, mpz_class* multiplier = nullptr);
Polynomial from_zterms(const RingPtr& ring, const ZTerms& p, const mpq_class& divisor = 1);

}  // namespace schemekit::detail

#include "schemekit/groebner.hpp"

#include <algorithm>
#include <ostream>

#include "gb_engine.hpp"
#include "schemekit/settings.hpp"

namespace schemekit {

using detail::ReduceMode;
using detail::ReducerSet;
using detail::ZTerms;

namespace {

enum class PairKind { S, G };

struct CriticalPair {
  std::size_t i;
  std::size_t j;  // i < j, j is the newer element
  Monomial lcm;
  unsigned sugar;
  PairKind kind;
};

// Normal selection refined by sugar: smallest sugar, then smallest lcm degree,
// then the order of the lcm, then pair indices.
bool pair_before(const CriticalPair& a, const CriticalPair& b, const MonomialOrder& order) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  const int c = compare(a.lcm, b.lcm, order);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  if (a.i != b.i) return a.i < b.i;
  return a.kind < b.kind;
}

unsigned pair_sugar(const detail::Reducer& f, const detail::Reducer& g, const Monomial& lcm) {
  return std::max(f.sugar + (lcm.degree() - f.lm.degree()), g.sugar + (lcm.degree() - g.lm.degree()));
}

RingPtr common_ring(std::span<const Polynomial> gens) {
  if (gens.empty()) throw Error("basis of an empty generator list needs an explicit ring");
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens) require_same_ring(ring, g.ring(), "basis computation");
  return ring;
}

// Inputs sorted by increasing leading monomial so that cheap elements enter first.
std::vector<ZTerms> prepared_inputs(std::span<const Polynomial> gens, bool integral) {
  std::vector<const Polynomial*> order;
  for (const auto& g : gens) {
    if (!g.is_zero()) order.push_back(&g);
  }
  if (order.empty()) return {};
  const Ring& ring = *order.front()->ring();
  std::stable_sort(order.begin(), order.end(), [&ring](const Polynomial* a, const Polynomial* b) {
    return ring.compare(a->leading_monomial(), b->leading_monomial()) < 0;
  });
  std::vector<ZTerms> out;
  for (const auto* g : order) {
    ZTerms z = detail::to_zterms(*g);
    if (!integral) {
      detail::make_primitive(z);
    } else if (sgn(z.front().c) < 0) {
      for (auto& t : z) t.c = -t.c;
    }
    out.push_back(std::move(z));
  }
  return out;
}

ZTerms s_poly_terms(const ReducerSet& set, const CriticalPair& p) {
  const auto& f = set.entries[p.i];
  const auto& g = set.entries[p.j];
  const mpz_class& cf = f.poly.front().c;
  const mpz_class& cg = g.poly.front().c;
  mpz_class d;
  mpz_gcd(d.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const Monomial mf = p.lcm.quotient(f.lm);
  const Monomial mg = p.lcm.quotient(g.lm);
  if (p.kind == PairKind::S) {
    const mpz_class a = cg / d;
    const mpz_class b = -(cf / d);
    return detail::lincomb(set.order, a, &mf, f.poly, 1, b, &mg, g.poly, 1);
  }
  mpz_class u;
  mpz_class v;
  mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  return detail::lincomb(set.order, u, &mf, f.poly, 0, v, &mg, g.poly, 0);
}

void trace_summary(const char* label, const GroebnerStats& stats, std::size_t size) {
  if (auto* os = engine_settings().gb_trace) {
    *os << "-- gb(" << label << "): " << stats.pairs_processed << " pairs reduced, " << stats.reductions_to_zero
        << " to zero, " << stats.pairs_skipped << " skipped by criteria, basis size " << size << '\n';
  }
}

// Field case pair update following Gebauer-Moeller: the new pairs are pruned by the
// chain criterion against each other (keeping one per lcm, and none when one of the
// equal-lcm pairs has coprime leading monomials), old pairs whose lcm is divisible by
// the new leading monomial are dropped, and elements whose leading monomial the new
// one divides are retired.
void update_field(std::vector<CriticalPair>& pairs, ReducerSet& set, std::size_t k, const GroebnerOptions& opt,
                  GroebnerStats& stats) {
  const auto& h = set.entries[k];
  std::vector<CriticalPair> fresh;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& g = set.entries[i];
    if (!g.active) continue;
    const Monomial l = g.lm.lcm(h.lm);
    fresh.push_back({i, k, l, pair_sugar(g, h, l), PairKind::S});
  }
  auto coprime = [&](const CriticalPair& p) { return set.entries[p.i].lm.coprime_with(h.lm); };

  std::vector<CriticalPair> kept;
  if (opt.chain_criterion) {
    std::vector<bool> alive(fresh.size(), true);
    std::vector<bool> in_d(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      alive[a] = false;
      bool dominated = false;
      if (!coprime(fresh[a])) {
        for (std::size_t b = 0; b < fresh.size() && !dominated; ++b) {
          if ((alive[b] || in_d[b]) && fresh[b].lcm.divides(fresh[a].lcm)) dominated = true;
        }
      }
      if (!dominated) in_d[a] = true;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (in_d[a]) kept.push_back(fresh[a]);
    }
    stats.pairs_skipped += fresh.size() - kept.size();

    std::erase_if(pairs, [&](const CriticalPair& p) {
      if (!h.lm.divides(p.lcm)) return false;
      const Monomial li = set.entries[p.i].lm.lcm(h.lm);
      const Monomial lj = set.entries[p.j].lm.lcm(h.lm);
      const bool drop = !(li == p.lcm) && !(lj == p.lcm);
      if (drop) ++stats.pairs_skipped;
      return drop;
    });
  } else {
    kept = std::move(fresh);
  }

  for (auto& p : kept) {
    if (opt.product_criterion && coprime(p)) {
      ++stats.pairs_skipped;
      continue;
    }
    pairs.push_back(p);
  }
  for (std::size_t i = 0; i < k; ++i) {
    auto& g = set.entries[i];
    if (g.active && h.lm.divides(g.lm)) g.active = false;
  }
}

void update_integer(std::vector<CriticalPair>& pairs, ReducerSet& set, std::size_t k, const GroebnerOptions& opt,
                    GroebnerStats& stats) {
  const auto& h = set.entries[k];
  const mpz_class& ch = h.poly.front().c;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& g = set.entries[i];
    if (!g.active) continue;
    const mpz_class& cg = g.poly.front().c;
    const Monomial l = g.lm.lcm(h.lm);
    const unsigned sugar = pair_sugar(g, h, l);
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), cg.get_mpz_t(), ch.get_mpz_t());
    if (opt.product_criterion && d == 1 && g.lm.coprime_with(h.lm)) {
      ++stats.pairs_skipped;
    } else {
      pairs.push_back({i, k, l, sugar, PairKind::S});
    }
    const bool one_divides = mpz_divisible_p(cg.get_mpz_t(), ch.get_mpz_t()) != 0 ||
                             mpz_divisible_p(ch.get_mpz_t(), cg.get_mpz_t()) != 0;
    if (!one_divides) pairs.push_back({i, k, l, sugar, PairKind::G});
  }
}

bool is_unit_terms(const ZTerms& z, bool integral) {
  return z.size() == 1 && z.front().m.is_one() && (!integral || z.front().c == 1 || z.front().c == -1);
}

GroebnerBasis complete_basis(const RingPtr& ring, std::span<const Polynomial> gens, bool integral,
                             const GroebnerOptions& opt) {
  check_deadline();
  ReducerSet set;
  set.order = ring->order();
  set.integral = integral;
  GroebnerStats stats;
  std::vector<CriticalPair> pairs;

  auto unit_basis = [&] {
    trace_summary(integral ? "ZZ" : "QQ", stats, 1);
    return GroebnerBasis(ring, integral ? BasisKind::IntegerStrong : BasisKind::FieldReduced,
                         {Polynomial::constant(ring, 1)}, stats);
  };

  // Returns true when the unit ideal has been reached.
  auto insert = [&](ZTerms z, unsigned sugar) {
    auto red = detail::reduce(std::move(z), sugar, set, ReduceMode::Full);
    if (red.remainder.empty()) {
      ++stats.reductions_to_zero;
      return false;
    }
    if (!integral) {
      detail::make_primitive(red.remainder);
    } else if (sgn(red.remainder.front().c) < 0) {
      for (auto& t : red.remainder) t.c = -t.c;
    }
    if (is_unit_terms(red.remainder, integral)) return true;
    set.add(std::move(red.remainder), red.sugar);
    const std::size_t k = set.entries.size() - 1;
    if (integral) {
      update_integer(pairs, set, k, opt, stats);
    } else {
      update_field(pairs, set, k, opt, stats);
    }
    return false;
  };

  for (auto& z : prepared_inputs(gens, integral)) {
    unsigned sugar = 0;
    for (const auto& t : z) sugar = std::max(sugar, t.m.degree());
    if (insert(std::move(z), sugar)) return unit_basis();
  }

  while (!pairs.empty()) {
    check_deadline();
    auto best = std::min_element(pairs.begin(), pairs.end(), [&set](const auto& a, const auto& b) {
      return pair_before(a, b, set.order);
    });
    const CriticalPair p = *best;
    *best = pairs.back();
    pairs.pop_back();
    ++stats.pairs_processed;
    if (auto* os = engine_settings().gb_trace; os && stats.pairs_processed % 500 == 0) {
      *os << "-- gb: " << stats.pairs_processed << " pairs, " << pairs.size() << " pending, sugar " << p.sugar
          << ", basis " << set.entries.size() << '\n';
    }
    if (insert(s_poly_terms(set, p), p.sugar)) return unit_basis();
  }

  // Retire elements made redundant, then interreduce tails.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < set.entries.size(); ++i) {
    if (set.entries[i].active) live.push_back(i);
  }
  if (integral) {
    for (std::size_t a : live) {
      for (std::size_t b : live) {
        if (a == b || !set.entries[a].active || !set.entries[b].active) continue;
        const auto& ea = set.entries[a];
        const auto& eb = set.entries[b];
        if (eb.lm.divides(ea.lm) &&
            mpz_divisible_p(ea.poly.front().c.get_mpz_t(), eb.poly.front().c.get_mpz_t()) != 0 &&
            !(ea.lm == eb.lm && ea.poly.front().c == eb.poly.front().c && a < b)) {
          set.entries[a].active = false;
        }
      }
    }
  }
  std::vector<Polynomial> elements;
  for (std::size_t i = 0; i < set.entries.size(); ++i) {
    auto& e = set.entries[i];
    if (!e.active) continue;
    ZTerms tail(e.poly.begin() + 1, e.poly.end());
    auto red = detail::reduce(std::move(tail), 0, set, ReduceMode::Full, static_cast<std::ptrdiff_t>(i), !integral);
    // remainder = scale * tail - combination, so num * lead + den * remainder is the new element.
    ZTerms full;
    full.reserve(red.remainder.size() + 1);
    full.push_back(e.poly.front());
    full.front().c *= red.scale.get_num();
    const mpz_class& den = red.scale.get_den();
    for (auto& t : red.remainder) {
      if (den != 1) t.c *= den;
      full.push_back(std::move(t));
    }
    if (!integral) detail::make_primitive(full);
    e.poly = full;
    if (integral) {
      elements.push_back(detail::from_zterms(ring, e.poly));
    } else {
      elements.push_back(detail::from_zterms(ring, e.poly).monic());
    }
  }
  const Ring& r = *ring;
  std::sort(elements.begin(), elements.end(), [&r](const Polynomial& a, const Polynomial& b) {
    const int c = r.compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return a.leading_coeff() < b.leading_coeff();
  });
  trace_summary(integral ? "ZZ" : "QQ", stats, elements.size());
  return GroebnerBasis(ring, integral ? BasisKind::IntegerStrong : BasisKind::FieldReduced, std::move(elements),
                       stats);
}

GroebnerBasis complete(const RingPtr& ring, std::span<const Polynomial> gens, bool integral,
                       const GroebnerOptions& opt) {
  GroebnerBasis basis = complete_basis(ring, gens, integral, opt);
  if (const auto& observer = engine_settings().basis_observer) observer(basis);
  return basis;
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, BasisKind kind, std::vector<Polynomial> elements, GroebnerStats stats)
    : ring_(std::move(ring)), kind_(kind), elements_(std::move(elements)), stats_(stats) {
  auto set = std::make_shared<ReducerSet>();
  set->order = ring_->order();
  set->integral = kind_ == BasisKind::IntegerStrong;
  for (const auto& e : elements_) {
    require_same_ring(ring_, e.ring(), "basis element");
    if (e.is_zero()) continue;
    ZTerms z = detail::to_zterms(e);
    if (!set->integral) detail::make_primitive(z);
    set->add(std::move(z), static_cast<unsigned>(e.total_degree()));
  }
  reducers_ = std::move(set);
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const Polynomial& p) {
    return p.is_constant() && !p.is_zero() &&
           (p.ring()->is_field() || p.leading_coeff().is_one() || p.leading_coeff() == BigRational(-1));
  });
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  require_same_ring(f.ring(), basis.ring(), "normal_form");
  if (f.is_zero()) return f;
  mpz_class multiplier;
  ZTerms z = detail::to_zterms(f, &multiplier);
  auto red = detail::reduce(std::move(z), 0, basis.reducers(), ReduceMode::Full, -1, true);
  const mpq_class divisor = red.scale * multiplier;
  return detail::from_zterms(f.ring(), red.remainder, divisor);
}

GroebnerBasis buchberger_field(std::span<const Polynomial> gens, const GroebnerOptions& options) {
  const RingPtr ring = common_ring(gens);
  if (!ring->is_field()) throw Error("buchberger_field requires coefficients in QQ");
  return complete(ring, gens, false, options);
}

GroebnerBasis buchberger_integer(std::span<const Polynomial> gens, const GroebnerOptions& options) {
  const RingPtr ring = common_ring(gens);
  if (ring->is_field()) throw Error("buchberger_integer requires coefficients in ZZ");
  return complete(ring, gens, true, options);
}

GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens, const GroebnerOptions& options) {
  for (const auto& g : gens) require_same_ring(ring, g.ring(), "basis computation");
  return complete(ring, gens, !ring->is_field(), options);
}

std::vector<Polynomial> select_in_subring(std::size_t k, const GroebnerBasis& basis) {
  const auto& elems = basis.elements();
  if (k == 0) return {elems.begin(), elems.end()};
  if (k != 1) throw Error("select_in_subring: only the first block (k = 1) can be selected");
  const MonomialOrder& order = basis.ring()->order();
  std::size_t block = 0;
  if (order.kind == MonomialOrder::Kind::Eliminate) {
    block = order.block;
  } else if (order.kind == MonomialOrder::Kind::Lex) {
    block = 1;
  } else {
    throw Error("select_in_subring: " + basis.ring()->to_string() + " has no elimination order");
  }
  std::vector<Polynomial> out;
  for (const auto& e : elems) {
    bool free = true;
    for (std::size_t v = 0; v < block && free; ++v) free = !e.involves(v);
    if (free) out.push_back(e);
  }
  return out;
}

bool is_member(const Polynomial& f, const GroebnerBasis& basis) {
  require_same_ring(f.ring(), basis.ring(), "is_member");
  if (f.is_zero()) return true;
  if (f.ring()->is_field()) return detail::reduces_to_zero(detail::to_zterms(f), basis.reducers());
  auto red = detail::reduce(detail::to_zterms(f), 0, basis.reducers(), ReduceMode::Top);
  return red.remainder.empty();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "s_polynomial");
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const BigRational& cf = f.leading_coeff();
  const BigRational& cg = g.leading_coeff();
  if (f.ring()->is_field()) {
    return f.times_monomial(l.quotient(f.leading_monomial()), BigRational(1) / cf) -
           g.times_monomial(l.quotient(g.leading_monomial()), BigRational(1) / cg);
  }
  const BigInt c = lcm(cf.numerator(), cg.numerator()).abs();
  return f.times_monomial(l.quotient(f.leading_monomial()), BigRational(divexact(c, cf.numerator()))) -
         g.times_monomial(l.quotient(g.leading_monomial()), BigRational(divexact(c, cg.numerator())));
}

Polynomial g_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "g_polynomial");
  if (f.ring()->is_field()) throw Error("G-polynomials are defined over ZZ only");
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const auto e = ext_gcd(f.leading_coeff().numerator(), g.leading_coeff().numerator());
  return f.times_monomial(l.quotient(f.leading_monomial()), BigRational(e.u)) +
         g.times_monomial(l.quotient(g.leading_monomial()), BigRational(e.v));
}

bool pairs_reduce_to_zero(const GroebnerBasis& basis) {
  const auto elems = basis.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!is_member(s_polynomial(elems[i], elems[j]), basis)) return false;
      if (basis.kind() == BasisKind::IntegerStrong && !is_member(g_polynomial(elems[i], elems[j]), basis)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace schemekit

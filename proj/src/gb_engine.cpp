#include "gb_engine.hpp"

#include <algorithm>

namespace schemekit::detail {

void ReducerSet::add(ZTerms poly, unsigned sugar) {
  Reducer r;
  r.lm = poly.front().m;
  r.mask = r.lm.support_mask();
  r.sugar = sugar;
  r.poly = std::move(poly);
  entries.push_back(std::move(r));
}

ZTerms lincomb(const MonomialOrder& order, const mpz_class& a, const Monomial* ma, const ZTerms& f,
               std::size_t fs, const mpz_class& b, const Monomial* mb, const ZTerms& g, std::size_t gs) {
  ZTerms out;
  out.reserve((f.size() - std::min(fs, f.size())) + (g.size() - std::min(gs, g.size())));
  const bool a_one = a == 1;
  const bool b_one = b == 1;
  std::size_t i = fs;
  std::size_t j = gs;
  Monomial fm;
  Monomial gm;
  auto load_f = [&] {
    if (i < f.size()) fm = ma ? f[i].m * *ma : f[i].m;
  };
  auto load_g = [&] {
    if (j < g.size()) gm = mb ? g[j].m * *mb : g[j].m;
  };
  load_f();
  load_g();
  while (i < f.size() && j < g.size()) {
    const int c = compare(fm, gm, order);
    if (c > 0) {
      out.push_back({fm, a_one ? f[i].c : mpz_class(a * f[i].c)});
      ++i;
      load_f();
    } else if (c < 0) {
      out.push_back({gm, b_one ? g[j].c : mpz_class(b * g[j].c)});
      ++j;
      load_g();
    } else {
      mpz_class s;
      mpz_mul(s.get_mpz_t(), a.get_mpz_t(), f[i].c.get_mpz_t());
      mpz_addmul(s.get_mpz_t(), b.get_mpz_t(), g[j].c.get_mpz_t());
      if (sgn(s) != 0) out.push_back({fm, std::move(s)});
      ++i;
      ++j;
      load_f();
      load_g();
    }
  }
  while (i < f.size()) {
    out.push_back({fm, a_one ? f[i].c : mpz_class(a * f[i].c)});
    ++i;
    load_f();
  }
  while (j < g.size()) {
    out.push_back({gm, b_one ? g[j].c : mpz_class(b * g[j].c)});
    ++j;
    load_g();
  }
  return out;
}

namespace {

// Field case: among divisors pick the shortest polynomial. Integer case: prefer an
// entry whose leading coefficient divides c, else any entry giving a nonzero quotient.
std::ptrdiff_t find_reducer(const ReducerSet& set, const Monomial& m, const mpz_class& c, std::ptrdiff_t skip) {
  const std::uint64_t mask = m.support_mask();
  std::ptrdiff_t best = -1;
  std::ptrdiff_t weak = -1;
  for (std::size_t k = 0; k < set.entries.size(); ++k) {
    const Reducer& r = set.entries[k];
    if (!r.active || static_cast<std::ptrdiff_t>(k) == skip) continue;
    if ((r.mask & ~mask) != 0 || !r.lm.divides(m)) continue;
    if (!set.integral) {
      if (best < 0 || r.poly.size() < set.entries[best].poly.size()) best = static_cast<std::ptrdiff_t>(k);
      continue;
    }
    const mpz_class& lc = r.poly.front().c;
    if (mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t()) != 0) {
      if (best < 0 || r.poly.size() < set.entries[best].poly.size()) best = static_cast<std::ptrdiff_t>(k);
    } else if (weak < 0 && (sgn(c) < 0 || cmp(c, lc) >= 0)) {
      weak = static_cast<std::ptrdiff_t>(k);
    }
  }
  return best >= 0 ? best : weak;
}

mpz_class content_of(const ZTerms& a, const ZTerms& b, std::size_t bs) {
  mpz_class g = 0;
  for (const auto& t : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) return g;
  }
  for (std::size_t i = bs; i < b.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b[i].c.get_mpz_t());
    if (g == 1) return g;
  }
  return g;
}

}  // namespace

ReduceOutput reduce(ZTerms h, unsigned sugar, const ReducerSet& set, ReduceMode mode, std::ptrdiff_t skip,
                    bool track_scale) {
  ReduceOutput out;
  out.sugar = sugar;
  ZTerms& r = out.remainder;
  std::size_t pos = 0;
  std::size_t steps = 0;
  mpz_class a;
  mpz_class b;
  mpz_class d;
  while (pos < h.size()) {
    const ZTerm& lead = h[pos];
    const std::ptrdiff_t idx = find_reducer(set, lead.m, lead.c, skip);
    if (idx < 0) {
      if (mode == ReduceMode::Top) break;
      r.push_back(std::move(h[pos]));
      ++pos;
      continue;
    }
    const Reducer& g = set.entries[idx];
    const mpz_class& lc = g.poly.front().c;
    const Monomial m = lead.m.quotient(g.lm);
    out.sugar = std::max(out.sugar, g.sugar + m.degree());
    if (!set.integral) {
      mpz_gcd(d.get_mpz_t(), lead.c.get_mpz_t(), lc.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), lc.get_mpz_t(), d.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), lead.c.get_mpz_t(), d.get_mpz_t());
      b = -b;
      if (a != 1) {
        for (auto& t : r) t.c *= a;
        if (track_scale) out.scale *= a;
      }
      h = lincomb(set.order, a, nullptr, h, pos + 1, b, &m, g.poly, 1);
    } else {
      mpz_fdiv_q(b.get_mpz_t(), lead.c.get_mpz_t(), lc.get_mpz_t());
      const bool exact = mpz_divisible_p(lead.c.get_mpz_t(), lc.get_mpz_t()) != 0;
      b = -b;
      a = 1;
      h = exact ? lincomb(set.order, a, nullptr, h, pos + 1, b, &m, g.poly, 1)
                : lincomb(set.order, a, nullptr, h, pos, b, &m, g.poly, 0);
    }
    pos = 0;
    if (!set.integral && (++steps % 16) == 0) {
      const mpz_class k = content_of(r, h, 0);
      if (k > 1) {
        for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), k.get_mpz_t());
        for (auto& t : h) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), k.get_mpz_t());
        if (track_scale) out.scale /= k;
      }
    }
  }
  if (mode == ReduceMode::Top) {
    r.assign(std::make_move_iterator(h.begin() + static_cast<std::ptrdiff_t>(pos)), std::make_move_iterator(h.end()));
  }
  return out;
}

namespace {

// Sum of descending term lists kept in buckets of capacity 16 * 4^i; the leading
// term is found by comparing bucket heads.
class Geobucket {
 public:
  explicit Geobucket(const MonomialOrder& order) : order_(order) {}

  // Adds b * m * g[gs..].
  void add(const mpz_class& b, const Monomial* m, const ZTerms& g, std::size_t gs) {
    const std::size_t n = g.size() - std::min(gs, g.size());
    std::size_t i = 0;
    while (capacity(i) < n) ++i;
    if (buckets_.size() <= i) buckets_.resize(i + 1);
    merge(buckets_[i], n, [&](std::size_t k) {
      ZTerm t{m ? g[gs + k].m * *m : g[gs + k].m, {}};
      mpz_mul(t.c.get_mpz_t(), b.get_mpz_t(), g[gs + k].c.get_mpz_t());
      return t;
    });
    while (buckets_[i].size() > capacity(i)) {
      if (buckets_.size() <= i + 1) buckets_.resize(i + 2);
      Bucket& lo = buckets_[i];
      merge(buckets_[i + 1], lo.size(), [&lo](std::size_t k) { return std::move(lo.terms[lo.start + k]); });
      lo.terms.clear();
      lo.start = 0;
      ++i;
    }
  }

  void scale(const mpz_class& a) {
    for (auto& bk : buckets_) {
      for (std::size_t k = bk.start; k < bk.terms.size(); ++k) bk.terms[k].c *= a;
    }
  }

  // Bucket holding the leading term with equal heads combined into it; -1 when the sum is zero.
  std::ptrdiff_t lead() {
    for (;;) {
      std::ptrdiff_t best = -1;
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (buckets_[k].size() == 0) continue;
        if (best < 0) {
          best = static_cast<std::ptrdiff_t>(k);
          continue;
        }
        const int c = compare(head(k).m, head(static_cast<std::size_t>(best)).m, order_);
        if (c > 0) {
          best = static_cast<std::ptrdiff_t>(k);
        } else if (c == 0) {
          head(static_cast<std::size_t>(best)).c += head(k).c;
          pop(k);
        }
      }
      if (best < 0) return -1;
      if (sgn(head(static_cast<std::size_t>(best)).c) != 0) return best;
      pop(static_cast<std::size_t>(best));
    }
  }

  ZTerm& head(std::size_t k) { return buckets_[k].terms[buckets_[k].start]; }
  void pop(std::size_t k) { ++buckets_[k].start; }

 private:
  struct Bucket {
    ZTerms terms;
    std::size_t start = 0;
    [[nodiscard]] std::size_t size() const { return terms.size() - start; }
  };

  static std::size_t capacity(std::size_t i) { return std::size_t{16} << (2 * i); }

  // dst += the n terms produced in descending order by take(0..n-1). Terms of dst are moved.
  template <class Take>
  void merge(Bucket& dst, std::size_t n, Take take) {
    scratch_.clear();
    scratch_.reserve(dst.size() + n);
    std::size_t i = dst.start;
    std::size_t j = 0;
    ZTerm next;
    if (j < n) next = take(j);
    while (i < dst.terms.size() && j < n) {
      const int c = compare(dst.terms[i].m, next.m, order_);
      if (c > 0) {
        scratch_.push_back(std::move(dst.terms[i++]));
      } else if (c < 0) {
        scratch_.push_back(std::move(next));
        if (++j < n) next = take(j);
      } else {
        ZTerm& t = dst.terms[i++];
        t.c += next.c;
        if (sgn(t.c) != 0) scratch_.push_back(std::move(t));
        if (++j < n) next = take(j);
      }
    }
    while (i < dst.terms.size()) scratch_.push_back(std::move(dst.terms[i++]));
    while (j < n) {
      scratch_.push_back(std::move(next));
      if (++j < n) next = take(j);
    }
    dst.terms.swap(scratch_);
    dst.start = 0;
  }

  const MonomialOrder& order_;
  std::vector<Bucket> buckets_;
  ZTerms scratch_;
};

// Among divisors prefer an entry whose leading coefficient divides c, then the shortest.
std::ptrdiff_t find_field_reducer(const ReducerSet& set, const Monomial& m, const mpz_class& c) {
  const std::uint64_t mask = m.support_mask();
  std::ptrdiff_t best = -1;
  bool best_divides = false;
  for (std::size_t k = 0; k < set.entries.size(); ++k) {
    const Reducer& r = set.entries[k];
    if (!r.active || (r.mask & ~mask) != 0 || !r.lm.divides(m)) continue;
    const bool divides = mpz_divisible_p(c.get_mpz_t(), r.poly.front().c.get_mpz_t()) != 0;
    if (best < 0 || (divides && !best_divides) ||
        (divides == best_divides && r.poly.size() < set.entries[static_cast<std::size_t>(best)].poly.size())) {
      best = static_cast<std::ptrdiff_t>(k);
      best_divides = divides;
    }
  }
  return best;
}

}  // namespace

bool reduces_to_zero(const ZTerms& h, const ReducerSet& set) {
  Geobucket sum(set.order);
  sum.add(1, nullptr, h, 0);
  mpz_class c;
  mpz_class d;
  mpz_class a;
  for (;;) {
    const std::ptrdiff_t k = sum.lead();
    if (k < 0) return true;
    ZTerm& lead = sum.head(static_cast<std::size_t>(k));
    const std::ptrdiff_t idx = find_field_reducer(set, lead.m, lead.c);
    if (idx < 0) return false;
    const Reducer& g = set.entries[static_cast<std::size_t>(idx)];
    const mpz_class& lc = g.poly.front().c;
    const Monomial m = lead.m.quotient(g.lm);
    mpz_gcd(d.get_mpz_t(), lead.c.get_mpz_t(), lc.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), lc.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), lead.c.get_mpz_t(), d.get_mpz_t());
    c = -c;
    sum.pop(static_cast<std::size_t>(k));
    if (a != 1) sum.scale(a);
    sum.add(c, &m, g.poly, 1);
  }
}

void make_primitive(ZTerms& p) {
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.front().c) < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

ZTerms to_zterms(const Polynomial& f, mpz_class* multiplier) {
  mpz_class den = 1;
  for (const auto& t : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.raw().get_den_mpz_t());
  }
  ZTerms out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    mpz_class c = den / t.coeff.raw().get_den();
    c *= t.coeff.raw().get_num();
    out.push_back({t.monomial, std::move(c)});
  }
  if (multiplier) *multiplier = den;
  return out;
}

Polynomial from_zterms(const RingPtr& ring, const ZTerms& p, const mpq_class& divisor) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  const bool unit = divisor == 1;
  for (const auto& t : p) {
    terms.push_back({t.m, unit ? BigRational(BigInt(t.c)) : BigRational(mpq_class(mpq_class(t.c) / divisor))});
  }
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

}  // namespace schemekit::detail

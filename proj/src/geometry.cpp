#include "schemekit/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace schemekit {

// ---------------------------------------------------------------- HilbertSeries

namespace {

void trim_zeros(std::vector<BigInt>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::vector<BigInt> poly_add(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t shift_b) {
  std::vector<BigInt> out(std::max(a.size(), b.size() + shift_b), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + shift_b] = out[i + shift_b] + b[i];
  trim_zeros(out);
  return out;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  trim_zeros(out);
  return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r(1);
  for (std::size_t i = 1; i <= k; ++i) {
    r = divexact(r * BigInt(static_cast<long>(n - k + i)), BigInt(static_cast<long>(i)));
  }
  return r;
}

}  // namespace

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries out = *this;
  trim_zeros(out.numerator);
  while (out.pole_order > 0 && !out.numerator.empty() && out.numerator_at_one().is_zero()) {
    // Synthetic division by (1 - t): q_i = sum_{j <= i} n_j.
    std::vector<BigInt> q(out.numerator.size() - 1, BigInt(0));
    BigInt acc(0);
    for (std::size_t i = 0; i + 1 < out.numerator.size(); ++i) {
      acc = acc + out.numerator[i];
      q[i] = acc;
    }
    trim_zeros(q);
    out.numerator = std::move(q);
    --out.pole_order;
  }
  return out;
}

BigInt HilbertSeries::numerator_at_one() const {
  BigInt s(0);
  for (const auto& c : numerator) s = s + c;
  return s;
}

BigInt HilbertSeries::hilbert_function(std::size_t d) const {
  BigInt s(0);
  for (std::size_t i = 0; i < numerator.size() && i <= d; ++i) {
    if (numerator[i].is_zero()) continue;
    if (pole_order == 0) {
      if (i == d) s = s + numerator[i];
      continue;
    }
    s = s + numerator[i] * binomial(d - i + pole_order - 1, pole_order - 1);
  }
  return s;
}

std::string HilbertSeries::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const BigInt& c = numerator[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const BigInt mag = c.abs();
    if (i == 0 || !mag.is_one()) s += mag.to_string();
    if (i > 0) s += i == 1 ? "T" : "T^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  return "(" + s + ")/(1-T)^" + std::to_string(pole_order);
}

// ---------------------------------------------------------------- monomial ideals

std::vector<Monomial> minimalize(std::vector<Monomial> gens, const Ring& ring) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&g](const Monomial& m) { return m.divides(g); });
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) { return ring.compare(a, b) < 0; });
  return out;
}

namespace {

std::vector<Monomial> minimal_unsorted(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&g](const Monomial& m) { return m.divides(g); })) out.push_back(g);
  }
  return out;
}

// Numerator of the Hilbert series of S/M over (1 - t)^n; M given by minimal generators.
std::vector<BigInt> hs_numerator(const std::vector<Monomial>& gens, PivotStrategy strategy) {
  if (gens.empty()) return {BigInt(1)};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime_with(gens[j]);
  }
  if (coprime) {
    std::vector<BigInt> acc{BigInt(1)};
    for (const auto& g : gens) {
      std::vector<BigInt> factor(g.degree() + 1, BigInt(0));
      factor[0] = BigInt(1);
      factor[g.degree()] = BigInt(-1);
      acc = poly_mul(acc, factor);
    }
    return acc;
  }

  const std::size_t n = gens.front().size();
  // A linear generator splits off as a factor (1 - t); the others do not involve it.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() == 1) {
      std::vector<Monomial> rest;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j != i) rest.push_back(gens[j]);
      }
      return poly_mul(hs_numerator(rest, strategy), {BigInt(1), BigInt(-1)});
    }
  }

  std::size_t pivot = 0;
  if (strategy == PivotStrategy::MostFrequent) {
    std::vector<std::size_t> counts(n, 0);
    for (const auto& g : gens) {
      for (std::size_t v = 0; v < n; ++v) {
        if (g[v] != 0) ++counts[v];
      }
    }
    pivot = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  } else {
    const Monomial& g = gens.front();
    while (g[pivot] == 0) ++pivot;
  }

  Monomial xv(n);
  xv.set(pivot, 1);
  std::vector<Monomial> sum{xv};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g[pivot] == 0) {
      sum.push_back(g);
      colon.push_back(g);
    } else {
      colon.push_back(g.quotient(g.gcd(xv)));
    }
  }
  return poly_add(hs_numerator(minimal_unsorted(std::move(sum)), strategy),
                  hs_numerator(minimal_unsorted(std::move(colon)), strategy), 1);
}

}  // namespace

HilbertSeries hilbert_series(const std::vector<Monomial>& gens, std::size_t nvars, PivotStrategy strategy) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw RingMismatch("hilbert_series: monomial has the wrong number of variables");
  }
  return {hs_numerator(minimal_unsorted(gens), strategy), nvars};
}

std::vector<Monomial> leading_term_ideal(const Ideal& ideal) {
  if (!ideal.ring()->is_field()) throw Error("Hilbert data is only available over QQ");
  std::vector<Monomial> lts;
  for (const auto& e : ideal.basis().elements()) lts.push_back(e.leading_monomial());
  return minimalize(std::move(lts), *ideal.ring());
}

HilbertSeries hilbert_series(const Ideal& ideal) {
  return hilbert_series(leading_term_ideal(ideal), ideal.ring()->num_variables());
}

namespace {

// Smallest number of variables meeting every support set.
int min_hitting_set(const std::vector<std::uint64_t>& sets, std::uint64_t chosen, int size, int best) {
  if (size >= best) return best;
  for (std::uint64_t s : sets) {
    if ((s & chosen) != 0) continue;
    for (std::uint64_t bits = s; bits != 0; bits &= bits - 1) {
      const std::uint64_t v = bits & (~bits + 1);
      best = min_hitting_set(sets, chosen | v, size + 1, best);
    }
    return best;
  }
  return size;
}

}  // namespace

DimCodim dim_and_codim(const Ideal& ideal) {
  const int n = static_cast<int>(ideal.ring()->num_variables());
  const auto lts = leading_term_ideal(ideal);
  if (std::any_of(lts.begin(), lts.end(), [](const Monomial& m) { return m.is_one(); })) return {-1, n + 1};
  std::vector<std::uint64_t> supports;
  for (const auto& m : lts) supports.push_back(m.support_mask());
  std::sort(supports.begin(), supports.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  const int codim = min_hitting_set(supports, 0, 0, n + 1);
  return {n - codim, codim};
}

BigInt standard_monomial_count(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<unsigned> bound(nvars, 0);
  for (const auto& g : gens) {
    if (g.is_one()) return BigInt(0);
    std::size_t only = nvars;
    std::size_t count = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (g[v] != 0) {
        only = v;
        ++count;
      }
    }
    if (count == 1 && (bound[only] == 0 || g[only] < bound[only])) bound[only] = g[only];
  }
  for (unsigned b : bound) {
    if (b == 0) throw Error("infinitely many standard monomials: the ideal is not zero-dimensional");
  }
  BigInt total(0);
  Monomial m(nvars);
  // Depth-first walk over the box bounded by the pure powers.
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == nvars) {
      if (std::none_of(gens.begin(), gens.end(), [&m](const Monomial& g) { return g.divides(m); })) {
        total = total + BigInt(1);
      }
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      if (std::any_of(gens.begin(), gens.end(), [&m](const Monomial& g) { return g.divides(m); })) break;
      self(self, v + 1);
    }
    m.set(v, 0);
  };
  walk(walk, 0);
  return total;
}

BigInt degree(const Ideal& ideal) {
  const auto lts = leading_term_ideal(ideal);
  const std::size_t n = ideal.ring()->num_variables();
  if (ideal.is_homogeneous()) {
    return hilbert_series(lts, n).reduced().numerator_at_one();
  }
  if (ideal.ring()->order().kind != MonomialOrder::Kind::GRevLex) {
    throw Error("degree of an inhomogeneous ideal needs a GRevLex ring");
  }
  if (dim_and_codim(ideal).dim > 0) throw Error("degree of an inhomogeneous positive-dimensional ideal");
  return standard_monomial_count(lts, n);
}

BigInt module_degree(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring(), "module degree");
  if (!i.is_homogeneous() || !j.is_homogeneous()) throw Error("module degree needs homogeneous ideals");
  const std::size_t n = i.ring()->num_variables();
  const HilbertSeries hj = hilbert_series(leading_term_ideal(j), n);
  const HilbertSeries hs = hilbert_series(leading_term_ideal(i + j), n);
  std::vector<BigInt> neg;
  for (const auto& c : hs.numerator) neg.push_back(-c);
  HilbertSeries diff{poly_add(hj.numerator, neg, 0), n};
  diff = diff.reduced();
  return diff.numerator_at_one();
}

Ideal blowup_ideal(const Ideal& ideal, const std::vector<std::string>& new_names) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->num_variables();
  const std::size_t r = ideal.num_generators();
  if (new_names.size() < r) throw Error("not enough variables");

  std::vector<std::string> names{fresh_variable_name(*ring, "t")};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  for (std::size_t j = 0; j < r; ++j) {
    const auto probe = Ring::make(ring->domain(), names);
    names.push_back(fresh_variable_name(*probe, "y_" + std::to_string(j + 1)));
  }
  const RingPtr st = Ring::make(ring->domain(), names, MonomialOrder::eliminate(1));
  std::vector<std::size_t> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = i + 1;
  const Polynomial t = Polynomial::variable(st, 0);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < r; ++j) {
    gens.push_back(Polynomial::variable(st, 1 + n + j) - t * relabel(ideal.generators()[j], st, up));
  }
  const GroebnerBasis gb = groebner_basis(st, gens);

  std::vector<std::string> out_names(ring->variables());
  out_names.insert(out_names.end(), new_names.begin(), new_names.end());
  const RingPtr out_ring = Ring::make(ring->domain(), out_names);
  std::vector<std::size_t> down(names.size());
  down[0] = kDropVariable;
  for (std::size_t i = 1; i < names.size(); ++i) down[i] = i - 1;
  std::vector<Polynomial> out;
  for (const auto& e : select_in_subring(1, gb)) out.push_back(relabel(e, out_ring, down));
  return Ideal(out_ring, std::move(out));
}

Ideal flat_limit(const Ideal& ideal, const BigRational& value) {
  const RingPtr& ring = ideal.ring();
  if (ring->num_variables() < 2) throw Error("flat limit needs a parameter and at least one more variable");
  const Ideal sat = saturate(ideal, Polynomial::variable(ring, 0));
  std::vector<std::string> names(ring->variables().begin() + 1, ring->variables().end());
  const RingPtr fiber = Ring::make(ring->domain(), names);
  std::vector<std::optional<Polynomial>> assignment{Polynomial::constant(fiber, value)};
  std::vector<Polynomial> gens;
  for (const auto& g : sat.generators()) gens.push_back(substitute_vars(g, fiber, assignment));
  return trim(Ideal(fiber, std::move(gens)));
}

}  // namespace schemekit

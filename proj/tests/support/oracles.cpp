#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

namespace {

std::vector<int> exponents_of(const Monomial& m) {
  std::vector<int> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = static_cast<int>(m[i]);
  return e;
}

void fill(std::size_t n, int d, std::size_t i, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[i] = k;
    fill(n, d - k, i + 1, cur, out);
  }
}

Polynomial from_exponent_map(const RingPtr& ring, const std::map<std::vector<int>, BigRational>& terms) {
  std::vector<schemekit::Term> out;
  for (const auto& [e, c] : terms) {
    if (!c.is_zero()) out.push_back({Monomial::from_exponents(e), c});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace

std::vector<std::vector<int>> exponent_vectors(std::size_t n, int d) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(n, 0);
  fill(n, d, 0, cur, out);
  return out;
}

Polynomial schoolbook_product(const Polynomial& f, const Polynomial& g) {
  std::map<std::vector<int>, BigRational> acc;
  for (const auto& s : f.terms()) {
    const auto es = exponents_of(s.monomial);
    for (const auto& t : g.terms()) {
      auto e = exponents_of(t.monomial);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += es[i];
      acc[e] += s.coeff * t.coeff;
    }
  }
  return from_exponent_map(f.ring(), acc);
}

int grevlex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int eliminate_cmp(std::size_t block, const std::vector<int>& a, const std::vector<int>& b) {
  const int da = std::accumulate(a.begin(), a.begin() + static_cast<long>(block), 0);
  const int db = std::accumulate(b.begin(), b.begin() + static_cast<long>(block), 0);
  if (da != db) return da > db ? 1 : -1;
  return grevlex_cmp(a, b);
}

bool homogeneous_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->num_variables();
  const int d = f.total_degree();

  // Columns indexed by degree-d monomials.
  const auto basis = exponent_vectors(n, d);
  std::map<std::vector<int>, std::size_t> column;
  for (std::size_t k = 0; k < basis.size(); ++k) column[basis[k]] = k;

  auto to_row = [&](const Polynomial& p) {
    std::vector<BigRational> row(basis.size());
    for (const auto& t : p.terms()) row[column.at(exponents_of(t.monomial))] = t.coeff;
    return row;
  };

  std::vector<std::vector<BigRational>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int dg = g.total_degree();
    if (dg > d) continue;
    for (const auto& e : exponent_vectors(n, d - dg)) {
      rows.push_back(to_row(schoolbook_product(g, Polynomial::monomial(ring, Monomial::from_exponents(e)))));
    }
  }

  // Row echelon form of the generator rows, then reduce f's row against it.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < basis.size() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = r + 1; q < rows.size(); ++q) {
      if (rows[q][c].is_zero()) continue;
      const BigRational factor = rows[q][c] / rows[r][c];
      for (std::size_t k = c; k < basis.size(); ++k) rows[q][k] -= factor * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  auto target = to_row(f);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const std::size_t c = pivots[k];
    if (target[c].is_zero()) continue;
    const BigRational factor = target[c] / rows[k][c];
    for (std::size_t j = c; j < basis.size(); ++j) target[j] -= factor * rows[k][j];
  }
  return std::all_of(target.begin(), target.end(), [](const BigRational& x) { return x.is_zero(); });
}

Polynomial leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Polynomial prod = Polynomial::constant(m.ring(), inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) prod = schoolbook_product(prod, m.at(i, perm[i]));
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

BigInt standard_monomials_in_degree(const std::vector<Monomial>& gens, std::size_t nvars, int d) {
  BigInt count = 0;
  for (const auto& e : exponent_vectors(nvars, d)) {
    const Monomial m = Monomial::from_exponents(e);
    const bool divisible = std::any_of(gens.begin(), gens.end(), [&m](const Monomial& g) { return g.divides(m); });
    if (!divisible) count += 1;
  }
  return count;
}

Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring, int max_degree, int terms, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::map<std::vector<int>, BigRational> acc;
  for (int k = 0; k < terms; ++k) {
    const auto choices = exponent_vectors(ring->num_variables(), deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    acc[choices[pick(rng)]] += BigRational(coeff(rng));
  }
  return from_exponent_map(ring, acc);
}

Polynomial random_homogeneous(std::mt19937& rng, const RingPtr& ring, int degree, int terms, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  const auto choices = exponent_vectors(ring->num_variables(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  std::map<std::vector<int>, BigRational> acc;
  for (int k = 0; k < terms; ++k) acc[choices[pick(rng)]] += BigRational(coeff(rng));
  return from_exponent_map(ring, acc);
}

}  // namespace oracle

#include "schemekit/polyring.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace schemekit {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw Error("too many variables: " + std::to_string(nvars) + " (limit " +
                std::to_string(kMaxVariables) + ")");
  }
  size_ = static_cast<std::uint8_t>(nvars);
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw Error("negative exponent");
    m.set(i, static_cast<unsigned>(exps[i]));
  }
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  if (i >= size_) throw RingMismatch("variable index out of range");
  if (value > 0xFFFFu) throw Error("exponent overflow");
  degree_ = degree_ - exps_[i] + value;
  exps_[i] = static_cast<Exponent>(value);
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << (i & 63u);
  }
  return mask;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q = *this;
  for (std::size_t i = 0; i < size_; ++i) q.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  q.degree_ = degree_ - other.degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l = *this;
  l.degree_ = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    l.degree_ += l.exps_[i];
  }
  return l;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial g = *this;
  g.degree_ = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    g.exps_[i] = std::min(exps_[i], other.exps_[i]);
    g.degree_ += g.exps_[i];
  }
  return g;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial p = a;
  for (std::size_t i = 0; i < a.size_; ++i) {
    const unsigned e = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
    if (e > 0xFFFFu) throw Error("exponent overflow");
    p.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  p.degree_ = a.degree_ + b.degree_;
  return p;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- Ring

Ring::Ring(CoefficientDomain domain, std::vector<std::string> names, MonomialOrder order)
    : domain_(domain), names_(std::move(names)), order_(order) {}

RingPtr Ring::make(CoefficientDomain domain, std::vector<std::string> names, MonomialOrder order) {
  if (names.empty()) throw Error("a ring needs at least one variable");
  if (names.size() > kMaxVariables) {
    throw Error("too many variables: " + std::to_string(names.size()) + " (limit " +
                std::to_string(kMaxVariables) + ")");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
  if (order.kind == MonomialOrder::Kind::Eliminate &&
      (order.block < 1 || order.block >= names.size())) {
    throw Error("Eliminate block size must lie in [1, " + std::to_string(names.size() - 1) + "]");
  }
  if (order.kind != MonomialOrder::Kind::Eliminate) order.block = 0;
  return std::make_shared<const Ring>(domain, std::move(names), order);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string Ring::to_string() const {
  std::string s = domain_ == CoefficientDomain::Integers ? "ZZ[" : "QQ[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i != 0) s += ", ";
    s += names_[i];
  }
  if (order_.kind == MonomialOrder::Kind::Eliminate) {
    s += ", MonomialOrder => Eliminate " + std::to_string(order_.block);
  } else if (order_.kind == MonomialOrder::Kind::Lex) {
    s += ", MonomialOrder => Lex";
  }
  return s + "]";
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view context) {
  if (!same_ring(a, b)) {
    throw RingMismatch(std::string(context) + ": operands live in different rings (" + a->to_string() +
                       " vs " + b->to_string() + ")");
  }
}

// ---------------------------------------------------------------- Polynomial

namespace {

void check_coefficient(const Ring& ring, const BigRational& c) {
  if (ring.domain() == CoefficientDomain::Integers && !c.is_integer()) {
    throw Error("non-integral coefficient " + c.to_string() + " in " + ring.to_string());
  }
}

// Merge a and sign*b; both canonical.
std::vector<Term> merge_terms(const Ring& ring, std::span<const Term> a, std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      BigRational s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const BigRational& c) {
  Polynomial p(std::move(ring));
  check_coefficient(*p.ring_, c);
  if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->num_variables()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(std::move(ring));
  if (index >= p.ring_->num_variables()) throw RingMismatch("variable index out of range");
  Monomial m(p.ring_->num_variables());
  m.set(index, 1);
  p.terms_.push_back({m, 1});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const BigRational& c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->num_variables()) throw RingMismatch("monomial length does not match ring");
  check_coefficient(*p.ring_, c);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  for (const auto& t : terms) {
    if (t.monomial.size() != r.num_variables()) throw RingMismatch("monomial length does not match ring");
    check_coefficient(r, t.coeff);
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [&r](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff.is_one();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "addition");
  terms_ = merge_terms(*ring_, terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "subtraction");
  terms_ = merge_terms(*ring_, terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

// Heap-driven product: one cursor per term of the shorter factor, each walking the
// longer factor; products pop in decreasing order so like terms arrive adjacent.
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "multiplication");
  const Ring& ring = *a.ring_;
  Polynomial result(a.ring_);
  if (a.is_zero() || b.is_zero()) return result;
  const Polynomial& f = a.size() <= b.size() ? a : b;
  const Polynomial& g = a.size() <= b.size() ? b : a;
  if (f.size() == 1) {
    result = g.times_monomial(f.terms_[0].monomial, f.terms_[0].coeff);
    return result;
  }

  struct Cursor {
    Monomial product;
    std::size_t i;
    std::size_t j;
  };
  auto less = [&ring](const Cursor& x, const Cursor& y) {
    const int c = ring.compare(x.product, y.product);
    if (c != 0) return c < 0;
    return x.i > y.i;
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(less)> heap(less);
  for (std::size_t i = 0; i < f.size(); ++i) heap.push({f.terms_[i].monomial * g.terms_[0].monomial, i, 0});

  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  mpq_class acc;
  while (!heap.empty()) {
    Cursor top = heap.top();
    heap.pop();
    const Monomial m = top.product;
    acc = f.terms_[top.i].coeff.raw() * g.terms_[top.j].coeff.raw();
    auto advance = [&](Cursor c) {
      if (++c.j < g.size()) {
        c.product = f.terms_[c.i].monomial * g.terms_[c.j].monomial;
        heap.push(c);
      }
    };
    advance(top);
    while (!heap.empty() && heap.top().product == m) {
      Cursor c = heap.top();
      heap.pop();
      acc += f.terms_[c.i].coeff.raw() * g.terms_[c.j].coeff.raw();
      advance(c);
    }
    if (sgn(acc) != 0) out.push_back({m, BigRational(acc)});
  }
  result.terms_ = std::move(out);
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  check_coefficient(*ring_, c);
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const BigRational& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  if (!ring_->is_field()) throw Error("monic() requires a coefficient field");
  return scaled(BigRational(1) / leading_coeff());
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const auto& names = ring_->variables();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& [m, c] = terms_[k];
    const bool negative = c.sign() < 0;
    const BigRational mag = negative ? -c : c;
    if (negative) {
      s += '-';
    } else if (k != 0) {
      s += '+';
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty()) {
      s += mag.to_string();
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += mag.to_string() + '*' + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------- free functions

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "exact_divide");
  if (g.is_zero()) throw DivisionByZero();
  const RingPtr& ring = f.ring();
  const bool integral = !ring->is_field();
  const Term& lt = g.leading_term();
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term& head = rest.leading_term();
    if (!lt.monomial.divides(head.monomial)) return std::nullopt;
    BigRational q = head.coeff / lt.coeff;
    if (integral && !q.is_integer()) return std::nullopt;
    Monomial m = head.monomial.quotient(lt.monomial);
    rest -= g.times_monomial(m, q);
    quotient.push_back({m, std::move(q)});
  }
  return Polynomial::from_sorted_terms(ring, std::move(quotient));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->num_variables()) throw RingMismatch("derivative variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * BigRational(static_cast<long>(e))});
  }
  // Lowering one exponent can reorder terms under graded orders, so re-sort.
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial relabel(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> index_map) {
  const std::size_t n = f.ring()->num_variables();
  if (index_map.size() != n) throw RingMismatch("relabel: index map has the wrong length");
  if (target->domain() != f.ring()->domain()) throw RingMismatch("relabel: coefficient domains differ");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->num_variables());
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] == kDropVariable) {
        throw RingMismatch("variable " + f.ring()->variable(i) + " has no counterpart in " + target->to_string());
      }
      m.set(index_map[i], m[index_map[i]] + t.monomial[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute_vars(const Polynomial& f, const RingPtr& target,
                           std::span<const std::optional<Polynomial>> assignment) {
  const Ring& source = *f.ring();
  if (assignment.size() > source.num_variables()) throw RingMismatch("substitution lists too many images");
  std::vector<Polynomial> images;
  images.reserve(source.num_variables());
  for (std::size_t i = 0; i < source.num_variables(); ++i) {
    if (i < assignment.size() && assignment[i]) {
      require_same_ring(assignment[i]->ring(), target, "substitution image");
      images.push_back(*assignment[i]);
      continue;
    }
    auto idx = target->index_of(source.variable(i));
    if (!idx) {
      // Only an error when the variable actually occurs in f.
      if (f.involves(i)) {
        throw RingMismatch("variable '" + source.variable(i) + "' has no image in " + target->to_string());
      }
      images.emplace_back(target);
      continue;
    }
    images.push_back(Polynomial::variable(target, *idx));
  }

  // Cache powers of each image as they are requested.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i) {
      if (t.monomial[i] != 0) term = term * power(i, t.monomial[i]);
    }
    for (const auto& tt : term.terms()) acc.push_back(tt);
  }
  return Polynomial::from_terms(target, std::move(acc));
}

std::vector<CoefficientEntry> coefficients_in(const Polynomial& f, std::span<const std::size_t> vars) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->num_variables();
  std::vector<bool> in_subset(n, false);
  for (std::size_t v : vars) {
    if (v >= n) throw RingMismatch("coefficient variable index out of range");
    in_subset[v] = true;
  }
  std::vector<std::pair<Monomial, std::vector<Term>>> groups;
  for (const auto& t : f.terms()) {
    Monomial key(n);
    Monomial rest = t.monomial;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_subset[i]) {
        key.set(i, t.monomial[i]);
        rest.set(i, 0);
      }
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&key](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.push_back({key, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back({rest, t.coeff});
  }
  std::sort(groups.begin(), groups.end(),
            [&ring](const auto& a, const auto& b) { return ring->compare(a.first, b.first) > 0; });
  std::vector<CoefficientEntry> out;
  out.reserve(groups.size());
  for (auto& [key, terms] : groups) {
    out.push_back({key, Polynomial::from_terms(ring, std::move(terms))});
  }
  return out;
}

std::pair<BigInt, Polynomial> content_and_primitive(const Polynomial& f) {
  if (f.is_zero()) throw Error("content of the zero polynomial");
  BigInt content;
  for (const auto& t : f.terms()) {
    if (!t.coeff.is_integer()) throw Error("content requires integral coefficients");
    content = gcd(content, t.coeff.numerator());
  }
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (auto& t : terms) t.coeff = BigRational(divexact(t.coeff.numerator(), content));
  return {content, Polynomial::from_sorted_terms(f.ring(), std::move(terms))};
}

}  // namespace schemekit

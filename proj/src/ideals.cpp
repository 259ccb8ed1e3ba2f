#include "schemekit/ideals.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <optional>

namespace schemekit {

struct Ideal::Cache {
  std::mutex mutex;
  std::optional<GroebnerBasis> basis;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring(), "ideal generators");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const GroebnerBasis& Ideal::basis() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis.emplace(groebner_basis(ring_, gens_));
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "ideal membership");
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return is_member(f, basis());
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring(), "ideal containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [this](const Polynomial& g) { return contains(g); });
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "ideal ()";
  if (gens_.size() == 1) {
    const std::string g = gens_.front().to_string();
    const bool atom = std::all_of(g.begin(), g.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    });
    if (atom) return "ideal " + g;
  }
  std::string s = "ideal (";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal sum");
  std::vector<Polynomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal equality");
  return a.contains(b) && b.contains(a);
}

std::string fresh_variable_name(const Ring& ring, const std::string& base) {
  if (!ring.index_of(base)) return base;
  for (std::size_t k = 0;; ++k) {
    std::string name = base + "'" + std::to_string(k);
    if (!ring.index_of(name)) return name;
  }
}

namespace {

// Basis elements free of the first k variables of a ring whose order eliminates them.
std::vector<Polynomial> free_of_prefix(const GroebnerBasis& gb, std::size_t k) {
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = !e.involves(v);
    if (free) out.push_back(e);
  }
  return out;
}

bool eliminates_prefix(const MonomialOrder& order, std::size_t k) {
  return order.kind == MonomialOrder::Kind::Lex ||
         (order.kind == MonomialOrder::Kind::Eliminate && order.block == k);
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring, {});

  std::vector<std::string> names{fresh_variable_name(*ring, "t")};
  for (const auto& n : ring->variables()) names.push_back(n);
  const RingPtr scratch = Ring::make(ring->domain(), names, MonomialOrder::eliminate(1));
  std::vector<std::size_t> up(ring->num_variables());
  std::iota(up.begin(), up.end(), 1);
  std::vector<std::size_t> down(names.size());
  down[0] = kDropVariable;
  std::iota(down.begin() + 1, down.end(), 0);

  const Polynomial t = Polynomial::variable(scratch, 0);
  const Polynomial one_minus_t = Polynomial::constant(scratch, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * relabel(f, scratch, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * relabel(g, scratch, up));
  const GroebnerBasis gb = groebner_basis(scratch, gens);
  std::vector<Polynomial> out;
  for (const auto& e : select_in_subring(1, gb)) out.push_back(relabel(e, ring, down));
  return Ideal(ring, std::move(out));
}

Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw Error("intersect needs at least one ideal");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring(), "quotient");
  if (f.is_zero()) throw DivisionByZero();
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) {
    auto q = exact_divide(h, f);
    if (!q) throw Error("quotient: intersection generator not divisible by " + f.to_string());
    gens.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal quotient(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal.ring(), by.ring(), "quotient");
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    Ideal q = quotient(ideal, g);
    acc = acc ? intersect(*acc, q) : std::move(q);
  }
  return *acc;
}

namespace {

template <typename Step>
Ideal stabilize(const Ideal& start, Step step) {
  Ideal current = start;
  for (;;) {
    Ideal next = step(current);
    // current is contained in next, so equality only needs the reverse inclusion.
    if (current.contains(next)) return current;
    current = std::move(next);
  }
}

}  // namespace

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring(), "saturate");
  if (f.is_zero()) throw DivisionByZero();
  return stabilize(ideal, [&f](const Ideal& i) { return quotient(i, f); });
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal.ring(), by.ring(), "saturate");
  return stabilize(ideal, [&by](const Ideal& i) { return quotient(i, by); });
}

Ideal saturate(const Ideal& ideal) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ideal.ring()->num_variables(); ++i) {
    vars.push_back(Polynomial::variable(ideal.ring(), i));
  }
  return saturate(ideal, Ideal(ideal.ring(), std::move(vars)));
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> vars) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->num_variables();
  std::vector<bool> drop(n, false);
  for (std::size_t v : vars) {
    if (v >= n) throw RingMismatch("eliminate: variable index out of range");
    drop[v] = true;
  }
  const auto k = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), true));
  if (k == 0 || ideal.is_zero()) return ideal;

  const bool is_prefix = std::all_of(drop.begin(), drop.begin() + static_cast<std::ptrdiff_t>(k),
                                     [](bool b) { return b; });
  if (is_prefix && eliminates_prefix(ring->order(), k)) {
    return Ideal(ring, free_of_prefix(ideal.basis(), k));
  }
  if (k == n) {
    std::vector<Polynomial> constants;
    for (const auto& e : ideal.basis().elements()) {
      if (e.is_constant()) constants.push_back(e);
    }
    return Ideal(ring, std::move(constants));
  }

  std::vector<std::string> names;
  std::vector<std::size_t> up(n);
  std::vector<std::size_t> down;
  for (std::size_t i = 0; i < n; ++i) {
    if (drop[i]) {
      up[i] = names.size();
      names.push_back(ring->variable(i));
      down.push_back(kDropVariable);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!drop[i]) {
      up[i] = names.size();
      names.push_back(ring->variable(i));
      down.push_back(i);
    }
  }
  const RingPtr scratch = Ring::make(ring->domain(), names, MonomialOrder::eliminate(k));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(relabel(g, scratch, up));
  std::vector<Polynomial> out;
  for (const auto& e : free_of_prefix(groebner_basis(scratch, gens), k)) out.push_back(relabel(e, ring, down));
  return Ideal(ring, std::move(out));
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  std::vector<std::size_t> vars(k);
  std::iota(vars.begin(), vars.end(), 0);
  return eliminate(ideal, vars);
}

Ideal trim(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero()) return ideal;
  if (ideal.is_unit()) return Ideal::unit(ring);

  const auto gens = ideal.generators();
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (gens[i].total_degree() != gens[j].total_degree()) return gens[i].total_degree() > gens[j].total_degree();
    return ring->compare(gens[i].leading_monomial(), gens[j].leading_monomial()) > 0;
  });

  // For homogeneous input only generators of degree at most deg g can produce g.
  const bool graded = ideal.is_homogeneous();
  std::vector<bool> alive(gens.size(), true);
  for (std::size_t idx : order) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j == idx || !alive[j]) continue;
      if (graded && gens[j].total_degree() > gens[idx].total_degree()) continue;
      others.push_back(gens[j]);
    }
    if (others.empty()) continue;
    if (Ideal(ring, std::move(others)).contains(gens[idx])) alive[idx] = false;
  }
  std::vector<Polynomial> kept;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!alive[j]) continue;
    kept.push_back(gens[j].leading_coeff().sign() < 0 ? -gens[j] : gens[j]);
  }
  return Ideal(ring, std::move(kept));
}

}  // namespace schemekit

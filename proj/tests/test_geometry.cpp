#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schemekit/geometry.hpp"

using namespace schemekit;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(parse_polynomial(R, t));
  return Ideal(R, std::move(gens));
}

std::vector<Monomial> random_monomial_ideal(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> exp(0, 3);
  std::vector<Monomial> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(n);
    for (auto& x : e) x = exp(rng);
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
    gens.push_back(Monomial::from_exponents(e));
  }
  return gens;
}

}  // namespace

TEST_CASE("Hilbert function matches standard monomial counts") {
  std::mt19937 rng(99);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + k % 3;
    const auto gens = random_monomial_ideal(rng, n);
    for (auto strategy : {PivotStrategy::MostFrequent, PivotStrategy::FirstVariable}) {
      const HilbertSeries hs = hilbert_series(gens, n, strategy);
      for (int d = 0; d <= 8; ++d) {
        CHECK(hs.hilbert_function(static_cast<std::size_t>(d)) == oracle::standard_monomials_in_degree(gens, n, d));
      }
    }
  }
}

TEST_CASE("reduced series of simple quotients") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z"});
  const HilbertSeries hs = hilbert_series(ideal_of(R, {"x*y - z^2"})).reduced();
  CHECK(hs.pole_order == 2);
  CHECK(hs.numerator_at_one() == BigInt(2));
  CHECK(hilbert_series(ideal_of(R, {"x", "y", "z"})).reduced().to_string() == "(1)/(1-T)^0");
}

TEST_CASE("dimension, codimension and degree") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z", "w"});
  const Ideal cubic = ideal_of(R, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  const DimCodim dc = dim_and_codim(cubic);
  CHECK(dc.dim == 2);
  CHECK(dc.codim == 2);
  CHECK(degree(cubic) == BigInt(3));
  CHECK(dim_and_codim(Ideal::unit(R)).dim == -1);
  CHECK(degree(ideal_of(R, {"x^2", "y^3"})) == BigInt(6));
}

TEST_CASE("degree of a zero-dimensional inhomogeneous ideal counts standard monomials") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  CHECK(degree(ideal_of(R, {"x^2 - 1", "y^2 - x"})) == BigInt(4));
  CHECK_THROWS(degree(ideal_of(R, {"x*y - 1"})));
  CHECK(standard_monomial_count({Monomial::from_exponents(std::vector<int>{2, 0}),
                                 Monomial::from_exponents(std::vector<int>{0, 3})},
                                2) == BigInt(6));
}

TEST_CASE("module degree of a double line with an embedded point") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z", "w"});
  CHECK(module_degree(ideal_of(R, {"x^2", "y"}), ideal_of(R, {"x", "y^2", "z"})) == BigInt(1));
}

TEST_CASE("blow-up ideal of a monomial ideal") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  const Ideal i = ideal_of(R, {"x^3", "x*y", "y^2"});
  const Ideal b = blowup_ideal(i, {"A", "B", "C"});
  CHECK(b.ring()->num_variables() == 5);
  CHECK(ideal_equals(b, ideal_of(b.ring(), {"y*B - x*C", "x*B^2 - A*C", "x^2*B - y*A", "x^3*C - y^2*A"})));
  CHECK_THROWS_WITH(blowup_ideal(i, {"A", "B"}), doctest::Contains("not enough variables"));
}

TEST_CASE("flat limit of two skew lines") {
  auto S = Ring::make(CoefficientDomain::Rationals, {"t", "x", "y", "z", "w"});
  const Ideal family = intersect(ideal_of(S, {"x", "y"}), ideal_of(S, {"x - t*z", "y - t^2*w"}));
  const Ideal limit = flat_limit(family, 0);
  CHECK(limit.ring()->num_variables() == 4);
  CHECK(ideal_equals(limit, ideal_of(limit.ring(), {"y*z", "y^2", "x*y", "x^2"})));
}

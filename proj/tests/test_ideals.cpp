#include <doctest.h>

#include "schemekit/ideals.hpp"

using namespace schemekit;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(parse_polynomial(R, t));
  return Ideal(R, std::move(gens));
}

}  // namespace

TEST_CASE("zero generators are dropped and printing is compact") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  CHECK(ideal_of(R, {"0", "x"}).num_generators() == 1);
  CHECK(ideal_of(R, {"0"}).is_zero());
  CHECK(ideal_of(R, {"0"}).to_string() == "ideal ()");
  CHECK(ideal_of(R, {"x"}).to_string() == "ideal x");
  CHECK(ideal_of(R, {"x", "y^2"}).to_string() == "ideal (x, y^2)");
  CHECK(Ideal::unit(R).to_string() == "ideal 1");
}

TEST_CASE("sum, product and equality") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z"});
  const Ideal a = ideal_of(R, {"x", "y"});
  const Ideal b = ideal_of(R, {"y", "z"});
  CHECK(ideal_equals(a + b, ideal_of(R, {"x", "y", "z"})));
  CHECK(ideal_equals(a * b, ideal_of(R, {"x*y", "x*z", "y^2", "y*z"})));
  CHECK_FALSE(ideal_equals(a, b));
  CHECK(ideal_equals(ideal_of(R, {"x + y", "x - y"}), a));
}

TEST_CASE("intersection of monomial ideals") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z", "w"});
  const Ideal i = intersect(ideal_of(R, {"x^2", "y"}), ideal_of(R, {"x", "y^2", "z"}));
  CHECK(ideal_equals(i, ideal_of(R, {"y*z", "y^2", "x*y", "x^2"})));
  std::vector<Ideal> three{ideal_of(R, {"x"}), ideal_of(R, {"y"}), ideal_of(R, {"z"})};
  CHECK(ideal_equals(intersect(three), ideal_of(R, {"x*y*z"})));
}

TEST_CASE("quotients and saturation") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z"});
  const Ideal i = ideal_of(R, {"x^2*y", "x*y^2"});
  CHECK(ideal_equals(quotient(i, parse_polynomial(R, "x")), ideal_of(R, {"x*y", "y^2"})));
  CHECK(ideal_equals(saturate(i, parse_polynomial(R, "x")), ideal_of(R, {"y"})));
  CHECK(ideal_equals(quotient(i, Ideal(R, {})), Ideal::unit(R)));
  CHECK_THROWS(quotient(i, Polynomial(R)));
  // Irrelevant component at the origin disappears under saturation by the variables.
  const Ideal j = intersect(ideal_of(R, {"x"}), ideal_of(R, {"x^3", "y^3", "z^3"}));
  CHECK(ideal_equals(saturate(j), ideal_of(R, {"x"})));
}

TEST_CASE("saturation over the integers keeps torsion") {
  auto Z = Ring::make(CoefficientDomain::Integers, {"x", "y"});
  const Ideal i = ideal_of(Z, {"2*x", "x*y"});
  const Ideal sat = saturate(i, parse_polynomial(Z, "x"));
  CHECK(ideal_equals(sat, ideal_of(Z, {"2", "y"})));
}

TEST_CASE("elimination") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"t", "x", "y"});
  const Ideal curve = ideal_of(R, {"x - t^2", "y - t^3"});
  const Ideal e = eliminate(curve, 1);
  CHECK(ideal_equals(e, ideal_of(R, {"x^3 - y^2"})));
  std::vector<std::size_t> vars{0};
  CHECK(ideal_equals(eliminate(curve, vars), e));
}

TEST_CASE("trim keeps a minimal generating set") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  const Ideal t = trim(ideal_of(R, {"x", "x^2", "-y", "x*y + y"}));
  CHECK(t.num_generators() == 2);
  CHECK(ideal_equals(t, ideal_of(R, {"x", "y"})));
  for (const auto& g : t.generators()) CHECK(g.leading_coeff().sign() > 0);
  CHECK(trim(ideal_of(R, {"x", "1 - x"})).to_string() == "ideal 1");
}

TEST_CASE("membership of ideals") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  const Ideal i = ideal_of(R, {"x^2", "y"});
  CHECK(i.contains(parse_polynomial(R, "x^3 + x*y")));
  CHECK_FALSE(i.contains(parse_polynomial(R, "x")));
  CHECK(i.contains(ideal_of(R, {"x^2*y", "y^2"})));
}

TEST_CASE("fresh variable names avoid clashes") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"t", "x"});
  CHECK(fresh_variable_name(*R, "s") == "s");
  CHECK(fresh_variable_name(*R, "t") != "t");
}

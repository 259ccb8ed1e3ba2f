#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schemekit/groebner.hpp"

using namespace schemekit;

namespace {

std::vector<Polynomial> polys(const RingPtr& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(R, t));
  return out;
}

}  // namespace

TEST_CASE("reduced basis of the twisted cubic") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z", "w"});
  const auto gb = buchberger_field(polys(R, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}));
  CHECK(gb.size() == 3);
  CHECK(pairs_reduce_to_zero(gb));
  for (const auto& g : gb.elements()) CHECK(g.leading_coeff().is_one());
}

TEST_CASE("lex basis exposes the elimination ideal") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"}, MonomialOrder::lex());
  const auto gb = buchberger_field(polys(R, {"x^2 + y^2 - 1", "x - y"}));
  CHECK(pairs_reduce_to_zero(gb));
  const auto last = select_in_subring(1, gb);
  REQUIRE(last.size() == 1);
  CHECK(last[0] == parse_polynomial(R, "y^2 - 1/2"));
}

TEST_CASE("equal ideals give identical reduced bases") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z"});
  const auto a = buchberger_field(polys(R, {"x + y + z", "x*y + y*z + z*x", "x*y*z"}));
  const auto b = buchberger_field(polys(R, {"x*y*z", "x + y + z", "x*y + y*z + z*x + (x + y + z)*y"}));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.elements()[i] == b.elements()[i]);
}

TEST_CASE("unit ideal is detected") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  const auto gb = buchberger_field(polys(R, {"x*y - 1", "x"}));
  CHECK(gb.is_unit());
  CHECK(gb.size() == 1);
}

TEST_CASE("strong bases over the integers") {
  auto Z = Ring::make(CoefficientDomain::Integers, {"x", "y"});
  SUBCASE("coefficient gcds are added") {
    const auto gb = buchberger_integer(polys(Z, {"2*x", "3*y"}));
    CHECK(pairs_reduce_to_zero(gb));
    CHECK(is_member(parse_polynomial(Z, "x*y"), gb));
    CHECK_FALSE(is_member(parse_polynomial(Z, "x"), gb));
  }
  SUBCASE("G-polynomials combine leading coefficients") {
    const auto gb = buchberger_integer(polys(Z, {"4*x + 1", "6*x"}));
    CHECK(pairs_reduce_to_zero(gb));
    // 3*(4x+1) - 2*(6x) = 3, then (4x+1) - 3x = x+1; ZZ[x]/(3, x+1) is F_3.
    CHECK(is_member(parse_polynomial(Z, "3"), gb));
    CHECK(is_member(parse_polynomial(Z, "x + 1"), gb));
    CHECK_FALSE(gb.is_unit());
  }
  SUBCASE("no division by contents") {
    const auto gb = buchberger_integer(polys(Z, {"6", "2*x + 2*y"}));
    CHECK(pairs_reduce_to_zero(gb));
    CHECK_FALSE(is_member(parse_polynomial(Z, "x + y"), gb));
    CHECK(is_member(parse_polynomial(Z, "4*x + 4*y + 12"), gb));
  }
}

TEST_CASE("S- and G-polynomials") {
  auto Z = Ring::make(CoefficientDomain::Integers, {"x", "y"});
  const Polynomial f = parse_polynomial(Z, "4*x^2*y + y");
  const Polynomial g = parse_polynomial(Z, "6*x*y^2 + x");
  const Polynomial gp = g_polynomial(f, g);
  CHECK(gp.leading_coeff() == BigRational(2));
  CHECK(gp.leading_monomial() == parse_polynomial(Z, "x^2*y^2").leading_monomial());
  const Polynomial sp = s_polynomial(f, g);
  CHECK(sp == parse_polynomial(Z, "3*y^2 - 2*x^2"));
}

TEST_CASE("membership agrees with the linear-algebra oracle") {
  std::mt19937 rng(2024);
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z"});
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 2; ++j) gens.push_back(oracle::random_homogeneous(rng, R, 2, 3, 4));
    Polynomial f = oracle::random_homogeneous(rng, R, 3, 3, 4);
    if (k % 2 == 0) f = gens[0] * oracle::random_homogeneous(rng, R, 1, 2, 3) + gens[1] * Polynomial::variable(R, 2);
    const auto gb = groebner_basis(R, gens);
    CHECK(pairs_reduce_to_zero(gb));
    CHECK(is_member(f, gb) == oracle::homogeneous_membership(f, gens));
  }
}

TEST_CASE("membership agrees with normal forms on long inhomogeneous inputs") {
  std::mt19937 rng(77);
  auto R = Ring::make(CoefficientDomain::Rationals, {"w", "x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(oracle::random_polynomial(rng, R, 3, 5, 7));
    const auto gb = groebner_basis(R, gens);
    Polynomial f = gens[0] * oracle::random_polynomial(rng, R, 4, 30, 9) + gens[2] * oracle::random_polynomial(rng, R, 4, 30, 9);
    if (k % 2 == 1) f += oracle::random_polynomial(rng, R, 2, 3, 5);
    CHECK(is_member(f, gb) == normal_form(f, gb).is_zero());
    if (k % 2 == 0) CHECK(is_member(f, gb));
  }
}

TEST_CASE("normal forms are canonical remainders") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  const auto gb = buchberger_field(polys(R, {"x^2 - y", "y^2 - 1"}));
  const Polynomial f = parse_polynomial(R, "x^5 + x*y + 3");
  const Polynomial r = normal_form(f, gb);
  CHECK(r == normal_form(r, gb));
  CHECK(is_member(f - r, gb));
}

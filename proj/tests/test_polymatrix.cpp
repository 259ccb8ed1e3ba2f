#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schemekit/polymatrix.hpp"

using namespace schemekit;

namespace {

PolyMatrix random_matrix(std::mt19937& rng, const RingPtr& R, std::size_t n, std::size_t m) {
  PolyMatrix out(R, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.set(i, j, oracle::random_polynomial(rng, R, 2, 2, 3));
  }
  return out;
}

}  // namespace

TEST_CASE("cofactor determinant equals the permutation sum") {
  std::mt19937 rng(17);
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z"});
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int k = 0; k < 8; ++k) {
      const PolyMatrix m = random_matrix(rng, R, n, n);
      CHECK(det(m) == oracle::leibniz_det(m));
    }
  }
  CHECK_THROWS_AS(det(PolyMatrix(R, 2, 3)), DimensionMismatch);
}

TEST_CASE("adjoint identity") {
  std::mt19937 rng(23);
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  for (int k = 0; k < 10; ++k) {
    const PolyMatrix m = random_matrix(rng, R, 3, 3);
    const PolyMatrix id = PolyMatrix::identity(R, 3);
    CHECK(m * classical_adjoint(m) == id.scaled(det(m)));
    CHECK(classical_adjoint(m) * m == id.scaled(det(m)));
  }
}

TEST_CASE("generic matrices fill column by column") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"t", "a", "b", "c", "d"});
  const PolyMatrix g = generic_matrix(R, 1, 2, 2);
  CHECK(g.to_string() == "matrix {{a, c}, {b, d}}");
  CHECK(det(g) == parse_polynomial(R, "a*d - b*c"));
  CHECK_THROWS(generic_matrix(R, 2, 2, 2));
}

TEST_CASE("k-subsets come in colexicographic order") {
  const auto s = k_subsets(4, 2);
  const std::vector<std::vector<std::size_t>> want{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(s == want);
  CHECK(k_subsets(5, 3).size() == 10);
  CHECK(k_subsets(2, 3).empty());
}

TEST_CASE("exterior powers") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"A", "B", "C", "D", "E", "F", "G", "H"});
  PolyMatrix m = PolyMatrix::from_rows(
      R, {{Polynomial::variable(R, 0), Polynomial::variable(R, 1), Polynomial::variable(R, 2), Polynomial::variable(R, 3)},
          {Polynomial::variable(R, 4), Polynomial::variable(R, 5), Polynomial::variable(R, 6), Polynomial::variable(R, 7)}});
  const PolyMatrix p = exterior_power(2, m);
  CHECK(p.rows() == 1);
  CHECK(p.cols() == 6);
  CHECK(p.at(0, 2) == parse_polynomial(R, "B*G - C*F"));
  CHECK(p.at(0, 3) == parse_polynomial(R, "A*H - D*E"));
  CHECK(exterior_power(1, m) == m);
  const PolyMatrix id = PolyMatrix::identity(R, 3);
  CHECK(exterior_power(2, id) == id);
  CHECK(minors(2, m).num_generators() == 6);
}

TEST_CASE("parallel kernels match the serial reference") {
  std::mt19937 rng(31);
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y", "z"});
  for (int k = 0; k < 5; ++k) {
    const PolyMatrix m = random_matrix(rng, R, 4, 5);
    CHECK(exterior_power(2, m, Execution::Serial) == exterior_power(2, m, Execution::Parallel));
    CHECK(exterior_power(3, m, Execution::Serial) == exterior_power(3, m, Execution::Parallel));
  }
  const Ideal i(R, {parse_polynomial(R, "x^2 - y*z"), parse_polynomial(R, "y^3 - x")});
  std::vector<Polynomial> ps;
  for (int k = 0; k < 20; ++k) ps.push_back(oracle::random_polynomial(rng, R, 5, 6, 9));
  CHECK(normal_forms(ps, i.basis(), Execution::Serial) == normal_forms(ps, i.basis(), Execution::Parallel));
}

TEST_CASE("jacobian layout and concatenation") {
  auto R = Ring::make(CoefficientDomain::Rationals, {"x", "y"});
  std::vector<Polynomial> f{parse_polynomial(R, "x^2*y"), parse_polynomial(R, "x + y^3")};
  const PolyMatrix j = jacobian(R, f);
  CHECK(j.rows() == 2);
  CHECK(j.cols() == 2);
  CHECK(j.at(1, 0) == parse_polynomial(R, "x^2"));
  CHECK(j.at(1, 1) == parse_polynomial(R, "3*y^2"));
  const PolyMatrix h = concat_horizontal(j, PolyMatrix::identity(R, 2));
  CHECK(h.cols() == 4);
  CHECK(concat_vertical(j, j).rows() == 4);
  CHECK_THROWS_AS(concat_horizontal(j, PolyMatrix(R, 3, 1)), DimensionMismatch);
  CHECK(PolyMatrix(R, 1, 0).to_string() == "map(QQ[x, y]^1, 0)");
}

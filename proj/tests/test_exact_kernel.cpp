#include "liecheck/errors.hpp"
#include "liecheck/graded_series.hpp"
#include "liecheck/linalg.hpp"
#include "liecheck/polynomial.hpp"
#include "liecheck/rational.hpp"

#include <doctest.h>

#include <random>

using namespace liecheck;

namespace {

Mat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), zero(0, 2);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = zero(rng) == 0 ? Rat(0) : Rat(num(rng)) / den(rng);
  return m;
}

GradedSeries random_series(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<Int> v(len);
  for (auto& x : v) x = c(rng);
  return GradedSeries(std::move(v));
}

}  // namespace

TEST_CASE("rationals parse canonically") {
  CHECK(parse_rat("6/4") == Rat(3) / 2);
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK(factorial(5) == 120);
}

TEST_CASE("rank_kernel on small matrices") {
  const auto id = rank_kernel(Mat::identity(2));
  CHECK(id.rank == 2);
  CHECK(id.kernel_basis.empty());

  const auto zero = rank_kernel(Mat(2, 2));
  CHECK(zero.rank == 0);
  CHECK(zero.kernel_basis.size() == 2);

  const auto m = Mat::from_rows({{1, 2}, {2, 4}}, 2);
  const auto rk = rank_kernel(m);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel_basis.size() == 1);
  Vec k = rk.kernel_basis[0];
  make_primitive(k);
  if (k[0] > 0) k = scaled(k, -1);
  CHECK(k == Vec{-2, 1});
}

TEST_CASE("random matrices: row rank equals column rank, kernels are kernels") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 5, 1 + (trial * 7) % 6);
    const auto rk = rank_kernel(m);
    CHECK(rk.rank == rank(m.transpose()));
    CHECK(rk.rank + rk.kernel_basis.size() == m.cols());
    for (const auto& v : rk.kernel_basis) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("determinant and inverse agree") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng, 3, 3);
    const Rat det = determinant(m);
    if (is_zero(det)) {
      CHECK_THROWS_AS(inverse(m), InternalFailure);
      continue;
    }
    CHECK(m * inverse(m) == Mat::identity(3));
    CHECK(determinant(inverse(m)) == 1 / det);
  }
}

TEST_CASE("sparse matrices match dense products") {
  std::mt19937 rng(3);
  const auto a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
  const auto sa = SparseMat::from_dense(a), sb = SparseMat::from_dense(b);
  CHECK((sa * sb).to_dense() == a * b);
  CHECK(commutator(sa, sb).to_dense() == a * b - b * a);
  CHECK(SparseMat::from_triplets(2, 2, {{0, 1, 1}, {0, 1, 2}}).at(0, 1) == 3);
}

TEST_CASE("filtered_span_dims") {
  const Vec e1{1, 0}, e2{0, 1};
  CHECK(filtered_span_dims({{e1, 0}, {e2, 1}}) == GradedSeries::from_ints({1, 1}));
  CHECK(filtered_span_dims({{e1, 0}, {scaled(e1, 2), 1}}) == GradedSeries::from_ints({1}));
  CHECK(filtered_span_dims({{e1, 1}, {Vec{1, 1}, 1}, {e2, 2}}) == GradedSeries::from_ints({0, 2}));
  // equal-degree inputs may be permuted
  CHECK(filtered_span_dims({{Vec{1, 1}, 1}, {e1, 1}, {e2, 2}}) == GradedSeries::from_ints({0, 2}));
  FilteredSpan span(2);
  span.add(e1, 2);
  CHECK_THROWS_AS(span.add(e2, 1), InvalidArgument);
}

TEST_CASE("series arithmetic") {
  const auto geo = GradedSeries::geometric(1, 4);
  const auto prod = GradedSeries::from_ints({1, 1}) * geo;
  CHECK(prod.order() == 4u);
  CHECK(prod.coefficients() == std::vector<Int>{1, 2, 2, 2});
  CHECK(equals(GradedSeries::from_ints({1, 1}), GradedSeries::from_ints({1, 1})));
  CHECK(coeffwise_geq(GradedSeries::from_ints({1, 2, 1}), GradedSeries::from_ints({1, 1, 1})));
  CHECK_FALSE(coeffwise_geq(GradedSeries::from_ints({1, 1, 2, 2, 1}), GradedSeries::from_ints({1, 2, 2, 1})));
  CHECK(GradedSeries::from_ints({1, 2, 2, 1}).is_palindromic());
  CHECK(GradedSeries::from_ints({1, 2, 1}).total() == 4);
  CHECK_THROWS_AS(truncated_divide(GradedSeries::from_ints({1}), GradedSeries::from_ints({0, 1}), 3), InvalidArgument);
}

TEST_CASE("comparing series of different orders clamps and says so") {
  const auto a = GradedSeries::geometric(1, 3);
  const auto b = GradedSeries::geometric(1, 5);
  const auto c = compare_equal(a, b);
  CHECK(c.holds);
  CHECK(c.clamped);
  CHECK(c.compared_below == 3u);
  CHECK_FALSE(compare_equal(a, a).clamped);
}

TEST_CASE("random series: ring axioms and division") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, 4), b = random_series(rng, 3), c = random_series(rng, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    auto unit = random_series(rng, 3) * GradedSeries::monomial(1) + GradedSeries::from_ints({1});
    CHECK(equals(truncated_divide(a * unit, unit, 8), a.truncated(9)));
  }
}

TEST_CASE("polynomials") {
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK(p.evaluate({3, 1}) == 8);
  CHECK(p.derivative(0) == x.scaled(2));
  // swap the variables
  const auto swapped = p.linear_substitute(Mat::from_rows({{0, 1}, {1, 0}}, 2));
  CHECK(swapped == p.scaled(-1));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(weighted_monomials({1, 2}, 4).size() == 3);
  CHECK_THROWS_AS(weighted_monomials({0, 1}, 2), InvalidArgument);
  CHECK(p.apply_derivation({y, x}).is_zero());  // x^2 - y^2 is invariant
  CHECK(p.apply_derivation({y, x.scaled(-1)}) == (x * y).scaled(4));
}

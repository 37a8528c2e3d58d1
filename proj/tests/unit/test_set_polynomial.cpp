#include <doctest.h>

#include "random_objects.hpp"
#include "reference.hpp"
#include "setpoly/setpoly.hpp"

using namespace setpoly;
using namespace setpoly::testing;

namespace {

SetPolynomial square() { return SetPolynomial::full_power(2); }

SetPolynomial linear(std::size_t D, Symbol c) {
  SetPolynomial P(D);
  P.set_coeff(index_from_list({1}, D), power(FinSet::symbols({c}), D - 1));
  return P;
}

}  // namespace

TEST_CASE("evaluate places every term") {
  CHECK(evaluate(square(), FinSet::symbols({1, 2})) == FinSet::of({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(evaluate(SetPolynomial(3), FinSet::symbols({1, 2})).empty());
  CHECK(evaluate(linear(2, 7), FinSet::symbols({1, 2})) == FinSet::of({{1, 7}, {2, 7}}));

  SetPolynomial P(2);
  P.set_coeff(index_from_list({2}, 2), FinSet::symbols({7}));
  CHECK(evaluate(P, FinSet::symbols({1})) == FinSet::of({{7, 1}}));
  P.set_coeff(0, FinSet::of({{3, 3}}));
  CHECK(evaluate(P, FinSet(1)) == FinSet::of({{3, 3}}));
}

TEST_CASE("evaluate agrees with membership on random polynomials") {
  Rng rng(3);
  const auto pool = range_symbols(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t D = uniform(rng, 1, 3);
    const SetPolynomial P = random_poly(rng, D, pool, {3, 3, true, true});
    const FinSet n = random_subset(rng, range_symbols(4, 5), 3);
    CHECK(evaluate(P, n) == naive_evaluate(P, n));
  }
}

TEST_CASE("add") {
  SetPolynomial c = SetPolynomial::constant(FinSet::of({{3, 3}}));
  SetPolynomial s = add(square(), c);
  CHECK(s.coeffs().size() == 2);
  CHECK(s.coeff(full_index(2)) == FinSet::unit());
  CHECK(s.coeff(0) == FinSet::of({{3, 3}}));
  CHECK(add(square(), SetPolynomial(2)) == square());
  CHECK(add(s, s) == s);
  CHECK_THROWS_AS(add(square(), SetPolynomial(3)), DimensionMismatch);
}

TEST_CASE("dominates and subtract") {
  CHECK(dominates(SetPolynomial(2), square()));
  CHECK(dominates(square(), square()));
  CHECK_FALSE(dominates(linear(2, 7), linear(2, 8)));
  CHECK(subtract(square(), SetPolynomial(2)) == square());
  CHECK(subtract(square(), square()).is_empty());
  CHECK_THROWS_AS(subtract(linear(2, 7), linear(2, 8)), NotDominatedError);

  Rng rng(5);
  const auto pool = range_symbols(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const SetPolynomial P = random_poly(rng, 3, pool);
    const SetPolynomial Q = random_part(rng, P);
    CHECK(dominates(Q, P));
    CHECK(add(subtract(P, Q), Q) == P);
  }
}

TEST_CASE("shift expands (n + m)^2") {
  const SetPolynomial R = shift(square(), FinSet::symbols({3}));
  CHECK(R.coeff(full_index(2)) == FinSet::unit());
  CHECK(R.coeff(index_from_list({1}, 2)) == FinSet::symbols({3}));
  CHECK(R.coeff(index_from_list({2}, 2)) == FinSet::symbols({3}));
  CHECK(R.coeff(0) == FinSet::of({{3, 3}}));
  CHECK(R.coeffs().size() == 4);

  CHECK(shift(square(), FinSet(1)) == square());

  const SetPolynomial L = shift(linear(2, 7), FinSet::symbols({5}));
  CHECK(L.coeff(index_from_list({1}, 2)) == FinSet::symbols({7}));
  CHECK(L.coeff(0) == FinSet::of({{5, 7}}));
  CHECK(L.coeffs().size() == 2);
}

TEST_CASE("shift dominates and evaluates at the union") {
  Rng rng(8);
  const auto pool = range_symbols(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t D = uniform(rng, 1, 3);
    const SetPolynomial P = random_poly(rng, D, pool, {3, 3, true, true});
    const FinSet m = random_subset(rng, pool, 3);
    const FinSet n = random_subset(rng, pool, 3);
    const SetPolynomial R = shift(P, m);
    CHECK(dominates(P, R));
    CHECK(evaluate(R, n) == naive_evaluate(P, set_union(n, m)));
  }
}

TEST_CASE("support, degree and terms") {
  CHECK(poly_support(square()).empty());
  SetPolynomial P = linear(2, 7);
  P.set_coeff(0, FinSet::of({{3, 3}}));
  CHECK(poly_support(P) == FinSet::symbols({3, 7}));
  CHECK(poly_support(SetPolynomial(2)).empty());

  CHECK(degree(SetPolynomial(2)) == 0);
  const SetPolynomial mixed = add(square(), linear(2, 7));
  CHECK(degree(mixed) == 2);
  CHECK(leading_term(mixed) == square());
  CHECK(term_of_degree(mixed, 1) == linear(2, 7));
  const SetPolynomial c = SetPolynomial::constant(FinSet::of({{3, 3}}));
  CHECK(degree(c) == 0);
  CHECK(leading_term(c) == c);
  CHECK(constant_term(P) == FinSet::of({{3, 3}}));
}

TEST_CASE("equivalence compares degree and leading term") {
  CHECK(equivalent(square(), add(square(), linear(2, 7))));
  CHECK_FALSE(equivalent(linear(2, 7), linear(2, 8)));
  CHECK(equivalent(square(), square()));
  CHECK_THROWS_AS(equivalent(square(), linear(3, 1)), DimensionMismatch);
}

TEST_CASE("embedding adds a padded coordinate") {
  const SetPolynomial E = embed(linear(2, 7), 9);
  CHECK(E.dim() == 3);
  const FinSet n = FinSet::symbols({1, 2});
  CHECK(evaluate(E, n) == cartesian(evaluate(linear(2, 7), n), FinSet::symbols({9})));
}

TEST_CASE("coefficient arity is enforced") {
  SetPolynomial P(2);
  CHECK_THROWS_AS(P.set_coeff(index_from_list({1}, 2), FinSet::of({{1, 2}})), ArityMismatch);
  CHECK_THROWS_AS(index_from_list({3}, 2), DimensionMismatch);
  CHECK_THROWS_AS(index_from_list({2, 1}, 2), DimensionMismatch);
  P.set_coeff(index_from_list({1}, 2), FinSet(1));
  CHECK(P.is_empty());
}

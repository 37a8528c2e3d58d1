#include <doctest.h>

#include <set>

#include "random_objects.hpp"
#include "reference.hpp"
#include "setpoly/setpoly.hpp"

using namespace setpoly;
using namespace setpoly::testing;

namespace {

NcPolynomial y(std::uint32_t m, std::uint32_t j) { return NcPolynomial::term({1}, {YVar{m, j}}); }

}  // namespace

TEST_CASE("finite sums") {
  std::set<std::int64_t> sums;
  for (const auto& fs : finite_sums(std::vector<std::int64_t>{1, 2, 4})) sums.insert(fs.sum[0]);
  CHECK(sums == std::set<std::int64_t>{1, 2, 3, 4, 5, 6, 7});
  const auto single = finite_sums(std::vector<std::int64_t>{5});
  REQUIRE(single.size() == 1);
  CHECK(single[0].sum == IntVec{5});
  const auto vecs = finite_sums(std::vector<IntVec>{{1, 0}, {0, 1}});
  REQUIRE(vecs.size() == 3);
  CHECK(vecs[2].sum == IntVec{1, 1});
  CHECK(vecs[2].gamma == FinSet::symbols({1, 2}));
  CHECK_THROWS_AS(finite_sums(std::vector<std::int64_t>{}), EmptySetError);
}

TEST_CASE("finite sums are additive over disjoint index sets") {
  const std::vector<std::int64_t> gen = {3, -1, 7, 2, 5};
  const auto all = finite_sums(gen);
  CHECK(all.size() == 31);
  std::map<FinSet, std::int64_t> by_gamma;
  for (const auto& fs : all) by_gamma[fs.gamma] = fs.sum[0];
  for (const auto& [g1, s1] : by_gamma) {
    for (const auto& [g2, s2] : by_gamma) {
      if (g1.intersects(g2)) continue;
      CHECK(by_gamma.at(disjoint_union(g1, g2)) == s1 + s2);
    }
  }
}

TEST_CASE("noncommuting polynomial arithmetic") {
  const NcPolynomial a = y(1, 1) * y(1, 2);
  const NcPolynomial b = y(1, 2) * y(1, 1);
  CHECK(a != b);
  CHECK((a + b) == (b + a));
  CHECK((a + a).terms().at({YVar{1, 1}, YVar{1, 2}}) == IntVec{2});
  const NcPolynomial neg = NcPolynomial::term({-1}, {YVar{1, 1}, YVar{1, 2}});
  CHECK((a + neg).is_zero());
  CHECK(a.to_string() == "y1_1*y1_2");
}

TEST_CASE("commutative polynomial parsing") {
  const auto p = CommPolynomial::parse("3x1^2*x2 - x2");
  CHECK(p.vars() == 2);
  CHECK(p.degree() == 3);
  CHECK(p.monomials().size() == 2);
  CHECK(CommPolynomial::parse("x^2").degree() == 2);
  CHECK(CommPolynomial::parse("x1*x1").monomials()[0].exps == std::vector<std::uint32_t>{2});
  CHECK_THROWS_AS(CommPolynomial::parse("x - x"), ParseError);
  CHECK_THROWS_AS(CommPolynomial::parse("x + 1"), ParseError);
  CHECK_THROWS_AS(CommPolynomial::parse("x^"), ParseError);
  CHECK_THROWS_AS(CommPolynomial::parse(""), ParseError);
}

TEST_CASE("phi of the square over a two-element index set") {
  const auto p = CommPolynomial::parse("x^2");
  const FinSet gamma = FinSet::symbols({1, 2});
  const NcPolynomial expected = y(1, 1) * y(1, 1) + y(1, 1) * y(1, 2) + y(1, 2) * y(1, 1) + y(1, 2) * y(1, 2);
  CHECK(phi_set(power(gamma, 2), p, 2) == expected);
  CHECK(phi_set(FinSet(2), p, 2).is_zero());
  CHECK_THROWS_AS(phi_set(power(gamma, 1), p, 1), DegreeOverflow);
}

TEST_CASE("phi points vanish off the diagonal tail") {
  const Monomial x{{1}, {1}};
  CHECK(phi_point(Tuple{1, 2}, x, 1).is_zero());
  CHECK(phi_point(Tuple{2, 2, 2}, x, 1) == y(1, 2));
  CHECK(phi_point(Tuple{2, 1, 1}, x, 1).is_zero());
  CHECK(phi_point(Tuple{1, 2, 2}, Monomial{{1}, {2}}, 1) == y(1, 1) * y(1, 2));
  CHECK(phi_point(Tuple{1, 2, 1}, Monomial{{1}, {2}}, 1).is_zero());
  CHECK_THROWS_AS(phi_point(Tuple{1}, Monomial{{1}, {2}}, 1), DegreeOverflow);
}

TEST_CASE("phi is additive over disjoint sets") {
  const auto p = CommPolynomial::parse("2x1^2 + x1*x2 - x2");
  const FinSet cube = power(FinSet::symbols({1, 2, 3}), 2);
  Rng rng(12);
  std::vector<Symbol> pool = {1, 2, 3};
  for (int trial = 0; trial < 200; ++trial) {
    const FinSet a = random_tuples(rng, 2, pool, 0, 3);
    const FinSet b = set_minus(random_tuples(rng, 2, pool, 0, 3), a);
    CHECK(phi_set(disjoint_union(a, b), p, 2) == phi_set(a, p, 2) + phi_set(b, p, 2));
  }
  CHECK(phi_set(cube, p, 2) == naive_substitution(p, FinSet::symbols({1, 2, 3})));
}

TEST_CASE("phi mapping sums over tracks") {
  const std::vector<CommPolynomial> ps = {CommPolynomial::parse("x"), CommPolynomial::parse("x^2")};
  const FinSet gamma = FinSet::symbols({1, 2});
  const FinSet a1 = cartesian(power(gamma, 2), FinSet::symbols({1}));
  const FinSet a2 = cartesian(power(gamma, 2), FinSet::symbols({2}));
  const NcPolynomial got = phi_mapping(disjoint_union(a1, a2), ps, 2, 2);
  CHECK(got == substitute_sums(ps[0], gamma) + substitute_sums(ps[1], gamma));
  CHECK(phi_mapping(FinSet(3), ps, 2, 2).is_zero());
  CHECK_THROWS_AS(phi_mapping(FinSet::of({{3, 1, 1}}), ps, 2, 2), OutOfWindow);
  CHECK_THROWS_AS(phi_mapping(FinSet(3), {CommPolynomial::parse("x^3")}, 2, 2), DegreeOverflow);
}

TEST_CASE("semigroup values and homomorphisms") {
  CHECK(std::get<std::int64_t>(combine(std::int64_t{2}, std::int64_t{3})) == 5);
  CHECK(std::get<Multiplicative>(combine(Multiplicative{2}, Multiplicative{3})).value == 6);
  CHECK_THROWS_AS(combine(std::int64_t{2}, Multiplicative{3}), ArityMismatch);
  CHECK_THROWS_AS(combine(FinSet::symbols({1}), FinSet::symbols({1})), OverlapError);

  const FamilyOfRecurrence fam = {{std::int64_t{1}, std::int64_t{4}}, {std::int64_t{9}}};
  CHECK(pushforward(identity_hom(), fam).size() == 2);
  const auto same = pushforward(identity_hom(), fam);
  CHECK(std::get<std::int64_t>(same[0][1]) == 4);

  const auto formal = formal_family({CommPolynomial::parse("x^2")}, 2);
  REQUIRE(formal.size() == 3);
  std::map<YVar, std::int64_t> g = {{{1, 1}, 3}, {{1, 2}, 5}};
  const auto ints = pushforward(evaluation_hom(g), formal);
  CHECK(std::get<std::int64_t>(ints[0][0]) == 9);
  CHECK(std::get<std::int64_t>(ints[1][0]) == 25);
  CHECK(std::get<std::int64_t>(ints[2][0]) == 64);
  CHECK_THROWS_AS(pushforward(evaluation_hom({{{1, 1}, 3}}), formal), NotFound);

  TensorSum t;
  t.terms[{2, 3}] = 1;
  t.terms[{3, 1}] = 2;
  const auto image = tensor_hom().map(t);
  CHECK(std::get<Multiplicative>(image).value == 8 * 9);

  const Homomorphism square{"square", [](const SemigroupValue& v) -> SemigroupValue {
                              const auto x = std::get<std::int64_t>(v);
                              return x * x;
                            }};
  CHECK_THROWS_AS(pushforward(square, fam), NotHomomorphic);
  CHECK_THROWS_AS(pushforward(identity_hom(), FamilyOfRecurrence{{}}), EmptySetError);
}

TEST_CASE("chromatic transfer of a grid witness") {
  const auto oracle = ColoringOracle::reducer(IntColoring::residue(3), 2);
  const auto w = phj_search(3, 1, 2, oracle, {});
  const auto t = chromatic_transfer(oracle, w, 1, 2);
  CHECK(t.difference == static_cast<std::int64_t>(w.gamma.size()));
  CHECK(t.arithmetic());
  CHECK(t.monochromatic());
  for (auto x : t.terms) CHECK(IntColoring::residue(3)(x) == IntColoring::residue(3)(t.h));
}

TEST_CASE("square differences") {
  CHECK(square_difference_min_N(1, 10).N_min == 2);
  const auto two = square_difference_min_N(2, 60);
  CHECK(two.N_min == 5);
  CHECK(two.extremal.size() == 4);
  CHECK(square_difference_free_coloring(2, 2).has_value());
  CHECK_THROWS_AS(square_difference_min_N(2, 4), CapTooSmall);
  for (std::size_t N = 1; N <= 12; ++N) {
    CHECK(square_difference_free_coloring(N, 3).has_value() == naive_square_free_exists(N, 3));
  }
}

TEST_CASE("square difference extremal colorings are clean") {
  const auto res = square_difference_min_N(3, 60);
  const auto& c = res.extremal;
  REQUIRE(c.size() == res.N_min - 1);
  for (std::size_t a = 1; a <= c.size(); ++a) {
    for (std::size_t k = 1; a + k * k <= c.size(); ++k) CHECK(c[a - 1] != c[a + k * k - 1]);
  }
  CHECK_FALSE(square_difference_free_coloring(res.N_min, 3).has_value());
}

TEST_CASE("product-sum configurations") {
  const auto constant = product_sum_search({{1, 1, 1}}, {{1, 1, 1}}, IntColoring::constant(), 10);
  CHECK(constant.base == 1);
  CHECK(constant.gamma == FinSet::symbols({1}));

  const auto parity = product_sum_search({{1, 1, 1}}, {{1, 1, 1}}, IntColoring::parity(), 10);
  CHECK(parity.base == 1);
  CHECK(parity.gamma.size() % 2 == 0);
  CHECK(parity.config[1] == parity.config[0] + static_cast<std::int64_t>(parity.gamma.size() * parity.gamma.size()));

  const auto two = product_sum_search({{1, 1, 1}, {1, 2, 3}}, {{1, 1, 1}, {1, 1, 1}}, IntColoring::residue(3), 50);
  for (auto x : two.config) CHECK(IntColoring::residue(3)(x) == IntColoring::residue(3)(two.base));
  CHECK_THROWS_AS(product_sum_search({{1, 1}}, {{1}}, IntColoring::parity(), 5), LengthMismatch);
}

TEST_CASE("multiplicative configurations") {
  const auto constant = multiplicative_search({{1, 1}}, {{2, 2}}, IntColoring::constant(), 10);
  CHECK(constant.base == 1);
  CHECK(constant.gamma == FinSet::symbols({1}));

  const auto ones = multiplicative_search({{1, 1}}, {{1, 1}}, IntColoring::parity(), 10);
  CHECK(ones.config[1] == ones.config[0]);

  const auto omega = multiplicative_search({{1, 1, 1}}, {{2, 2, 2}}, IntColoring::omega_parity(), 100);
  const auto chi = IntColoring::omega_parity();
  for (auto x : omega.config) CHECK(chi(x) == chi(omega.base));
}

#include <doctest.h>

#include "random_objects.hpp"
#include "setpoly/setpoly.hpp"

using namespace setpoly;
using namespace setpoly::testing;

TEST_CASE("tuples are stored sorted and deduplicated") {
  FinSet a = FinSet::of({{3, 1}, {1, 2}, {3, 1}});
  CHECK(a.size() == 2);
  CHECK(a.arity() == 2);
  CHECK(a[0][0] == 1);
  CHECK(a[1][0] == 3);
  CHECK(a == FinSet::of({{1, 2}, {3, 1}}));
}

TEST_CASE("arity zero has exactly two values") {
  CHECK(FinSet(0).empty());
  CHECK(FinSet::unit().size() == 1);
  CHECK(FinSet(0, {Tuple{}, Tuple{}}) == FinSet::unit());
  CHECK(FinSet(0) != FinSet::unit());
}

TEST_CASE("disjoint_union") {
  CHECK(disjoint_union(FinSet::symbols({1, 2}), FinSet::symbols({3})) == FinSet::symbols({1, 2, 3}));
  CHECK(disjoint_union(FinSet(1), FinSet::symbols({4})) == FinSet::symbols({4}));
  CHECK_THROWS_AS(disjoint_union(FinSet::symbols({1}), FinSet::symbols({1})), OverlapError);
  CHECK_THROWS_AS(disjoint_union(FinSet::symbols({1}), FinSet::of({{1, 2}})), ArityMismatch);
}

TEST_CASE("difference") {
  CHECK(difference(FinSet::symbols({1, 2, 3}), FinSet::symbols({2})) == FinSet::symbols({1, 3}));
  CHECK(difference(FinSet::symbols({1, 2}), FinSet(1)) == FinSet::symbols({1, 2}));
  CHECK_THROWS_AS(difference(FinSet::symbols({1}), FinSet::symbols({2})), NotContainedError);
}

TEST_CASE("cartesian") {
  CHECK(cartesian(FinSet::symbols({1}), FinSet::symbols({2, 3})) == FinSet::of({{1, 2}, {1, 3}}));
  CHECK(cartesian(FinSet::symbols({1, 2}), FinSet(1)).empty());
  CHECK(cartesian(FinSet::symbols({1, 2}), FinSet(1)).arity() == 2);
  const FinSet b = FinSet::of({{4, 5}, {6, 7}});
  CHECK(cartesian(FinSet::unit(), b) == b);
  CHECK(cartesian(b, FinSet::unit()) == b);
}

TEST_CASE("power") {
  CHECK(power(FinSet::symbols({1, 2}), 2) == FinSet::of({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(power(FinSet::symbols({5, 6}), 1) == FinSet::symbols({5, 6}));
  CHECK(power(FinSet(1), 3).empty());
  CHECK(power(FinSet(1), 3).arity() == 3);
  CHECK(power(FinSet::symbols({1, 2}), 0) == FinSet::unit());
}

TEST_CASE("support") {
  CHECK(support(FinSet::of({{1, 3}, {2, 2}})) == FinSet::symbols({1, 2, 3}));
  CHECK(support(FinSet(3)).empty());
  CHECK(support(FinSet::unit()).empty());
}

TEST_CASE("set operations obey their laws on random inputs") {
  Rng rng(11);
  const auto pool = range_symbols(1, 7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = uniform(rng, 1, 3);
    const FinSet a = random_tuples(rng, d, pool, 0, 6);
    const FinSet b0 = random_tuples(rng, d, pool, 0, 6);
    const FinSet c0 = random_tuples(rng, d, pool, 0, 6);
    const FinSet b = set_minus(b0, a);
    const FinSet c = set_minus(set_minus(c0, a), b);

    CHECK(disjoint_union(a, b) == disjoint_union(b, a));
    CHECK(disjoint_union(disjoint_union(a, b), c) == disjoint_union(a, disjoint_union(b, c)));
    CHECK(difference(disjoint_union(a, b), b) == a);

    const FinSet m = random_subset(rng, pool, 4);
    const std::size_t k = uniform(rng, 0, 3);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < k; ++i) expected *= m.size();
    CHECK(power(m, k).size() == expected);

    if (!a.empty() && !c0.empty()) {
      CHECK(support(cartesian(a, c0)) == set_union(support(a), support(c0)));
    }
    CHECK(cartesian(a, c0).size() == a.size() * c0.size());
    CHECK(set_intersection(a, b0).is_subset_of(a));
    CHECK(a.intersects(b0) == !set_intersection(a, b0).empty());
  }
}

TEST_CASE("allocator mints above everything reserved") {
  SymbolAllocator alloc;
  alloc.reserve(FinSet::of({{4, 9}}));
  alloc.reserve(Symbol{2});
  CHECK(alloc.mint() == 10);
  const FinSet s = alloc.mint_set(3);
  CHECK(s == FinSet::symbols({11, 12, 13}));
  const Tuple t = alloc.mint_tuple(2);
  CHECK(t == Tuple{14, 15});
  alloc.reserve(Symbol{3});
  CHECK(alloc.mint() == 16);
}

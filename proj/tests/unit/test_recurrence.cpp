#include <doctest.h>

#include "random_objects.hpp"
#include "reference.hpp"
#include "setpoly/setpoly.hpp"

using namespace setpoly;
using namespace setpoly::testing;

namespace {

constexpr Symbol kMarker = 500;

SetPolynomial linear_monomial() {
  SetPolynomial P(2);
  P.set_coeff(index_from_list({1}, 2), FinSet::symbols({kMarker}));
  return P;
}

SpaceSpec abstract_space(std::size_t D, FinSet H) {
  SpaceSpec s;
  s.D = D;
  s.H = std::move(H);
  return s;
}

bool verifies(const System& A, const ColoringOracle& oracle, const Witness& w, const FinSet& H) {
  return verify_certificate(make_certificate(abstract_space(A.dim(), H), oracle, A, w)) &&
         bridge_check(A, w.n, w.a, oracle);
}

}  // namespace

TEST_CASE("brute force with one color takes the first candidate") {
  RecurrenceRequest req{System(2, {linear_monomial()}), FinSet::symbols({kMarker}), {}, std::nullopt};
  const Witness w = brute_force_witness(req, ColoringOracle::seeded(1, 0));
  CHECK(w.N == FinSet::symbols({kMarker + 1}));
  CHECK(w.n == FinSet::symbols({kMarker + 1}));
  CHECK(w.a.empty());
}

TEST_CASE("brute force on the empty polynomial") {
  RecurrenceRequest req{System(2, {SetPolynomial(2)}), FinSet(1), {}, std::nullopt};
  const Witness w = brute_force_witness(req, ColoringOracle::seeded(3, 8));
  CHECK(w.n.size() == 1);
  CHECK(w.a.empty());
  CHECK(w.config_colors == std::vector<int>{w.base_color});
}

TEST_CASE("brute force witnesses verify and are budget-stable") {
  const System A(2, {linear_monomial()});
  const FinSet H = FinSet::symbols({kMarker});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto oracle = ColoringOracle::seeded(2, seed);
    RecurrenceRequest req{A, H, {4, 2, 200000}, std::nullopt};
    const Witness w = brute_force_witness(req, oracle);
    CHECK(verifies(A, oracle, w, H));
    req.budget = {6, 3, 2000000};
    const Witness wider = brute_force_witness(req, oracle);
    CHECK(wider.N == w.N);
    CHECK(wider.n == w.n);
    CHECK(wider.a == w.a);
  }
}

TEST_CASE("brute force reports an exhausted budget") {
  RecurrenceRequest req{System(2, {linear_monomial()}), FinSet::symbols({kMarker}), {6, 3, 1}, std::nullopt};
  // With two colors the very first candidate (n = {s}, a = ∅) only works by luck;
  // find a seed where it does not.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto oracle = ColoringOracle::seeded(2, seed);
    const FinSet s = FinSet::symbols({kMarker + 1});
    if (oracle(FinSet(2)) == oracle(evaluate(linear_monomial(), s))) continue;
    CHECK_THROWS_AS(brute_force_witness(req, oracle), BudgetExhausted);
    return;
  }
  FAIL("no suitable seed");
}

TEST_CASE("composer on a singleton system reduces to pigeonholing") {
  const SetPolynomial Q = linear_monomial();
  const System A(2, {Q});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto oracle = ColoringOracle::seeded(2, seed);
    SymbolAllocator alloc;
    FocusingOptions opt;
    opt.H = FinSet::symbols({kMarker});
    const auto res = focusing_composer(A, Q, oracle, brute_force_sub({}), opt, alloc);
    for (const auto& st : res.trace.stages) {
      for (const auto& R : st.A) CHECK(R.is_empty());
    }
    CHECK(verifies(A, oracle, res.witness, opt.H));
    CHECK(check_focusing_ledger(A, Q, res.trace).empty());
    CHECK(check_focusing_chain(A, oracle, res.trace));
  }
}

TEST_CASE("composer on a quadratic system reports its stages") {
  // The last stage colors by a vector over every probe subset, far beyond
  // what a brute-force sub-oracle can focus at this scale.
  const SetPolynomial Q = SetPolynomial::full_power(2);
  SetPolynomial P = Q;
  P.set_coeff(index_from_list({1}, 2), FinSet::symbols({kMarker}));
  const System A(2, {Q, P});
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto oracle = ColoringOracle::seeded(2, seed);
    SymbolAllocator alloc;
    FocusingOptions opt;
    opt.H = FinSet::symbols({kMarker});
    FocusingTrace trace;
    try {
      const auto res = focusing_composer(A, Q, oracle, brute_force_sub({4, 3, 500000}), opt, alloc);
      CHECK(verifies(A, oracle, res.witness, opt.H));
      CHECK(check_focusing_ledger(A, Q, res.trace).empty());
      CHECK(check_focusing_chain(A, oracle, res.trace));
      trace = res.trace;
    } catch (const FocusingFailure& e) {
      trace = e.trace();
    }
    REQUIRE(trace.stages.size() == opt.k + 1);
    for (const auto& st : trace.stages) {
      CHECK(precedes(weight_vector(st.A), weight_vector(A)));
      CHECK(st.N.size() == opt.stage_window);
    }
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
      for (std::size_t j = i + 1; j < trace.stages.size(); ++j) {
        CHECK_FALSE(trace.stages[i].N.intersects(trace.stages[j].N));
      }
    }
  }
}

TEST_CASE("composer validates its inputs") {
  const System A(2, {linear_monomial()});
  const auto oracle = ColoringOracle::seeded(2, 1);
  SymbolAllocator alloc;
  FocusingOptions opt;
  CHECK_THROWS_AS(focusing_composer(A, SetPolynomial(2), oracle, brute_force_sub({}), opt, alloc), MalformedQ);
  CHECK_THROWS_AS(focusing_composer(A, SetPolynomial::full_power(2), oracle, brute_force_sub({}), opt, alloc),
                  NotDominatedError);
  CHECK_THROWS_AS(focusing_composer(A, SetPolynomial::full_power(3), oracle, brute_force_sub({}), opt, alloc),
                  DimensionMismatch);
  SetPolynomial with_constant = linear_monomial();
  with_constant.set_coeff(0, FinSet::of({{1, 1}}));
  CHECK_THROWS_AS(
      focusing_composer(System(2, {with_constant}), linear_monomial(), oracle, brute_force_sub({}), opt, alloc),
      ConstantTermError);
}

TEST_CASE("composer surfaces a sub-oracle failure with the partial trace") {
  const SetPolynomial Q = SetPolynomial::full_power(2);
  SetPolynomial P = Q;
  P.set_coeff(index_from_list({1}, 2), FinSet::symbols({kMarker}));
  const System A(2, {Q, P});
  SymbolAllocator alloc;
  FocusingOptions opt;
  opt.H = FinSet::symbols({kMarker});
  try {
    focusing_composer(A, Q, ColoringOracle::seeded(2, 3), brute_force_sub({1, 0, 1}), opt, alloc);
    FAIL("expected a failure");
  } catch (const FocusingFailure& e) {
    CHECK_FALSE(e.trace().stages.empty());
  }
}

TEST_CASE("phj system and search") {
  const System A = phj_system(2, 2);
  CHECK(A.dim() == 3);
  CHECK(A.size() == 3);

  const auto one = phj_search(3, 2, 1, ColoringOracle::seeded(1, 0), {});
  CHECK(one.gamma == FinSet::symbols({1}));
  CHECK(one.a.empty());

  const auto parity = ColoringOracle::reducer(IntColoring::parity(), 1);
  const auto res = phj_search(3, 1, 1, parity, {});
  CHECK(res.a.empty());
  CHECK(res.gamma.size() % 2 == 0);
  CHECK(res.colors.size() == 2);
  CHECK(res.colors[0] == res.colors[1]);
}

TEST_CASE("phj minimal grid sizes") {
  // {a, a ∪ γ} for d = q = 1: the chain ∅ ⊂ {1} ⊂ {1,2} forces it at N = 2.
  CHECK(phj_min_bound(1, 1, 2, 4, 1000000) == std::optional<std::size_t>(2));
  CHECK_THROWS_AS(phj_min_bound(1, 1, 2, 1, 1000000), CapTooSmall);
}

TEST_CASE("single square search") {
  const auto one = single_square_search(3, ColoringOracle::seeded(1, 0), {});
  CHECK(one.n == FinSet::symbols({1}));
  CHECK(one.a.empty());

  const auto parity = ColoringOracle::reducer(IntColoring::parity(), 1);
  const auto hit = single_square_search(3, parity, {});
  CHECK(hit.a.empty());
  CHECK(hit.n == FinSet::symbols({1, 2}));
  CHECK(bridge_check(square_system(), hit.n, hit.a, parity));
}

TEST_CASE("combinatorial lines") {
  const WordColoring split = [](const std::vector<int>& w) { return w[0] == 0 ? 1 : 2; };
  CHECK_THROWS_AS(hj_line_search(2, 1, split), NotFound);

  const auto line = hj_line_search(2, 2, [](const std::vector<int>&) { return 1; });
  CHECK(line.variable_word == std::vector<int>{0, -1});
  CHECK(line.words == std::vector<std::vector<int>>{{0, 0}, {0, 1}});

  const WordColoring sum_parity = [](const std::vector<int>& w) {
    int s = 0;
    for (int x : w) s += x;
    return 1 + s % 2;
  };
  const auto l3 = hj_line_search(3, 3, sum_parity);
  for (const auto& w : l3.words) CHECK(sum_parity(w) == sum_parity(l3.words[0]));
}

TEST_CASE("hales-jewett numbers by enumeration") {
  CHECK(hj_number(2, 2, 4) == 2);
  CHECK(naive_hj_forced(2, 2, 2));
  CHECK_FALSE(naive_hj_forced(2, 2, 1));
  CHECK(hj_number(2, 3, 3) == 3);
  CHECK(naive_hj_forced(2, 3, 3));
  CHECK_FALSE(naive_hj_forced(2, 3, 2));
  CHECK_THROWS_AS(hj_number(3, 2, 2), CapTooSmall);
  CHECK_FALSE(naive_hj_forced(3, 2, 2));
}

TEST_CASE("word configurations match the track-count map") {
  const std::vector<FinSet> sets = {FinSet::symbols({10}), FinSet::symbols({20, 21})};
  const std::vector<Symbol> sigma = {1, 2, 3};
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Tuple> pairs;
    std::vector<int> word(3, 0);
    for (Symbol k = 1; k <= 3; ++k) {
      for (Symbol track = 1; track <= 2; ++track) {
        if (uniform(rng, 0, 1) == 1) {
          pairs.push_back({track, k});
          ++word[k - 1];
        }
      }
    }
    const FinSet b(2, pairs);
    CHECK(hj_phi(b, sets, sigma) == word_configuration(word, sets, sigma));
  }
  CHECK(word_configuration({0, 0, 0}, sets, sigma).empty());
  CHECK(word_configuration({1, 0, 0}, sets, sigma) == FinSet::of({{1, 10}, {10, 1}}));
}

TEST_CASE("certificates round-trip and catch tampering") {
  const System A(2, {linear_monomial()});
  const FinSet H = FinSet::symbols({kMarker});
  const auto oracle = ColoringOracle::seeded(2, 4);
  RecurrenceRequest req{A, H, {}, std::nullopt};
  const Witness w = brute_force_witness(req, oracle);
  const auto cert = make_certificate(abstract_space(2, H), oracle, A, w);
  const auto j = to_json(cert);
  CHECK(to_json(certificate_from_json(j)) == j);
  CHECK(verify_certificate(certificate_from_json(j)));

  auto bad_color = j;
  bad_color["colors"]["base"] = 3 - bad_color["colors"]["base"].get<int>();
  CHECK_FALSE(verify_certificate(certificate_from_json(bad_color)));

  auto overlap = cert;
  overlap.a = evaluate(A.polys()[0], cert.n);
  overlap.base_color = oracle(overlap.a);
  overlap.config_colors = {oracle(overlap.a)};
  CHECK_FALSE(verify_certificate(overlap));

  auto outside = cert;
  outside.n = FinSet::symbols({kMarker + 99});
  CHECK_FALSE(verify_certificate(outside));

  auto extra = j;
  extra["note"] = "trust me";
  CHECK_THROWS_AS(certificate_from_json(extra), MalformedCertificate);
  auto missing = j;
  missing.erase("oracle");
  CHECK_THROWS_AS(certificate_from_json(missing), MalformedCertificate);
}

TEST_CASE("grid certificates") {
  const auto oracle = ColoringOracle::reducer(IntColoring::parity(), 2);
  const auto res = phj_search(3, 1, 2, oracle, {});
  SpaceSpec space;
  space.kind = SpaceSpec::Kind::Grid;
  space.D = 2;
  space.N_bound = 3;
  space.d = 1;
  space.q = 2;
  const System A = phj_system(1, 2);
  const Witness w = observe(A, FinSet::symbols({1, 2, 3}), res.gamma, res.a, oracle);
  const auto cert = make_certificate(space, oracle, A, w);
  CHECK(verify_certificate(cert));
  auto wrong_system = cert;
  wrong_system.system = phj_system(1, 1);
  CHECK_FALSE(verify_certificate(wrong_system));
}

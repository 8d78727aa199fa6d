#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "ua/corpus.hpp"
#include "ua/hull.hpp"

using namespace ua;

TEST_CASE("one-step hull on Z12") {
  const FiniteAlgebra z12 = cyclic_group(12).algebra;

  CHECK(algebra_hull_once(z12, Subset::of(12, {3})) == Subset::of(12, {0, 3, 6, 9}));

  // {2} is not reached in one step: 2+4 = 6 only appears after 4 does
  const Subset once = algebra_hull_once(z12, Subset::of(12, {2}));
  CHECK(once == Subset::of(12, {0, 2, 4, 10}));
  CHECK_FALSE(algebra_hull_once(z12, once) == once);
}

TEST_CASE("generated subalgebras of Z12") {
  const FiniteAlgebra z12 = cyclic_group(12).algebra;

  CHECK(generated_subalgebra(z12, Subset::of(12, {2})) ==
        Subset::of(12, {0, 2, 4, 6, 8, 10}));
  CHECK(generated_subalgebra(z12, Subset::of(12, {5})) == Subset::full(12));
  CHECK(generated_subalgebra(z12, Subset(12)) == Subset::of(12, {0}));

  CHECK(generates_element(z12, Subset::of(12, {2}), 8));
  CHECK_FALSE(generates_element(z12, Subset::of(12, {2}), 3));
}

TEST_CASE("close_under agrees with the term-image oracle") {
  const FiniteAlgebra algs[] = {cyclic_group(6).algebra, linear_algebra_f2(2),
                                gould_algebra(), constant_pair_algebra(3)};
  for (const auto& a : algs)
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << a.carrier); ++mask) {
      const Subset b = Subset::from_mask(a.carrier, mask);
      CHECK(close_under(a, b) == oracle::clone_route_hull(a, b));
    }
}

TEST_CASE("closure check separates the two hulls of Z12") {
  const FiniteAlgebra z12 = cyclic_group(12).algebra;

  CHECK(check_closure(subalgebra_hull(z12)).holds);

  const HullOperator once = one_step_hull(z12);
  const auto r = check_closure(once);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  const Subset h1 = once(r.witness->set);
  CHECK_FALSE(once(h1) == h1);
}

TEST_CASE("exchange fails on Z8 and the reported witness re-checks") {
  const FiniteAlgebra z8 = cyclic_group(8).algebra;
  const HullOperator h = subalgebra_hull(z8);

  const auto r = check_exchange(h);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->set.empty());
  CHECK(r.witness->x == 1);
  CHECK(r.witness->y == 2);
  CHECK(verify_exchange_violation(h, r.witness->set, r.witness->x, r.witness->y));

  // 4 generates neither 2 nor the other way around symmetrically
  CHECK(verify_exchange_violation(h, Subset(8), 2, 4));
  CHECK_FALSE(verify_exchange_violation(h, Subset(8), 2, 6));
}

TEST_CASE("linear span over F2 is matroid-type") {
  for (int k = 1; k <= 3; ++k) {
    const HullOperator h = subalgebra_hull(linear_algebra_f2(k));
    CHECK(check_closure(h).holds);
    CHECK(check_exchange(h).holds);
    CHECK(check_monotone(h).holds);
    CHECK(is_matroid_type(h));
  }
  CHECK_FALSE(is_matroid_type(subalgebra_hull(cyclic_group(8).algebra)));
}

TEST_CASE("monotonicity of subalgebra hulls, and a failing synthetic hull") {
  CHECK(check_monotone(subalgebra_hull(cyclic_group(12).algebra)).holds);

  // shrink on bigger sets: h({x}) = {x} but h(anything larger) = {}
  HullOperator bad;
  bad.carrier_size = 4;
  bad.map = [](const Subset& b) { return b.count() <= 1 ? b : Subset(4); };
  const auto r = check_monotone(bad);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
}

TEST_CASE("memoized hull returns stable references") {
  const FiniteAlgebra z12 = cyclic_group(12).algebra;
  const HullOperator h = subalgebra_hull(z12);
  MemoHull memo(h);
  const Subset& first = memo(Subset::of(12, {2}));
  for (std::uint64_t mask = 0; mask < 512; ++mask) memo(Subset::from_mask(12, mask));
  CHECK(first == Subset::of(12, {0, 2, 4, 6, 8, 10}));
  CHECK(&first == &memo(Subset::of(12, {2})));
}

TEST_CASE("sampled batteries require a seed beyond the exhaustive bound") {
  const FiniteAlgebra big = cyclic_group(16).algebra;
  const HullOperator h = subalgebra_hull(big);

  CHECK_THROWS_AS(check_closure(h), std::runtime_error);

  HullCheckOptions opts;
  opts.seed = 7;
  opts.samples = 64;
  CHECK(check_closure(h, opts).holds);
  CHECK(check_monotone(h, opts).holds);
}

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "ua/clone.hpp"

using namespace ua;

namespace {

FiniteAlgebra single_op(const char* name, std::vector<int> support, int carrier,
                        std::vector<Element> table) {
  FiniteAlgebra a;
  a.carrier = carrier;
  Operation op;
  op.support = std::move(support);
  op.carrier = carrier;
  op.table = std::move(table);
  a.ops.push_back({name, op});
  return a;
}

const FiniteAlgebra kNandAlg = single_op("nand", {0, 1}, 2, {1, 1, 1, 0});
const FiniteAlgebra kAndAlg = single_op("and", {0, 1}, 2, {0, 0, 0, 1});
const FiniteAlgebra kNotAlg = single_op("not", {0}, 2, {1, 0});

}  // namespace

TEST_CASE("clone slice sizes match independent term enumeration") {
  SUBCASE("a Sheffer operation generates everything binary") {
    CloneSlice s = clone_upto(kNandAlg, 2);
    CHECK(s.per_arity[0].size() == 2);
    CHECK(s.per_arity[1].size() == 4);
    CHECK(s.per_arity[2].size() == 16);

    for (int r = 1; r <= 2; ++r) {
      auto expect = oracle::term_functions(kNandAlg, r, 6);
      REQUIRE(s.per_arity[r].size() == expect.size());
      for (const Operation& op : s.per_arity[r]) CHECK(expect.count(op.table) == 1);
    }
    auto consts = oracle::constant_term_values(kNandAlg, 6);
    CHECK(consts == std::set<Element>{0, 1});
  }

  SUBCASE("conjunction alone stays small") {
    CloneSlice s = clone_upto(kAndAlg, 2);
    CHECK(s.per_arity[0].empty());
    CHECK(s.per_arity[1].size() == 1);  // identity only
    CHECK(s.per_arity[2].size() == 3);  // both projections and the meet

    std::vector<std::vector<Element>> tables;
    for (const Operation& op : s.per_arity[2]) tables.push_back(op.table);
    CHECK(std::count(tables.begin(), tables.end(),
                     std::vector<Element>{0, 0, 1, 1}) == 1);
    CHECK(std::count(tables.begin(), tables.end(),
                     std::vector<Element>{0, 1, 0, 1}) == 1);
    CHECK(std::count(tables.begin(), tables.end(),
                     std::vector<Element>{0, 0, 0, 1}) == 1);

    auto expect = oracle::term_functions(kAndAlg, 2, 6);
    CHECK(expect.size() == 3);
  }

  SUBCASE("negation at cap 1") {
    CloneSlice s = clone_upto(kNotAlg, 1);
    CHECK(s.per_arity[0].empty());
    CHECK(s.per_arity[1].size() == 2);
    CHECK(s.per_arity[1][0].table == std::vector<Element>{0, 1});
    CHECK(s.per_arity[1][1].table == std::vector<Element>{1, 0});
  }
}

TEST_CASE("slices carry projections, are canonical, sorted, deduplicated") {
  CloneSlice s = clone_upto(kNandAlg, 2);
  for (int r = 1; r <= 2; ++r) {
    for (int j = 0; j < r; ++j) {
      const auto want = projection(2, r, j).table;
      CHECK(std::any_of(s.per_arity[r].begin(), s.per_arity[r].end(),
                        [&](const Operation& op) { return op.table == want; }));
    }
    CHECK(std::is_sorted(s.per_arity[r].begin(), s.per_arity[r].end(),
                         [](const Operation& x, const Operation& y) {
                           return x.table < y.table;
                         }));
    for (std::size_t i = 1; i < s.per_arity[r].size(); ++i)
      CHECK(s.per_arity[r][i - 1].table != s.per_arity[r][i].table);
    for (const Operation& op : s.per_arity[r]) {
      CHECK(op.arity() == r);
      for (int j = 0; j < r; ++j) CHECK(op.support[j] == j);
    }
  }
}

TEST_CASE("generation levels start with the projections") {
  CloneSlice s = clone_upto(kNandAlg, 2);
  for (int r = 1; r <= 2; ++r)
    for (std::size_t i = 0; i < s.per_arity[r].size(); ++i) {
      bool is_projection = false;
      for (int j = 0; j < r; ++j)
        is_projection |= s.per_arity[r][i].table == projection(2, r, j).table;
      if (is_projection)
        CHECK(s.generation[r][i] == 0);
      else
        CHECK(s.generation[r][i] > 0);
    }
}

TEST_CASE("cap 0 yields only the constant part") {
  CloneSlice s = clone_upto(kAndAlg, 0);
  REQUIRE(s.per_arity.size() == 1);
  CHECK(s.per_arity[0].empty());

  CloneSlice nand0 = clone_upto(kNandAlg, 0);
  CHECK(nand0.per_arity[0].size() == 2);
}

TEST_CASE("clone output satisfies the finite clone axioms at its cap") {
  for (const FiniteAlgebra* a : {&kNandAlg, &kAndAlg, &kNotAlg}) {
    for (int cap = 1; cap <= 2; ++cap) {
      FiniteAlgebra s = slice_as_algebra(clone_upto(*a, cap));
      CAPTURE(cap);
      CHECK(is_clone_upto(s, cap));
    }
  }
}

TEST_CASE("axiom deciders on hand-made families") {
  SUBCASE("conjunction alone is not unital") {
    CHECK_FALSE(is_unital(kAndAlg));
    CHECK(is_empty_regular(kAndAlg));  // no constants to mirror
    CHECK_FALSE(is_substitution_stable(kAndAlg, 2));  // misses the diagonal
  }
  SUBCASE("full binary slice over the booleans passes everything") {
    FiniteAlgebra full;
    full.carrier = 2;
    int idx = 0;
    for (Element c = 0; c < 2; ++c)
      full.ops.push_back({"z" + std::to_string(idx++), constant_op(2, 0, c)});
    for (int t = 0; t < 4; ++t)
      full.ops.push_back(
          {"u" + std::to_string(t),
           Operation{{0}, 2, {Element(t >> 1 & 1), Element(t & 1)}}});
    for (int t = 0; t < 16; ++t) {
      Operation op;
      op.support = {0, 1};
      op.carrier = 2;
      for (int i = 3; i >= 0; --i) op.table.push_back(Element(t >> i & 1));
      full.ops.push_back({"b" + std::to_string(t), op});
    }
    CHECK(is_unital(full));
    CHECK(is_empty_regular(full));
    CHECK(is_substitution_stable(full, 2));
    CHECK(is_composition_stable(full, 2));
    CHECK(is_clone_upto(full, 2));
  }
  SUBCASE("constant without its 0-ary mirror") {
    FiniteAlgebra a = single_op("c0", {0}, 2, {0, 0});
    CHECK_FALSE(is_empty_regular(a));
    FiniteAlgebra fixed = empty_regularize(a);
    CHECK(fixed.ops.size() == 2);
    CHECK(fixed.ops[1].op.arity() == 0);
    CHECK(fixed.ops[1].op.table[0] == 0);
    CHECK(is_empty_regular(fixed));
    // idempotent
    CHECK(empty_regularize(fixed).ops.size() == fixed.ops.size());
  }
}

TEST_CASE("constant pool picks up derived constants") {
  // x nand (x nand x) is constantly 1, whence also the 0-ary 0
  auto pool = constant_pool(kNandAlg);
  CHECK(pool == std::vector<Element>{0, 1});
  CHECK(constant_pool(kAndAlg).empty());

  // a 0-ary op seeds the pool and composition extends it
  FiniteAlgebra succ;
  succ.carrier = 3;
  succ.ops.push_back({"zero", constant_op(3, 0, 0)});
  succ.ops.push_back({"succ", Operation{{0}, 3, {1, 2, 0}}});
  CHECK(constant_pool(succ) == std::vector<Element>{0, 1, 2});
}

TEST_CASE("the fixpoint guard reports the offending arity") {
  CloneLimits tight;
  tight.max_ops_per_arity = 4;
  CHECK_THROWS_WITH_AS(clone_upto(kNandAlg, 2, tight),
                       doctest::Contains("arity 2"), std::runtime_error);
}

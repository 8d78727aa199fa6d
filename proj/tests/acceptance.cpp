// Acceptance battery: one line per criterion, nonzero exit on any failure.
// Budgets are enforced, so a pathological slowdown fails loudly instead of
// silently eating the suite.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ua/clone.hpp"
#include "ua/corpus.hpp"
#include "ua/free_set.hpp"
#include "ua/hull.hpp"
#include "ua/independence.hpp"
#include "ua/io.hpp"
#include "ua/power.hpp"
#include "ua/set_family.hpp"

using namespace ua;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) {
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

int g_failures = 0;

void run(int number, const std::string& title, long long budget_ms,
         const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (ms > budget_ms) {
    out.ok = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("over budget: ") +
                  std::to_string(ms) + " ms > " + std::to_string(budget_ms) + " ms";
  }
  std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", out.ok ? "PASS" : "FAIL",
              number, title.c_str(), static_cast<long long>(ms),
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++g_failures;
}

FiniteAlgebra nand_algebra() {
  return FiniteAlgebra{2, {{"nand", Operation{{0, 1}, 2, {1, 1, 1, 0}}}}};
}

FiniteAlgebra and_algebra() {
  return FiniteAlgebra{2, {{"and", Operation{{0, 1}, 2, {0, 0, 0, 1}}}}};
}

/* Canonical-support operation of the given arity from a flat table code. */
Operation op_from_table(int carrier, int arity, std::vector<Element> table) {
  std::vector<int> support(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) support[std::size_t(i)] = i;
  return Operation{std::move(support), carrier, std::move(table)};
}

/* All operations of one arity over a carrier, tables in counting order. */
std::vector<Operation> all_ops(int carrier, int arity) {
  std::vector<Operation> out;
  std::vector<Element> table(table_size(carrier, arity), 0);
  for (;;) {
    out.push_back(op_from_table(carrier, arity, table));
    int i = static_cast<int>(table.size()) - 1;
    while (i >= 0 && ++table[std::size_t(i)] == carrier) {
      table[std::size_t(i)] = 0;
      --i;
    }
    if (i < 0) return out;
  }
}

void compare_hulls(const FiniteAlgebra& a, Outcome& out, long long& checked) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << a.carrier); ++mask) {
    const Subset b = Subset::from_mask(a.carrier, mask);
    if (b.count() > 3) continue;
    ++checked;
    if (!(close_under(a, b) == oracle::clone_route_hull(a, b))) {
      out.require(false, "hull mismatch on carrier " + std::to_string(a.carrier) +
                             ", set " + b.to_string());
      return;
    }
  }
}

void criterion_1(Outcome& out) {
  const CloneSlice nand = clone_upto(nand_algebra(), 2);
  out.require(nand.per_arity[0].size() == 2 && nand.per_arity[1].size() == 4 &&
                  nand.per_arity[2].size() == 16,
              "nand slice counts differ from 2/4/16");

  const CloneSlice land = clone_upto(and_algebra(), 2);
  out.require(land.per_arity[0].size() == 0 && land.per_arity[1].size() == 1 &&
                  land.per_arity[2].size() == 3,
              "and slice counts differ from 0/1/3");

  // cross-check both slices against depth-6 term enumeration
  for (const auto* pair : {&nand, &land}) {
    const FiniteAlgebra& a = pair->algebra;
    for (int r = 1; r <= 2; ++r) {
      const auto oracle_set = oracle::term_functions(a, r, 6);
      std::set<std::vector<Element>> slice_set;
      for (const auto& op : pair->per_arity[std::size_t(r)]) slice_set.insert(op.table);
      out.require(oracle_set == slice_set,
                  "arity " + std::to_string(r) + " tables differ from the oracle");
    }
  }
}

void criterion_2(Outcome& out) {
  long long algebras = 0, checked = 0;

  // carriers 1 and 2: every algebra with up to two basic ops of arity <= 2
  for (int n = 1; n <= 2; ++n) {
    std::vector<Operation> ops;
    for (int r = 0; r <= 2; ++r)
      for (auto& op : all_ops(n, r)) ops.push_back(op);

    FiniteAlgebra a;
    a.carrier = n;
    ++algebras;
    compare_hulls(a, out, checked);  // no basic operations at all
    for (std::size_t i = 0; i < ops.size() && out.ok; ++i) {
      a.ops = {{"f", ops[i]}};
      ++algebras;
      compare_hulls(a, out, checked);
      for (std::size_t j = i; j < ops.size() && out.ok; ++j) {
        a.ops = {{"f", ops[i]}, {"g", ops[j]}};
        ++algebras;
        compare_hulls(a, out, checked);
      }
    }
    if (!out.ok) return;
  }

  // carrier 3 exceeds an exhaustive pair sweep (19713 ops make ~2*10^8
  // pairs), so: all single-op algebras, all pairs of arity <= 1 ops, and a
  // seeded sample of the remaining pairs
  std::vector<Operation> small3, all3;
  for (int r = 0; r <= 2; ++r)
    for (auto& op : all_ops(3, r)) {
      if (r <= 1) small3.push_back(op);
      all3.push_back(op);
    }

  FiniteAlgebra a;
  a.carrier = 3;
  ++algebras;
  compare_hulls(a, out, checked);
  for (const auto& op : all3) {
    if (!out.ok) return;
    a.ops = {{"f", op}};
    ++algebras;
    compare_hulls(a, out, checked);
  }
  for (std::size_t i = 0; i < small3.size() && out.ok; ++i)
    for (std::size_t j = i; j < small3.size() && out.ok; ++j) {
      a.ops = {{"f", small3[i]}, {"g", small3[j]}};
      ++algebras;
      compare_hulls(a, out, checked);
    }
  std::mt19937_64 rng(0xC2);
  for (int k = 0; k < 4000 && out.ok; ++k) {
    a.ops = {{"f", all3[rng() % all3.size()]}, {"g", all3[rng() % all3.size()]}};
    ++algebras;
    compare_hulls(a, out, checked);
  }

  out.note(std::to_string(algebras) + " algebras, " + std::to_string(checked) +
           " hull comparisons (carrier 3 pairs: arity <= 1 exhaustive + 4000 seeded)");
}

void criterion_3(Outcome& out) {
  std::mt19937_64 rng(0xA3);
  const CloneLimits limits{800};

  int instances = 0, free_positives = 0, strong_positives = 0;
  long long sets = 0;
  while (instances < 200) {
    FiniteAlgebra a;
    a.carrier = 2 + static_cast<int>(rng() % 2);
    const int nops = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < nops; ++i) {
      const int arity = static_cast<int>(rng() % 3);
      std::vector<Element> table(table_size(a.carrier, arity));
      for (auto& v : table) v = static_cast<Element>(rng() % a.carrier);
      a.ops.push_back({"f" + std::to_string(i), op_from_table(a.carrier, arity,
                                                              std::move(table))});
    }

    CloneSlice slice;
    try {
      slice = clone_upto(a, 2, limits);
    } catch (const std::runtime_error&) {
      continue;  // slice guard tripped, redraw
    }
    ++instances;

    const FiniteAlgebra closed = slice_as_algebra(slice);
    const HullOperator h = subalgebra_hull(closed);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << a.carrier); ++mask) {
      const Subset b = Subset::from_mask(a.carrier, mask);
      if (b.count() > 2) continue;
      ++sets;
      const bool fc = is_free_clone(slice, b).holds;
      const bool si = is_strongly_independent(h, b).holds;
      const bool ind = is_independent(h, b).holds;
      free_positives += fc;
      strong_positives += si;
      if (fc && !si)
        out.require(false, "free-clone set not strongly independent: " + b.to_string());
      if (si && !ind)
        out.require(false, "strongly independent set not independent: " + b.to_string());
      if (!out.ok) return;
    }
  }
  out.note(std::to_string(instances) + " instances, " + std::to_string(sets) +
           " subsets (" + std::to_string(free_positives) + " free-clone, " +
           std::to_string(strong_positives) + " strongly independent)");
}

void criterion_4(Outcome& out) {
  for (int k = 1; k <= 3; ++k) {
    const FiniteAlgebra a = linear_algebra_f2(k);
    const HullOperator h = subalgebra_hull(a);
    const int n = a.carrier;
    int maximal = 0;

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      const Subset b = Subset::from_mask(n, mask);
      const bool ind = is_independent(h, b).holds;
      const bool strong = is_strongly_independent(h, b).holds;
      if (ind != strong) {
        out.require(false, "k=" + std::to_string(k) +
                               ": independence and strong independence split on " +
                               b.to_string());
        return;
      }
      if (!ind) continue;
      bool extendable = false;
      for (Element x = 0; x < n && !extendable; ++x) {
        if (b.contains(x)) continue;
        Subset c = b;
        c.add(x);
        extendable = is_independent(h, c).holds;
      }
      if (extendable) continue;
      ++maximal;
      if (b.count() != k)
        out.require(false, "k=" + std::to_string(k) + ": maximal set " + b.to_string() +
                               " has size " + std::to_string(b.count()));
      if (!(h(b) == Subset::full(n)))
        out.require(false, "k=" + std::to_string(k) + ": maximal set " + b.to_string() +
                               " does not span");
      if (!out.ok) return;
    }
    out.note("k=" + std::to_string(k) + ": " + std::to_string(maximal) +
             " maximal independent sets");
  }
}

void criterion_5(Outcome& out) {
  const FiniteAlgebra z12 = cyclic_group(12).algebra;
  const HullOperator h12 = subalgebra_hull(z12);
  const Subset b = Subset::of(12, {2, 3});

  out.require(is_independent(h12, b).holds, "{2,3} not independent in Z12");
  const auto strong = is_strongly_independent(h12, b);
  out.require(!strong.holds, "{2,3} unexpectedly strongly independent in Z12");
  out.require(strong.witness && strong.witness->pair &&
                  strong.witness->pair->first == Subset::of(12, {2}) &&
                  strong.witness->pair->second == Subset::of(12, {3}),
              "strong-independence witness is not the pair ({2},{3})");
  if (strong.witness)
    out.require(verify_strong_witness(h12, b, *strong.witness),
                "strong witness does not re-check");

  const HullOperator h8 = subalgebra_hull(cyclic_group(8).algebra);
  const auto ex = check_exchange(h8);
  out.require(!ex.holds, "Z8 hull unexpectedly satisfies exchange");
  out.require(ex.witness && verify_exchange_violation(h8, ex.witness->set,
                                                      ex.witness->x, ex.witness->y),
              "reported exchange witness does not re-check");
  // the stated witness: 4 generates 2 one way but not the other
  out.require(verify_exchange_violation(h8, Subset(8), 2, 4),
              "(empty, 2, 4) is not an exchange violation in Z8");
}

void criterion_6(Outcome& out) {
  long long families = 0;

  // exhaustive: every family of at most 2 distinct subsets, base 1..4
  for (int base = 1; base <= 4 && out.ok; ++base) {
    const std::uint32_t total = std::uint32_t(1) << base;
    SubsetFamily f;
    f.base_size = base;
    ++families;
    out.require(check_family_freeness_agreement(f),
                "disagreement on the empty family, base " + std::to_string(base));
    for (std::uint32_t m0 = 0; m0 < total && out.ok; ++m0) {
      f.members = {Subset::from_mask(base, m0)};
      ++families;
      out.require(check_family_freeness_agreement(f),
                  "disagreement on a one-member family, base " + std::to_string(base));
      for (std::uint32_t m1 = m0 + 1; m1 < total && out.ok; ++m1) {
        f.members = {Subset::from_mask(base, m0), Subset::from_mask(base, m1)};
        ++families;
        out.require(check_family_freeness_agreement(f),
                    "disagreement on base " + std::to_string(base) + ", members " +
                        std::to_string(m0) + "," + std::to_string(m1));
      }
    }
  }
  if (!out.ok) return;

  // seeded: 100 families of 3 distinct subsets over bases up to 6
  std::mt19937_64 rng(0xF4);
  int seeded = 0;
  while (seeded < 100) {
    const int base = 1 + static_cast<int>(rng() % 6);
    const std::uint32_t total = std::uint32_t(1) << base;
    if (total < 3) continue;
    std::set<std::uint32_t> masks;
    while (masks.size() < 3) masks.insert(static_cast<std::uint32_t>(rng() % total));
    SubsetFamily f;
    f.base_size = base;
    for (std::uint32_t m : masks) f.members.push_back(Subset::from_mask(base, m));
    ++seeded;
    ++families;
    out.require(check_family_freeness_agreement(f),
                "disagreement on a seeded 3-member family, base " + std::to_string(base));
    if (!out.ok) return;
  }
  out.note(std::to_string(families) + " families checked");
}

void criterion_7(Outcome& out) {
  const int bases[] = {6, 26, 318};
  for (int n = 1; n <= 3; ++n) {
    const SubsetFamily f = hausdorff_family(n);
    out.require(f.base_size == bases[n - 1],
                "n=" + std::to_string(n) + ": base size " + std::to_string(f.base_size));
    out.require(f.members.size() == (std::size_t(1) << n),
                "n=" + std::to_string(n) + ": family size " +
                    std::to_string(f.members.size()));
    out.require(is_independent_family(f).independent,
                "n=" + std::to_string(n) + ": family not independent");
  }
}

void criterion_8(Outcome& out) {
  const FreeSetResult res = build_free_set(nand_algebra(), 3, 2);
  out.require(res.x_size == 1479, "x_size " + std::to_string(res.x_size) + " != 1479");
  out.require(res.functions.size() == 3, "expected 3 functions");
  out.require(!(res.functions[0] == res.functions[1]) &&
                  !(res.functions[0] == res.functions[2]) &&
                  !(res.functions[1] == res.functions[2]),
              "functions not pairwise distinct");

  const CloneSlice s = clone_upto(nand_algebra(), 2);
  out.require(verify_free_in_power(s, res.functions).holds,
              "built family not free in the power");
  out.require(check_certificate(res.certificate).ok, "fresh certificate rejected");

  const std::string text = certificate_to_text(res.certificate);
  const FreeSetResult again = build_free_set(nand_algebra(), 3, 2);
  out.require(certificate_to_text(again.certificate) == text,
              "rebuild is not byte-identical");
  out.require(certificate_to_text(parse_certificate_text(text)) == text,
              "parse/serialize round trip altered bytes");

  // single semantic-field mutations, each of which must be rejected
  const FreeSetCertificate& good = res.certificate;
  std::vector<std::pair<std::string, FreeSetCertificate>> mutants;
  auto add = [&](const std::string& name, FreeSetCertificate c) {
    mutants.emplace_back(name, std::move(c));
  };
  {
    FreeSetCertificate c = good;
    c.base.ops[0].op.table[0] ^= 1;
    add("base table cell", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.cap = 1;
    add("cap", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.m = 4;
    add("m", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.default_value = 1;
    add("default value", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.triples[100].witness_p[0] ^= 1;
    add("witness tuple", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    std::swap(c.triples[0], c.triples[1]);
    add("triple order", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.triples[5].u = {0, 0};
    add("u injectivity", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.triples[7].alpha_idx = c.triples[7].beta_idx;
    add("operation index", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.triples.pop_back();
    add("triple count", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.generators[0][0] ^= 1;
    add("generator witness cell", std::move(c));
  }
  {
    FreeSetCertificate c = good;
    c.generators[2][1478] ^= 1;
    add("generator pattern cell", std::move(c));
  }
  for (auto& [name, mutant] : mutants)
    out.require(!check_certificate(mutant).ok, "mutation not detected: " + name);
  out.note(std::to_string(mutants.size()) + " mutations all rejected");
}

void criterion_9(Outcome& out) {
  out.require(check_conjugation_identities(2), "conjugation identities fail for k=2");

  const BasisMaximalityReport r2 = check_basis_maximality(2);
  out.require(r2.group_order == 24 && r2.basis_count == 3, "k=2 corpus shape wrong");
  out.require(r2.deviations.empty(),
              "k=2 deviations: " + std::to_string(r2.deviations.size()));

  const BasisMaximalityReport r3 = check_basis_maximality(3);
  out.require(r3.group_order == 1344 && r3.basis_count == 28, "k=3 corpus shape wrong");
  out.require(r3.deviations.empty(),
              "k=3 deviations: " + std::to_string(r3.deviations.size()));
  out.note(std::to_string(r2.cases_checked) + " + " + std::to_string(r3.cases_checked) +
           " cases");
}

void criterion_10(Outcome& out) {
  const FiniteAlgebra g = gould_algebra();
  out.require(is_independent(subalgebra_hull(g), Subset::full(2)).holds,
              "carrier of the groupoid not independent");
  const auto fr = is_free(g, Subset::full(2));
  out.require(!fr.holds, "carrier of the groupoid unexpectedly free");
  out.require(fr.witness && verify_extension_witness(g, Subset::full(2), *fr.witness),
              "freeness witness does not re-check");

  const FiniteAlgebra both = constant_pair_algebra(3);
  FiniteAlgebra unary_only = both;
  unary_only.ops.erase(unary_only.ops.begin() + 1);
  const Subset b = Subset::of(3, {1, 2});
  out.require(is_strongly_independent(subalgebra_hull(both), b).holds,
              "pair not strongly independent with the 0-ary mirror present");
  out.require(!is_strongly_independent(subalgebra_hull(unary_only), b).holds,
              "pair still strongly independent after dropping the 0-ary operation");
}

}  // namespace

int main() {
  run(1, "clone slice counts for NAND (2/4/16) and AND (0/1/3)", 1000, criterion_1);
  run(2, "generated subalgebras match the term-image oracle", 30000, criterion_2);
  run(3, "free-clone => strongly independent => independent on a seeded corpus",
      60000, criterion_3);
  run(4, "over F2^k: independence = strong independence, maximal sets are bases",
      10000, criterion_4);
  run(5, "Z12 {2,3} independent-not-strongly; Z8 exchange failure with witness",
      1000, criterion_5);
  run(6, "family independence coincides with power freeness", 60000, criterion_6);
  run(7, "hausdorff families: bases 6/26/318, sizes 2/4/8, independent", 5000,
      criterion_7);
  run(8, "free-set build at m=3, cap=2: x_size 1479, certificate sound", 10000,
      criterion_8);
  run(9, "embedded bases are maximal in the semidirect groups (k=2,3)", 120000,
      criterion_9);
  run(10, "groupoid and constant-pair verdicts", 1000, criterion_10);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

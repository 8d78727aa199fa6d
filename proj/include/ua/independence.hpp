#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ua/clone.hpp"
#include "ua/hull.hpp"
#include "ua/operation.hpp"
#include "ua/subset.hpp"

namespace ua {

template <class W>
struct Verdict {
  bool holds = false;
  std::optional<W> witness;  // present iff the verdict is negative
};

/* b lies in the hull of the rest. */
struct DependentPoint {
  Element b = 0;
};

/*
 * Either some member of B already sits in the hull of the empty set, or a
 * pair of subsets whose hulls intersect beyond the hull of their
 * intersection; `point` is an element of the discrepancy.
 */
struct StrongWitness {
  std::optional<Element> in_empty_hull;
  std::optional<std::pair<Subset, Subset>> pair;
  Element point = 0;
};

/* Two maps into B agreeing under the operations, separated by an f. */
struct ExtensionWitness {
  Operation alpha, beta;
  std::vector<Element> x, y;  // positional tuples over the two supports
  std::vector<Element> f;     // f[i] is the image of the i-th element of B
};

/* Distinct same-arity term operations agreeing on an injective tuple. */
struct SeparationWitness {
  Operation alpha, beta;
  std::vector<Element> tuple;
};

Verdict<DependentPoint> is_independent(const HullOperator& h, const Subset& b);

/* Guard: refuses |B| beyond max_size (the check enumerates 2^|B| hulls). */
Verdict<StrongWitness> is_strongly_independent(const HullOperator& h,
                                               const Subset& b, int max_size = 12);

struct FreeBounds {
  /* Ceiling on #pairs * #tuple-pairs * #maps enumerated. */
  unsigned long long max_work = 200000000ULL;
};

/*
 * Every map B -> A extends to a homomorphism on the hull; decided through
 * the pair condition: whenever two operation applications agree on tuples
 * from B, they agree after every relabeling f of B.
 */
Verdict<ExtensionWitness> is_free(const FiniteAlgebra& a, const Subset& b,
                                  const FreeBounds& bounds = {});

/*
 * Freeness against a clone slice: no two distinct term operations of equal
 * arity <= |B| may agree on an injective tuple over B.  Equivalently, for
 * each injective tuple the evaluation map is injective on the slice.
 */
Verdict<SeparationWitness> is_free_clone(const CloneSlice& s, const Subset& b);

/* As above, after checking the family is clone-closed up to |B|. */
Verdict<SeparationWitness> is_free_clone(const FiniteAlgebra& a, const Subset& b);

/*
 * Greedy ascending extension of an independent set; the result admits no
 * further element (single additions decide maximality since independence
 * is downward closed).  Throws if B itself is dependent.
 */
Subset extend_to_maximal_independent(const HullOperator& h, const Subset& b);

struct IndependenceAlgebraLimits {
  int max_subset_size = 4;
  CloneLimits clone;
};

/*
 * Exchange property of the subalgebra hull plus independent => clone-free
 * for every subset up to the size limit.
 */
bool is_independence_algebra(const FiniteAlgebra& a,
                             const IndependenceAlgebraLimits& limits = {});

/* Aggregate report for one subset, as the CLI prints it. */
struct IndependenceReport {
  Subset set;
  Verdict<DependentPoint> independent;
  Verdict<StrongWitness> strongly_independent;
  std::optional<Verdict<SeparationWitness>> clone_free;
};

IndependenceReport analyze_independence(const FiniteAlgebra& a, const Subset& b,
                                        int clone_cap_limit = 4);

/* Witness re-checkers; every reported witness must pass these. */
bool verify_dependent_point(const HullOperator& h, const Subset& b, Element x);
bool verify_strong_witness(const HullOperator& h, const Subset& b,
                           const StrongWitness& w);
bool verify_extension_witness(const FiniteAlgebra& a, const Subset& b,
                              const ExtensionWitness& w);
bool verify_separation_witness(const Subset& b, const SeparationWitness& w);

}  // namespace ua

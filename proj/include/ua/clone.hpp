#pragma once

#include <cstddef>
#include <vector>

#include "ua/operation.hpp"

namespace ua {

struct CloneLimits {
  /* Abort the fixpoint when one arity slice exceeds this many operations. */
  std::size_t max_ops_per_arity = 100000;
};

/*
 * All term operations of an algebra up to an arity cap, in canonical form
 * (support {0..r-1}).  per_arity[r] is sorted lexicographically by table,
 * so slices built from equal inputs are identical.  generation[r][i] is the
 * round of the inductive ladder at which the operation first appeared:
 * projections at level 0, everything else at the breadth-first round that
 * produced it.
 */
struct CloneSlice {
  FiniteAlgebra algebra;  // the generating family, as given
  int carrier = 1;
  int arity_cap = 0;
  std::vector<std::vector<Operation>> per_arity;
  std::vector<std::vector<int>> generation;

  std::size_t total_ops() const {
    std::size_t n = 0;
    for (const auto& v : per_arity) n += v.size();
    return n;
  }
};

/*
 * Compute the term operations of arity <= cap.  The 0-ary slice holds one
 * operation per constant term value (the values of 0-ary basic operations
 * closed under the appearance of constant unary terms); each positive
 * arity is the fixpoint of projections plus those constants under
 * composition with the basic operations.
 */
CloneSlice clone_upto(const FiniteAlgebra& a, int cap, const CloneLimits& limits = {});

/* The operation family of a slice, with generated names (t<arity>_<index>). */
FiniteAlgebra slice_as_algebra(const CloneSlice& s);

/* Values c admitting a constant term operation with value c. */
std::vector<Element> constant_pool(const FiniteAlgebra& a);

/*
 * Finite clone axioms for an operation family, quantified over supports
 * inside {0..cap-1}.  Membership is compared on canonical forms, which
 * renaming-invariance makes lossless.
 */
bool is_unital(const FiniteAlgebra& a);
bool is_empty_regular(const FiniteAlgebra& a);
bool is_substitution_stable(const FiniteAlgebra& a, int cap);
bool is_composition_stable(const FiniteAlgebra& a, int cap);
bool is_clone_upto(const FiniteAlgebra& a, int cap);

/*
 * Add the missing 0-ary mirror for every constant operation in the family.
 * Idempotent; an already mirrored family comes back unchanged.
 */
FiniteAlgebra empty_regularize(const FiniteAlgebra& a);

}  // namespace ua

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "ua/operation.hpp"
#include "ua/subset.hpp"

namespace ua {

/*
 * A hull (closure-style) operator on subsets of a finite carrier.  The
 * wrapped map is expected to be extensive and monotone; closedness under
 * iteration is a property some hulls lack, and check_closure decides it.
 */
struct HullOperator {
  int carrier_size = 0;
  std::function<Subset(const Subset&)> map;

  Subset operator()(const Subset& b) const { return map(b); }
};

/* One application of B |-> B u union of op-images of tuples over B. */
Subset algebra_hull_once(const FiniteAlgebra& a, const Subset& b);

/*
 * Least subuniverse containing B: the one-step hull iterated to its
 * fixpoint, maintained incrementally through a frontier.  If stop_at is
 * given the search returns early (with a partial set) once that element
 * appears; callers use this for membership queries only.
 */
Subset close_under(const FiniteAlgebra& a, const Subset& b,
                   std::optional<Element> stop_at = std::nullopt);

Subset generated_subalgebra(const FiniteAlgebra& a, const Subset& b);

/* Fast membership query: x in the subuniverse generated by B. */
bool generates_element(const FiniteAlgebra& a, const Subset& b, Element x);

HullOperator one_step_hull(FiniteAlgebra a);
HullOperator subalgebra_hull(FiniteAlgebra a);

/* Memoizes an underlying hull; the property batteries share computed hulls. */
class MemoHull {
public:
  explicit MemoHull(const HullOperator& h);
  const Subset& operator()(const Subset& b);
  int carrier_size() const { return h_->carrier_size; }

private:
  const HullOperator* h_;
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

struct HullCheckOptions {
  /* Exhaustive over all subsets up to this carrier size... */
  int exhaustive_bound = 12;
  /* ...and seeded sampling above it; unset seed means refuse instead. */
  std::optional<std::uint64_t> seed;
  int samples = 4096;
};

struct ClosureWitness {
  Subset set;  // h(h(set)) != h(set)
};

struct ExchangeWitness {
  Subset set;
  Element x = 0, y = 0;  // exactly one of x in h(A+y), y in h(A+x) holds
};

struct MonotoneWitness {
  Subset set;
  Element x = 0;  // h(set) is not contained in h(set + x), or set !<= h(set)
};

template <class W>
struct CheckOutcome {
  bool holds = false;
  std::optional<W> witness;
};

CheckOutcome<ClosureWitness> check_closure(const HullOperator& h,
                                           const HullCheckOptions& opts = {});
CheckOutcome<ExchangeWitness> check_exchange(const HullOperator& h,
                                             const HullCheckOptions& opts = {});
CheckOutcome<MonotoneWitness> check_monotone(const HullOperator& h,
                                             const HullCheckOptions& opts = {});

/* Re-verify a reported exchange violation against the definition. */
bool verify_exchange_violation(const HullOperator& h, const Subset& a, Element x,
                               Element y);

/*
 * Closure plus exchange decide the matroid property here; finite supports
 * hold for every hull on a finite carrier, so that clause never fails.
 */
bool is_matroid_type(const HullOperator& h, const HullCheckOptions& opts = {});

}  // namespace ua

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ua/clone.hpp"
#include "ua/operation.hpp"
#include "ua/power.hpp"

namespace ua {

/*
 * One work item of the free-set construction: an ordered pair of distinct
 * same-arity slice operations together with an injective tuple of
 * generator indices, plus the separating data computed for it.
 */
struct TripleEntry {
  int r = 0;                        // common arity
  int alpha_idx = 0, beta_idx = 0;  // positions in the slice's arity-r list
  std::vector<int> u;               // injective generator indices, length r
  std::vector<Element> witness_p;   // lex-least tuple with alpha(p) != beta(p)
};

/*
 * Self-contained record of a build: the clone slice is recomputed from
 * base and cap, the triple list is stored in enumeration order (the
 * triple's position is its coordinate), and the m generators are tables
 * over X = (triple coordinates) ++ (m pattern coordinates).  Values at
 * coordinates outside a triple's u-range equal default_value.
 */
struct FreeSetCertificate {
  FiniteAlgebra base;
  int cap = 0;
  int m = 0;
  Element default_value = 0;
  std::vector<TripleEntry> triples;
  std::vector<PowerElement> generators;

  int x_size() const { return static_cast<int>(triples.size()) + m; }
};

struct FreeSetResult {
  int x_size = 0;
  std::vector<PowerElement> functions;
  FreeSetCertificate certificate;
};

/*
 * Build m functions in A^X that are free for the arity-<=cap clone slice
 * of the given algebra, with one X coordinate per triple.  Every witness
 * and enumeration order is pinned, so equal inputs give equal outputs.
 * Requires carrier >= 2, m >= 2 and cap <= m.
 */
FreeSetResult build_free_set(const FiniteAlgebra& a, int m, int cap,
                             const CloneLimits& limits = {});

/* Two distinct same-arity slice operations whose lifts agree on an
 * injective tuple of family members at every coordinate. */
struct LiftAgreementWitness {
  Operation alpha, beta;
  std::vector<int> xi;  // indices into the deduplicated family
};

struct FreeInPowerVerdict {
  bool holds = false;
  std::optional<LiftAgreementWitness> witness;
};

/*
 * Freeness of a family in the power algebra, decided pointwise along
 * coordinates without materializing A^X.  The family is treated as a set
 * (duplicates collapse); arities up to min(cap, family size) are checked.
 */
FreeInPowerVerdict verify_free_in_power(const CloneSlice& s,
                                        const std::vector<PowerElement>& family);

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> failures;  // one entry per violated clause
};

/*
 * Re-derive everything a certificate asserts: slice and triple enumeration
 * are recomputed from base/cap/m, witnesses must separate and be
 * lexicographically least, generator tables must realize the witnesses and
 * defaults, generators must be pairwise distinct (projection-pair triples,
 * when cap >= 2), and the family must verify as free.
 */
CertificateCheck check_certificate(const FreeSetCertificate& cert,
                                   const CloneLimits& limits = {});

}  // namespace ua

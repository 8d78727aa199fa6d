#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ua/power.hpp"
#include "ua/subset.hpp"

namespace ua {

/* A family of pairwise-distinct subsets of {0..base_size-1}. */
struct SubsetFamily {
  int base_size = 0;
  std::vector<Subset> members;
  std::vector<std::string> labels;  // empty, or one per member
};

void validate_family(const SubsetFamily& f);

struct FamilyVerdict {
  bool independent = false;
  /* A sign pattern whose Boolean combination is empty: bit i set means
   * member i is taken straight, clear means complemented. */
  std::optional<std::uint32_t> missing_pattern;
};

/*
 * Independence of a subset family: every full Boolean combination of the
 * members is nonempty.  Decided through point signatures (the membership
 * pattern of each base point); refuses families larger than 20 members.
 */
FamilyVerdict is_independent_family(const SubsetFamily& f);

/* Base 2^m; member i collects the points whose i-th bit is set. */
SubsetFamily coordinate_family(int m);

/*
 * The classical finite independent family: base points are pairs (F, G)
 * with F a subset of {0..n-1} and G a set of subsets of F; member U_A
 * collects the points with (A intersect F) in G.  Points are ordered by
 * (|F|, F lexicographic, G as a bitmask over subsets of F in binary
 * counting order); members are ordered by the bit mask of A.  n <= 3.
 */
SubsetFamily hausdorff_family(int n);

/* Members as characteristic 0/1 functions over the base, and back. */
std::vector<PowerElement> family_to_functions(const SubsetFamily& f);
SubsetFamily functions_to_family(const std::vector<PowerElement>& fs);

/*
 * Independence of the family must coincide with freeness of its
 * characteristic functions under the lifted Boolean clone.  Returns that
 * agreement bit; false would expose a bug in one of the two deciders,
 * never a domain fact.  Guards: at most 3 members, base at most 8.
 */
bool check_family_freeness_agreement(const SubsetFamily& f);

}  // namespace ua

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ua/operation.hpp"

namespace ua {

/*
 * A finite group packaged as an algebra with operations mul (binary),
 * inv (unary) and e (0-ary), plus a printable label per element.  The
 * constructors below validate the group axioms exhaustively.
 */
struct GroupPresentation {
  FiniteAlgebra algebra;
  std::vector<std::string> labels;

  int order() const { return algebra.carrier; }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element identity() const;
};

/* Exhaustive axiom check: n^3 associativity triples, identity, inverses. */
void validate_group(const GroupPresentation& g);

GroupPresentation cyclic_group(int n);

/*
 * F2^k with xor and zero, carrier encoded as bit masks 0..2^k-1.  The
 * subalgebra hull is exactly the linear span, so this algebra drives the
 * matroid-type batteries.
 */
FiniteAlgebra linear_algebra_f2(int k);

/* All bases of F2^k, each ascending, the list ordered lexicographically. */
std::vector<std::vector<int>> f2_bases(int k);

/*
 * G = F2^k x| GL(k,2) with multiplication (v,f)(u,g) = (v + f(u), f o g)
 * and inverse (f^-1(v), f^-1).  Element (v, f) sits at index
 * v * |GL| + (position of f); matrices are stored as row-major bit codes
 * (bit i*k+j is entry [i][j]) and listed in ascending code order.
 */
struct SemidirectGroup {
  int k = 0;
  std::vector<std::uint32_t> gl;
  int id_index = 0;
  GroupPresentation group;

  int order() const { return group.order(); }
  int vectors() const { return 1 << k; }
  Element encode(int v, int mat) const;
  std::pair<int, int> decode(Element g) const;  // (v, gl index)
  Element embed(int v) const;                   // (v, identity)
  int apply(int mat, int v) const;              // matrix action on a vector
  int mat_mul(int f, int g) const;              // gl indices throughout
  int mat_inv(int f) const;
};

SemidirectGroup semidirect_group(int k);  // k in {2, 3}

/* g v g^-1 = f(v) and g^-1 v g = f^-1(v) for all g = (u,f) and v in V. */
bool check_conjugation_identities(int k);

/*
 * For every basis M of F2^k, embedded into G = F2^k x| GL(k,2): M stays
 * independent under the subgroup hull of G, and M + {g} is dependent for
 * every g outside M.  Dependence of M + {g} is established by an explicit
 * witness word (a conjugation identity makes some basis vector a product
 * over (M \ {v}) + {g}); if the word ever failed to evaluate as expected,
 * a full brute-force dependence check runs before a deviation is reported.
 */
struct BasisMaximalityReport {
  int k = 0;
  int group_order = 0;
  int basis_count = 0;
  long long cases_checked = 0;
  std::vector<std::string> deviations;

  bool ok() const { return deviations.empty(); }
};

BasisMaximalityReport check_basis_maximality(int k);

/* Two-element carrier with multiplication only: independent, never free. */
FiniteAlgebra gould_algebra();

/*
 * Carrier n with a unary constant 0 and its 0-ary mirror.  Dropping the
 * 0-ary operation breaks strong independence of two-element sets, which
 * makes this the stock non-monotonicity example.
 */
FiniteAlgebra constant_pair_algebra(int n);

}  // namespace ua

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ua/clone.hpp"
#include "ua/operation.hpp"

namespace ua {

/* A function X -> A for X = {0, ..., x_size-1}, stored as its value list. */
using PowerElement = std::vector<Element>;

/* Coordinate projection: f(x).  Throws std::out_of_range on a bad x. */
Element delta(int x, const PowerElement& f);

/*
 * Pointwise lift of a base operation: (lift op)(f_1..f_k)(x) is the base
 * operation applied to the coordinate values f_i(x).  Arguments must all
 * have length x_size.
 */
struct LiftedOperation {
  Operation op;
  int x_size = 0;

  PowerElement operator()(std::span<const PowerElement> args) const;
};

LiftedOperation lift(Operation op, int x_size);

/*
 * Carrier {0,1} with every operation of arity <= cap, plus the two 0-ary
 * constants.  Operation b<r>_<c> has the table whose entries are the bits
 * of c, first entry most significant; the 0-ary constants are c0 and c1.
 */
FiniteAlgebra boolean_clone(int arity_cap);

/* The same family packaged as a ready-made clone slice. */
CloneSlice boolean_clone_slice(int arity_cap);

/* Flat encoding of A^X, coordinate 0 the most significant digit. */
std::size_t power_index(const PowerElement& f, int carrier);
PowerElement power_unindex(std::size_t index, int carrier, int x_size);

/*
 * The power algebra with a flat carrier of size carrier^x_size and every
 * base operation lifted into an explicit table.  Exists for oracle
 * cross-checks only, hence the hard carrier^x_size <= 4096 guard.
 */
FiniteAlgebra materialize_power(const FiniteAlgebra& base, int x_size);

}  // namespace ua

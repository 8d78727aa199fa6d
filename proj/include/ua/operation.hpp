#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ua {

/* Carrier elements are indices 0 <= a < carrier_size. */
using Element = int;

/*
 * A finitary operation on a finite carrier.
 *
 * The support lists the coordinates the operation reads, as a strictly
 * increasing sequence of naturals; the arity is the support size.  The
 * table stores one value per assignment of the support coordinates, with
 * the convention
 *
 *     index(t) = sum_j t(s_j) * carrier^(k-1-j)
 *
 * for support s_0 < ... < s_{k-1}: the first support coordinate is the
 * most significant digit, radix carrier.  A 0-ary operation has a
 * one-entry table.
 *
 * Two operations are equal when support, carrier and table all agree
 * (extensional equality on the named coordinates).
 */
struct Operation {
  std::vector<int> support;
  int carrier = 1;
  std::vector<Element> table;

  int arity() const { return static_cast<int>(support.size()); }

  bool is_constant() const {
    for (Element v : table)
      if (v != table[0]) return false;
    return !table.empty();
  }

  bool operator==(const Operation&) const = default;
};

/* Assignment of elements to coordinates, sorted by coordinate. */
struct Tuple {
  std::vector<std::pair<int, Element>> entries;

  static Tuple from(std::initializer_list<std::pair<int, Element>> xs);
  /* Positional values over a support: value i goes to coordinate support[i]. */
  static Tuple over(const std::vector<int>& support, std::vector<Element> values);
};

/* carrier^arity with an overflow/size guard; throws std::runtime_error. */
std::size_t table_size(int carrier, int arity);

/* True when support is strictly increasing with nonnegative coordinates. */
bool valid_support(const std::vector<int>& support);

/* Full validity check; throws std::invalid_argument describing the defect. */
void validate_operation(const Operation& op);

/* Evaluate on a tuple whose coordinate set must cover the support. */
Element eval(const Operation& op, const Tuple& t);

/* Evaluate on positional arguments: args[j] is the value at support[j]. */
Element eval_positional(const Operation& op, std::span<const Element> args);

/*
 * Composition with a coordinate change sigma : support -> target.
 * sigma must be total on the support and land inside the target support;
 * the result has the given target support and satisfies
 *     result(f) = op(f o sigma)   for every assignment f of the target.
 * Non-surjective sigma introduces dummy coordinates; merging coordinates
 * identifies arguments.
 */
Operation substitute(const Operation& op,
                     const std::vector<std::pair<int, int>>& sigma,
                     const std::vector<int>& target);

/*
 * Composition op(inner_0, ..., inner_{k-1}) where all inner operations
 * share one support S; the result lives on S.  A 0-ary outer op yields
 * the constant on S.
 */
Operation compose(const Operation& op, std::span<const Operation> inners);

/*
 * Order-preserving renaming of the support onto {0, ..., k-1}.  The table
 * is unchanged (the renaming keeps coordinate order); dummy coordinates
 * are kept, not erased.
 */
Operation canonicalize(const Operation& op);

Operation projection(int carrier, int arity, int coord);
Operation constant_op(int carrier, int arity, Element value);
Operation identity_op(int carrier);

std::string to_string(const Operation& op);

/*
 * A finite algebra: a carrier size and a named family of operations on it.
 * Names are unique and nonempty; every operation lives on the same carrier.
 */
struct FiniteAlgebra {
  struct NamedOp {
    std::string name;
    Operation op;
  };

  int carrier = 1;
  std::vector<NamedOp> ops;

  const Operation* find(const std::string& name) const;
};

void validate_algebra(const FiniteAlgebra& a);

}  // namespace ua

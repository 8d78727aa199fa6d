#include "ua/clone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace ua {
namespace {

struct TableHash {
  std::size_t operator()(const std::vector<Element>& t) const {
    std::size_t h = 1469598103934665603ULL;
    for (Element v : t) h = (h ^ std::size_t(v)) * 1099511628211ULL;
    return h;
  }
};

/* Basic operations in canonical form, constants and 0-ary ops excluded. */
std::vector<Operation> canonical_basics(const FiniteAlgebra& a) {
  std::vector<Operation> out;
  for (const auto& n : a.ops)
    if (n.op.arity() > 0) out.push_back(canonicalize(n.op));
  return out;
}

/*
 * Fixpoint of {projections} u {constants from the pool} under composition
 * with the basic family, on tables of arity r.  Appends in deterministic
 * breadth-first order; levels[i] is the round that produced tables[i].
 */
void fixpoint_arity(int carrier, const std::vector<Operation>& basics, int r,
                    const std::vector<Element>& pool, std::size_t max_ops,
                    std::vector<std::vector<Element>>& tables,
                    std::vector<int>& levels) {
  const std::size_t len = table_size(carrier, r);
  std::unordered_set<std::vector<Element>, TableHash> seen;

  auto push = [&](std::vector<Element>&& t, int level) {
    if (seen.insert(t).second) {
      tables.push_back(std::move(t));
      levels.push_back(level);
      if (tables.size() > max_ops)
        throw std::runtime_error("clone fixpoint exceeded " +
                                 std::to_string(max_ops) + " operations at arity " +
                                 std::to_string(r));
    }
  };

  for (int j = 0; j < r; ++j) push(std::vector<Element>(projection(carrier, r, j).table), 0);
  for (Element c : pool) push(std::vector<Element>(len, c), 1);

  std::size_t old_start = 0;
  int round = 0;
  while (old_start < tables.size()) {
    const std::size_t cur = tables.size();
    ++round;
    for (const Operation& b : basics) {
      const int k = b.arity();
      // Tuples of member indices with at least one entry >= old_start
      // (so each composition is attempted exactly once across rounds),
      // partitioned by the first position p holding a new index:
      // positions < p range over [0, old_start), position p over
      // [old_start, cur), positions > p over [0, cur).
      for (int p = 0; p < k; ++p) {
        if (p > 0 && old_start == 0) break;  // cells p > 0 are empty then
        std::vector<std::size_t> lo(k, 0), hi(k, cur);
        for (int i = 0; i < p; ++i) hi[i] = old_start;
        lo[p] = old_start;

        std::vector<std::size_t> pick(lo);
        for (;;) {
          std::vector<Element> t(len);
          for (std::size_t idx = 0; idx < len; ++idx) {
            std::size_t bidx = 0;
            for (int i = 0; i < k; ++i)
              bidx = bidx * std::size_t(carrier) + std::size_t(tables[pick[i]][idx]);
            t[idx] = b.table[bidx];
          }
          push(std::move(t), round);
          int i = k - 1;
          while (i >= 0 && ++pick[i] == hi[i]) pick[i] = lo[i], --i;
          if (i < 0) break;
        }
      }
    }
    old_start = cur;
  }
}

}  // namespace

std::vector<Element> constant_pool(const FiniteAlgebra& a) {
  validate_algebra(a);
  std::set<Element> pool;
  for (const auto& n : a.ops)
    if (n.op.arity() == 0) pool.insert(n.op.table[0]);

  const std::vector<Operation> basics = canonical_basics(a);
  for (;;) {
    std::vector<Element> seed(pool.begin(), pool.end());
    std::vector<std::vector<Element>> tables;
    std::vector<int> levels;
    fixpoint_arity(a.carrier, basics, 1, seed, 1u << 20, tables, levels);
    std::size_t before = pool.size();
    for (const auto& t : tables) {
      bool constant = true;
      for (Element v : t) constant = constant && v == t[0];
      if (constant) pool.insert(t[0]);
    }
    if (pool.size() == before) break;
  }
  return {pool.begin(), pool.end()};
}

CloneSlice clone_upto(const FiniteAlgebra& a, int cap, const CloneLimits& limits) {
  validate_algebra(a);
  if (cap < 0) throw std::invalid_argument("arity cap must be nonnegative");

  CloneSlice s;
  s.algebra = a;
  s.carrier = a.carrier;
  s.arity_cap = cap;
  s.per_arity.resize(cap + 1);
  s.generation.resize(cap + 1);

  const std::vector<Element> pool = constant_pool(a);
  for (Element c : pool) {
    s.per_arity[0].push_back(constant_op(a.carrier, 0, c));
    s.generation[0].push_back(1);
  }

  const std::vector<Operation> basics = canonical_basics(a);
  for (int r = 1; r <= cap; ++r) {
    std::vector<std::vector<Element>> tables;
    std::vector<int> levels;
    fixpoint_arity(a.carrier, basics, r, pool, limits.max_ops_per_arity, tables, levels);

    std::vector<std::size_t> order(tables.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return tables[x] < tables[y];
    });

    Operation proto;
    proto.carrier = a.carrier;
    proto.support.resize(r);
    for (int j = 0; j < r; ++j) proto.support[j] = j;
    for (std::size_t i : order) {
      proto.table = tables[i];
      s.per_arity[r].push_back(proto);
      s.generation[r].push_back(levels[i]);
    }
  }
  return s;
}

FiniteAlgebra slice_as_algebra(const CloneSlice& s) {
  FiniteAlgebra a;
  a.carrier = s.carrier;
  for (int r = 0; r <= s.arity_cap; ++r)
    for (std::size_t i = 0; i < s.per_arity[r].size(); ++i)
      a.ops.push_back({"t" + std::to_string(r) + "_" + std::to_string(i),
                       s.per_arity[r][i]});
  return a;
}

namespace {

using CanonKey = std::pair<int, std::vector<Element>>;

std::set<CanonKey> canonical_keys(const FiniteAlgebra& a) {
  std::set<CanonKey> keys;
  for (const auto& n : a.ops) keys.insert({n.op.arity(), n.op.table});
  return keys;
}

bool has_key(const std::set<CanonKey>& keys, const Operation& op) {
  return keys.count({op.arity(), op.table}) != 0;
}

}  // namespace

bool is_unital(const FiniteAlgebra& a) {
  for (const auto& n : a.ops) {
    if (n.op.arity() != 1) continue;
    bool ident = true;
    for (Element v = 0; v < a.carrier; ++v) ident = ident && n.op.table[v] == v;
    if (ident) return true;
  }
  return false;
}

bool is_empty_regular(const FiniteAlgebra& a) {
  std::set<Element> zeroary;
  for (const auto& n : a.ops)
    if (n.op.arity() == 0) zeroary.insert(n.op.table[0]);
  for (const auto& n : a.ops)
    if (n.op.arity() > 0 && n.op.is_constant() && !zeroary.count(n.op.table[0]))
      return false;
  return true;
}

bool is_substitution_stable(const FiniteAlgebra& a, int cap) {
  validate_algebra(a);
  const std::set<CanonKey> keys = canonical_keys(a);
  for (const auto& n : a.ops) {
    const Operation op = canonicalize(n.op);
    const int k = op.arity();
    if (k == 0) {
      for (int e = 0; e <= cap; ++e)
        if (!has_key(keys, constant_op(a.carrier, e, op.table[0]))) return false;
      continue;
    }
    for (int e = 1; e <= cap; ++e) {
      // every map of the k support slots into e target slots
      std::vector<int> sigma(k, 0);
      for (;;) {
        Operation out;
        out.carrier = a.carrier;
        out.support.resize(e);
        for (int j = 0; j < e; ++j) out.support[j] = j;
        out.table.resize(table_size(a.carrier, e));
        std::vector<Element> digits(e), args(k);
        for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
          std::size_t rest = idx;
          for (int j = e - 1; j >= 0; --j) {
            digits[j] = static_cast<Element>(rest % a.carrier);
            rest /= a.carrier;
          }
          for (int j = 0; j < k; ++j) args[j] = digits[sigma[j]];
          out.table[idx] = eval_positional(op, args);
        }
        if (!has_key(keys, out)) return false;
        int i = k - 1;
        while (i >= 0 && ++sigma[i] == e) sigma[i--] = 0;
        if (i < 0) break;
      }
    }
  }
  return true;
}

bool is_composition_stable(const FiniteAlgebra& a, int cap) {
  validate_algebra(a);
  const std::set<CanonKey> keys = canonical_keys(a);

  // bucket the family by exact support; inners of a composition share one
  std::vector<std::pair<std::vector<int>, std::vector<const Operation*>>> buckets;
  for (const auto& n : a.ops) {
    if (!n.op.support.empty() && n.op.support.back() >= cap) continue;
    bool placed = false;
    for (auto& b : buckets)
      if (b.first == n.op.support) {
        b.second.push_back(&n.op);
        placed = true;
      }
    if (!placed) buckets.push_back({n.op.support, {&n.op}});
  }

  for (const auto& n : a.ops) {
    const int k = n.op.arity();
    if (k == 0) {
      for (int e = 0; e <= cap; ++e)
        if (!has_key(keys, constant_op(a.carrier, e, n.op.table[0]))) return false;
      continue;
    }
    for (const auto& [support, members] : buckets) {
      std::vector<std::size_t> pick(k, 0);
      for (;;) {
        std::vector<Operation> inners;
        inners.reserve(k);
        for (int i = 0; i < k; ++i) inners.push_back(*members[pick[i]]);
        if (!has_key(keys, canonicalize(compose(n.op, inners)))) return false;
        int i = k - 1;
        while (i >= 0 && ++pick[i] == members.size()) pick[i--] = 0;
        if (i < 0) break;
      }
    }
  }
  return true;
}

bool is_clone_upto(const FiniteAlgebra& a, int cap) {
  return is_unital(a) && is_empty_regular(a) && is_substitution_stable(a, cap) &&
         is_composition_stable(a, cap);
}

FiniteAlgebra empty_regularize(const FiniteAlgebra& a) {
  validate_algebra(a);
  std::set<Element> have;
  for (const auto& n : a.ops)
    if (n.op.arity() == 0) have.insert(n.op.table[0]);

  std::set<Element> missing;
  for (const auto& n : a.ops)
    if (n.op.arity() > 0 && n.op.is_constant() && !have.count(n.op.table[0]))
      missing.insert(n.op.table[0]);

  FiniteAlgebra out = a;
  for (Element v : missing) {
    std::string name = "c" + std::to_string(v);
    while (out.find(name)) name += "_";
    out.ops.push_back({name, constant_op(a.carrier, 0, v)});
  }
  return out;
}

}  // namespace ua

#include "ua/independence.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ua {

Verdict<DependentPoint> is_independent(const HullOperator& h, const Subset& b) {
  Verdict<DependentPoint> out;
  out.holds = true;
  for (Element x : b.elements()) {
    Subset rest = b;
    rest.remove(x);
    if (h(rest).contains(x)) {
      out.holds = false;
      out.witness = DependentPoint{x};
      return out;
    }
  }
  return out;
}

Verdict<StrongWitness> is_strongly_independent(const HullOperator& h,
                                               const Subset& b, int max_size) {
  const std::vector<int> elems = b.elements();
  const int k = static_cast<int>(elems.size());
  if (k > max_size)
    throw std::runtime_error("strong independence check refuses |B| = " +
                             std::to_string(k) + " (2^|B| hulls)");

  Verdict<StrongWitness> out;
  out.holds = true;
  MemoHull memo(h);

  const Subset empty(h.carrier_size);
  const Subset& hempty = memo(empty);
  for (Element x : elems)
    if (hempty.contains(x)) {
      out.holds = false;
      out.witness = StrongWitness{x, std::nullopt, x};
      return out;
    }

  auto subset_of_mask = [&](std::uint32_t mask) {
    Subset s(h.carrier_size);
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s.add(elems[i]);
    return s;
  };

  for (std::uint32_t m1 = 0; m1 < (1u << k); ++m1)
    for (std::uint32_t m2 = 0; m2 < (1u << k); ++m2) {
      const Subset b1 = subset_of_mask(m1), b2 = subset_of_mask(m2);
      const Subset lhs = memo(b1) & memo(b2);
      const Subset& rhs = memo(subset_of_mask(m1 & m2));
      if (!(lhs == rhs)) {
        // hulls of the pieces meet beyond the hull of the intersection
        Element p = 0;
        for (Element x = 0; x < h.carrier_size; ++x)
          if (lhs.contains(x) != rhs.contains(x)) {
            p = x;
            break;
          }
        out.holds = false;
        out.witness = StrongWitness{std::nullopt, std::make_pair(b1, b2), p};
        return out;
      }
    }
  return out;
}

Verdict<ExtensionWitness> is_free(const FiniteAlgebra& a, const Subset& b,
                                  const FreeBounds& bounds) {
  validate_algebra(a);
  const std::vector<int> elems = b.elements();
  const int k = static_cast<int>(elems.size());
  const int n = a.carrier;

  unsigned long long maps = 1, tuples = 0;
  for (int i = 0; i < k; ++i) {
    maps *= static_cast<unsigned long long>(n);
    if (maps > bounds.max_work) throw std::runtime_error("freeness check bound exceeded");
  }
  for (const auto& op : a.ops) {
    unsigned long long t = 1;
    for (int i = 0; i < op.op.arity(); ++i) t *= static_cast<unsigned long long>(k);
    tuples += t;
  }
  if (tuples * tuples > bounds.max_work / (maps ? maps : 1))
    throw std::runtime_error("freeness check bound exceeded");

  std::vector<int> pos(n, -1);
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;

  // every application of an operation to a tuple from B, with its value
  struct App {
    const Operation* op;
    std::vector<Element> args;  // positional, values drawn from B
    Element value;
  };
  std::vector<App> apps;
  for (const auto& nop : a.ops) {
    const int r = nop.op.arity();
    if (r > 0 && k == 0) continue;
    std::vector<std::size_t> pick(r, 0);
    for (;;) {
      App app;
      app.op = &nop.op;
      app.args.resize(r);
      for (int i = 0; i < r; ++i) app.args[i] = elems[pick[i]];
      app.value = eval_positional(nop.op, app.args);
      apps.push_back(std::move(app));
      int i = r - 1;
      while (i >= 0 && ++pick[i] == std::size_t(k)) pick[i--] = 0;
      if (i < 0) break;
    }
  }

  Verdict<ExtensionWitness> out;
  out.holds = true;
  std::vector<Element> f(k, 0), fx, fy;
  for (const App& ax : apps)
    for (const App& ay : apps) {
      if (ax.value != ay.value) continue;
      // agreeing applications must keep agreeing under every relabeling
      std::fill(f.begin(), f.end(), 0);
      for (;;) {
        fx.resize(ax.args.size());
        for (std::size_t i = 0; i < ax.args.size(); ++i) fx[i] = f[pos[ax.args[i]]];
        fy.resize(ay.args.size());
        for (std::size_t i = 0; i < ay.args.size(); ++i) fy[i] = f[pos[ay.args[i]]];
        if (eval_positional(*ax.op, fx) != eval_positional(*ay.op, fy)) {
          out.holds = false;
          out.witness = ExtensionWitness{*ax.op, *ay.op, ax.args, ay.args, f};
          return out;
        }
        int i = k - 1;
        while (i >= 0 && ++f[i] == n) f[i--] = 0;
        if (i < 0) break;
      }
    }
  return out;
}

namespace {

/* Core of the clone-freeness check over per-arity canonical buckets. */
Verdict<SeparationWitness> free_clone_core(
    const std::vector<std::vector<Operation>>& per_arity, int cap, const Subset& b) {
  Verdict<SeparationWitness> out;
  out.holds = true;
  const std::vector<int> elems = b.elements();
  const int k = static_cast<int>(elems.size());

  std::vector<Element> tuple;
  std::vector<int> value_owner;
  for (int r = 1; r <= cap && r <= k; ++r) {
    const auto& ops = per_arity[r];
    if (ops.size() < 2) continue;
    const int carrier = ops[0].carrier;

    // injective tuples over B, in lexicographic position order
    std::vector<int> idx(r, 0);
    std::vector<bool> used(k, false);
    // initialize to the first injective tuple 0,1,...,r-1
    for (int i = 0; i < r; ++i) idx[i] = i;

    auto advance = [&]() {
      // next injective tuple in lex order over positions
      for (int i = r - 1; i >= 0; --i) {
        std::fill(used.begin(), used.end(), false);
        for (int j = 0; j < i; ++j) used[idx[j]] = true;
        int v = idx[i] + 1;
        while (v < k && used[v]) ++v;
        if (v < k) {
          idx[i] = v;
          used[v] = true;
          for (int j = i + 1; j < r; ++j) {
            int w = 0;
            while (used[w]) ++w;
            idx[j] = w;
            used[w] = true;
          }
          return true;
        }
      }
      return false;
    };

    for (;;) {
      tuple.resize(r);
      for (int i = 0; i < r; ++i) tuple[i] = elems[idx[i]];
      value_owner.assign(carrier, -1);
      for (std::size_t o = 0; o < ops.size(); ++o) {
        const Element v = eval_positional(ops[o], tuple);
        if (value_owner[v] >= 0) {
          out.holds = false;
          out.witness = SeparationWitness{ops[value_owner[v]], ops[o], tuple};
          return out;
        }
        value_owner[v] = static_cast<int>(o);
      }
      if (!advance()) break;
    }
  }
  return out;
}

}  // namespace

Verdict<SeparationWitness> is_free_clone(const CloneSlice& s, const Subset& b) {
  return free_clone_core(s.per_arity, s.arity_cap, b);
}

Verdict<SeparationWitness> is_free_clone(const FiniteAlgebra& a, const Subset& b) {
  const int k = b.count();
  if (!is_clone_upto(a, k))
    throw std::runtime_error(
        "clone freeness requires a family closed as a clone up to arity " +
        std::to_string(k));
  std::vector<std::vector<Operation>> per_arity(k + 1);
  for (const auto& n : a.ops) {
    const Operation c = canonicalize(n.op);
    if (c.arity() > k) continue;
    auto& bucket = per_arity[c.arity()];
    if (std::find(bucket.begin(), bucket.end(), c) == bucket.end())
      bucket.push_back(c);
  }
  for (auto& bucket : per_arity)
    std::sort(bucket.begin(), bucket.end(),
              [](const Operation& x, const Operation& y) { return x.table < y.table; });
  return free_clone_core(per_arity, k, b);
}

Subset extend_to_maximal_independent(const HullOperator& h, const Subset& b) {
  if (!is_independent(h, b).holds)
    throw std::invalid_argument("extend_to_maximal_independent needs an independent base");
  Subset cur = b;
  for (Element x = 0; x < h.carrier_size; ++x) {
    if (cur.contains(x)) continue;
    Subset cand = cur;
    cand.add(x);
    if (is_independent(h, cand).holds) cur = cand;
  }
  return cur;
}

bool is_independence_algebra(const FiniteAlgebra& a,
                             const IndependenceAlgebraLimits& limits) {
  validate_algebra(a);
  const HullOperator h = subalgebra_hull(a);
  if (!check_exchange(h).holds) return false;

  const int cap = std::min(limits.max_subset_size, a.carrier);
  const CloneSlice slice = clone_upto(a, cap, limits.clone);

  if (a.carrier > 30)
    throw std::runtime_error("independence algebra check refuses carrier > 30");
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << a.carrier); ++mask) {
    Subset b = Subset::from_mask(a.carrier, mask);
    if (b.count() > limits.max_subset_size) continue;
    if (!is_independent(h, b).holds) continue;
    if (!is_free_clone(slice, b).holds) return false;
  }
  return true;
}

IndependenceReport analyze_independence(const FiniteAlgebra& a, const Subset& b,
                                        int clone_cap_limit) {
  IndependenceReport rep{b, {}, {}, std::nullopt};
  const HullOperator h = subalgebra_hull(a);
  rep.independent = is_independent(h, b);
  rep.strongly_independent = is_strongly_independent(h, b);
  if (b.count() <= clone_cap_limit) {
    try {
      rep.clone_free = is_free_clone(clone_upto(a, b.count()), b);
    } catch (const std::runtime_error&) {
      rep.clone_free = std::nullopt;  // slice exceeded its guard
    }
  }
  return rep;
}

bool verify_dependent_point(const HullOperator& h, const Subset& b, Element x) {
  if (!b.contains(x)) return false;
  Subset rest = b;
  rest.remove(x);
  return h(rest).contains(x);
}

bool verify_strong_witness(const HullOperator& h, const Subset& b,
                           const StrongWitness& w) {
  if (w.in_empty_hull) {
    return b.contains(*w.in_empty_hull) &&
           h(Subset(h.carrier_size)).contains(*w.in_empty_hull);
  }
  if (!w.pair) return false;
  const auto& [b1, b2] = *w.pair;
  if (!b1.subset_of(b) || !b2.subset_of(b)) return false;
  const Subset lhs = h(b1) & h(b2);
  const Subset rhs = h(b1 & b2);
  return lhs.contains(w.point) != rhs.contains(w.point);
}

bool verify_extension_witness(const FiniteAlgebra& a, const Subset& b,
                              const ExtensionWitness& w) {
  validate_algebra(a);
  const std::vector<int> elems = b.elements();
  if (w.f.size() != elems.size()) return false;
  std::vector<int> pos(a.carrier, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  for (Element v : w.x)
    if (!b.contains(v)) return false;
  for (Element v : w.y)
    if (!b.contains(v)) return false;
  if (eval_positional(w.alpha, w.x) != eval_positional(w.beta, w.y)) return false;
  std::vector<Element> fx(w.x.size()), fy(w.y.size());
  for (std::size_t i = 0; i < w.x.size(); ++i) fx[i] = w.f[pos[w.x[i]]];
  for (std::size_t i = 0; i < w.y.size(); ++i) fy[i] = w.f[pos[w.y[i]]];
  return eval_positional(w.alpha, fx) != eval_positional(w.beta, fy);
}

bool verify_separation_witness(const Subset& b, const SeparationWitness& w) {
  if (w.alpha.arity() != w.beta.arity() || w.alpha == w.beta) return false;
  if (w.tuple.size() != w.alpha.support.size()) return false;
  for (std::size_t i = 0; i < w.tuple.size(); ++i) {
    if (!b.contains(w.tuple[i])) return false;
    for (std::size_t j = i + 1; j < w.tuple.size(); ++j)
      if (w.tuple[i] == w.tuple[j]) return false;
  }
  return eval_positional(w.alpha, w.tuple) == eval_positional(w.beta, w.tuple);
}

}  // namespace ua

#include "ua/hull.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ua {

Subset algebra_hull_once(const FiniteAlgebra& a, const Subset& b) {
  if (b.universe() != a.carrier)
    throw std::invalid_argument("subset universe does not match the carrier");
  Subset out = b;
  const std::vector<int> members = b.elements();
  std::vector<Element> args;
  for (const auto& n : a.ops) {
    const int k = n.op.arity();
    if (k == 0) {
      out.add(n.op.table[0]);
      continue;
    }
    if (members.empty()) continue;
    args.assign(k, members[0]);
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
      for (int i = 0; i < k; ++i) args[i] = members[pick[i]];
      out.add(eval_positional(n.op, args));
      int i = k - 1;
      while (i >= 0 && ++pick[i] == members.size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

Subset close_under(const FiniteAlgebra& a, const Subset& b,
                   std::optional<Element> stop_at) {
  if (b.universe() != a.carrier)
    throw std::invalid_argument("subset universe does not match the carrier");
  Subset set = b;
  std::vector<Element> members = b.elements();

  auto add = [&](Element v) {
    if (!set.contains(v)) {
      set.add(v);
      members.push_back(v);
    }
  };
  for (const auto& n : a.ops)
    if (n.op.arity() == 0) add(n.op.table[0]);
  if (stop_at && set.contains(*stop_at)) return set;

  // Frontier closure: when member #p arrives, evaluate every tuple over
  // members[0..p] whose index multiset contains p, partitioned by the
  // first slot holding p.  Each tuple is visited exactly once across the
  // whole run, so generation stays at |result|^arity evaluations total.
  std::vector<Element> args;
  for (std::size_t p = 0; p < members.size(); ++p) {
    for (const auto& n : a.ops) {
      const int k = n.op.arity();
      if (k == 0) continue;
      args.resize(k);
      for (int slot = 0; slot < k; ++slot) {
        if (slot > 0 && p == 0) break;  // prefix slots need indices below p
        std::vector<std::size_t> lo(k, 0), hi(k, p + 1);
        for (int i = 0; i < slot; ++i) hi[i] = p;
        lo[slot] = p;

        std::vector<std::size_t> pick(lo);
        for (;;) {
          for (int i = 0; i < k; ++i) args[i] = members[pick[i]];
          Element v = eval_positional(n.op, args);
          add(v);
          if (stop_at && v == *stop_at) return set;
          int i = k - 1;
          while (i >= 0 && ++pick[i] == hi[i]) pick[i] = lo[i], --i;
          if (i < 0) break;
        }
      }
    }
  }
  return set;
}

Subset generated_subalgebra(const FiniteAlgebra& a, const Subset& b) {
  return close_under(a, b);
}

bool generates_element(const FiniteAlgebra& a, const Subset& b, Element x) {
  return close_under(a, b, x).contains(x);
}

HullOperator one_step_hull(FiniteAlgebra a) {
  validate_algebra(a);
  HullOperator h;
  h.carrier_size = a.carrier;
  h.map = [alg = std::move(a)](const Subset& b) { return algebra_hull_once(alg, b); };
  return h;
}

HullOperator subalgebra_hull(FiniteAlgebra a) {
  validate_algebra(a);
  HullOperator h;
  h.carrier_size = a.carrier;
  h.map = [alg = std::move(a)](const Subset& b) { return close_under(alg, b); };
  return h;
}

struct MemoHull::Impl {
  std::unordered_map<Subset, Subset, SubsetHash> cache;
};

MemoHull::MemoHull(const HullOperator& h)
    : h_(&h), impl_(std::make_shared<Impl>()) {}

const Subset& MemoHull::operator()(const Subset& b) {
  auto it = impl_->cache.find(b);
  if (it == impl_->cache.end()) it = impl_->cache.emplace(b, (*h_)(b)).first;
  return it->second;
}

namespace {

/* Visit subsets: every mask for small carriers, a seeded sample otherwise. */
template <class F>
void for_each_subset(const HullOperator& h, const HullCheckOptions& opts, F&& f) {
  const int n = h.carrier_size;
  if (n <= opts.exhaustive_bound) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
      if (!f(Subset::from_mask(n, mask))) return;
    return;
  }
  if (!opts.seed)
    throw std::runtime_error(
        "exhaustive bound exceeded (carrier " + std::to_string(n) +
        "); provide a sampling seed");
  std::mt19937_64 rng(*opts.seed);
  for (int i = 0; i < opts.samples; ++i) {
    Subset s(n);
    for (int x = 0; x < n; ++x)
      if (rng() & 1) s.add(x);
    if (!f(s)) return;
  }
}

}  // namespace

CheckOutcome<ClosureWitness> check_closure(const HullOperator& h,
                                           const HullCheckOptions& opts) {
  CheckOutcome<ClosureWitness> out;
  out.holds = true;
  MemoHull memo(h);
  for_each_subset(h, opts, [&](const Subset& a) {
    const Subset& ha = memo(a);
    if (!a.subset_of(ha) || !(memo(ha) == ha)) {
      out.holds = false;
      out.witness = ClosureWitness{a};
      return false;
    }
    return true;
  });
  return out;
}

CheckOutcome<ExchangeWitness> check_exchange(const HullOperator& h,
                                             const HullCheckOptions& opts) {
  CheckOutcome<ExchangeWitness> out;
  out.holds = true;
  MemoHull memo(h);
  const int n = h.carrier_size;
  for_each_subset(h, opts, [&](const Subset& a) {
    const Subset ha = memo(a);
    for (Element x = 0; x < n; ++x) {
      if (ha.contains(x)) continue;
      Subset ax = a;
      ax.add(x);
      const Subset hax = memo(ax);
      for (Element y = 0; y < n; ++y) {
        if (y == x || ha.contains(y)) continue;
        Subset ay = a;
        ay.add(y);
        if (memo(ay).contains(x) != hax.contains(y)) {
          out.holds = false;
          out.witness = ExchangeWitness{a, x, y};
          return false;
        }
      }
    }
    return true;
  });
  return out;
}

CheckOutcome<MonotoneWitness> check_monotone(const HullOperator& h,
                                             const HullCheckOptions& opts) {
  // Extensivity plus one-element steps imply A <= B => h(A) <= h(B) along
  // any chain, so checking single additions suffices on the full sweep.
  CheckOutcome<MonotoneWitness> out;
  out.holds = true;
  MemoHull memo(h);
  const int n = h.carrier_size;
  for_each_subset(h, opts, [&](const Subset& a) {
    const Subset& ha = memo(a);
    if (!a.subset_of(ha)) {
      out.holds = false;
      out.witness = MonotoneWitness{a, 0};
      return false;
    }
    for (Element x = 0; x < n; ++x) {
      if (a.contains(x)) continue;
      Subset ax = a;
      ax.add(x);
      if (!ha.subset_of(memo(ax))) {
        out.holds = false;
        out.witness = MonotoneWitness{a, x};
        return false;
      }
    }
    return true;
  });
  return out;
}

bool verify_exchange_violation(const HullOperator& h, const Subset& a, Element x,
                               Element y) {
  const Subset ha = h(a);
  if (ha.contains(x) || ha.contains(y) || x == y) return false;
  Subset ax = a, ay = a;
  ax.add(x);
  ay.add(y);
  return h(ay).contains(x) != h(ax).contains(y);
}

bool is_matroid_type(const HullOperator& h, const HullCheckOptions& opts) {
  return check_closure(h, opts).holds && check_exchange(h, opts).holds;
}

}  // namespace ua

#include "ua/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "ua/hull.hpp"
#include "ua/subset.hpp"

namespace ua {

Element GroupPresentation::mul(Element a, Element b) const {
  const Operation* m = algebra.find("mul");
  return m->table[static_cast<std::size_t>(a) * algebra.carrier + b];
}

Element GroupPresentation::inv(Element a) const {
  return algebra.find("inv")->table[a];
}

Element GroupPresentation::identity() const { return algebra.find("e")->table[0]; }

void validate_group(const GroupPresentation& g) {
  validate_algebra(g.algebra);
  const int n = g.algebra.carrier;
  const Operation* mul = g.algebra.find("mul");
  const Operation* inv = g.algebra.find("inv");
  const Operation* e = g.algebra.find("e");
  if (!mul || mul->arity() != 2 || !inv || inv->arity() != 1 || !e || e->arity() != 0)
    throw std::runtime_error("group needs mul/2, inv/1, e/0");
  if (static_cast<int>(g.labels.size()) != n)
    throw std::runtime_error("group needs one label per element");

  const Element* T = mul->table.data();
  const Element id = e->table[0];
  for (Element a = 0; a < n; ++a) {
    if (T[std::size_t(id) * n + a] != a || T[std::size_t(a) * n + id] != a)
      throw std::runtime_error("identity axiom fails at element " + std::to_string(a));
    const Element ai = inv->table[a];
    if (T[std::size_t(a) * n + ai] != id || T[std::size_t(ai) * n + a] != id)
      throw std::runtime_error("inverse axiom fails at element " + std::to_string(a));
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = T[std::size_t(a) * n + b];
      const Element* Tb = T + std::size_t(b) * n;
      const Element* Tab = T + std::size_t(ab) * n;
      const Element* Ta = T + std::size_t(a) * n;
      for (Element c = 0; c < n; ++c)
        if (Tab[c] != Ta[Tb[c]])
          throw std::runtime_error("associativity fails at (" + std::to_string(a) +
                                   "," + std::to_string(b) + "," + std::to_string(c) +
                                   ")");
    }
  }
}

GroupPresentation cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group needs n >= 1");
  GroupPresentation g;
  g.algebra.carrier = n;
  Operation mul{{0, 1}, n, std::vector<Element>(std::size_t(n) * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul.table[std::size_t(a) * n + b] = (a + b) % n;
  Operation inv{{0}, n, std::vector<Element>(n)};
  for (int a = 0; a < n; ++a) inv.table[a] = (n - a) % n;
  g.algebra.ops = {{"mul", std::move(mul)},
                   {"inv", std::move(inv)},
                   {"e", constant_op(n, 0, 0)}};
  for (int a = 0; a < n; ++a) g.labels.push_back(std::to_string(a));
  validate_group(g);
  return g;
}

FiniteAlgebra linear_algebra_f2(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("linear_algebra_f2 needs 0 <= k <= 3");
  const int n = 1 << k;
  FiniteAlgebra a;
  a.carrier = n;
  Operation add{{0, 1}, n, std::vector<Element>(std::size_t(n) * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) add.table[std::size_t(x) * n + y] = x ^ y;
  a.ops = {{"add", std::move(add)}, {"zero", constant_op(n, 0, 0)}};
  validate_algebra(a);
  return a;
}

std::vector<std::vector<int>> f2_bases(int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("f2_bases needs 1 <= k <= 3");
  const int n = 1 << k;
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);

  auto spans = [&](const std::vector<int>& vs) {
    std::uint32_t span = 1;  // contains 0
    for (int v : vs) {
      if (span >> v & 1) return false;
      std::uint32_t next = span;
      for (int x = 0; x < n; ++x)
        if (span >> x & 1) next |= std::uint32_t(1) << (x ^ v);
      span = next;
    }
    return span == (std::uint32_t(1) << n) - 1;
  };

  // ascending combinations of k nonzero vectors
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  for (;;) {
    if (spans(pick)) out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - 1 - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

namespace {

int mat_rank(std::uint32_t code, int k) {
  std::uint32_t rows[3];
  for (int i = 0; i < k; ++i) rows[i] = (code >> (i * k)) & ((1u << k) - 1);
  int rank = 0;
  for (int j = 0; j < k; ++j) {
    int pivot = -1;
    for (int i = rank; i < k; ++i)
      if (rows[i] >> j & 1) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < k; ++i)
      if (i != rank && (rows[i] >> j & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

int apply_code(std::uint32_t code, int k, int v) {
  int out = 0;
  for (int i = 0; i < k; ++i) {
    const std::uint32_t row = (code >> (i * k)) & ((1u << k) - 1);
    out |= (__builtin_popcount(row & std::uint32_t(v)) & 1) << i;
  }
  return out;
}

std::uint32_t mul_code(std::uint32_t f, std::uint32_t g, int k) {
  std::uint32_t out = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int bit = 0;
      for (int l = 0; l < k; ++l)
        bit ^= (f >> (i * k + l) & 1) & (g >> (l * k + j) & 1);
      out |= std::uint32_t(bit) << (i * k + j);
    }
  return out;
}

}  // namespace

Element SemidirectGroup::encode(int v, int mat) const {
  return v * static_cast<int>(gl.size()) + mat;
}

std::pair<int, int> SemidirectGroup::decode(Element g) const {
  const int m = static_cast<int>(gl.size());
  return {g / m, g % m};
}

Element SemidirectGroup::embed(int v) const { return encode(v, id_index); }

int SemidirectGroup::apply(int mat, int v) const { return apply_code(gl[mat], k, v); }

int SemidirectGroup::mat_mul(int f, int g) const {
  const std::uint32_t code = mul_code(gl[f], gl[g], k);
  return static_cast<int>(std::lower_bound(gl.begin(), gl.end(), code) - gl.begin());
}

int SemidirectGroup::mat_inv(int f) const {
  for (int g = 0; g < static_cast<int>(gl.size()); ++g)
    if (mat_mul(f, g) == id_index) return g;
  throw std::logic_error("matrix without inverse in GL list");
}

SemidirectGroup semidirect_group(int k) {
  if (k != 2 && k != 3) throw std::invalid_argument("semidirect_group needs k in {2,3}");
  SemidirectGroup sg;
  sg.k = k;
  for (std::uint32_t code = 0; code < (1u << (k * k)); ++code)
    if (mat_rank(code, k) == k) sg.gl.push_back(code);
  std::uint32_t id_code = 0;
  for (int i = 0; i < k; ++i) id_code |= std::uint32_t(1) << (i * k + i);
  sg.id_index = static_cast<int>(
      std::lower_bound(sg.gl.begin(), sg.gl.end(), id_code) - sg.gl.begin());

  const int m = static_cast<int>(sg.gl.size());
  const int nv = 1 << k;
  const int n = nv * m;

  std::vector<int> act(std::size_t(m) * nv);  // matrix action, per (mat, v)
  for (int f = 0; f < m; ++f)
    for (int v = 0; v < nv; ++v) act[std::size_t(f) * nv + v] = apply_code(sg.gl[f], k, v);
  std::vector<int> mprod(std::size_t(m) * m);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const std::uint32_t code = mul_code(sg.gl[f], sg.gl[g], k);
      mprod[std::size_t(f) * m + g] = static_cast<int>(
          std::lower_bound(sg.gl.begin(), sg.gl.end(), code) - sg.gl.begin());
    }
  std::vector<int> minv(m, -1);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (mprod[std::size_t(f) * m + g] == sg.id_index) {
        minv[f] = g;
        break;
      }

  Operation mul{{0, 1}, n, std::vector<Element>(std::size_t(n) * n)};
  for (int a = 0; a < n; ++a) {
    const int va = a / m, fa = a % m;
    for (int b = 0; b < n; ++b) {
      const int vb = b / m, fb = b % m;
      const int v = va ^ act[std::size_t(fa) * nv + vb];
      mul.table[std::size_t(a) * n + b] = v * m + mprod[std::size_t(fa) * m + fb];
    }
  }
  Operation inv{{0}, n, std::vector<Element>(n)};
  for (int a = 0; a < n; ++a) {
    const int va = a / m, fi = minv[a % m];
    inv.table[a] = act[std::size_t(fi) * nv + va] * m + fi;
  }

  sg.group.algebra.carrier = n;
  sg.group.algebra.ops = {{"mul", std::move(mul)},
                          {"inv", std::move(inv)},
                          {"e", constant_op(n, 0, sg.embed(0))}};
  for (int v = 0; v < nv; ++v)
    for (int f = 0; f < m; ++f)
      sg.group.labels.push_back("(" + std::to_string(v) + ",f" + std::to_string(f) + ")");
  validate_group(sg.group);
  return sg;
}

bool check_conjugation_identities(int k) {
  const SemidirectGroup sg = semidirect_group(k);
  const GroupPresentation& G = sg.group;
  for (Element g = 0; g < sg.order(); ++g) {
    const int f = sg.decode(g).second;
    const int fi = sg.mat_inv(f);
    const Element gi = G.inv(g);
    for (int v = 0; v < sg.vectors(); ++v) {
      if (G.mul(G.mul(g, sg.embed(v)), gi) != sg.embed(sg.apply(f, v))) return false;
      if (G.mul(G.mul(gi, sg.embed(v)), g) != sg.embed(sg.apply(fi, v))) return false;
    }
  }
  return true;
}

namespace {

/* Some member of S lies in the subgroup generated by the others. */
bool dependent_full(const FiniteAlgebra& a, const Subset& s) {
  for (Element x : s.elements()) {
    Subset rest = s;
    rest.remove(x);
    if (generates_element(a, rest, x)) return true;
  }
  return false;
}

}  // namespace

BasisMaximalityReport check_basis_maximality(int k) {
  const SemidirectGroup sg = semidirect_group(k);
  const FiniteAlgebra& alg = sg.group.algebra;
  const GroupPresentation& G = sg.group;
  const auto bases = f2_bases(k);
  const int nv = sg.vectors();

  BasisMaximalityReport rep;
  rep.k = k;
  rep.group_order = sg.order();
  rep.basis_count = static_cast<int>(bases.size());

  auto basis_name = [&](const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
      s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
  };

  for (const auto& basis : bases) {
    Subset em(sg.order());
    for (int v : basis) em.add(sg.embed(v));

    // the basis stays independent under the subgroup hull of G
    for (int v : basis) {
      ++rep.cases_checked;
      Subset rest = em;
      rest.remove(sg.embed(v));
      if (generates_element(alg, rest, sg.embed(v)))
        rep.deviations.push_back("basis " + basis_name(basis) + ": vector " +
                                 std::to_string(v) + " generated by the rest");
    }

    const Subset span = close_under(alg, em);  // the embedded copy of V

    // decomposition of each vector over this basis, as a bit mask of picks
    std::vector<int> decomp(nv, -1);
    for (int mask = 0; mask < (1 << k); ++mask) {
      int x = 0;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) x ^= basis[std::size_t(i)];
      decomp[x] = mask;
    }

    for (Element g = 0; g < sg.order(); ++g) {
      if (em.contains(g)) continue;
      ++rep.cases_checked;
      const int f = sg.decode(g).second;
      bool dependent;
      if (f == sg.id_index) {
        dependent = span.contains(g);  // g is a vector, so the basis spans it
      } else {
        int a = -1;
        for (int v : basis)
          if (sg.apply(f, v) != v) {
            a = v;
            break;
          }
        dependent = false;
        if (a >= 0) {
          const int fa = sg.apply(f, a);
          const int fmask = decomp[fa];
          int apos = 0;
          while (basis[apos] != a) ++apos;
          Element w, expected;
          if (!(fmask >> apos & 1)) {
            // v = a: evaluate g^-1 (sum F) g, the conjugation pulls f(a) back to a
            w = G.mul(G.mul(G.inv(g), sg.embed(fa)), g);
            expected = sg.embed(a);
          } else {
            // v in F minus {a}: evaluate g a g^-1 (sum F_v)^-1 = f(a) - sum F_v
            int vpos = -1;
            for (int i = 0; i < k; ++i)
              if ((fmask >> i & 1) && i != apos) {
                vpos = i;
                break;
              }
            if (vpos < 0) {
              w = -1;
              expected = -2;  // forces the brute-force fallback below
            } else {
              const int v = basis[std::size_t(vpos)];
              const int sum_fv = fa ^ v;
              w = G.mul(G.mul(G.mul(g, sg.embed(a)), G.inv(g)),
                        G.inv(sg.embed(sum_fv)));
              expected = sg.embed(v);
            }
          }
          dependent = (w == expected);
        }
        if (!dependent) {
          // the witness word failed; decide honestly before reporting
          Subset with_g = em;
          with_g.add(g);
          dependent = dependent_full(alg, with_g);
        }
      }
      if (!dependent)
        rep.deviations.push_back("basis " + basis_name(basis) + " + " +
                                 G.labels[std::size_t(g)] +
                                 " stays independent in G");
    }
  }
  return rep;
}

FiniteAlgebra gould_algebra() {
  FiniteAlgebra a;
  a.carrier = 2;
  a.ops = {{"mul", Operation{{0, 1}, 2, {0, 0, 0, 1}}}};
  validate_algebra(a);
  return a;
}

FiniteAlgebra constant_pair_algebra(int n) {
  if (n < 2) throw std::invalid_argument("constant_pair_algebra needs n >= 2");
  FiniteAlgebra a;
  a.carrier = n;
  a.ops = {{"alpha", constant_op(n, 1, 0)}, {"beta", constant_op(n, 0, 0)}};
  validate_algebra(a);
  return a;
}

}  // namespace ua

#include "ua/free_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ua {

namespace {

/* Next injective index tuple over {0..m-1} in lexicographic order. */
bool next_injective(std::vector<int>& idx, int m) {
  const int r = static_cast<int>(idx.size());
  std::vector<bool> used(std::size_t(m), false);
  for (int i = r - 1; i >= 0; --i) {
    std::fill(used.begin(), used.end(), false);
    for (int j = 0; j < i; ++j) used[std::size_t(idx[j])] = true;
    int v = idx[std::size_t(i)] + 1;
    while (v < m && used[std::size_t(v)]) ++v;
    if (v < m) {
      idx[std::size_t(i)] = v;
      used[std::size_t(v)] = true;
      for (int j = i + 1; j < r; ++j) {
        int w = 0;
        while (used[std::size_t(w)]) ++w;
        idx[std::size_t(j)] = w;
        used[std::size_t(w)] = true;
      }
      return true;
    }
  }
  return false;
}

/*
 * The certificate's triple order: arity ascending, then alpha index, then
 * beta index, then u lexicographic.  Shared by the builder and the
 * checker so the stored list can be compared entry by entry.
 */
template <class Fn>
void enumerate_triples(const CloneSlice& s, int m, Fn&& fn) {
  for (int r = 1; r <= s.arity_cap && r <= m; ++r) {
    const auto& ops = s.per_arity[std::size_t(r)];
    const int count = static_cast<int>(ops.size());
    for (int ai = 0; ai < count; ++ai)
      for (int bi = 0; bi < count; ++bi) {
        if (bi == ai) continue;
        std::vector<int> u(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) u[std::size_t(i)] = i;
        do {
          fn(r, ai, bi, u);
        } while (next_injective(u, m));
      }
  }
}

/* Decode a flat table index into a tuple, first digit most significant. */
std::vector<Element> decode_tuple(std::size_t index, int carrier, int r) {
  std::vector<Element> p(static_cast<std::size_t>(r));
  for (int i = r - 1; i >= 0; --i) {
    p[std::size_t(i)] = static_cast<Element>(index % std::size_t(carrier));
    index /= std::size_t(carrier);
  }
  return p;
}

std::size_t first_difference(const Operation& a, const Operation& b) {
  std::size_t d = 0;
  while (d < a.table.size() && a.table[d] == b.table[d]) ++d;
  return d;
}

}  // namespace

FreeSetResult build_free_set(const FiniteAlgebra& a, int m, int cap,
                             const CloneLimits& limits) {
  validate_algebra(a);
  if (a.carrier < 2)
    throw std::runtime_error("free-set construction needs carrier >= 2");
  if (m < 2) throw std::invalid_argument("free-set construction needs m >= 2");
  if (cap < 0 || cap > m)
    throw std::invalid_argument("free-set construction needs 0 <= cap <= m");

  const CloneSlice s = clone_upto(a, cap, limits);

  FreeSetCertificate cert;
  cert.base = a;
  cert.cap = cap;
  cert.m = m;
  cert.default_value = 0;

  enumerate_triples(s, m, [&](int r, int ai, int bi, const std::vector<int>& u) {
    const Operation& alpha = s.per_arity[std::size_t(r)][std::size_t(ai)];
    const Operation& beta = s.per_arity[std::size_t(r)][std::size_t(bi)];
    TripleEntry e;
    e.r = r;
    e.alpha_idx = ai;
    e.beta_idx = bi;
    e.u = u;
    e.witness_p = decode_tuple(first_difference(alpha, beta), a.carrier, r);
    cert.triples.push_back(std::move(e));
  });

  const int t = static_cast<int>(cert.triples.size());
  cert.generators.assign(std::size_t(m),
                         PowerElement(std::size_t(t + m), cert.default_value));
  for (int x = 0; x < t; ++x) {
    const TripleEntry& e = cert.triples[std::size_t(x)];
    for (int i = 0; i < e.r; ++i)
      cert.generators[std::size_t(e.u[std::size_t(i)])][std::size_t(x)] =
          e.witness_p[std::size_t(i)];
  }

  FreeSetResult res;
  res.x_size = t + m;
  res.functions = cert.generators;
  res.certificate = std::move(cert);
  return res;
}

FreeInPowerVerdict verify_free_in_power(const CloneSlice& s,
                                        const std::vector<PowerElement>& family) {
  FreeInPowerVerdict out;
  out.holds = true;

  std::vector<PowerElement> fd;  // the family as a set, first occurrences kept
  for (const auto& f : family)
    if (std::find(fd.begin(), fd.end(), f) == fd.end()) fd.push_back(f);
  for (const auto& f : fd)
    if (f.size() != fd.front().size())
      throw std::invalid_argument("family members must share one x_size");

  const int fsize = static_cast<int>(fd.size());
  const int xs = fd.empty() ? 0 : static_cast<int>(fd.front().size());

  std::vector<Element> at;
  for (int r = 1; r <= s.arity_cap && r <= fsize; ++r) {
    const auto& ops = s.per_arity[std::size_t(r)];
    if (ops.size() < 2) continue;
    std::vector<int> xi(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) xi[std::size_t(i)] = i;
    do {
      // value vector of each op along the coordinates; a repeat is a witness
      std::map<std::vector<Element>, std::size_t> first_owner;
      std::vector<Element> vec(static_cast<std::size_t>(xs));
      at.resize(std::size_t(r));
      for (std::size_t o = 0; o < ops.size(); ++o) {
        for (int x = 0; x < xs; ++x) {
          for (int i = 0; i < r; ++i)
            at[std::size_t(i)] = fd[std::size_t(xi[std::size_t(i)])][std::size_t(x)];
          vec[std::size_t(x)] = eval_positional(ops[o], at);
        }
        const auto [it, inserted] = first_owner.try_emplace(vec, o);
        if (!inserted) {
          out.holds = false;
          out.witness = LiftAgreementWitness{ops[it->second], ops[o], xi};
          return out;
        }
      }
    } while (next_injective(xi, fsize));
  }
  return out;
}

CertificateCheck check_certificate(const FreeSetCertificate& cert,
                                   const CloneLimits& limits) {
  CertificateCheck out;
  auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };

  try {
    validate_algebra(cert.base);
  } catch (const std::exception& e) {
    fail(std::string("base algebra: ") + e.what());
    return out;
  }
  if (cert.base.carrier < 2) fail("base: carrier below 2");
  if (cert.m < 2) fail("parameters: m below 2");
  if (cert.cap < 0 || cert.cap > cert.m) fail("parameters: cap outside [0, m]");
  if (cert.default_value < 0 || cert.default_value >= cert.base.carrier)
    fail("parameters: default value outside the carrier");
  if (!out.failures.empty()) return out;

  CloneSlice s;
  try {
    s = clone_upto(cert.base, cert.cap, limits);
  } catch (const std::exception& e) {
    fail(std::string("clone slice: ") + e.what());
    return out;
  }

  // the stored triple list must be the canonical enumeration, verbatim
  std::size_t pos = 0;
  bool order_reported = false;
  enumerate_triples(s, cert.m, [&](int r, int ai, int bi, const std::vector<int>& u) {
    if (pos < cert.triples.size() && !order_reported) {
      const TripleEntry& e = cert.triples[pos];
      if (e.r != r || e.alpha_idx != ai || e.beta_idx != bi || e.u != u) {
        fail("triples: entry " + std::to_string(pos) +
             " deviates from the canonical enumeration");
        order_reported = true;
      }
    }
    ++pos;
  });
  if (pos != cert.triples.size())
    fail("triples: expected " + std::to_string(pos) + " entries, certificate has " +
         std::to_string(cert.triples.size()));

  const int t = static_cast<int>(cert.triples.size());
  const int xs = cert.x_size();

  // witnesses: in range, separating, lexicographically least
  for (int x = 0; x < t; ++x) {
    const TripleEntry& e = cert.triples[std::size_t(x)];
    const std::string where = "triple " + std::to_string(x);
    if (e.r < 1 || e.r > cert.cap ||
        e.alpha_idx < 0 ||
        std::size_t(e.alpha_idx) >= s.per_arity[std::size_t(e.r)].size() ||
        e.beta_idx < 0 ||
        std::size_t(e.beta_idx) >= s.per_arity[std::size_t(e.r)].size() ||
        e.alpha_idx == e.beta_idx) {
      fail(where + ": operation indices out of range");
      continue;
    }
    if (static_cast<int>(e.u.size()) != e.r ||
        std::any_of(e.u.begin(), e.u.end(),
                    [&](int j) { return j < 0 || j >= cert.m; })) {
      fail(where + ": u is not a tuple into the generator range");
      continue;
    }
    bool inj = true;
    for (std::size_t i = 0; i < e.u.size() && inj; ++i)
      for (std::size_t j = i + 1; j < e.u.size(); ++j)
        if (e.u[i] == e.u[j]) inj = false;
    if (!inj) {
      fail(where + ": u is not injective");
      continue;
    }
    const Operation& alpha = s.per_arity[std::size_t(e.r)][std::size_t(e.alpha_idx)];
    const Operation& beta = s.per_arity[std::size_t(e.r)][std::size_t(e.beta_idx)];
    if (static_cast<int>(e.witness_p.size()) != e.r ||
        std::any_of(e.witness_p.begin(), e.witness_p.end(), [&](Element v) {
          return v < 0 || v >= cert.base.carrier;
        })) {
      fail(where + ": witness is not a tuple over the carrier");
      continue;
    }
    if (eval_positional(alpha, e.witness_p) == eval_positional(beta, e.witness_p)) {
      fail(where + ": witness does not separate the operation pair");
      continue;
    }
    const auto least = decode_tuple(first_difference(alpha, beta),
                                    cert.base.carrier, e.r);
    if (e.witness_p != least)
      fail(where + ": witness is not the lexicographically least separator");
  }

  // generator tables: witness cells, default cells, pattern block
  if (static_cast<int>(cert.generators.size()) != cert.m) {
    fail("generators: expected " + std::to_string(cert.m) + " functions, found " +
         std::to_string(cert.generators.size()));
    out.ok = false;
    return out;
  }
  for (int j = 0; j < cert.m; ++j)
    if (static_cast<int>(cert.generators[std::size_t(j)].size()) != xs) {
      fail("generators: function " + std::to_string(j) + " has wrong length");
      out.ok = false;
      return out;
    }
  for (int j = 0; j < cert.m; ++j)
    for (Element v : cert.generators[std::size_t(j)])
      if (v < 0 || v >= cert.base.carrier) {
        fail("generators: function " + std::to_string(j) +
             " holds a value outside the carrier");
        out.ok = false;
        return out;
      }
  for (int x = 0; x < t; ++x) {
    const TripleEntry& e = cert.triples[std::size_t(x)];
    if (static_cast<int>(e.u.size()) != e.r ||
        static_cast<int>(e.witness_p.size()) != e.r)
      continue;  // already reported above
    std::vector<bool> in_u(std::size_t(cert.m), false);
    bool bad_u = false;
    for (int i = 0; i < e.r; ++i) {
      const int j = e.u[std::size_t(i)];
      if (j < 0 || j >= cert.m) {
        bad_u = true;
        break;
      }
      in_u[std::size_t(j)] = true;
      if (cert.generators[std::size_t(j)][std::size_t(x)] != e.witness_p[std::size_t(i)])
        fail("generator table: f_" + std::to_string(j) + " at triple " +
             std::to_string(x) + " does not carry its witness value");
    }
    if (bad_u) continue;
    for (int j = 0; j < cert.m; ++j)
      if (!in_u[std::size_t(j)] &&
          cert.generators[std::size_t(j)][std::size_t(x)] != cert.default_value)
        fail("generator table: f_" + std::to_string(j) + " at triple " +
             std::to_string(x) + " is not the default value");
  }
  for (int j = 0; j < cert.m; ++j)
    for (int j2 = 0; j2 < cert.m; ++j2)
      if (cert.generators[std::size_t(j)][std::size_t(t + j2)] != cert.default_value)
        fail("pattern block: f_" + std::to_string(j) + " at pattern point " +
             std::to_string(j2) + " is not the default value");

  // pairwise distinctness through the projection-pair triples
  if (cert.cap >= 2) {
    const auto& binary = s.per_arity[2];
    const auto find_op = [&](const Operation& want) {
      for (std::size_t i = 0; i < binary.size(); ++i)
        if (binary[i] == want) return static_cast<int>(i);
      return -1;
    };
    const int pr0 = find_op(projection(cert.base.carrier, 2, 0));
    const int pr1 = find_op(projection(cert.base.carrier, 2, 1));
    if (pr0 < 0 || pr1 < 0) {
      fail("distinctness: binary projections missing from the slice");
    } else {
      for (int j = 0; j < cert.m; ++j)
        for (int j2 = j + 1; j2 < cert.m; ++j2) {
          int found = -1;
          for (int x = 0; x < t && found < 0; ++x) {
            const TripleEntry& e = cert.triples[std::size_t(x)];
            if (e.r == 2 && e.alpha_idx == pr0 && e.beta_idx == pr1 &&
                e.u == std::vector<int>{j, j2})
              found = x;
          }
          if (found < 0)
            fail("distinctness: no projection-pair triple for generators " +
                 std::to_string(j) + "," + std::to_string(j2));
          else if (cert.generators[std::size_t(j)][std::size_t(found)] ==
                   cert.generators[std::size_t(j2)][std::size_t(found)])
            fail("distinctness: generators " + std::to_string(j) + "," +
                 std::to_string(j2) + " agree at their separating triple");
        }
    }
  }

  const auto freeness = verify_free_in_power(s, cert.generators);
  if (!freeness.holds)
    fail("freeness: two lifted operations agree on the generator family");

  out.ok = out.failures.empty();
  return out;
}

}  // namespace ua

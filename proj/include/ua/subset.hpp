#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ua {

/* Subset of a finite carrier {0, ..., universe-1}, stored as packed bits. */
class Subset {
public:
  Subset() = default;
  explicit Subset(int universe)
      : universe_(universe), bits_((universe + 63) / 64, 0) {}

  static Subset of(int universe, std::initializer_list<int> xs) {
    Subset s(universe);
    for (int x : xs) s.add(x);
    return s;
  }
  static Subset full(int universe) {
    Subset s(universe);
    for (int x = 0; x < universe; ++x) s.add(x);
    return s;
  }
  /* Decode the low `universe` bits of a mask; handy for exhaustive sweeps. */
  static Subset from_mask(int universe, std::uint64_t mask) {
    Subset s(universe);
    for (int x = 0; x < universe && x < 64; ++x)
      if (mask >> x & 1) s.add(x);
    return s;
  }

  int universe() const { return universe_; }
  bool contains(int x) const {
    return x >= 0 && x < universe_ && (bits_[x / 64] >> (x % 64) & 1);
  }
  void add(int x) { bits_[x / 64] |= std::uint64_t(1) << (x % 64); }
  void remove(int x) { bits_[x / 64] &= ~(std::uint64_t(1) << (x % 64)); }

  int count() const {
    int c = 0;
    for (auto w : bits_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  bool subset_of(const Subset& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  Subset operator|(const Subset& o) const {
    Subset r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
    return r;
  }
  Subset operator&(const Subset& o) const {
    Subset r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
    return r;
  }
  Subset complement() const {
    Subset r(universe_);
    for (int x = 0; x < universe_; ++x)
      if (!contains(x)) r.add(x);
    return r;
  }

  bool operator==(const Subset& o) const {
    return universe_ == o.universe_ && bits_ == o.bits_;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int x = 0; x < universe_; ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  /* Low 64 bits as a mask (enough for every exhaustive battery we run). */
  std::uint64_t mask() const { return bits_.empty() ? 0 : bits_[0]; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : elements()) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    return s + "}";
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>()(universe_);
    for (auto w : bits_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>()(w);
    return h;
  }

private:
  int universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace ua

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace lhg {

// Flat dynamic bitset over 64-bit words. All binary operations require equal
// capacity; this is asserted, not checked, since sets always belong to one
// fixed vertex/edge universe.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= 1ull << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(1ull << (i & 63));
  }
  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int count_and(const Bitset& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // set difference
  Bitset& operator-=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  // lowest set bit, -1 when empty
  int find_first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i)
      for (uint64_t x = w_[i]; x; x &= x - 1) f(int(i * 64) + std::countr_zero(x));
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  static Bitset of(int nbits, std::initializer_list<int> bits) {
    Bitset b(nbits);
    for (int i : bits) b.set(i);
    return b;
  }

  bool operator==(const Bitset&) const = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// A Bitset whose indices are vertices of one specific Graph.
using VertexSet = Bitset;

}  // namespace lhg

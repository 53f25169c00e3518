#pragma once

#include <cstdint>
#include <vector>

namespace tightgraphs {

// Fixed-size bitset sized at runtime. Adjacency rows use this so neighbor
// intersections run word-parallel.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const;
  bool any() const;

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  // this &= ~o
  Bitset& and_not(const Bitset& o);

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset& o) const = default;

  static int intersection_count(const Bitset& a, const Bitset& b);
  static int intersection_count(const Bitset& a, const Bitset& b, const Bitset& c);

  // first set bit at index >= from, or -1
  int next_set_bit(int from) const;

  std::vector<int> to_vector() const;

 private:
  int bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace tightgraphs

#include "tightgraphs/bitset.hpp"

#include <bit>

namespace tightgraphs {

int Bitset::count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Bitset::any() const {
  for (uint64_t w : words_)
    if (w) return true;
  return false;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::and_not(const Bitset& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

int Bitset::intersection_count(const Bitset& a, const Bitset& b) {
  int c = 0;
  for (size_t i = 0; i < a.words_.size(); ++i) c += std::popcount(a.words_[i] & b.words_[i]);
  return c;
}

int Bitset::intersection_count(const Bitset& a, const Bitset& b, const Bitset& c) {
  int n = 0;
  for (size_t i = 0; i < a.words_.size(); ++i)
    n += std::popcount(a.words_[i] & b.words_[i] & c.words_[i]);
  return n;
}

int Bitset::next_set_bit(int from) const {
  if (from >= bits_) return -1;
  int word = from >> 6;
  uint64_t w = words_[word] & (~uint64_t{0} << (from & 63));
  while (true) {
    if (w) {
      int bit = (word << 6) + std::countr_zero(w);
      return bit < bits_ ? bit : -1;
    }
    if (++word >= static_cast<int>(words_.size())) return -1;
    w = words_[word];
  }
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for (int i = next_set_bit(0); i >= 0; i = next_set_bit(i + 1)) out.push_back(i);
  return out;
}

}  // namespace tightgraphs

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace pmalg {

// Fixed-capacity dynamic bit set over indices 0..size-1.  Comparison treats the
// set as a little-endian integer bitmask, which is the canonical order used for
// prime filters and up-sets everywhere in this library.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  // Index of the lowest set bit at or after `from`, or -1.
  int next(int from) const {
    if (from >= size_) return -1;
    int wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return wi * 64 + __builtin_ctzll(w);
      if (++wi >= static_cast<int>(words_.size())) return -1;
      w = words_[wi];
    }
  }
  int first() const { return next(0); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  Bitset complement() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const Bitset& o) const { return words_ == o.words_; }

  // Numeric order of the bitmask: compare the most significant word first.
  std::strong_ordering operator<=>(const Bitset& o) const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != o.words_[i])
        return words_[i] < o.words_[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i + 1)) out.push_back(i);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  void trim() {
    if (size_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (size_ & 63));
    if (words_.empty()) return;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace pmalg

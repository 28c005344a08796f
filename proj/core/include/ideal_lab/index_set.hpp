#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>

namespace ideal_lab {

// Fixed-capacity bitset used for positive-root indices and hyperplane
// labels.  128 bits covers every constructible system (E8 has 120
// positive roots).
class IndexSet {
public:
  static constexpr int capacity = 128;

  constexpr IndexSet() = default;

  static constexpr IndexSet first_n(int n) {
    assert(n >= 0 && n <= capacity);
    IndexSet s;
    if (n >= 64) {
      s.w_[0] = ~uint64_t{0};
      s.w_[1] = (n == 128) ? ~uint64_t{0} : ((uint64_t{1} << (n - 64)) - 1);
    } else {
      s.w_[0] = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    }
    return s;
  }

  static constexpr IndexSet single(int i) {
    IndexSet s;
    s.set(i);
    return s;
  }

  constexpr bool test(int i) const {
    assert(i >= 0 && i < capacity);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  constexpr void set(int i) {
    assert(i >= 0 && i < capacity);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  constexpr void reset(int i) {
    assert(i >= 0 && i < capacity);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  constexpr int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  constexpr bool empty() const { return w_[0] == 0 && w_[1] == 0; }
  constexpr bool any() const { return !empty(); }

  constexpr IndexSet operator&(const IndexSet& o) const {
    return IndexSet{w_[0] & o.w_[0], w_[1] & o.w_[1]};
  }
  constexpr IndexSet operator|(const IndexSet& o) const {
    return IndexSet{w_[0] | o.w_[0], w_[1] | o.w_[1]};
  }
  constexpr IndexSet operator^(const IndexSet& o) const {
    return IndexSet{w_[0] ^ o.w_[0], w_[1] ^ o.w_[1]};
  }
  // set difference: *this minus o
  constexpr IndexSet minus(const IndexSet& o) const {
    return IndexSet{w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]};
  }

  constexpr IndexSet& operator&=(const IndexSet& o) { return *this = *this & o; }
  constexpr IndexSet& operator|=(const IndexSet& o) { return *this = *this | o; }
  constexpr IndexSet& operator^=(const IndexSet& o) { return *this = *this ^ o; }

  constexpr bool is_subset_of(const IndexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }
  constexpr bool intersects(const IndexSet& o) const {
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }

  constexpr bool operator==(const IndexSet& o) const {
    return w_[0] == o.w_[0] && w_[1] == o.w_[1];
  }
  constexpr bool operator!=(const IndexSet& o) const { return !(*this == o); }
  // canonical numeric order (high word first)
  constexpr bool operator<(const IndexSet& o) const {
    if (w_[1] != o.w_[1]) return w_[1] < o.w_[1];
    return w_[0] < o.w_[0];
  }

  constexpr uint64_t hash() const {
    uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
    h ^= (w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return h;
  }

  // index of the lowest set bit >= from, or -1
  constexpr int next_set_bit(int from) const {
    if (from >= capacity) return -1;
    int word = from >> 6;
    uint64_t cur = w_[word] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (cur != 0) return word * 64 + std::countr_zero(cur);
      if (++word >= 2) return -1;
      cur = w_[word];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      uint64_t cur = w_[w];
      while (cur != 0) {
        f(w * 64 + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  constexpr uint64_t word(int i) const { return w_[i]; }
  constexpr void set_word(int i, uint64_t v) { w_[i] = v; }

private:
  constexpr IndexSet(uint64_t lo, uint64_t hi) : w_{lo, hi} {}
  std::array<uint64_t, 2> w_{0, 0};
};

struct IndexSetHash {
  size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace ideal_lab

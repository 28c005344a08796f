#pragma once

#include "ideal_lab/index_set.hpp"

#include <cstdint>
#include <vector>

namespace ideal_lab {

// Open-addressing hash set of IndexSet for tight dedup loops.
// No deletion; grows by rehashing at 70% load.
class BitsetSet {
public:
  explicit BitsetSet(size_t expected = 16) {
    size_t cap = 16;
    while (cap * 10 < expected * 16) cap <<= 1;
    slots_.assign(cap, IndexSet{});
    used_.assign(cap, false);
  }

  // true if newly inserted
  bool insert(const IndexSet& s) {
    if ((size_ + 1) * 10 > slots_.size() * 7) grow();
    size_t mask = slots_.size() - 1;
    size_t i = s.hash() & mask;
    while (used_[i]) {
      if (slots_[i] == s) return false;
      i = (i + 1) & mask;
    }
    used_[i] = true;
    slots_[i] = s;
    ++size_;
    return true;
  }

  bool contains(const IndexSet& s) const {
    size_t mask = slots_.size() - 1;
    size_t i = s.hash() & mask;
    while (used_[i]) {
      if (slots_[i] == s) return true;
      i = (i + 1) & mask;
    }
    return false;
  }

  size_t size() const { return size_; }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < slots_.size(); ++i)
      if (used_[i]) f(slots_[i]);
  }

private:
  void grow() {
    std::vector<IndexSet> old = std::move(slots_);
    std::vector<char> old_used = std::move(used_);
    slots_.assign(old.size() * 2, IndexSet{});
    used_.assign(old.size() * 2, false);
    size_ = 0;
    for (size_t i = 0; i < old.size(); ++i)
      if (old_used[i]) insert(old[i]);
  }

  std::vector<IndexSet> slots_;
  std::vector<char> used_;
  size_t size_ = 0;
};

}  // namespace ideal_lab

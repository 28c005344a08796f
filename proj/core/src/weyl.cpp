#include "ideal_lab/weyl.hpp"

#include "ideal_lab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace ideal_lab {

namespace {

IndexSet inversions_of(const std::vector<int16_t>& img, int nroots) {
  IndexSet s;
  for (int k = 0; k < nroots; ++k)
    if (img[k] < 0) s.set(k);
  return s;
}

IndexSet neg_simple_pre_of(const std::vector<int16_t>& img, int nroots, int rank) {
  IndexSet s;
  for (int k = 0; k < nroots; ++k)
    if (img[k] < 0 && -img[k] <= rank) s.set(k);
  return s;
}

}  // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& rs, uint64_t cap) {
  const uint64_t order = rs.weyl_order();
  if (order > cap)
    throw GroupTooLargeError("Weyl group of " + rs.type().name() + " has order " +
                             std::to_string(order) + ", above the cap " + std::to_string(cap));

  WeylGroup g;
  g.rs_ = &rs;
  g.nroots_ = rs.num_positive_roots();
  g.rank_ = rs.rank();
  const int n = g.nroots_;
  const int rank = g.rank_;

  auto push_element = [&](const std::vector<int16_t>& img, int len) {
    for (int16_t c : img) g.images_.push_back(c);
    g.lengths_.push_back(static_cast<uint16_t>(len));
    g.inversions_.push_back(inversions_of(img, n));
    g.neg_simple_pre_.push_back(neg_simple_pre_of(img, n, rank));
    g.index_.emplace(g.inversions_.back(), static_cast<uint32_t>(g.lengths_.size() - 1));
  };

  std::vector<int16_t> id(n);
  for (int k = 0; k < n; ++k) id[k] = static_cast<int16_t>(k + 1);
  push_element(id, 0);
  g.right_.assign(static_cast<size_t>(order) * rank, 0);

  // candidate for the next length level, remembered with its parent edge
  struct Cand {
    IndexSet inv;
    std::vector<int16_t> img;
    uint32_t parent;
    int s;
  };

  std::vector<uint32_t> level{0};
  int len = 0;
  while (!level.empty()) {
    ++len;
    std::vector<Cand> cands;
    for (uint32_t e : level) {
      const int16_t* img = &g.images_[size_t(e) * n];
      for (int s = 0; s < rank; ++s) {
        if (img[s] < 0) continue;  // l(w s) = l(w) - 1; edge recorded when w was created
        std::vector<int16_t> next(n);
        for (int k = 0; k < n; ++k) {
          int j = rs.simple_reflection(s, k);
          next[k] = (k == s) ? static_cast<int16_t>(-img[s]) : img[j];
        }
        cands.push_back(Cand{inversions_of(next, n), std::move(next), e, s});
      }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.inv < b.inv; });
    std::vector<uint32_t> next_level;
    for (auto& c : cands) {
      uint32_t idx;
      auto it = g.index_.find(c.inv);
      if (it == g.index_.end()) {
        push_element(c.img, len);
        idx = static_cast<uint32_t>(g.lengths_.size() - 1);
        next_level.push_back(idx);
      } else {
        idx = it->second;
      }
      g.right_[size_t(c.parent) * rank + c.s] = idx;
      g.right_[size_t(idx) * rank + c.s] = c.parent;
    }
    level = std::move(next_level);
  }

  if (g.size() != order)
    throw Error("internal: enumerated " + std::to_string(g.size()) + " elements of W(" +
                rs.type().name() + "), expected " + std::to_string(order));
  assert(g.lengths_.back() == n);
  return g;
}

uint32_t WeylGroup::index_by_images(const std::vector<int16_t>& img) const {
  auto it = index_.find(inversions_of(img, nroots_));
  assert(it != index_.end());
  return it->second;
}

uint32_t WeylGroup::compose(uint32_t a, uint32_t b) const {
  const int16_t* ia = &images_[size_t(a) * nroots_];
  const int16_t* ib = &images_[size_t(b) * nroots_];
  std::vector<int16_t> img(nroots_);
  for (int k = 0; k < nroots_; ++k) {
    int16_t cb = ib[k];
    int16_t ca = ia[std::abs(cb) - 1];
    img[k] = cb < 0 ? static_cast<int16_t>(-ca) : ca;
  }
  return index_by_images(img);
}

uint32_t WeylGroup::inverse(uint32_t e) const {
  const int16_t* img = &images_[size_t(e) * nroots_];
  std::vector<int16_t> inv(nroots_);
  for (int k = 0; k < nroots_; ++k) {
    int16_t c = img[k];
    if (c > 0)
      inv[c - 1] = static_cast<int16_t>(k + 1);
    else
      inv[-c - 1] = static_cast<int16_t>(-(k + 1));
  }
  return index_by_images(inv);
}

std::optional<uint32_t> WeylGroup::find_by_inversions(const IndexSet& inv) const {
  auto it = index_.find(inv);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IndexSet WeylGroup::inverse_inversions(uint32_t e) const {
  const int16_t* img = &images_[size_t(e) * nroots_];
  IndexSet s;
  for (int k = 0; k < nroots_; ++k)
    if (img[k] < 0) s.set(-img[k] - 1);
  return s;
}

void WeylGroup::rebuild_index() {
  index_.clear();
  index_.reserve(inversions_.size());
  for (uint32_t e = 0; e < inversions_.size(); ++e) index_.emplace(inversions_[e], e);
}

}  // namespace ideal_lab

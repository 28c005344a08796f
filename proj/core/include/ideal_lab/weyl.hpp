#pragma once

#include "ideal_lab/index_set.hpp"
#include "ideal_lab/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace ideal_lab {

// The full Weyl group, enumerated once and then read-only.  Elements are
// referred to by dense index; index 0 is the identity and indices are
// ordered by length, ties broken by inversion-set bitset order.
//
// The action of element e on positive roots is stored as a signed code:
// image_code(e, k) == +-(j+1) means w(beta_k) = +-beta_j.
class WeylGroup {
public:
  // Throws GroupTooLargeError when the group order exceeds cap.
  static WeylGroup enumerate(const RootSystem& rs, uint64_t cap = 1'000'000);

  const RootSystem& root_system() const { return *rs_; }
  uint32_t size() const { return static_cast<uint32_t>(lengths_.size()); }

  int length(uint32_t e) const { return lengths_[e]; }
  const IndexSet& inversions(uint32_t e) const { return inversions_[e]; }
  // {beta in Phi+ : w(beta) is a negative simple root}
  const IndexSet& neg_simple_preimages(uint32_t e) const { return neg_simple_pre_[e]; }

  int image_code(uint32_t e, int k) const { return images_[size_t(e) * nroots_ + k]; }
  // index of the root +-w(beta_k)
  int image_root(uint32_t e, int k) const { return std::abs(image_code(e, k)) - 1; }

  uint32_t identity() const { return 0; }
  uint32_t longest() const { return size() - 1; }
  uint32_t right_mult(uint32_t e, int s) const { return right_[size_t(e) * rank_ + s]; }

  uint32_t compose(uint32_t a, uint32_t b) const;  // a then b below it: (a*b)(x) = a(b(x))
  uint32_t inverse(uint32_t e) const;
  std::optional<uint32_t> find_by_inversions(const IndexSet& inv) const;

  // N(w^{-1}), computed without a group lookup
  IndexSet inverse_inversions(uint32_t e) const;

private:
  friend struct WeylCacheCodec;
  WeylGroup() = default;
  uint32_t index_by_images(const std::vector<int16_t>& img) const;
  void rebuild_index();

  const RootSystem* rs_ = nullptr;
  int nroots_ = 0;
  int rank_ = 0;
  std::vector<int16_t> images_;
  std::vector<uint32_t> right_;
  std::vector<uint16_t> lengths_;
  std::vector<IndexSet> inversions_;
  std::vector<IndexSet> neg_simple_pre_;
  std::unordered_map<IndexSet, uint32_t, IndexSetHash> index_;
};

}  // namespace ideal_lab

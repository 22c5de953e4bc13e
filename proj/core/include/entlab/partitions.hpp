#pragma once

#include <cstdint>
#include <vector>

#include "entlab/state.hpp"

namespace entlab {

enum class FamilyKind { balanced, contiguous, fixed_size, explicit_list };

/// An ordered family of bipartitions, enumerated lazily in a fixed order:
/// subset families in ascending mask order, contiguous blocks grouped by
/// length. Masks are yielded as stored; Bipartition construction applies
/// the usual orientation normalization.
class PartitionFamily {
 public:
  // All masks with popcount [n/2], ascending. Complementary subsets both
  // appear for even n (252 members at n = 10).
  static PartitionFamily balanced(int n);
  // Blocks of consecutive sites i..i+len-1, for len = 1..max_len.
  static PartitionFamily contiguous(int n, int max_len);
  static PartitionFamily fixed_size(int n, int subset_size);
  static PartitionFamily from_masks(int n, std::vector<std::uint64_t> masks);

  FamilyKind kind() const { return kind_; }
  int n() const { return n_; }
  std::uint64_t size() const;

  std::uint64_t mask_at(std::uint64_t index) const;
  Bipartition at(std::uint64_t index) const {
    return Bipartition(n_, mask_at(index));
  }
  // Block length of member `index` (contiguous families).
  int block_length(std::uint64_t index) const;

  class iterator {
   public:
    iterator(const PartitionFamily* fam, std::uint64_t idx)
        : fam_(fam), idx_(idx) {}
    Bipartition operator*() const { return fam_->at(idx_); }
    iterator& operator++() { ++idx_; return *this; }
    bool operator!=(const iterator& o) const { return idx_ != o.idx_; }

   private:
    const PartitionFamily* fam_;
    std::uint64_t idx_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  PartitionFamily(FamilyKind kind, int n) : kind_(kind), n_(n) {}

  FamilyKind kind_;
  int n_;
  int subset_size_ = 0;  // balanced / fixed_size
  int max_len_ = 0;      // contiguous
  std::vector<std::uint64_t> masks_;  // explicit_list
};

// C(n, k)
std::uint64_t binomial(int n, int k);

}  // namespace entlab

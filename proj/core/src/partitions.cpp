#include "entlab/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace entlab {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

PartitionFamily PartitionFamily::balanced(int n) {
  if (n < 2) throw std::invalid_argument("balanced family needs n >= 2");
  PartitionFamily fam(FamilyKind::balanced, n);
  fam.subset_size_ = n / 2;
  return fam;
}

PartitionFamily PartitionFamily::contiguous(int n, int max_len) {
  if (n < 2) throw std::invalid_argument("contiguous family needs n >= 2");
  if (max_len < 1 || max_len > n / 2) {
    throw std::invalid_argument("max_len must lie in [1, n/2]");
  }
  PartitionFamily fam(FamilyKind::contiguous, n);
  fam.max_len_ = max_len;
  return fam;
}

PartitionFamily PartitionFamily::fixed_size(int n, int subset_size) {
  if (n < 2 || subset_size < 1 || subset_size > n - 1) {
    throw std::invalid_argument("subset size must lie in [1, n-1]");
  }
  PartitionFamily fam(FamilyKind::fixed_size, n);
  fam.subset_size_ = subset_size;
  return fam;
}

PartitionFamily PartitionFamily::from_masks(int n,
                                            std::vector<std::uint64_t> masks) {
  if (masks.empty()) throw std::invalid_argument("empty partition list");
  PartitionFamily fam(FamilyKind::explicit_list, n);
  for (std::uint64_t m : masks) Bipartition(n, m);  // validate early
  fam.masks_ = std::move(masks);
  return fam;
}

std::uint64_t PartitionFamily::size() const {
  switch (kind_) {
    case FamilyKind::balanced:
    case FamilyKind::fixed_size:
      return binomial(n_, subset_size_);
    case FamilyKind::contiguous: {
      std::uint64_t total = 0;
      for (int len = 1; len <= max_len_; ++len) total += n_ - len + 1;
      return total;
    }
    case FamilyKind::explicit_list:
    default:
      return masks_.size();
  }
}

namespace {

// Combination of fixed popcount m at the given rank of ascending numeric
// mask order. The mask with set bits a_1 < ... < a_m has rank
// sum_i C(a_i, i), so unranking picks each bit greedily from the top.
std::uint64_t unrank_combination(int m, std::uint64_t rank) {
  std::uint64_t mask = 0;
  for (int i = m; i >= 1; --i) {
    int a = i - 1;
    while (binomial(a + 1, i) <= rank) ++a;
    mask |= std::uint64_t{1} << a;
    rank -= binomial(a, i);
  }
  return mask;
}

}  // namespace

std::uint64_t PartitionFamily::mask_at(std::uint64_t index) const {
  if (index >= size()) throw std::invalid_argument("family index out of range");
  switch (kind_) {
    case FamilyKind::balanced:
    case FamilyKind::fixed_size:
      return unrank_combination(subset_size_, index);
    case FamilyKind::contiguous: {
      std::uint64_t i = index;
      for (int len = 1; len <= max_len_; ++len) {
        const std::uint64_t count = static_cast<std::uint64_t>(n_ - len + 1);
        if (i < count) {
          return ((std::uint64_t{1} << len) - 1) << i;
        }
        i -= count;
      }
      throw std::logic_error("unreachable");
    }
    case FamilyKind::explicit_list:
    default:
      return masks_[index];
  }
}

int PartitionFamily::block_length(std::uint64_t index) const {
  if (kind_ != FamilyKind::contiguous) {
    throw std::invalid_argument("block_length applies to contiguous families");
  }
  std::uint64_t i = index;
  for (int len = 1; len <= max_len_; ++len) {
    const std::uint64_t count = static_cast<std::uint64_t>(n_ - len + 1);
    if (i < count) return len;
    i -= count;
  }
  throw std::invalid_argument("family index out of range");
}

}  // namespace entlab

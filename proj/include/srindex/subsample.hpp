/*
 * subsample.hpp: removal of oversampled end-of-run samples and the
 * Removed / Valid / ValidArea extensions, variants:
 *
 *   0: Removed only
 *   1: + Valid, one bit per retained 1 of First (text order): 1 iff no 1
 *      of First was removed between this retained 1 and the next (cyclic
 *      at the last gap)
 *   2: + ValidArea, for each 0 of Valid the distance from the retained 1
 *      to the nearest removed 1 after it; always < s
 */

#ifndef SRINDEX_SUBSAMPLE_HPP_
#define SRINDEX_SUBSAMPLE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "srindex/bitvector.hpp"
#include "srindex/common.hpp"
#include "srindex/locate_structs.hpp"
#include "srindex/rlbwt.hpp"
#include "srindex/suffix.hpp"

namespace sri {

// Left-to-right sequential rule: drop position i when the next original
// position is within s of the last retained one. First and last positions
// are always retained. Returns the retained values and per-input removal
// flags.
std::pair<std::vector<pos_t>, std::vector<bool>> subsample_positions(
    const std::vector<pos_t>& sorted_samples, u64 s);

class SubsampleExt {
 public:
  SubsampleExt() = default;
  SubsampleExt(u64 s, u8 variant, DenseBitVector removed, std::optional<DenseBitVector> valid,
               PackedIntArray valid_area)
      : s_(s), variant_(variant), removed_(std::move(removed)), valid_(std::move(valid)),
        valid_area_(std::move(valid_area)) {
    if (variant_ > 2) raise(Errc::invalid_variant, "variant must be 0, 1 or 2");
    if ((variant_ >= 1) != valid_.has_value())
      raise(Errc::corrupt, "valid bitvector presence disagrees with variant");
    if (variant_ == 2 && valid_->size() - valid_->ones() != valid_area_.size())
      raise(Errc::corrupt, "valid_area length disagrees with zeros of valid");
  }

  u64 s() const { return s_; }
  u8 variant() const { return variant_; }
  const DenseBitVector& removed() const { return removed_; }
  const DenseBitVector& valid() const {
    if (variant_ < 1) raise(Errc::wrong_variant, "valid requires variant >= 1");
    return *valid_;
  }
  const PackedIntArray& valid_area() const {
    if (variant_ < 2) raise(Errc::wrong_variant, "valid_area requires variant 2");
    return valid_area_;
  }

  u64 removed_count() const { return removed_.ones(); }

  // distance from the q-th retained 1 of First to the next removed 1;
  // nullopt when the following gap is clean
  std::optional<u64> next_removed_dist(u64 q) const {
    if (variant_ < 2) raise(Errc::wrong_variant, "next_removed_dist requires variant 2");
    if (q < 1 || q > valid_->size()) raise(Errc::out_of_range, "next_removed_dist");
    if (valid_->access(q)) return std::nullopt;
    return valid_area_.get(q - valid_->rank1(q) - 1);
  }

  u64 size_in_bytes() const {
    return removed_.size_in_bytes() + (valid_ ? valid_->size_in_bytes() : 0) +
           (variant_ == 2 ? valid_area_.size_in_bytes() : 0) + 13;
  }

 private:
  u64 s_ = 1;
  u8 variant_ = 0;
  DenseBitVector removed_;
  std::optional<DenseBitVector> valid_;
  PackedIntArray valid_area_;
};

struct ExtBuild {
  LocateCore core;
  SubsampleExt ext;
};

// Build from an explicit suffix context (the suffix array is read here and
// can be dropped afterwards).
ExtBuild build_ext(const SuffixContext& ctx, u64 s, u8 variant);

// Same output, built from the counting structures alone by a backward
// LF-traversal of the text. O(r) working memory beyond the inputs.
ExtBuild build_ext_direct(const RlBwt& rlbwt, pos_t sa_last, u64 s, u8 variant);

}  // namespace sri

#endif  // SRINDEX_SUBSAMPLE_HPP_

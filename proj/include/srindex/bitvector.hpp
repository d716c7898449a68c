/*
 * bitvector.hpp: plain bitvector with O(1) rank and scan-based select.
 *
 * Rank directory: one u64 cumulative count per 512-bit superblock plus one
 * u16 offset per 64-bit word. Select walks the directory (binary search on
 * superblocks, then word scan), which is plenty at the sizes handled here.
 */

#ifndef SRINDEX_BITVECTOR_HPP_
#define SRINDEX_BITVECTOR_HPP_

#include <bit>
#include <cassert>
#include <vector>

#include "srindex/common.hpp"

namespace sri {

class DenseBitVector {
 public:
  DenseBitVector() = default;

  explicit DenseBitVector(u64 universe) : universe_(universe) {
    words_.assign((universe + 63) / 64, 0);
  }

  explicit DenseBitVector(const std::vector<bool>& bits) : DenseBitVector(bits.size()) {
    for (u64 i = 0; i < bits.size(); ++i)
      if (bits[i]) set(i + 1);
    build_rank();
  }

  // p is 1-based
  void set(pos_t p) {
    assert(p >= 1 && p <= universe_);
    words_[(p - 1) >> 6] |= u64{1} << ((p - 1) & 63);
  }

  void build_rank() {
    u64 n_words = words_.size();
    super_.assign((n_words + 7) / 8, 0);
    block_.assign(n_words, 0);
    u64 total = 0;
    for (u64 w = 0; w < n_words; ++w) {
      if ((w & 7) == 0) super_[w >> 3] = total;
      block_[w] = static_cast<u16>(total - super_[w >> 3]);
      total += std::popcount(words_[w]);
    }
    ones_ = total;
  }

  u64 size() const { return universe_; }
  u64 ones() const { return ones_; }

  bool access(pos_t p) const {
    if (p < 1 || p > universe_) raise(Errc::out_of_range, "bitvector access");
    return (words_[(p - 1) >> 6] >> ((p - 1) & 63)) & 1;
  }

  // ones in [1..p]; p = 0 allowed
  u64 rank1(pos_t p) const {
    if (p > universe_) raise(Errc::out_of_range, "bitvector rank1");
    if (p == 0) return 0;
    u64 i = p - 1;  // count bits [0..i] 0-based
    u64 w = i >> 6;
    u64 partial = std::popcount(words_[w] & (~u64{0} >> (63 - (i & 63))));
    return super_[w >> 3] + block_[w] + partial;
  }

  // position of the k-th one, k in [1..ones]
  pos_t select1(u64 k) const {
    if (k < 1 || k > ones_) raise(Errc::out_of_range, "bitvector select1");
    u64 lo = 0, hi = super_.size() - 1;  // last superblock with cum < k
    while (lo < hi) {
      u64 mid = (lo + hi + 1) / 2;
      if (super_[mid] < k) lo = mid; else hi = mid - 1;
    }
    u64 w = lo << 3;
    u64 rest = k - super_[lo];
    while (true) {
      u64 pc = std::popcount(words_[w]);
      if (pc >= rest) break;
      rest -= pc;
      ++w;
    }
    return (w << 6) + select_in_word(words_[w], rest) + 1;
  }

  // position of the k-th zero, k in [1..universe-ones]
  pos_t select0(u64 k) const {
    if (k < 1 || k > universe_ - ones_) raise(Errc::out_of_range, "bitvector select0");
    u64 lo = 0, hi = super_.size() - 1;  // last superblock with zero-cum < k
    while (lo < hi) {
      u64 mid = (lo + hi + 1) / 2;
      if ((mid << 9) - super_[mid] < k) lo = mid; else hi = mid - 1;
    }
    u64 w = lo << 3;
    u64 rest = k - ((lo << 9) - super_[lo]);
    while (true) {
      u64 zeros_here = 64 - std::popcount(words_[w]);
      if (zeros_here >= rest) break;
      rest -= zeros_here;
      ++w;
    }
    return (w << 6) + select_in_word(~words_[w], rest) + 1;
  }

  const std::vector<u64>& words() const { return words_; }

  u64 size_in_bytes() const { return words_.size() * 8 + 8; }

  static DenseBitVector from_raw(u64 universe, std::vector<u64> words) {
    if (words.size() != (universe + 63) / 64) raise(Errc::corrupt, "bitvector: bad word count");
    if (universe % 64 != 0 && !words.empty() && (words.back() >> (universe % 64)) != 0)
      raise(Errc::corrupt, "bitvector: stray bits past the universe");
    DenseBitVector bv;
    bv.universe_ = universe;
    bv.words_ = std::move(words);
    bv.build_rank();
    return bv;
  }

  bool operator==(const DenseBitVector& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

 private:
  // 0-based bit offset of the k-th set bit of word, k >= 1
  static u64 select_in_word(u64 word, u64 k) {
    for (u64 i = 0; i < 64; ++i) {
      if ((word >> i) & 1) {
        if (--k == 0) return i;
      }
    }
    assert(false);
    return 64;
  }

  u64 universe_ = 0;
  u64 ones_ = 0;
  std::vector<u64> words_;
  std::vector<u64> super_;
  std::vector<u16> block_;
};

}  // namespace sri

#endif  // SRINDEX_BITVECTOR_HPP_

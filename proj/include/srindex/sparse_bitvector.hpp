/*
 * sparse_bitvector.hpp: Elias-Fano representation of a sparse set of
 * 1-positions over universe [1..u]. High parts are stored in unary inside a
 * dense bitvector, low parts in a fixed-width packed array.
 *
 * select1 is a single select on the high bitvector; rank1 brackets the
 * bucket with two select0 calls and binary-searches the low parts.
 */

#ifndef SRINDEX_SPARSE_BITVECTOR_HPP_
#define SRINDEX_SPARSE_BITVECTOR_HPP_

#include <cassert>
#include <optional>
#include <vector>

#include "srindex/bitvector.hpp"
#include "srindex/common.hpp"
#include "srindex/packed_ints.hpp"

namespace sri {

struct PredResult {
  pos_t position;  // rightmost 1 at or before the query point
  u64 ordinal;     // its rank, i.e. select1(ordinal) == position
};

class SparseBitVector {
 public:
  SparseBitVector() = default;

  // positions: strictly increasing 1-based positions of the ones
  SparseBitVector(u64 universe, const std::vector<pos_t>& positions)
      : universe_(universe), k_(positions.size()) {
    low_width_ = compute_low_width(universe_, k_);
    if (low_width_ > 0) lows_ = PackedIntArray(k_, low_width_);
    DenseBitVector highs(high_universe());
    pos_t prev = 0;
    for (u64 i = 0; i < k_; ++i) {
      pos_t p = positions[i];
      if (p < 1 || p > universe_ || p <= prev)
        raise(Errc::out_of_range, "sparse bitvector: positions not increasing in range");
      prev = p;
      u64 v = p - 1;
      if (low_width_ > 0) lows_.set(i, v & low_mask());
      highs.set((v >> low_width_) + i + 1);
    }
    highs.build_rank();
    highs_ = std::move(highs);
  }

  u64 size() const { return universe_; }
  u64 ones() const { return k_; }

  bool access(pos_t p) const {
    if (p < 1 || p > universe_) raise(Errc::out_of_range, "sparse bitvector access");
    return rank1(p) - rank1(p - 1) == 1;
  }

  // ones in [1..p]; p = 0 allowed
  u64 rank1(pos_t p) const {
    if (p > universe_) raise(Errc::out_of_range, "sparse bitvector rank1");
    if (p == 0 || k_ == 0) return 0;
    u64 v = p - 1;
    u64 h = v >> low_width_;
    u64 lo = h == 0 ? 0 : highs_.select0(h) - h;  // ones in buckets < h
    u64 hi = highs_.select0(h + 1) - (h + 1);     // ones in buckets <= h
    if (low_width_ == 0) return hi;
    u64 lowv = v & low_mask();
    while (lo < hi) {  // first index in bucket with low > lowv
      u64 mid = (lo + hi) / 2;
      if (lows_.get(mid) <= lowv) lo = mid + 1; else hi = mid;
    }
    return lo;
  }

  pos_t select1(u64 j) const {
    if (j < 1 || j > k_) raise(Errc::out_of_range, "sparse bitvector select1");
    u64 hp0 = highs_.select1(j) - 1;
    u64 high = hp0 - (j - 1);
    u64 low = low_width_ == 0 ? 0 : lows_.get(j - 1);
    return ((high << low_width_) | low) + 1;
  }

  std::optional<PredResult> pred(pos_t p) const {
    u64 r = rank1(p);
    if (r == 0) return std::nullopt;
    return PredResult{select1(r), r};
  }

  u64 size_in_bytes() const { return lows_.size_in_bytes() + highs_.size_in_bytes() + 17; }

  u8 low_width() const { return low_width_; }
  const PackedIntArray& lows() const { return lows_; }
  const DenseBitVector& highs() const { return highs_; }

  static SparseBitVector from_raw(u64 universe, u64 k, PackedIntArray lows, DenseBitVector highs) {
    SparseBitVector bv;
    bv.universe_ = universe;
    bv.k_ = k;
    bv.low_width_ = compute_low_width(universe, k);
    if ((bv.low_width_ > 0) != !lows.empty() || (!lows.empty() && lows.width() != bv.low_width_))
      raise(Errc::corrupt, "sparse bitvector: low array mismatch");
    if (lows.size() != (bv.low_width_ > 0 ? k : 0) || highs.size() != bv.high_universe_for(universe, k) ||
        highs.ones() != k)
      raise(Errc::corrupt, "sparse bitvector: dimension mismatch");
    bv.lows_ = std::move(lows);
    bv.highs_ = std::move(highs);
    return bv;
  }

  bool operator==(const SparseBitVector& o) const {
    return universe_ == o.universe_ && k_ == o.k_ && lows_ == o.lows_ && highs_ == o.highs_;
  }

 private:
  static u8 compute_low_width(u64 universe, u64 k) {
    if (k == 0 || universe <= k) return 0;
    u64 ratio = universe / k;
    u8 w = 0;
    while ((u64{1} << (w + 1)) <= ratio) ++w;
    return w;
  }

  static u64 high_universe_for(u64 universe, u64 k) {
    u8 w = compute_low_width(universe, k);
    return (universe >> w) + k + 1;
  }

  u64 high_universe() const { return high_universe_for(universe_, k_); }

  u64 low_mask() const { return (u64{1} << low_width_) - 1; }

  u64 universe_ = 0;
  u64 k_ = 0;
  u8 low_width_ = 0;
  PackedIntArray lows_;
  DenseBitVector highs_;
};

}  // namespace sri

#endif  // SRINDEX_SPARSE_BITVECTOR_HPP_

/*
 * rlbwt.hpp: run-length BWT counting machinery. The BWT itself is never
 * materialized: Start marks run starts over [1..n], Letter holds one symbol
 * per run, and per-symbol cumulated run lengths turn run-level counts into
 * symbol ranks. BWT[j] = Letter[rank1(Start, j)].
 */

#ifndef SRINDEX_RLBWT_HPP_
#define SRINDEX_RLBWT_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "srindex/common.hpp"
#include "srindex/packed_ints.hpp"
#include "srindex/run_head_seq.hpp"
#include "srindex/sparse_bitvector.hpp"
#include "srindex/suffix.hpp"

namespace sri {

class RlBwt {
 public:
  RlBwt() = default;

  explicit RlBwt(const SuffixContext& ctx);

  // assemble from already-deserialized parts; cumulative lengths are derived
  RlBwt(pos_t n, u32 sigma, SparseBitVector start, RunHeadSeq letter, std::vector<u64> c_table);

  pos_t n() const { return n_; }
  u64 r() const { return r_; }
  u32 sigma() const { return sigma_; }
  const std::vector<u64>& c_table() const { return c_; }
  const SparseBitVector& start() const { return start_; }
  const RunHeadSeq& letter() const { return letter_; }

  sym_t bwt_access(pos_t j) const {
    if (j < 1 || j > n_) raise(Errc::out_of_range, "bwt_access");
    return letter_.access(start_.rank1(j));
  }

  // occurrences of c in BWT[1..j]
  u64 rank_sym_bwt(sym_t c, pos_t j) const;

  pos_t lf(pos_t j) const {
    sym_t c = bwt_access(j);
    return c_[c] + rank_sym_bwt(c, j);
  }

  // one backward-search step; sp' > ep' encodes an empty continuation
  std::pair<pos_t, pos_t> backward_step(sym_t c, pos_t sp, pos_t ep) const {
    if (c >= sigma_) return {pos_t{1}, pos_t{0}};
    return {c_[c] + rank_sym_bwt(c, sp - 1) + 1, c_[c] + rank_sym_bwt(c, ep)};
  }

  u64 run_of(pos_t j) const {
    if (j < 1 || j > n_) raise(Errc::out_of_range, "run_of");
    return start_.rank1(j);
  }

  pos_t run_start(u64 p) const {
    if (p < 1 || p > r_) raise(Errc::out_of_range, "run_start");
    return start_.select1(p);
  }

  pos_t run_end(u64 p) const {
    if (p < 1 || p > r_) raise(Errc::out_of_range, "run_end");
    return p < r_ ? start_.select1(p + 1) - 1 : n_;
  }

  bool is_run_end(pos_t j) const {
    if (j < 1 || j > n_) raise(Errc::out_of_range, "is_run_end");
    return j == n_ || start_.access(j + 1);
  }

  // largest run index q <= p whose head is c; nullopt when no such run
  std::optional<u64> last_sym_run_upto(sym_t c, u64 p) const {
    if (p < 1 || p > r_) raise(Errc::out_of_range, "last_sym_run_upto");
    if (c >= sigma_) return std::nullopt;
    u64 k = letter_.rank(c, p);
    if (k == 0) return std::nullopt;
    return letter_.select(c, k);
  }

  u64 size_in_bytes() const;

 private:
  void build_cumlens();

  u64 run_length(u64 p) const { return run_end(p) - run_start(p) + 1; }

  pos_t n_ = 0;
  u64 r_ = 0;
  u32 sigma_ = 0;
  std::vector<u64> c_;
  SparseBitVector start_;
  RunHeadSeq letter_;
  // cumulative run lengths per symbol: cum_.get(off_[c] + t) is the total
  // length of the first t+1 runs of symbol c
  PackedIntArray cum_;
  std::vector<u64> off_;
};

}  // namespace sri

#endif  // SRINDEX_RLBWT_HPP_

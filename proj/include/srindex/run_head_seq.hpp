/*
 * run_head_seq.hpp: symbol sequence of BWT run heads with per-symbol
 * rank/select. Heads are kept in a packed array for O(1) access; each
 * symbol additionally owns an Elias-Fano set of the run indices where it
 * appears, which answers rank_c / select_c.
 */

#ifndef SRINDEX_RUN_HEAD_SEQ_HPP_
#define SRINDEX_RUN_HEAD_SEQ_HPP_

#include <optional>
#include <vector>

#include "srindex/common.hpp"
#include "srindex/packed_ints.hpp"
#include "srindex/sparse_bitvector.hpp"

namespace sri {

class RunHeadSeq {
 public:
  RunHeadSeq() = default;

  RunHeadSeq(const std::vector<sym_t>& heads, u32 sigma) { build(heads, sigma); }

  u64 size() const { return r_; }
  u32 sigma() const { return sigma_; }

  // i is a 1-based run index
  sym_t access(u64 i) const {
    if (i < 1 || i > r_) raise(Errc::out_of_range, "run head access");
    return static_cast<sym_t>(heads_.get(i - 1));
  }

  // occurrences of c among heads [1..i]
  u64 rank(sym_t c, u64 i) const {
    if (i > r_) raise(Errc::out_of_range, "run head rank");
    if (c >= sigma_ || i == 0) return 0;
    const auto& set = occ_[c];
    return set.ones() == 0 ? 0 : set.rank1(i);
  }

  // run index of the k-th occurrence of c
  u64 select(sym_t c, u64 k) const {
    if (c >= sigma_ || k == 0 || k > rank(c, r_))
      raise(Errc::no_such_occurrence, "run head select");
    return occ_[c].select1(k);
  }

  u64 count(sym_t c) const { return c >= sigma_ ? 0 : occ_[c].ones(); }

  const PackedIntArray& heads() const { return heads_; }

  u64 size_in_bytes() const {
    u64 b = heads_.size_in_bytes() + 12;
    for (const auto& s : occ_) b += s.size_in_bytes();
    return b;
  }

  static RunHeadSeq from_raw(u64 r, u32 sigma, PackedIntArray heads) {
    if (heads.size() != r || heads.width() != bits_for(sigma > 0 ? sigma - 1 : 0))
      raise(Errc::corrupt, "run heads: dimension mismatch");
    std::vector<sym_t> plain(r);
    for (u64 i = 0; i < r; ++i) {
      u64 h = heads.get(i);
      if (h >= sigma) raise(Errc::corrupt, "run heads: symbol out of alphabet");
      plain[i] = static_cast<sym_t>(h);
    }
    return RunHeadSeq(plain, sigma);
  }

 private:
  void build(const std::vector<sym_t>& heads, u32 sigma) {
    r_ = heads.size();
    sigma_ = sigma;
    heads_ = PackedIntArray(r_, bits_for(sigma > 0 ? sigma - 1 : 0));
    std::vector<std::vector<pos_t>> per_symbol(sigma);
    for (u64 i = 0; i < r_; ++i) {
      if (heads[i] >= sigma) raise(Errc::out_of_range, "run heads: symbol out of alphabet");
      heads_.set(i, heads[i]);
      per_symbol[heads[i]].push_back(i + 1);
    }
    occ_.clear();
    occ_.reserve(sigma);
    for (u32 c = 0; c < sigma; ++c) occ_.emplace_back(r_, per_symbol[c]);
  }

  u64 r_ = 0;
  u32 sigma_ = 0;
  PackedIntArray heads_;
  std::vector<SparseBitVector> occ_;
};

}  // namespace sri

#endif  // SRINDEX_RUN_HEAD_SEQ_HPP_

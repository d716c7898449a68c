#include "srindex/rlbwt.hpp"

#include <cassert>

namespace sri {

RlBwt::RlBwt(const SuffixContext& ctx) : n_(ctx.n), r_(ctx.r), sigma_(ctx.sigma), c_(ctx.c_table) {
  start_ = SparseBitVector(n_, ctx.run_starts);
  std::vector<sym_t> heads(r_);
  for (u64 p = 1; p <= r_; ++p) heads[p - 1] = ctx.bwt_at(ctx.run_start(p));
  letter_ = RunHeadSeq(heads, sigma_);
  build_cumlens();
}

RlBwt::RlBwt(pos_t n, u32 sigma, SparseBitVector start, RunHeadSeq letter, std::vector<u64> c_table)
    : n_(n), r_(start.ones()), sigma_(sigma), c_(std::move(c_table)),
      start_(std::move(start)), letter_(std::move(letter)) {
  if (letter_.size() != r_ || c_.size() != sigma_ + 1 || c_.back() != n_ ||
      r_ == 0 || !start_.access(1))
    raise(Errc::corrupt, "rlbwt: inconsistent components");
  build_cumlens();
}

void RlBwt::build_cumlens() {
  off_.assign(sigma_ + 1, 0);
  for (u32 c = 0; c < sigma_; ++c) off_[c + 1] = off_[c] + letter_.count(c);
  assert(off_[sigma_] == r_);
  cum_ = PackedIntArray(r_, bits_for(n_));
  std::vector<u64> running(sigma_, 0);
  std::vector<u64> seen(sigma_, 0);
  for (u64 p = 1; p <= r_; ++p) {
    sym_t c = letter_.access(p);
    running[c] += run_length(p);
    cum_.set(off_[c] + seen[c], running[c]);
    ++seen[c];
  }
}

u64 RlBwt::rank_sym_bwt(sym_t c, pos_t j) const {
  if (j > n_) raise(Errc::out_of_range, "rank_sym_bwt");
  if (j == 0 || c >= sigma_) return 0;
  u64 p = start_.rank1(j);
  u64 full = letter_.rank(c, p - 1);  // runs of c strictly before run p
  u64 count = full == 0 ? 0 : cum_.get(off_[c] + full - 1);
  if (letter_.access(p) == c) count += j - run_start(p) + 1;
  return count;
}

u64 RlBwt::size_in_bytes() const {
  return start_.size_in_bytes() + letter_.size_in_bytes() + cum_.size_in_bytes() +
         (c_.size() + off_.size()) * 8 + 20;
}

}  // namespace sri

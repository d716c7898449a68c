/*
 * locate_structs.hpp: the locating triple built over the retained samples.
 *
 *   first:        text positions (SA[j]-1, cyclic) of retained run-first
 *                 letters, as a sparse bitvector over [1..n]
 *   first_to_run: original run index of each retained 1 of first
 *   samples:      retained end-of-run samples, in run order after removal
 *
 * The cyclic convention maps "SA[j]-1" for SA[j]=1 to position n. phi()
 * evaluates SA[j-1] from i = SA[j]-1 out of these arrays; its result is
 * only meaningful when no sample was removed between pred(first, i) and i,
 * which the query layer guarantees before calling.
 */

#ifndef SRINDEX_LOCATE_STRUCTS_HPP_
#define SRINDEX_LOCATE_STRUCTS_HPP_

#include <optional>

#include "srindex/bitvector.hpp"
#include "srindex/common.hpp"
#include "srindex/packed_ints.hpp"
#include "srindex/sparse_bitvector.hpp"

namespace sri {

struct PhiResult {
  pos_t value = 0;    // SA[j-1]
  u64 used_steps = 0; // LF-steps consumed; 0 on the direct formula path
};

class LocateCore {
 public:
  LocateCore() = default;

  LocateCore(SparseBitVector first, PackedIntArray first_to_run, PackedIntArray samples,
             pos_t sa_last)
      : first_(std::move(first)), first_to_run_(std::move(first_to_run)),
        samples_(std::move(samples)), sa_last_(sa_last) {
    if (first_.ones() != first_to_run_.size() || first_.ones() != samples_.size())
      raise(Errc::corrupt, "locate core: retained counts disagree");
  }

  pos_t n() const { return first_.size(); }
  u64 retained() const { return samples_.size(); }
  pos_t sa_last() const { return sa_last_; }
  const SparseBitVector& first() const { return first_; }
  const PackedIntArray& first_to_run() const { return first_to_run_; }
  const PackedIntArray& samples() const { return samples_; }

  // run index of the q-th retained 1 of first
  u64 run_of_mark(u64 q) const { return first_to_run_.get(q - 1); }

  // retained sample by its position in the shrunk array, 1-based
  pos_t retained_sample(u64 idx) const { return samples_.get(idx - 1); }

  std::optional<PredResult> pred_first(pos_t i) const {
    if (i < 1 || i > n()) raise(Errc::out_of_range, "pred_first");
    return first_.pred(i);
  }

  u64 size_in_bytes() const {
    return first_.size_in_bytes() + first_to_run_.size_in_bytes() + samples_.size_in_bytes() + 8;
  }

 private:
  SparseBitVector first_;
  PackedIntArray first_to_run_;
  PackedIntArray samples_;
  pos_t sa_last_ = 0;
};

// retained sample of run p; throws SampleRemoved when removed[p] = 1
inline pos_t sample_of_run(const LocateCore& core, const DenseBitVector& removed, u64 p) {
  if (p < 1 || p > removed.size()) raise(Errc::out_of_range, "sample_of_run");
  if (removed.access(p)) raise(Errc::sample_removed, "sample_of_run: run's sample was removed");
  return core.retained_sample(p - removed.rank1(p));
}

struct PhiInternals {
  pos_t value;
  bool wrapped_first_to_run;  // needed Samples[0], resolved cyclically
};

// SA[j-1] from i = SA[j]-1, both cyclic. pred below the smallest 1 wraps to
// the largest; a FirstToRun entry of 1 wraps to the last retained sample.
inline PhiInternals phi_internals(const LocateCore& core, const DenseBitVector& removed, pos_t i) {
  pos_t n = core.n();
  if (i < 1 || i > n) raise(Errc::out_of_range, "phi");
  if (core.retained() == 0) raise(Errc::predecessor_missing, "phi: no retained marks");
  u64 q = core.first().rank1(i);
  if (q == 0) q = core.retained();
  pos_t f = core.first().select1(q);
  pos_t delta = i >= f ? i - f : i + n - f;
  u64 p = core.run_of_mark(q);
  pos_t base;
  bool wrapped = false;
  if (p == 1) {
    // the run preceding run 1 is, cyclically, the last one
    base = core.retained_sample(core.retained());
    wrapped = true;
  } else {
    base = sample_of_run(core, removed, p - 1);
  }
  pos_t value = base + 1 + delta;
  if (value > n) value -= n;
  return {value, wrapped};
}

inline pos_t phi(const LocateCore& core, const DenseBitVector& removed, pos_t i) {
  return phi_internals(core, removed, i).value;
}

}  // namespace sri

#endif  // SRINDEX_LOCATE_STRUCTS_HPP_

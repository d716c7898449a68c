/*
 * sr_index.hpp: the composed query index and its two algorithms.
 *
 * count: backward search that defers toehold recovery to the last hard
 * step (run head at ep differs from the pattern symbol); the all-easy case
 * reads the stored SA[n]. locate: reports SA[ep] and then fills the range
 * right to left by cutting it into maximal BWT runs, emitting retained
 * run-end samples (+k at level k), recursing through LF on each block, and
 * switching to the phi formula once level s is reached. Variants 1/2
 * additionally consume cells from the right edge with phi whenever the
 * Valid / ValidArea structures certify that no removed mark interferes.
 */

#ifndef SRINDEX_SR_INDEX_HPP_
#define SRINDEX_SR_INDEX_HPP_

#include <optional>
#include <span>
#include <vector>

#include "srindex/common.hpp"
#include "srindex/locate_structs.hpp"
#include "srindex/rlbwt.hpp"
#include "srindex/subsample.hpp"
#include "srindex/text.hpp"

namespace sri {

struct QueryStats {
  u64 backward_steps = 0;
  u64 toehold_lf_steps = 0;
  u64 locate_lf_steps = 0;
  u64 phi_calls = 0;
  u64 phi_wrap_calls = 0;  // FirstToRun entry 1 resolved cyclically
  u64 cells_filled = 0;
  u64 max_cell_steps = 0;  // deepest level at which a single cell was resolved

  u64 total_steps() const {
    return backward_steps + toehold_lf_steps + locate_lf_steps + phi_calls;
  }

  void merge(const QueryStats& o);
};

struct CountResult {
  pos_t sp = 1, ep = 0;            // sp > ep encodes zero occurrences
  std::optional<pos_t> sa_ep;      // SA[ep], present when occ > 0
  u64 backward_steps = 0;
  u64 toehold_lf_steps = 0;

  u64 occ() const { return ep >= sp ? ep - sp + 1 : 0; }
};

struct IndexMeta {
  pos_t n = 0;
  u64 r = 0;
  u32 sigma = 0;
  u64 s = 1;
  u8 variant = 0;
  u64 text_checksum = 0;
};

class SrIndex {
 public:
  enum class Fastpath { use_phi, must_step };

  SrIndex() = default;
  SrIndex(RlBwt rlbwt, LocateCore core, SubsampleExt ext, CodeMap map, u64 text_checksum);

  const IndexMeta& meta() const { return meta_; }
  const RlBwt& rlbwt() const { return rlbwt_; }
  const LocateCore& core() const { return core_; }
  const SubsampleExt& ext() const { return ext_; }
  const CodeMap& code_map() const { return map_; }
  u64 retained() const { return core_.retained(); }

  // raw byte patterns go through the code map; bytes outside the indexed
  // alphabet yield zero occurrences
  CountResult count(std::span<const u8> pattern) const;
  std::vector<pos_t> locate(std::span<const u8> pattern, QueryStats* stats = nullptr) const;

  CountResult count_codes(std::span<const sym_t> pattern, QueryStats* stats = nullptr) const;
  std::vector<pos_t> locate_codes(std::span<const sym_t> pattern,
                                  QueryStats* stats = nullptr) const;

  // SA at the end of run q, walking LF past removed samples; steps < s
  PhiResult toehold_resolve(u64 q, QueryStats* stats = nullptr) const;

  // variant >= 1: may phi be used directly for i = SA[j]-1?
  Fastpath locate_fastpath_check(pos_t i) const;

  u64 size_in_bytes() const;

 private:
  std::optional<std::vector<sym_t>> encode(std::span<const u8> pattern) const;
  pos_t decode_run_sample(u64 q, u64 add) const;
  void fill_cells(pos_t sp, std::vector<pos_t>& out, QueryStats* stats) const;

  RlBwt rlbwt_;
  LocateCore core_;
  SubsampleExt ext_;
  CodeMap map_;
  IndexMeta meta_;
};

}  // namespace sri

#endif  // SRINDEX_SR_INDEX_HPP_

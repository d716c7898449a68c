/*
 * suffix.hpp: suffix array, BWT, run boundaries and symbol counts for a
 * sentinel-terminated text. Construction is SA-IS (linear time, induced
 * sorting); the brute-force oracle revalidates it in the tests.
 */

#ifndef SRINDEX_SUFFIX_HPP_
#define SRINDEX_SUFFIX_HPP_

#include <vector>

#include "srindex/common.hpp"
#include "srindex/text.hpp"

namespace sri {

// Suffix array of the code sequence. Returned slots are 0-based but the
// stored values are 1-based: result[i] == SA[i+1].
std::vector<u32> build_suffix_array(const Text& text);

// bwt[i-1] = T[SA[i]-1], wrapping to T[n] when SA[i] = 1
std::vector<sym_t> derive_bwt(const Text& text, const std::vector<u32>& sa);

// 1-based rows where a run begins
std::pair<std::vector<pos_t>, u64> compute_runs(const std::vector<sym_t>& bwt);

// C[c] = count of text symbols with code < c; size sigma+1, C[sigma] = n
std::vector<u64> compute_C(const Text& text);

struct SuffixContext {
  pos_t n = 0;
  u32 sigma = 0;
  std::vector<u32> sa;            // 1-based values, slot i holds SA[i+1]
  std::vector<sym_t> bwt;
  std::vector<u64> c_table;
  std::vector<pos_t> run_starts;  // 1-based rows
  u64 r = 0;
  pos_t sa_last = 0;              // SA[n]

  static SuffixContext build(const Text& text);

  pos_t sa_at(pos_t i) const { return sa[i - 1]; }
  sym_t bwt_at(pos_t i) const { return bwt[i - 1]; }
  pos_t run_start(u64 p) const { return run_starts[p - 1]; }
  pos_t run_end(u64 p) const { return p < r ? run_starts[p] - 1 : n; }
};

}  // namespace sri

#endif  // SRINDEX_SUFFIX_HPP_

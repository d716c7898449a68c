/*
 * oracle.hpp: brute-force reference implementations that adjudicate the
 * index. Nothing here shares code with the production path: the suffix
 * array comes from a plain comparison sort and searches are literal scans.
 * Quadratic behavior is fine; the oracle only runs on small texts, except
 * for scan_count/scan_positions which the benchmark uses for spot checks.
 */

#ifndef SRINDEX_ORACLE_HPP_
#define SRINDEX_ORACLE_HPP_

#include <span>
#include <vector>

#include "srindex/common.hpp"
#include "srindex/text.hpp"

namespace sri {

struct OracleSearch {
  pos_t sp = 0, ep = 0;          // sp > ep encodes zero occurrences
  std::vector<pos_t> positions;  // in SA order over [sp..ep]
};

class OracleIndex {
 public:
  explicit OracleIndex(const Text& text);

  pos_t n() const { return n_; }
  pos_t sa_at(pos_t i) const { return sa_[i - 1]; }
  pos_t isa_at(pos_t p) const { return isa_[p - 1]; }

  OracleSearch naive_search(std::span<const sym_t> pattern) const;

  // SA[j-1] from i = SA[j]-1 (cyclic: i = n means SA[j] = 1)
  pos_t naive_phi(pos_t i) const;

  const Text& text() const { return *text_; }

 private:
  bool suffix_less(pos_t a, pos_t b) const;

  const Text* text_;
  pos_t n_;
  std::vector<pos_t> sa_;
  std::vector<pos_t> isa_;
};

// Independent restatement of the subsampling rule, kept apart from the
// production implementation on purpose.
std::vector<pos_t> naive_subsample(const std::vector<pos_t>& sorted_positions, u64 s);

// text scans usable on big inputs (benchmark spot checks)
u64 scan_count(const Text& text, std::span<const sym_t> pattern);
std::vector<pos_t> scan_positions(const Text& text, std::span<const sym_t> pattern);

}  // namespace sri

#endif  // SRINDEX_ORACLE_HPP_

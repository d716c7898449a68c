/*
 * bench.hpp: desk-scale benchmark driver shared by the CLI and the
 * acceptance suite. Builds one suffix context per text, derives one index
 * per (variant, s) configuration, times locate around the call only and
 * spot-checks a slice of the answers against a plain text scan.
 */

#ifndef SRINDEX_BENCH_HPP_
#define SRINDEX_BENCH_HPP_

#include <string>
#include <vector>

#include "srindex/common.hpp"
#include "srindex/sr_index.hpp"
#include "srindex/suffix.hpp"
#include "srindex/text.hpp"

namespace sri {

struct BenchConfigRecord {
  u64 s = 1;
  u8 variant = 0;
  u64 index_bytes = 0;
  double bits_per_symbol = 0.0;
  pos_t n = 0;
  u64 r = 0;
  double n_over_r = 0.0;
  double mean_time_per_occ_us = 0.0;
  double mean_lf_steps_per_occ = 0.0;
  u64 pattern_count = 0;
  pos_t m = 0;
  u64 rng_seed = 0;
  u64 total_occ = 0;
};

struct BenchOptions {
  std::vector<u64> s_values{4, 8, 16, 32, 64};
  std::vector<u8> variants{0, 1, 2};
  u64 pattern_count = 1000;
  pos_t m = 10;
  u64 rng_seed = 1;
  double spot_check_fraction = 0.01;  // slice of queries replayed against a text scan
  u64 threads = 1;                    // >1 opts into parallel querying; results must not change
};

struct BenchReport {
  std::vector<BenchConfigRecord> records;  // sorted by (variant, s)
  std::string rng_algorithm = Rng::kAlgorithmId;
  std::string sampling_note =
      "patterns sampled uniformly with replacement from the text; every pattern occurs";
};

BenchReport run_bench(const Text& text, const BenchOptions& options);

// formatting helpers for the CLI
std::string bench_records_tsv(const BenchReport& report);
std::string bench_summary_table(const BenchReport& report);

}  // namespace sri

#endif  // SRINDEX_BENCH_HPP_

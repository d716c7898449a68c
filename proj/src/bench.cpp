#include "srindex/bench.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <sstream>

#include "srindex/build.hpp"
#include "srindex/oracle.hpp"
#include "srindex/persist.hpp"

namespace sri {

namespace {

struct QueryOutcome {
  u64 occ = 0;
  u64 locate_ns = 0;
  u64 lf_steps = 0;
  std::vector<pos_t> positions;
};

QueryOutcome run_query(const SrIndex& index, const std::vector<sym_t>& pattern) {
  QueryOutcome out;
  QueryStats stats;
  auto t0 = std::chrono::steady_clock::now();
  out.positions = index.locate_codes(pattern, &stats);
  auto t1 = std::chrono::steady_clock::now();
  out.locate_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  out.occ = out.positions.size();
  out.lf_steps = stats.toehold_lf_steps + stats.locate_lf_steps;
  return out;
}

}  // namespace

BenchReport run_bench(const Text& text, const BenchOptions& options) {
  BenchReport report;
  SuffixContext ctx = SuffixContext::build(text);
  PatternSet patterns = sample_patterns(text, options.pattern_count, options.m, options.rng_seed);

  u64 spot_every = options.spot_check_fraction > 0
                       ? std::max<u64>(1, static_cast<u64>(1.0 / options.spot_check_fraction))
                       : 0;

  std::vector<u8> variants = options.variants;
  std::sort(variants.begin(), variants.end());
  std::vector<u64> s_values = options.s_values;
  std::sort(s_values.begin(), s_values.end());

  for (u8 variant : variants) {
    for (u64 s : s_values) {
      BuildOptions bo;
      bo.s = s;
      bo.variant = variant;
      bo.verify = VerifyLevel::lemmas;
      SrIndex index = build_index(text, ctx, bo);

      BenchConfigRecord rec;
      rec.s = s;
      rec.variant = variant;
      rec.index_bytes = serialize_index(index).size();
      rec.bits_per_symbol = 8.0 * static_cast<double>(rec.index_bytes) / static_cast<double>(ctx.n);
      rec.n = ctx.n;
      rec.r = ctx.r;
      rec.n_over_r = static_cast<double>(ctx.n) / static_cast<double>(ctx.r);
      rec.pattern_count = patterns.patterns.size();
      rec.m = options.m;
      rec.rng_seed = options.rng_seed;

      std::vector<QueryOutcome> outcomes(patterns.patterns.size());
      if (options.threads > 1) {
        u64 chunk = (patterns.patterns.size() + options.threads - 1) / options.threads;
        std::vector<std::future<void>> futs;
        for (u64 t = 0; t < options.threads; ++t) {
          u64 lo = t * chunk, hi = std::min<u64>(lo + chunk, patterns.patterns.size());
          if (lo >= hi) break;
          futs.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (u64 i = lo; i < hi; ++i) outcomes[i] = run_query(index, patterns.patterns[i]);
          }));
        }
        for (auto& f : futs) f.get();
      } else {
        for (u64 i = 0; i < patterns.patterns.size(); ++i)
          outcomes[i] = run_query(index, patterns.patterns[i]);
      }

      u64 total_occ = 0, total_ns = 0, total_steps = 0;
      for (u64 i = 0; i < outcomes.size(); ++i) {
        const auto& oc = outcomes[i];
        if (oc.occ > 0) {  // zero-occ queries do not enter the per-occurrence averages
          total_occ += oc.occ;
          total_ns += oc.locate_ns;
          total_steps += oc.lf_steps;
        }
        if (spot_every > 0 && i % spot_every == 0) {
          auto expect = scan_positions(text, patterns.patterns[i]);
          auto got = oc.positions;
          std::sort(got.begin(), got.end());
          if (got != expect)
            raise(Errc::verification_failed,
                  "bench spot check: locate disagrees with a text scan (s=" + std::to_string(s) +
                      ", variant=" + std::to_string(variant) + ")");
        }
      }
      rec.total_occ = total_occ;
      if (total_occ > 0) {
        rec.mean_time_per_occ_us = static_cast<double>(total_ns) / 1000.0 / static_cast<double>(total_occ);
        rec.mean_lf_steps_per_occ = static_cast<double>(total_steps) / static_cast<double>(total_occ);
      }
      report.records.push_back(rec);
    }
  }
  return report;
}

std::string bench_records_tsv(const BenchReport& report) {
  std::ostringstream os;
  os << "s\tvariant\tindex_bytes\tbits_per_symbol\tn\tr\tn_over_r\tmean_time_per_occ_us"
     << "\tmean_lf_steps_per_occ\tpattern_count\tm\trng_seed\trng_algorithm\n";
  for (const auto& rec : report.records) {
    os << rec.s << '\t' << static_cast<int>(rec.variant) << '\t' << rec.index_bytes << '\t'
       << std::fixed << std::setprecision(4) << rec.bits_per_symbol << '\t' << rec.n << '\t'
       << rec.r << '\t' << std::setprecision(2) << rec.n_over_r << '\t' << std::setprecision(4)
       << rec.mean_time_per_occ_us << '\t' << std::setprecision(2) << rec.mean_lf_steps_per_occ
       << '\t' << rec.pattern_count << '\t' << rec.m << '\t' << rec.rng_seed << '\t'
       << report.rng_algorithm << '\n';
  }
  return os.str();
}

std::string bench_summary_table(const BenchReport& report) {
  std::ostringstream os;
  os << "# " << report.sampling_note << "\n";
  os << std::left << std::setw(8) << "variant" << std::setw(6) << "s" << std::setw(14)
     << "index_bytes" << std::setw(10) << "bps" << std::setw(10) << "n/r" << std::setw(14)
     << "us/occ" << std::setw(14) << "lf/occ" << '\n';
  for (const auto& rec : report.records) {
    os << std::left << std::setw(8) << static_cast<int>(rec.variant) << std::setw(6) << rec.s
       << std::setw(14) << rec.index_bytes << std::setw(10) << std::fixed << std::setprecision(3)
       << rec.bits_per_symbol << std::setw(10) << std::setprecision(1) << rec.n_over_r
       << std::setw(14) << std::setprecision(3) << rec.mean_time_per_occ_us << std::setw(14)
       << std::setprecision(2) << rec.mean_lf_steps_per_occ << '\n';
  }
  return os.str();
}

}  // namespace sri

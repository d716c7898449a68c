#include "srindex/subsample.hpp"

#include <algorithm>
#include <cassert>

namespace sri {

std::pair<std::vector<pos_t>, std::vector<bool>> subsample_positions(
    const std::vector<pos_t>& sorted_samples, u64 s) {
  u64 k = sorted_samples.size();
  std::vector<bool> removed(k, false);
  std::vector<pos_t> retained;
  if (k == 0) return {retained, removed};
  for (u64 i = 1; i < k; ++i)
    if (sorted_samples[i] <= sorted_samples[i - 1])
      raise(Errc::out_of_range, "subsample_positions: input not strictly increasing");

  retained.push_back(sorted_samples[0]);
  for (u64 i = 1; i + 1 < k; ++i) {
    if (sorted_samples[i + 1] - retained.back() <= s)
      removed[i] = true;
    else
      retained.push_back(sorted_samples[i]);
  }
  if (k > 1) retained.push_back(sorted_samples.back());
  return {retained, removed};
}

namespace {

pos_t cyclic_prev(pos_t sa_value, pos_t n) { return sa_value == 1 ? n : sa_value - 1; }

// Shared tail of both constructors: per-run end samples and run-first text
// positions in, locating structures out.
ExtBuild assemble(pos_t n, u64 r, pos_t sa_last, const std::vector<pos_t>& sample_by_run,
                  const std::vector<pos_t>& mark_by_run, u64 s, u8 variant) {
  if (variant > 2) raise(Errc::invalid_variant, "variant must be 0, 1 or 2");
  if (s < 1) raise(Errc::out_of_range, "s must be >= 1");
  if (s >= n) raise(Errc::s_too_large, "s >= n would degenerate the index");

  // sort samples by text position and apply the removal rule
  std::vector<u64> runs_by_value(r);
  for (u64 p = 0; p < r; ++p) runs_by_value[p] = p + 1;
  std::sort(runs_by_value.begin(), runs_by_value.end(),
            [&](u64 a, u64 b) { return sample_by_run[a - 1] < sample_by_run[b - 1]; });
  std::vector<pos_t> sorted_values(r);
  for (u64 i = 0; i < r; ++i) sorted_values[i] = sample_by_run[runs_by_value[i] - 1];

  auto [retained_values, removed_sorted] = subsample_positions(sorted_values, s);
  (void)retained_values;

  std::vector<bool> removed_by_run(r + 1, false);
  for (u64 i = 0; i < r; ++i)
    if (removed_sorted[i]) removed_by_run[runs_by_value[i]] = true;

  DenseBitVector removed_bv(r);
  for (u64 p = 1; p <= r; ++p)
    if (removed_by_run[p]) removed_bv.set(p);
  removed_bv.build_rank();

  // a run's first-letter mark survives iff the sample of the cyclically
  // preceding run survives
  auto mark_removed = [&](u64 p) { return removed_by_run[p == 1 ? r : p - 1]; };

  std::vector<std::pair<pos_t, u64>> retained_marks;  // (text position, run)
  std::vector<pos_t> removed_mark_positions;
  for (u64 p = 1; p <= r; ++p) {
    if (mark_removed(p))
      removed_mark_positions.push_back(mark_by_run[p - 1]);
    else
      retained_marks.emplace_back(mark_by_run[p - 1], p);
  }
  std::sort(retained_marks.begin(), retained_marks.end());
  std::sort(removed_mark_positions.begin(), removed_mark_positions.end());

  u64 kept = retained_marks.size();
  std::vector<pos_t> first_positions(kept);
  PackedIntArray first_to_run(kept, bits_for(r));
  for (u64 q = 0; q < kept; ++q) {
    first_positions[q] = retained_marks[q].first;
    first_to_run.set(q, retained_marks[q].second);
  }

  PackedIntArray samples(kept, bits_for(n));
  u64 idx = 0;
  for (u64 p = 1; p <= r; ++p)
    if (!removed_by_run[p]) samples.set(idx++, sample_by_run[p - 1]);
  if (idx != kept) raise(Errc::internal, "retained sample and mark counts disagree");
  if (!removed_by_run[r] && samples.get(kept - 1) != cyclic_prev(sa_last, n))
    raise(Errc::internal, "last retained sample does not match SA[n]");

  // Valid / ValidArea over the gaps between consecutive retained marks
  std::optional<DenseBitVector> valid;
  PackedIntArray valid_area;
  if (variant >= 1) {
    DenseBitVector v(kept);
    std::vector<u64> dists;
    for (u64 q = 1; q <= kept; ++q) {
      pos_t f = first_positions[q - 1];
      // first removed mark after f, cyclically
      auto it = std::upper_bound(removed_mark_positions.begin(), removed_mark_positions.end(), f);
      pos_t dist = 0;
      bool dirty = false;
      if (q < kept) {
        if (it != removed_mark_positions.end() && *it < first_positions[q]) {
          dirty = true;
          dist = *it - f;
        }
      } else if (!removed_mark_positions.empty()) {
        // last gap wraps past n and ends before the first retained mark
        if (it != removed_mark_positions.end()) {
          dirty = true;
          dist = *it - f;
        } else if (removed_mark_positions.front() < first_positions[0]) {
          dirty = true;
          dist = removed_mark_positions.front() + n - f;
        }
      }
      if (!dirty)
        v.set(q);
      else if (variant == 2) {
        if (dist < 1 || dist >= s) raise(Errc::internal, "removed-mark distance out of [1, s)");
        dists.push_back(dist);
      }
    }
    v.build_rank();
    valid = std::move(v);
    if (variant == 2) valid_area = PackedIntArray::from_values(dists, bits_for(s - 1));
  }

  ExtBuild out;
  out.core = LocateCore(SparseBitVector(n, first_positions), std::move(first_to_run),
                        std::move(samples), sa_last);
  out.ext = SubsampleExt(s, variant, std::move(removed_bv), std::move(valid),
                         std::move(valid_area));
  return out;
}

}  // namespace

ExtBuild build_ext(const SuffixContext& ctx, u64 s, u8 variant) {
  std::vector<pos_t> sample_by_run(ctx.r), mark_by_run(ctx.r);
  for (u64 p = 1; p <= ctx.r; ++p) {
    sample_by_run[p - 1] = cyclic_prev(ctx.sa_at(ctx.run_end(p)), ctx.n);
    mark_by_run[p - 1] = cyclic_prev(ctx.sa_at(ctx.run_start(p)), ctx.n);
  }
  return assemble(ctx.n, ctx.r, ctx.sa_last, sample_by_run, mark_by_run, s, variant);
}

ExtBuild build_ext_direct(const RlBwt& rlbwt, pos_t sa_last, u64 s, u8 variant) {
  pos_t n = rlbwt.n();
  u64 r = rlbwt.r();
  std::vector<pos_t> sample_by_run(r, 0), mark_by_run(r, 0);
  // Backward traversal: row 1 holds the sentinel suffix (SA value n), and
  // each LF-step moves to the row whose SA value is one smaller.
  pos_t j = 1;
  for (pos_t t = 0; t < n; ++t) {
    pos_t sa_j = n - t;
    u64 p = rlbwt.run_of(j);
    if (rlbwt.is_run_end(j)) sample_by_run[p - 1] = cyclic_prev(sa_j, n);
    if (j == rlbwt.run_start(p)) mark_by_run[p - 1] = cyclic_prev(sa_j, n);
    j = rlbwt.lf(j);
  }
  if (j != 1) raise(Errc::internal, "LF traversal did not close its cycle");
  return assemble(n, r, sa_last, sample_by_run, mark_by_run, s, variant);
}

}  // namespace sri

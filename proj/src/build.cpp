#include "srindex/build.hpp"

#include <algorithm>
#include <vector>

namespace sri {

namespace {

[[noreturn]] void fail(const std::string& predicate, const std::string& detail) {
  raise(Errc::verification_failed, "verification failed [" + predicate + "]: " + detail);
}

pos_t cyclic_prev(pos_t sa_value, pos_t n) { return sa_value == 1 ? n : sa_value - 1; }

// sorted end-of-run sample positions with their removal state
struct SampleLayout {
  std::vector<pos_t> sorted_values;
  std::vector<bool> removed;  // aligned with sorted_values
};

SampleLayout sample_layout(const SrIndex& index, const SuffixContext& ctx) {
  SampleLayout lay;
  std::vector<std::pair<pos_t, u64>> by_value(ctx.r);
  for (u64 p = 1; p <= ctx.r; ++p)
    by_value[p - 1] = {cyclic_prev(ctx.sa_at(ctx.run_end(p)), ctx.n), p};
  std::sort(by_value.begin(), by_value.end());
  lay.sorted_values.resize(ctx.r);
  lay.removed.resize(ctx.r);
  for (u64 i = 0; i < ctx.r; ++i) {
    lay.sorted_values[i] = by_value[i].first;
    lay.removed[i] = index.ext().removed().access(by_value[i].second);
  }
  return lay;
}

}  // namespace

void verify_lemmas(const SrIndex& index, const SuffixContext& ctx) {
  const pos_t n = index.meta().n;
  const u64 r = index.meta().r;
  const u64 s = index.meta().s;
  const u64 kept = index.retained();

  u64 bound = std::min<u64>(r, 2 * ((n + s) / (s + 1)));
  if (kept > bound)
    fail("lemma1_bound", std::to_string(kept) + " retained samples exceed " + std::to_string(bound));

  SampleLayout lay = sample_layout(index, ctx);

  std::vector<pos_t> retained;
  retained.reserve(kept);
  for (u64 i = 0; i < lay.sorted_values.size(); ++i)
    if (!lay.removed[i]) retained.push_back(lay.sorted_values[i]);
  if (retained.size() != kept) fail("retained_count", "removed flags disagree with retained count");

  // no window of s+1 consecutive positions holds 3 retained samples
  for (u64 i = 0; i + 2 < retained.size(); ++i)
    if (retained[i + 2] - retained[i] <= s)
      fail("window_bound", "3 retained samples within " + std::to_string(s + 1) + " positions");

  // every removed sample has surviving neighbors at distance <= s
  pos_t prev_retained = 0;
  bool have_prev = false;
  for (u64 i = 0; i < lay.sorted_values.size(); ++i) {
    if (!lay.removed[i]) {
      prev_retained = lay.sorted_values[i];
      have_prev = true;
      continue;
    }
    auto next = std::lower_bound(retained.begin(), retained.end(), lay.sorted_values[i]);
    if (!have_prev || next == retained.end())
      fail("lemma2_gap", "removed sample lacks a surviving neighbor");
    if (*next - prev_retained > s)
      fail("lemma2_gap", "surviving neighbors further apart than s around a removed sample");
  }

  u64 locate_bits = 8 * (index.core().size_in_bytes() + index.ext().size_in_bytes() -
                         index.ext().removed().size_in_bytes());
  u64 size_cap = bound * (2ull * bits_for(n) + kLocateBitsPerSampleSlack);
  if (locate_bits > size_cap)
    fail("size_bound", std::to_string(locate_bits) + " locate bits exceed " + std::to_string(size_cap));
}

void verify_full_oracle(const SrIndex& index, const SuffixContext& ctx) {
  const pos_t n = ctx.n;
  const u64 s = index.meta().s;

  // retained First marks point back at their run starts
  for (u64 q = 1; q <= index.retained(); ++q) {
    pos_t f = index.core().first().select1(q);
    u64 p = index.core().run_of_mark(q);
    if (f != cyclic_prev(ctx.sa_at(ctx.run_start(p)), n))
      fail("first_bijection", "mark " + std::to_string(q) + " does not match run " + std::to_string(p));
  }

  // every toehold resolves to the true SA value at its run end
  for (u64 q = 1; q <= ctx.r; ++q) {
    PhiResult t = index.toehold_resolve(q);
    if (t.used_steps >= s)
      fail("toehold_steps", "toehold spent " + std::to_string(t.used_steps) + " steps");
    if (t.value != ctx.sa_at(ctx.run_end(q)))
      fail("toehold_oracle", "run " + std::to_string(q) + " resolved to a wrong SA value");
  }

  // every SA[j-1] is reachable from i = SA[j]-1 through the query machinery
  for (pos_t j = 2; j <= n; ++j) {
    pos_t expect = ctx.sa_at(j - 1);
    pos_t i = cyclic_prev(ctx.sa_at(j), n);
    pos_t row = j - 1;
    bool solved = false;
    u64 k = 0;
    for (; k < s; ++k) {
      u64 q = index.rlbwt().run_of(row);
      if (index.rlbwt().is_run_end(row) && !index.ext().removed().access(q)) {
        pos_t sample = sample_of_run(index.core(), index.ext().removed(), q);
        pos_t value = (sample % n) + 1 + k;
        if (value != expect) fail("walk_oracle", "LF walk disagrees at row " + std::to_string(j));
        solved = true;
        break;
      }
      row = index.rlbwt().lf(row);
    }
    if (!solved && phi(index.core(), index.ext().removed(), i) != expect)
      fail("phi_oracle", "phi disagrees at row " + std::to_string(j));
    if (index.meta().variant >= 1 &&
        index.locate_fastpath_check(i) == SrIndex::Fastpath::use_phi &&
        phi(index.core(), index.ext().removed(), i) != expect)
      fail("fastpath_oracle", "certified phi disagrees at row " + std::to_string(j));
  }
}

SrIndex build_index(const Text& text, const SuffixContext& ctx, const BuildOptions& options) {
  RlBwt rlbwt(ctx);
  ExtBuild eb = options.direct_construction
                    ? build_ext_direct(rlbwt, ctx.sa_last, options.s, options.variant)
                    : build_ext(ctx, options.s, options.variant);
  SrIndex index(std::move(rlbwt), std::move(eb.core), std::move(eb.ext), text.code_map(),
                text.checksum());
  if (options.verify >= VerifyLevel::lemmas) verify_lemmas(index, ctx);
  if (options.verify == VerifyLevel::full_oracle) {
    if (ctx.n > options.full_oracle_cap)
      raise(Errc::out_of_range, "full-oracle verification capped at smaller texts");
    verify_full_oracle(index, ctx);
  }
  return index;
}

SrIndex build_index(const Text& text, const BuildOptions& options) {
  SuffixContext ctx = SuffixContext::build(text);
  return build_index(text, ctx, options);
}

}  // namespace sri

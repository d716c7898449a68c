#include "srindex/suffix.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace sri {

namespace {

constexpr u32 kEmpty = std::numeric_limits<u32>::max();

// SA-IS over an integer alphabet [0..K). Requires s[n-1] to be the unique
// smallest symbol. Fills sa with 0-based suffix start positions.
template <typename Sym>
void sais(const Sym* s, u32* sa, u32 n, u32 K) {
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  std::vector<bool> is_s(n);
  is_s[n - 1] = true;
  for (u32 i = n - 1; i-- > 0;)
    is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
  auto is_lms = [&](u32 i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

  std::vector<u32> bkt(K);
  auto bucket_bounds = [&](bool ends) {
    std::fill(bkt.begin(), bkt.end(), 0);
    for (u32 i = 0; i < n; ++i) ++bkt[s[i]];
    u32 sum = 0;
    for (u32 c = 0; c < K; ++c) {
      sum += bkt[c];
      bkt[c] = ends ? sum : sum - bkt[c];
    }
  };

  auto induce = [&]() {
    bucket_bounds(false);
    for (u32 i = 0; i < n; ++i) {
      u32 j = sa[i];
      if (j != kEmpty && j != 0 && !is_s[j - 1]) sa[bkt[s[j - 1]]++] = j - 1;
    }
    bucket_bounds(true);
    for (u32 i = n; i-- > 0;) {
      u32 j = sa[i];
      if (j != kEmpty && j != 0 && is_s[j - 1]) sa[--bkt[s[j - 1]]] = j - 1;
    }
  };

  std::vector<u32> lms;  // LMS positions in text order
  for (u32 i = 1; i < n; ++i)
    if (is_lms(i)) lms.push_back(i);
  u32 n1 = static_cast<u32>(lms.size());

  // sort the LMS substrings by one induction round
  std::fill(sa, sa + n, kEmpty);
  bucket_bounds(true);
  for (u32 k = n1; k-- > 0;) sa[--bkt[s[lms[k]]]] = lms[k];
  induce();

  // compact the LMS positions, now in sorted substring order
  std::vector<u32> sorted_lms;
  sorted_lms.reserve(n1);
  for (u32 i = 0; i < n; ++i)
    if (sa[i] != kEmpty && is_lms(sa[i])) sorted_lms.push_back(sa[i]);

  // substring end: the next LMS position (inclusive)
  auto ordinal_of = [&](u32 p) {
    return static_cast<u32>(std::lower_bound(lms.begin(), lms.end(), p) - lms.begin());
  };
  auto substr_equal = [&](u32 a, u32 b) {
    u32 ea = ordinal_of(a) + 1 < n1 ? lms[ordinal_of(a) + 1] : n - 1;
    u32 eb = ordinal_of(b) + 1 < n1 ? lms[ordinal_of(b) + 1] : n - 1;
    if (ea - a != eb - b) return false;
    for (u32 o = 0; o <= ea - a; ++o)
      if (s[a + o] != s[b + o]) return false;
    return true;
  };

  std::vector<u32> name_of(n1);
  u32 names = 0;
  u32 prev = kEmpty;
  for (u32 k = 0; k < n1; ++k) {
    u32 p = sorted_lms[k];
    if (prev == kEmpty || !substr_equal(prev, p)) ++names;
    name_of[ordinal_of(p)] = names - 1;
    prev = p;
  }

  std::vector<u32> sa1(n1);
  if (names == n1) {
    for (u32 k = 0; k < n1; ++k) sa1[name_of[k]] = k;
  } else {
    std::vector<u32> reduced = name_of;
    sais<u32>(reduced.data(), sa1.data(), n1, names);
  }

  // final induction from the fully sorted LMS order
  std::fill(sa, sa + n, kEmpty);
  bucket_bounds(true);
  for (u32 k = n1; k-- > 0;) sa[--bkt[s[lms[sa1[k]]]]] = lms[sa1[k]];
  induce();
}

}  // namespace

std::vector<u32> build_suffix_array(const Text& text) {
  u64 n = text.n();
  if (n >= kEmpty) raise(Errc::out_of_range, "build_suffix_array: text too long for 32-bit rows");
  std::vector<u32> sa(n);
  sais<sym_t>(text.codes().data(), sa.data(), static_cast<u32>(n), text.sigma());
  for (auto& v : sa) ++v;  // expose 1-based values
  return sa;
}

std::vector<sym_t> derive_bwt(const Text& text, const std::vector<u32>& sa) {
  std::vector<sym_t> bwt(sa.size());
  for (u64 i = 0; i < sa.size(); ++i)
    bwt[i] = sa[i] == 1 ? text.at(text.n()) : text.at(sa[i] - 1);
  return bwt;
}

std::pair<std::vector<pos_t>, u64> compute_runs(const std::vector<sym_t>& bwt) {
  std::vector<pos_t> starts;
  for (u64 i = 0; i < bwt.size(); ++i)
    if (i == 0 || bwt[i] != bwt[i - 1]) starts.push_back(i + 1);
  u64 r = starts.size();
  return {std::move(starts), r};
}

std::vector<u64> compute_C(const Text& text) {
  std::vector<u64> freq(text.sigma(), 0);
  for (sym_t c : text.codes()) ++freq[c];
  std::vector<u64> c_table(text.sigma() + 1, 0);
  for (u32 c = 0; c < text.sigma(); ++c) c_table[c + 1] = c_table[c] + freq[c];
  return c_table;
}

SuffixContext SuffixContext::build(const Text& text) {
  SuffixContext ctx;
  ctx.n = text.n();
  ctx.sigma = text.sigma();
  ctx.sa = build_suffix_array(text);
  ctx.bwt = derive_bwt(text, ctx.sa);
  ctx.c_table = compute_C(text);
  auto [starts, r] = compute_runs(ctx.bwt);
  ctx.run_starts = std::move(starts);
  ctx.r = r;
  ctx.sa_last = ctx.sa.back();
  assert(ctx.sa.front() == ctx.n);  // sentinel suffix sorts first
  return ctx;
}

}  // namespace sri

#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "srindex/persist.hpp"
#include "srindex/rlbwt.hpp"
#include "srindex/subsample.hpp"

using namespace sri;
using namespace sri::testing;

TEST_CASE("sequential removal rule") {
  auto [retained, removed] = subsample_positions({2, 3, 5, 6, 7, 10, 11, 12}, 4);
  CHECK(retained == std::vector<pos_t>{2, 6, 10, 12});
  CHECK(removed == std::vector<bool>{false, true, true, false, true, false, true, false});

  auto [r1, m1] = subsample_positions({4, 9, 23, 24}, 1);
  CHECK(r1 == std::vector<pos_t>{4, 9, 23, 24});  // s=1 never removes distinct integers
  CHECK(std::count(m1.begin(), m1.end(), true) == 0);

  auto [r2, m2] = subsample_positions({1, 2, 3}, 1000);
  CHECK(r2 == std::vector<pos_t>{1, 3});

  CHECK_THROWS_AS(subsample_positions({5, 5}, 2), Error);
}

TEST_CASE("rule agrees with the independent restatement") {
  Rng rng(47);
  for (int round = 0; round < 200; ++round) {
    std::set<pos_t> values;
    u64 count = 1 + rng.below(60);
    while (values.size() < count) values.insert(1 + rng.below(500));
    std::vector<pos_t> sorted(values.begin(), values.end());
    u64 s = 1 + rng.below(30);
    CHECK(subsample_positions(sorted, s).first == naive_subsample(sorted, s));
  }
}

TEST_CASE("worked example s=4: removed runs, retained marks, valid areas") {
  Text t = abra_text();
  SuffixContext ctx = SuffixContext::build(t);
  ExtBuild eb = build_ext(ctx, 4, 2);

  std::vector<bool> removed_runs;
  for (u64 p = 1; p <= 8; ++p) removed_runs.push_back(eb.ext.removed().access(p));
  CHECK(removed_runs == std::vector<bool>{1, 0, 1, 0, 1, 1, 0, 0});

  CHECK(eb.core.retained() == 4);
  std::vector<pos_t> marks;
  std::vector<u64> runs;
  for (u64 q = 1; q <= 4; ++q) {
    marks.push_back(eb.core.first().select1(q));
    runs.push_back(eb.core.run_of_mark(q));
  }
  CHECK(marks == std::vector<pos_t>{3, 7, 9, 11});
  CHECK(runs == std::vector<u64>{5, 3, 8, 1});

  // the gap after mark 3 holds the removed mark at 5, two positions away
  auto d1 = eb.ext.next_removed_dist(1);
  REQUIRE(d1.has_value());
  CHECK(*d1 == 2);
  for (u64 q = 1; q <= 4; ++q) {
    auto d = eb.ext.next_removed_dist(q);
    if (d) CHECK(*d < 4);
    CHECK(eb.ext.valid().access(q) == !d.has_value());
  }
}

TEST_CASE("s=1 builds the full structures under every variant") {
  Rng rng(53);
  for (u8 variant : {0, 1, 2}) {
    Text t = load_text(random_text(rng, 200, 4));
    SuffixContext ctx = SuffixContext::build(t);
    ExtBuild eb = build_ext(ctx, 1, variant);
    CHECK(eb.ext.removed_count() == 0);
    CHECK(eb.core.retained() == ctx.r);
    if (variant >= 1) CHECK(eb.ext.valid().ones() == eb.ext.valid().size());
    if (variant == 2) CHECK(eb.ext.valid_area().size() == 0);
  }
}

TEST_CASE("lemma bounds hold on fuzzed builds") {
  Rng rng(59);
  for (int round = 0; round < 60; ++round) {
    u32 letters = 1 + static_cast<u32>(rng.below(6));
    std::string s_text = round % 2 == 0 ? random_text(rng, 80 + rng.below(1200), letters)
                                        : repetitive_text(rng, 30, 15, 0.04, letters);
    Text t = load_text(s_text);
    SuffixContext ctx = SuffixContext::build(t);
    for (u64 s : {1ull, 2ull, 4ull, 8ull, 64ull}) {
      if (s >= ctx.n) continue;
      ExtBuild eb = build_ext(ctx, s, 2);

      u64 kept = eb.core.retained();
      CHECK(kept <= std::min<u64>(ctx.r, 2 * ((ctx.n + s) / (s + 1))));

      // reconstruct sorted samples for the gap checks
      std::vector<pos_t> all;
      std::vector<pos_t> retained;
      for (u64 p = 1; p <= ctx.r; ++p) {
        pos_t end_row = ctx.run_end(p);
        pos_t v = ctx.sa_at(end_row) == 1 ? ctx.n : ctx.sa_at(end_row) - 1;
        all.push_back(v);
        if (!eb.ext.removed().access(p)) retained.push_back(v);
      }
      std::sort(all.begin(), all.end());
      std::sort(retained.begin(), retained.end());

      for (u64 i = 0; i + 2 < retained.size(); ++i)
        CHECK(retained[i + 2] - retained[i] > s);

      // removed samples keep surviving neighbors within s; clean stretches
      // between distant neighbors (no removals hiding there)
      for (u64 i = 0; i + 1 < retained.size(); ++i) {
        auto lo = std::upper_bound(all.begin(), all.end(), retained[i]);
        auto hi = std::lower_bound(all.begin(), all.end(), retained[i + 1]);
        bool any_removed_between = lo != hi;
        if (any_removed_between) CHECK(retained[i + 1] - retained[i] <= s);
        if (retained[i + 1] - retained[i] > s) CHECK_FALSE(any_removed_between);
      }
    }
  }
}

TEST_CASE("direct LF-traversal construction produces identical structures") {
  Rng rng(61);
  for (int round = 0; round < 12; ++round) {
    u32 letters = 1 + static_cast<u32>(rng.below(5));
    std::string s_text = round % 2 == 0 ? random_text(rng, 50 + rng.below(700), letters)
                                        : repetitive_text(rng, 40, 10, 0.03, letters);
    Text t = load_text(s_text);
    SuffixContext ctx = SuffixContext::build(t);
    RlBwt bwt(ctx);
    for (u64 s : {1ull, 3ull, 16ull}) {
      if (s >= ctx.n) continue;
      for (u8 variant : {0, 2}) {
        ExtBuild a = build_ext(ctx, s, variant);
        ExtBuild b = build_ext_direct(bwt, ctx.sa_last, s, variant);
        SrIndex ia(RlBwt(ctx), std::move(a.core), std::move(a.ext), t.code_map(), t.checksum());
        SrIndex ib(RlBwt(ctx), std::move(b.core), std::move(b.ext), t.code_map(), t.checksum());
        CHECK(serialize_index(ia) == serialize_index(ib));
      }
    }
  }
}

TEST_CASE("serialized locate structures shrink as s grows") {
  Rng rng(67);
  Text t = load_text(repetitive_text(rng, 400, 40, 0.01, 4));
  SuffixContext ctx = SuffixContext::build(t);
  for (u8 variant : {0, 1, 2}) {
    u64 prev = ~u64{0};
    for (u64 s : {1ull, 2ull, 4ull, 8ull, 16ull, 64ull}) {
      ExtBuild eb = build_ext(ctx, s, variant);
      SrIndex idx(RlBwt(ctx), std::move(eb.core), std::move(eb.ext), t.code_map(), t.checksum());
      u64 bytes = serialize_index(idx).size();
      CHECK(bytes <= prev);
      prev = bytes;
    }
  }
}

TEST_CASE("degenerate parameters are rejected") {
  Text t = abra_text();
  SuffixContext ctx = SuffixContext::build(t);
  CHECK_THROWS_AS(build_ext(ctx, 12, 0), Error);  // s >= n
  CHECK_THROWS_AS(build_ext(ctx, 0, 0), Error);
  CHECK_THROWS_AS(build_ext(ctx, 4, 3), Error);
}

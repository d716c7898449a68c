#include <doctest.h>

#include "helpers.hpp"
#include "srindex/locate_structs.hpp"
#include "srindex/subsample.hpp"

using namespace sri;
using namespace sri::testing;

TEST_CASE("worked example, full sampling: first, samples, pred, phi") {
  Text t = abra_text();
  SuffixContext ctx = SuffixContext::build(t);
  ExtBuild eb = build_ext(ctx, 1, 0);

  CHECK(eb.core.retained() == 8);
  std::vector<pos_t> first_ones;
  for (u64 q = 1; q <= 8; ++q) first_ones.push_back(eb.core.first().select1(q));
  CHECK(first_ones == std::vector<pos_t>{3, 5, 7, 8, 9, 10, 11, 12});

  // samples in run order: text position before each run-end suffix
  std::vector<pos_t> samples;
  for (u64 p = 1; p <= 8; ++p) samples.push_back(eb.core.retained_sample(p));
  CHECK(samples == std::vector<pos_t>{11, 10, 7, 12, 3, 5, 6, 2});

  auto p6 = eb.core.pred_first(6);
  REQUIRE(p6.has_value());
  CHECK(p6->position == 5);
  CHECK(p6->ordinal == 2);
  auto p3 = eb.core.pred_first(3);
  REQUIRE(p3.has_value());
  CHECK(p3->position == 3);
  CHECK(p3->ordinal == 1);
  CHECK_FALSE(eb.core.pred_first(2).has_value());

  CHECK(phi(eb.core, eb.ext.removed(), 1) == 9);
  CHECK(phi(eb.core, eb.ext.removed(), 2) == 10);
}

TEST_CASE("full sampling phi is total and matches the oracle") {
  Rng rng(41);
  for (int round = 0; round < 30; ++round) {
    u32 letters = 1 + static_cast<u32>(rng.below(5));
    std::string s = round % 2 == 0 ? random_text(rng, 2 + rng.below(2000), letters)
                                   : repetitive_text(rng, 25, 12, 0.03, letters);
    Text t = load_text(s);
    SuffixContext ctx = SuffixContext::build(t);
    OracleIndex oracle(t);
    ExtBuild eb = build_ext(ctx, 1, 0);
    CHECK(eb.ext.removed_count() == 0);
    for (pos_t j = 2; j <= ctx.n; ++j) {
      pos_t i = ctx.sa_at(j) == 1 ? ctx.n : ctx.sa_at(j) - 1;
      CHECK(phi(eb.core, eb.ext.removed(), i) == oracle.naive_phi(i));
    }
  }
}

TEST_CASE("phi offset identity within a sampled gap") {
  Text t = abra_text();
  SuffixContext ctx = SuffixContext::build(t);
  ExtBuild eb = build_ext(ctx, 1, 0);
  // consecutive positions with the same pred: phi grows by exactly 1
  for (pos_t i = 3; i < 12; ++i) {
    auto a = eb.core.pred_first(i);
    auto b = eb.core.pred_first(i + 1);
    if (a && b && a->position == b->position)
      CHECK(phi(eb.core, eb.ext.removed(), i + 1) == phi(eb.core, eb.ext.removed(), i) + 1);
  }
}

TEST_CASE("first marks point back at their runs") {
  Rng rng(43);
  for (int round = 0; round < 15; ++round) {
    Text t = load_text(random_text(rng, 2 + rng.below(800), 3));
    SuffixContext ctx = SuffixContext::build(t);
    for (u64 s : {1ull, 4ull}) {
      if (s >= ctx.n) continue;
      ExtBuild eb = build_ext(ctx, s, 0);
      for (u64 q = 1; q <= eb.core.retained(); ++q) {
        u64 p = eb.core.run_of_mark(q);
        pos_t start_row = ctx.run_start(p);
        pos_t expect = ctx.sa_at(start_row) == 1 ? ctx.n : ctx.sa_at(start_row) - 1;
        CHECK(eb.core.first().select1(q) == expect);
      }
    }
  }
}

TEST_CASE("sample_of_run honors removal") {
  Text t = abra_text();
  SuffixContext ctx = SuffixContext::build(t);

  ExtBuild full = build_ext(ctx, 1, 0);
  CHECK(sample_of_run(full.core, full.ext.removed(), 7) == 6);

  ExtBuild sub = build_ext(ctx, 4, 0);
  CHECK(sample_of_run(sub.core, sub.ext.removed(), 2) == 10);
  CHECK_THROWS_AS(sample_of_run(sub.core, sub.ext.removed(), 1), Error);
}

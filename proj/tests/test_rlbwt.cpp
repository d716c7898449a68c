#include <doctest.h>

#include "helpers.hpp"
#include "srindex/rlbwt.hpp"

using namespace sri;
using namespace sri::testing;

namespace {

struct Fixture {
  Text t = abra_text();
  SuffixContext ctx = SuffixContext::build(t);
  RlBwt bwt{ctx};
  sym_t code(char ch) const { return *t.code_map().code(static_cast<u8>(ch)); }
};

}  // namespace

TEST_CASE("worked example access, rank, lf") {
  Fixture f;
  CHECK(f.bwt.bwt_access(1) == f.code('a'));
  CHECK(f.bwt.bwt_access(9) == f.code('a'));
  CHECK(f.bwt.bwt_access(12) == f.code('b'));
  CHECK_THROWS_AS(f.bwt.bwt_access(13), Error);

  CHECK(f.bwt.rank_sym_bwt(f.code('a'), 12) == 5);
  CHECK(f.bwt.rank_sym_bwt(f.code('a'), 0) == 0);
  CHECK(f.bwt.rank_sym_bwt(200, 12) == 0);

  CHECK(f.bwt.lf(4) == 1);  // BWT[4] = '$'
  CHECK(f.bwt.lf(1) == 2);  // BWT[1] = 'a'

  // lf is a single cycle of length n
  pos_t j = 5;
  for (pos_t steps = 0; steps < f.ctx.n; ++steps) j = f.bwt.lf(j);
  CHECK(j == 5);
}

TEST_CASE("worked example backward steps") {
  Fixture f;
  auto [sp1, ep1] = f.bwt.backward_step(f.code('a'), 1, 12);
  CHECK(sp1 == 2);
  CHECK(ep1 == 6);
  auto [sp2, ep2] = f.bwt.backward_step(f.code('b'), 2, 6);
  CHECK(sp2 > ep2);  // "ba" does not occur
}

TEST_CASE("worked example run bookkeeping") {
  Fixture f;
  CHECK(f.bwt.run_of(9) == 7);
  CHECK(f.bwt.run_end(7) == 10);
  CHECK(f.bwt.run_end(8) == 12);
  CHECK(f.bwt.is_run_end(12));
  CHECK(f.bwt.is_run_end(10));
  CHECK_FALSE(f.bwt.is_run_end(9));

  CHECK(f.bwt.last_sym_run_upto(f.code('a'), 8) == 7);
  CHECK(f.bwt.last_sym_run_upto(f.code('r'), 4) == 2);
  CHECK_FALSE(f.bwt.last_sym_run_upto(f.code('d'), 2).has_value());
}

TEST_CASE("oracle equality for access, rank and lf on random texts") {
  Rng rng(19);
  for (int round = 0; round < 25; ++round) {
    u32 letters = 1 + static_cast<u32>(rng.below(8));
    std::string s = round % 2 == 0 ? random_text(rng, 2 + rng.below(2000), letters)
                                   : repetitive_text(rng, 20, 10, 0.02, letters);
    Text t = load_text(s);
    SuffixContext ctx = SuffixContext::build(t);
    RlBwt bwt(ctx);

    std::vector<pos_t> row_of(ctx.n + 1, 0);
    for (pos_t i = 1; i <= ctx.n; ++i) row_of[ctx.sa_at(i)] = i;

    std::vector<u64> counts(t.sigma(), 0);
    for (pos_t j = 1; j <= ctx.n; ++j) {
      sym_t c = ctx.bwt_at(j);
      CHECK(bwt.bwt_access(j) == c);
      ++counts[c];
      for (u32 probe = 0; probe < t.sigma(); ++probe)
        CHECK(bwt.rank_sym_bwt(static_cast<sym_t>(probe), j) == counts[probe]);
      // LF sends row j to the row of the cyclically previous suffix
      pos_t prev = ctx.sa_at(j) == 1 ? ctx.n : ctx.sa_at(j) - 1;
      CHECK(bwt.lf(j) == row_of[prev]);
    }
  }
}

TEST_CASE("iterated backward steps reproduce oracle ranges") {
  Rng rng(29);
  for (int round = 0; round < 30; ++round) {
    std::string s = random_text(rng, 2 + rng.below(500), 1 + static_cast<u32>(rng.below(4)));
    Text t = load_text(s);
    SuffixContext ctx = SuffixContext::build(t);
    RlBwt bwt(ctx);
    OracleIndex oracle(t);

    for (u64 m = 1; m <= 8; ++m) {
      if (m > t.n() - 1) break;
      PatternSet pats = sample_patterns(t, 5, m, rng.next());
      for (const auto& pat : pats.patterns) {
        pos_t sp = 1, ep = ctx.n;
        for (u64 i = pat.size(); i >= 1 && sp <= ep; --i) {
          auto [nsp, nep] = bwt.backward_step(pat[i - 1], sp, ep);
          sp = nsp;
          ep = nep;
        }
        auto expect = oracle.naive_search(pat);
        REQUIRE(sp == expect.sp);
        REQUIRE(ep == expect.ep);
      }
    }
  }
}

TEST_CASE("lf restricted to a run is an arithmetic shift") {
  Rng rng(31);
  for (int round = 0; round < 10; ++round) {
    Text t = load_text(repetitive_text(rng, 30, 8, 0.05, 3));
    SuffixContext ctx = SuffixContext::build(t);
    RlBwt bwt(ctx);
    for (u64 p = 1; p <= ctx.r; ++p) {
      pos_t lo = bwt.run_start(p), hi = bwt.run_end(p);
      for (pos_t j = lo + 1; j <= hi; ++j) CHECK(bwt.lf(j - 1) == bwt.lf(j) - 1);
    }
  }
}

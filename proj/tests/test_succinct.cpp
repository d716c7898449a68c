#include <doctest.h>

#include <algorithm>
#include <vector>

#include "srindex/bitvector.hpp"
#include "srindex/packed_ints.hpp"
#include "srindex/run_head_seq.hpp"
#include "srindex/sparse_bitvector.hpp"
#include "srindex/text.hpp"

using namespace sri;

namespace {

std::vector<bool> random_bits(Rng& rng, u64 u, double density) {
  std::vector<bool> bits(u);
  for (u64 i = 0; i < u; ++i) bits[i] = rng.unit() < density;
  return bits;
}

std::vector<pos_t> positions_of(const std::vector<bool>& bits) {
  std::vector<pos_t> pos;
  for (u64 i = 0; i < bits.size(); ++i)
    if (bits[i]) pos.push_back(i + 1);
  return pos;
}

}  // namespace

TEST_CASE("packed ints store and retrieve across word boundaries") {
  Rng rng(7);
  for (u8 width : {1, 3, 7, 13, 24, 33, 48, 63, 64}) {
    std::vector<u64> values(200);
    u64 mask = width == 64 ? ~u64{0} : (u64{1} << width) - 1;
    for (auto& v : values) v = rng.next() & mask;
    PackedIntArray a = PackedIntArray::from_values(values, width);
    for (u64 i = 0; i < values.size(); ++i) CHECK(a.get(i) == values[i]);
  }
}

TEST_CASE("dense bitvector rank/select match a naive count") {
  // hand example: bits 101001
  DenseBitVector hand(std::vector<bool>{1, 0, 1, 0, 0, 1});
  CHECK(hand.rank1(4) == 2);
  CHECK(hand.select1(3) == 6);
  CHECK(hand.access(1));
  CHECK_FALSE(hand.access(2));
  CHECK_THROWS_AS(hand.rank1(7), Error);
  CHECK_THROWS_AS(hand.select1(4), Error);

  Rng rng(11);
  for (u64 u : {1ull, 17ull, 64ull, 65ull, 511ull, 512ull, 513ull, 4096ull}) {
    for (double density : {0.0, 0.02, 0.5, 1.0}) {
      auto bits = random_bits(rng, u, density);
      DenseBitVector bv(bits);
      u64 ones = 0, zeros = 0;
      for (u64 p = 1; p <= u; ++p) {
        ones += bits[p - 1];
        CHECK(bv.rank1(p) == ones);
        if (bits[p - 1]) CHECK(bv.select1(ones) == p);
        zeros += !bits[p - 1];
        if (!bits[p - 1]) CHECK(bv.select0(zeros) == p);
      }
    }
  }
}

TEST_CASE("sparse bitvector agrees with dense semantics") {
  // hand example: bits 101001, pred
  SparseBitVector hand(6, {1, 3, 6});
  CHECK(hand.rank1(4) == 2);
  CHECK(hand.select1(3) == 6);
  REQUIRE(hand.pred(5).has_value());
  CHECK(hand.pred(5)->position == 3);
  CHECK(hand.pred(5)->ordinal == 2);
  SparseBitVector empty(6, {});
  CHECK_FALSE(empty.pred(5).has_value());

  Rng rng(13);
  for (u64 u : {1ull, 10ull, 100ull, 1000ull, 4096ull}) {
    for (double density : {0.005, 0.1, 0.9}) {
      auto bits = random_bits(rng, u, density);
      auto pos = positions_of(bits);
      SparseBitVector bv(u, pos);
      CHECK(bv.ones() == pos.size());
      u64 ones = 0;
      for (u64 p = 1; p <= u; ++p) {
        ones += bits[p - 1];
        CHECK(bv.rank1(p) == ones);
        CHECK(bv.access(p) == static_cast<bool>(bits[p - 1]));
        auto pr = bv.pred(p);
        if (ones == 0) {
          CHECK_FALSE(pr.has_value());
        } else {
          REQUIRE(pr.has_value());
          CHECK(pr->ordinal == ones);
          CHECK(pr->position == pos[ones - 1]);
        }
      }
      for (u64 k = 1; k <= pos.size(); ++k) CHECK(bv.select1(k) == pos[k - 1]);
    }
  }
}

TEST_CASE("sparse bitvector stays within the Elias-Fano space budget") {
  Rng rng(17);
  for (u64 u : {1u << 12, 1u << 16, 1u << 20}) {
    for (u64 k : {u64{16}, u64{256}, u64{4096}}) {
      std::vector<pos_t> pos;
      std::vector<bool> seen(u + 1, false);
      while (pos.size() < k) {
        pos_t p = 1 + rng.below(u);
        if (!seen[p]) {
          seen[p] = true;
          pos.push_back(p);
        }
      }
      std::sort(pos.begin(), pos.end());
      SparseBitVector bv(u, pos);
      double budget_bits = static_cast<double>(k) * (2.0 + bits_for(u / k)) + 512.0;
      CHECK(static_cast<double>(bv.size_in_bytes()) * 8 <= 2.0 * budget_bits);
    }
  }
}

TEST_CASE("run head sequence rank/select over the worked example heads") {
  Text t = load_text("abracadabra");
  // run heads of BWT "ard$rcaaaabb" are a r d $ r c a b
  auto code = [&](char ch) { return *t.code_map().code(static_cast<u8>(ch)); };
  std::vector<sym_t> heads = {code('a'), code('r'), code('d'), 0,
                              code('r'), code('c'), code('a'), code('b')};
  RunHeadSeq seq(heads, t.sigma());
  CHECK(seq.rank(code('a'), 8) == 2);
  CHECK(seq.select(code('a'), 2) == 7);
  CHECK(seq.rank(code('a'), 0) == 0);
  CHECK(seq.access(4) == 0);
  CHECK_THROWS_AS(seq.select(code('a'), 3), Error);
  CHECK_THROWS_AS(seq.select(code('a'), 0), Error);

  // absent symbol
  CHECK(seq.rank(200, 8) == 0);
}

TEST_CASE("run head sequence matches naive counting on random sequences") {
  Rng rng(23);
  for (u32 sigma : {2u, 5u, 30u}) {
    std::vector<sym_t> heads(500);
    for (auto& h : heads) h = static_cast<sym_t>(rng.below(sigma));
    RunHeadSeq seq(heads, sigma);
    for (u32 c = 0; c < sigma; ++c) {
      u64 count = 0;
      for (u64 i = 1; i <= heads.size(); ++i) {
        if (heads[i - 1] == c) {
          ++count;
          CHECK(seq.select(static_cast<sym_t>(c), count) == i);
        }
        CHECK(seq.rank(static_cast<sym_t>(c), i) == count);
      }
    }
  }
}

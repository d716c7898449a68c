/*
 * text.hpp: input text handling. Raw bytes are compacted to dense codes
 * with code 0 reserved for an appended sentinel that is unique and smallest.
 * Also hosts the synthetic mutated-DNA generator and pattern sampling used
 * by the benchmark driver.
 */

#ifndef SRINDEX_TEXT_HPP_
#define SRINDEX_TEXT_HPP_

#include <array>
#include <cassert>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "srindex/common.hpp"

namespace sri {

// Seeded PRNG used everywhere randomness is needed. The engine is the
// standard-mandated mt19937_64; bounded draws use Lemire reduction so that
// streams are identical across compilers.
class Rng {
 public:
  explicit Rng(u64 seed) : eng_(seed) {}

  u64 next() { return eng_(); }

  // uniform in [0, bound)
  u64 below(u64 bound) {
    assert(bound > 0);
    return static_cast<u64>((static_cast<__uint128_t>(next()) * bound) >> 64);
  }

  // uniform in [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static constexpr const char* kAlgorithmId = "mt19937_64+lemire";

 private:
  std::mt19937_64 eng_;
};

// Bijection between the bytes present in the input and dense codes
// [1..sigma); code 0 is the sentinel and has no byte.
struct CodeMap {
  std::array<u8, 256> byte_of_code{};
  std::array<int, 256> code_of_byte{};  // -1 when the byte does not occur
  u32 sigma = 0;

  CodeMap() { code_of_byte.fill(-1); }

  std::optional<sym_t> code(u8 byte) const {
    int c = code_of_byte[byte];
    return c < 0 ? std::nullopt : std::optional<sym_t>(static_cast<sym_t>(c));
  }
};

class Text {
 public:
  Text() = default;
  Text(std::vector<sym_t> data, CodeMap map, u64 checksum)
      : data_(std::move(data)), map_(std::move(map)), checksum_(checksum) {}

  pos_t n() const { return data_.size(); }  // includes the sentinel
  u32 sigma() const { return map_.sigma; }
  u64 checksum() const { return checksum_; }
  const CodeMap& code_map() const { return map_; }
  const std::vector<sym_t>& codes() const { return data_; }

  // p is 1-based
  sym_t at(pos_t p) const {
    assert(p >= 1 && p <= data_.size());
    return data_[p - 1];
  }

  // original bytes, without the sentinel
  std::vector<u8> decode() const;

  // translate raw pattern bytes to codes; nullopt if any byte is absent
  std::optional<std::vector<sym_t>> encode_pattern(std::span<const u8> bytes) const;

 private:
  std::vector<sym_t> data_;
  CodeMap map_;
  u64 checksum_ = 0;
};

struct PatternSet {
  std::vector<std::vector<sym_t>> patterns;
  pos_t m = 0;
  u64 rng_seed = 0;
};

Text load_text(std::span<const u8> raw_bytes);
Text load_text(const std::string& s);

// `copies` copies of a uniform random {A,C,G,T} seed of length seed_len,
// every copied symbol independently replaced by a different base with the
// given probability. Deterministic per rng_seed.
Text gen_mutated_dna(u64 seed_len, u64 copies, double mutation_rate, u64 rng_seed);

// Uniform positions with replacement, sentinel excluded, so every sampled
// pattern occurs in the text.
PatternSet sample_patterns(const Text& text, u64 count, pos_t m, u64 rng_seed);

std::vector<u8> pattern_bytes(const Text& text, const std::vector<sym_t>& pattern);

}  // namespace sri

#endif  // SRINDEX_TEXT_HPP_

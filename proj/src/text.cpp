#include "srindex/text.hpp"

#include <algorithm>

namespace sri {

std::vector<u8> Text::decode() const {
  std::vector<u8> out;
  out.reserve(data_.size() - 1);
  for (u64 i = 0; i + 1 < data_.size(); ++i) out.push_back(map_.byte_of_code[data_[i]]);
  return out;
}

std::optional<std::vector<sym_t>> Text::encode_pattern(std::span<const u8> bytes) const {
  std::vector<sym_t> out;
  out.reserve(bytes.size());
  for (u8 b : bytes) {
    auto c = map_.code(b);
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  return out;
}

Text load_text(std::span<const u8> raw_bytes) {
  if (raw_bytes.empty()) raise(Errc::empty_input, "load_text: empty input");

  std::array<bool, 256> present{};
  for (u8 b : raw_bytes) {
    if (b == 0) raise(Errc::sentinel_byte_in_input, "load_text: input contains the reserved byte 0x00");
    present[b] = true;
  }

  CodeMap map;
  sym_t next_code = 1;  // 0 is the sentinel
  for (u32 b = 0; b < 256; ++b) {
    if (present[b]) {
      map.code_of_byte[b] = next_code;
      map.byte_of_code[next_code] = static_cast<u8>(b);
      ++next_code;
    }
  }
  map.sigma = next_code;

  std::vector<sym_t> data;
  data.reserve(raw_bytes.size() + 1);
  for (u8 b : raw_bytes) data.push_back(static_cast<sym_t>(map.code_of_byte[b]));
  data.push_back(0);

  return Text(std::move(data), std::move(map), fnv1a64(raw_bytes.data(), raw_bytes.size()));
}

Text load_text(const std::string& s) {
  return load_text(std::span<const u8>(reinterpret_cast<const u8*>(s.data()), s.size()));
}

Text gen_mutated_dna(u64 seed_len, u64 copies, double mutation_rate, u64 rng_seed) {
  if (seed_len == 0 || copies == 0) raise(Errc::empty_input, "gen_mutated_dna: empty dimensions");
  if (mutation_rate < 0.0 || mutation_rate > 1.0)
    raise(Errc::out_of_range, "gen_mutated_dna: mutation_rate outside [0,1]");

  static constexpr std::array<u8, 4> kBases = {'A', 'C', 'G', 'T'};
  Rng rng(rng_seed);

  std::vector<u8> seed(seed_len);
  for (auto& b : seed) b = kBases[rng.below(4)];

  std::vector<u8> out;
  out.reserve(seed_len * copies);
  for (u64 c = 0; c < copies; ++c) {
    for (u64 i = 0; i < seed_len; ++i) {
      u8 b = seed[i];
      if (rng.unit() < mutation_rate) {
        // uniform over the three other bases
        u64 shift = 1 + rng.below(3);
        u64 base_idx = (std::find(kBases.begin(), kBases.end(), b) - kBases.begin() + shift) % 4;
        b = kBases[base_idx];
      }
      out.push_back(b);
    }
  }
  return load_text(std::span<const u8>(out.data(), out.size()));
}

PatternSet sample_patterns(const Text& text, u64 count, pos_t m, u64 rng_seed) {
  if (m == 0) raise(Errc::empty_pattern, "sample_patterns: m must be positive");
  if (m > text.n() - 1) raise(Errc::pattern_too_long, "sample_patterns: m exceeds text length");

  PatternSet set;
  set.m = m;
  set.rng_seed = rng_seed;
  Rng rng(rng_seed);
  pos_t starts = text.n() - m;  // start positions keeping the pattern clear of the sentinel
  for (u64 i = 0; i < count; ++i) {
    pos_t p = 1 + rng.below(starts);
    std::vector<sym_t> pat(m);
    for (pos_t j = 0; j < m; ++j) pat[j] = text.at(p + j);
    set.patterns.push_back(std::move(pat));
  }
  return set;
}

std::vector<u8> pattern_bytes(const Text& text, const std::vector<sym_t>& pattern) {
  std::vector<u8> out;
  out.reserve(pattern.size());
  for (sym_t c : pattern) out.push_back(text.code_map().byte_of_code[c]);
  return out;
}

}  // namespace sri

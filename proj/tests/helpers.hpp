#ifndef SRINDEX_TESTS_HELPERS_HPP_
#define SRINDEX_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "srindex/build.hpp"
#include "srindex/oracle.hpp"
#include "srindex/text.hpp"

namespace sri::testing {

// the micro example used across the suite: T = "abracadabra$"
inline const std::string kAbra = "abracadabra";

inline Text abra_text() { return load_text(kAbra); }

inline std::vector<sym_t> codes_of(const Text& text, const std::string& pattern) {
  auto enc = text.encode_pattern(
      std::span<const u8>(reinterpret_cast<const u8*>(pattern.data()), pattern.size()));
  REQUIRE(enc.has_value());
  return *enc;
}

inline std::span<const u8> bytes_of(const std::string& s) {
  return {reinterpret_cast<const u8*>(s.data()), s.size()};
}

// iid random string over the first `letters` lowercase letters
inline std::string random_text(Rng& rng, u64 len, u32 letters) {
  std::string s(len, 'a');
  for (auto& ch : s) ch = static_cast<char>('a' + rng.below(letters));
  return s;
}

// copies of a random seed with per-symbol mutations, for run-rich inputs
inline std::string repetitive_text(Rng& rng, u64 seed_len, u64 copies, double rate, u32 letters) {
  std::string seed = random_text(rng, seed_len, letters);
  std::string out;
  out.reserve(seed_len * copies);
  for (u64 c = 0; c < copies; ++c)
    for (char ch : seed) {
      if (rng.unit() < rate) ch = static_cast<char>('a' + rng.below(letters));
      out.push_back(ch);
    }
  return out;
}

inline SrIndex build(const Text& text, u64 s, u8 variant,
                     VerifyLevel verify = VerifyLevel::lemmas) {
  BuildOptions opt;
  opt.s = s;
  opt.variant = variant;
  opt.verify = verify;
  return build_index(text, opt);
}

}  // namespace sri::testing

#endif  // SRINDEX_TESTS_HELPERS_HPP_

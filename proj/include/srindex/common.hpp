/*
 * common.hpp: shared integer aliases, error type, small bit helpers.
 *
 * Convention used across the whole library: text positions, BWT rows and
 * run indices are 1-based at every public interface. rank1(p) counts ones
 * in [1..p]; select1(k) is the position of the k-th one, k >= 1.
 */

#ifndef SRINDEX_COMMON_HPP_
#define SRINDEX_COMMON_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sri {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// 1-based text position / BWT row / run index.
using pos_t = u64;
// compacted symbol code; 0 is reserved for the sentinel
using sym_t = u8;

enum class Errc {
  empty_input,
  sentinel_byte_in_input,
  pattern_too_long,
  out_of_range,
  no_such_occurrence,
  invalid_variant,
  s_too_large,
  wrong_variant,
  sample_removed,
  phi_undefined,
  predecessor_missing,
  empty_pattern,
  bad_magic,
  version_mismatch,
  corrupt,
  io_error,
  verification_failed,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

// bits needed to store values in [0..x]; at least 1
inline u8 bits_for(u64 x) {
  return x == 0 ? u8{1} : static_cast<u8>(std::bit_width(x));
}

// FNV-1a over a byte range; used as the advisory text checksum
inline u64 fnv1a64(const u8* data, u64 len) {
  u64 h = 1469598103934665603ull;
  for (u64 i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

constexpr u8 kChecksumFnv1a64 = 1;

}  // namespace sri

#endif  // SRINDEX_COMMON_HPP_

/*
 * packed_ints.hpp: fixed-width integer array packed into 64-bit words.
 */

#ifndef SRINDEX_PACKED_INTS_HPP_
#define SRINDEX_PACKED_INTS_HPP_

#include <cassert>
#include <vector>

#include "srindex/common.hpp"

namespace sri {

class PackedIntArray {
 public:
  PackedIntArray() = default;

  PackedIntArray(u64 count, u8 width) : count_(count), width_(width) {
    assert(width >= 1 && width <= 64);
    words_.assign(words_needed(count, width), 0);
  }

  u64 size() const { return count_; }
  u8 width() const { return width_; }
  bool empty() const { return count_ == 0; }

  // i is 0-based here; public index structures wrap this with 1-based access
  u64 get(u64 i) const {
    assert(i < count_);
    u64 bit = i * width_;
    u64 w = bit >> 6, off = bit & 63;
    u64 value = words_[w] >> off;
    if (off + width_ > 64) value |= words_[w + 1] << (64 - off);
    return value & mask();
  }

  void set(u64 i, u64 value) {
    assert(i < count_);
    assert(width_ == 64 || value <= mask());
    u64 bit = i * width_;
    u64 w = bit >> 6, off = bit & 63;
    words_[w] = (words_[w] & ~(mask() << off)) | (value << off);
    if (off + width_ > 64) {
      u64 hi = width_ - (64 - off);
      words_[w + 1] = (words_[w + 1] & ~((mask()) >> (width_ - hi))) | (value >> (64 - off));
    }
  }

  const std::vector<u64>& words() const { return words_; }

  u64 size_in_bytes() const { return words_.size() * 8 + 9; }

  static PackedIntArray from_values(const std::vector<u64>& values, u8 width) {
    PackedIntArray a(values.size(), width);
    for (u64 i = 0; i < values.size(); ++i) a.set(i, values[i]);
    return a;
  }

  static PackedIntArray from_raw(u64 count, u8 width, std::vector<u64> words) {
    if (width < 1 || width > 64 || words.size() != words_needed(count, width))
      raise(Errc::corrupt, "packed array: inconsistent raw dimensions");
    PackedIntArray a;
    a.count_ = count;
    a.width_ = width;
    a.words_ = std::move(words);
    return a;
  }

  bool operator==(const PackedIntArray& o) const = default;

 private:
  static u64 words_needed(u64 count, u8 width) { return (count * width + 63) / 64; }

  u64 mask() const { return width_ == 64 ? ~u64{0} : (u64{1} << width_) - 1; }

  u64 count_ = 0;
  u8 width_ = 1;
  std::vector<u64> words_;
};

}  // namespace sri

#endif  // SRINDEX_PACKED_INTS_HPP_

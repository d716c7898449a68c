/*
 * persist.hpp: versioned binary serialization of the index.
 *
 * Layout (all integers little-endian):
 *   header, 40 bytes:
 *     "SRIX" | u16 version | u8 variant | u8 checksum_algo |
 *     u64 n | u64 r | u32 sigma | u32 s | u64 text_checksum
 *   then length-prefixed blocks (u64 payload length + payload) in fixed
 *   order: code_map, c_table, start, letter, first, first_to_run, samples,
 *   removed, valid (variant >= 1), valid_area (variant == 2), sa_last.
 *
 * Rank directories, per-symbol run sets and cumulative run lengths are
 * derived structures and are rebuilt on load. See docs/FORMAT.md for the
 * byte-accurate description.
 */

#ifndef SRINDEX_PERSIST_HPP_
#define SRINDEX_PERSIST_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "srindex/common.hpp"
#include "srindex/sr_index.hpp"

namespace sri {

constexpr u16 kFormatVersion = 1;

// block name -> bytes on disk including the length prefix
using ComponentSizes = std::vector<std::pair<std::string, u64>>;

u64 save_index(const SrIndex& index, std::ostream& out, ComponentSizes* sizes = nullptr);
u64 save_index_file(const SrIndex& index, const std::string& path, ComponentSizes* sizes = nullptr);

SrIndex load_index(std::istream& in);
SrIndex load_index_file(const std::string& path);

std::vector<u8> serialize_index(const SrIndex& index, ComponentSizes* sizes = nullptr);

}  // namespace sri

#endif  // SRINDEX_PERSIST_HPP_

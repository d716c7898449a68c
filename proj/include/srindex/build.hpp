/*
 * build.hpp: one-call construction of a verified index.
 *
 * verify levels:
 *   none        assemble only
 *   lemmas      O(r) invariants: retained-count bound, 3-samples-per-window
 *               exclusion, removed-sample gap bound, locate-structure size
 *   full_oracle additionally replays every toehold and every phi/LF-walk
 *               resolution against the explicit suffix array (small texts)
 */

#ifndef SRINDEX_BUILD_HPP_
#define SRINDEX_BUILD_HPP_

#include "srindex/common.hpp"
#include "srindex/sr_index.hpp"
#include "srindex/subsample.hpp"
#include "srindex/suffix.hpp"
#include "srindex/text.hpp"

namespace sri {

enum class VerifyLevel { none, lemmas, full_oracle };

struct BuildOptions {
  u64 s = 4;
  u8 variant = 2;
  VerifyLevel verify = VerifyLevel::lemmas;
  bool direct_construction = false;  // backward LF-traversal instead of reading the suffix array
  pos_t full_oracle_cap = u64{1} << 20;
};

SrIndex build_index(const Text& text, const BuildOptions& options);
SrIndex build_index(const Text& text, const SuffixContext& ctx, const BuildOptions& options);

// fixed slack constant in the per-sample size bound below
constexpr u64 kLocateBitsPerSampleSlack = 64;

// throws Errc::verification_failed naming the violated predicate
void verify_lemmas(const SrIndex& index, const SuffixContext& ctx);
void verify_full_oracle(const SrIndex& index, const SuffixContext& ctx);

}  // namespace sri

#endif  // SRINDEX_BUILD_HPP_

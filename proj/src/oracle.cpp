#include "srindex/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace sri {

OracleIndex::OracleIndex(const Text& text) : text_(&text), n_(text.n()) {
  sa_.resize(n_);
  std::iota(sa_.begin(), sa_.end(), pos_t{1});
  std::sort(sa_.begin(), sa_.end(), [&](pos_t a, pos_t b) { return suffix_less(a, b); });
  isa_.resize(n_);
  for (pos_t i = 1; i <= n_; ++i) isa_[sa_[i - 1] - 1] = i;
}

bool OracleIndex::suffix_less(pos_t a, pos_t b) const {
  while (a <= n_ && b <= n_) {
    sym_t ca = text_->at(a), cb = text_->at(b);
    if (ca != cb) return ca < cb;
    ++a;
    ++b;
  }
  return a > n_;
}

OracleSearch OracleIndex::naive_search(std::span<const sym_t> pattern) const {
  OracleSearch res;
  res.sp = 1;
  res.ep = 0;
  if (pattern.empty()) raise(Errc::empty_pattern, "naive_search: empty pattern");

  std::vector<pos_t> matches;
  for (pos_t p = 1; p + pattern.size() - 1 <= n_; ++p) {
    bool ok = true;
    for (u64 j = 0; j < pattern.size(); ++j)
      if (text_->at(p + j) != pattern[j]) {
        ok = false;
        break;
      }
    if (ok) matches.push_back(p);
  }
  if (matches.empty()) return res;

  std::vector<pos_t> rows;
  for (pos_t p : matches) rows.push_back(isa_[p - 1]);
  std::sort(rows.begin(), rows.end());
  res.sp = rows.front();
  res.ep = rows.back();
  assert(rows.size() == res.ep - res.sp + 1);  // SA range of a pattern is contiguous
  for (pos_t row = res.sp; row <= res.ep; ++row) res.positions.push_back(sa_[row - 1]);
  return res;
}

pos_t OracleIndex::naive_phi(pos_t i) const {
  if (i < 1 || i > n_) raise(Errc::out_of_range, "naive_phi");
  pos_t sa_j = i == n_ ? 1 : i + 1;
  pos_t j = isa_[sa_j - 1];
  if (j == 1) raise(Errc::phi_undefined, "naive_phi: row has no predecessor");
  return sa_[j - 2];
}

std::vector<pos_t> naive_subsample(const std::vector<pos_t>& sorted_positions, u64 s) {
  std::vector<pos_t> retained;
  u64 k = sorted_positions.size();
  if (k == 0) return retained;
  retained.push_back(sorted_positions.front());
  for (u64 i = 1; i + 1 < k; ++i) {
    if (sorted_positions[i + 1] - retained.back() > s) retained.push_back(sorted_positions[i]);
  }
  if (k > 1) retained.push_back(sorted_positions.back());
  return retained;
}

u64 scan_count(const Text& text, std::span<const sym_t> pattern) {
  return scan_positions(text, pattern).size();
}

std::vector<pos_t> scan_positions(const Text& text, std::span<const sym_t> pattern) {
  std::vector<pos_t> out;
  if (pattern.empty()) return out;
  const auto& codes = text.codes();
  if (pattern.size() > codes.size()) return out;
  auto it = codes.begin();
  while (true) {
    it = std::search(it, codes.end(), pattern.begin(), pattern.end());
    if (it == codes.end()) break;
    out.push_back(static_cast<pos_t>(it - codes.begin()) + 1);
    ++it;
  }
  return out;
}

}  // namespace sri

#include "srindex/sr_index.hpp"

#include <algorithm>
#include <cassert>

namespace sri {

namespace {

#ifdef SRINDEX_INSTRUMENTATION
constexpr bool kInstrument = true;
#else
constexpr bool kInstrument = false;
#endif

inline void bump(QueryStats* st, u64 QueryStats::*field, u64 amount = 1) {
  if (kInstrument && st) st->*field += amount;
}

}  // namespace

void QueryStats::merge(const QueryStats& o) {
  backward_steps += o.backward_steps;
  toehold_lf_steps += o.toehold_lf_steps;
  locate_lf_steps += o.locate_lf_steps;
  phi_calls += o.phi_calls;
  phi_wrap_calls += o.phi_wrap_calls;
  cells_filled += o.cells_filled;
  max_cell_steps = std::max(max_cell_steps, o.max_cell_steps);
}

SrIndex::SrIndex(RlBwt rlbwt, LocateCore core, SubsampleExt ext, CodeMap map, u64 text_checksum)
    : rlbwt_(std::move(rlbwt)), core_(std::move(core)), ext_(std::move(ext)),
      map_(std::move(map)) {
  if (ext_.removed().size() != rlbwt_.r() || core_.n() != rlbwt_.n() ||
      core_.retained() != rlbwt_.r() - ext_.removed_count())
    raise(Errc::corrupt, "index components disagree on dimensions");
  meta_ = IndexMeta{rlbwt_.n(), rlbwt_.r(), rlbwt_.sigma(), ext_.s(), ext_.variant(),
                    text_checksum};
}

std::optional<std::vector<sym_t>> SrIndex::encode(std::span<const u8> pattern) const {
  std::vector<sym_t> codes;
  codes.reserve(pattern.size());
  for (u8 b : pattern) {
    int c = map_.code_of_byte[b];
    if (c < 0) return std::nullopt;
    codes.push_back(static_cast<sym_t>(c));
  }
  return codes;
}

CountResult SrIndex::count(std::span<const u8> pattern) const {
  if (pattern.empty()) raise(Errc::empty_pattern, "count: empty pattern");
  auto codes = encode(pattern);
  if (!codes) return CountResult{};
  return count_codes(*codes);
}

std::vector<pos_t> SrIndex::locate(std::span<const u8> pattern, QueryStats* stats) const {
  if (pattern.empty()) raise(Errc::empty_pattern, "locate: empty pattern");
  auto codes = encode(pattern);
  if (!codes) return {};
  return locate_codes(*codes, stats);
}

CountResult SrIndex::count_codes(std::span<const sym_t> pattern, QueryStats* stats) const {
  if (pattern.empty()) raise(Errc::empty_pattern, "count: empty pattern");
  const pos_t n = rlbwt_.n();
  const u64 m = pattern.size();
  for (sym_t c : pattern)
    if (c == 0 || c >= rlbwt_.sigma()) return CountResult{};

  pos_t sp = 1, ep = n;
  u64 i = m;
  u64 i_prime = m + 1;
  u64 p_prime = 0;
  while (i >= 1 && sp <= ep) {
    sym_t c = pattern[i - 1];
    u64 p = rlbwt_.run_of(ep);
    if (rlbwt_.letter().access(p) != c) {
      i_prime = i;
      p_prime = p;
    }
    auto [nsp, nep] = rlbwt_.backward_step(c, sp, ep);
    sp = nsp;
    ep = nep;
    bump(stats, &QueryStats::backward_steps);
    --i;
  }

  CountResult res;
  res.sp = sp;
  res.ep = ep;
  res.backward_steps = m - i;
  if (sp > ep) return res;  // zero occurrences: no toehold work at all

  if (i_prime == m + 1) {
    // every step was easy; SA[ep] follows from the stored SA[n]
    if (core_.sa_last() <= m) raise(Errc::internal, "count: SA[n] chain underflow");
    res.sa_ep = core_.sa_last() - m;
  } else {
    auto q0 = rlbwt_.last_sym_run_upto(pattern[i_prime - 1], p_prime);
    if (!q0) raise(Errc::internal, "count: toehold run vanished from a nonempty range");
    PhiResult t = toehold_resolve(*q0, stats);
    if (t.value <= i_prime) raise(Errc::internal, "count: toehold chain underflow");
    res.sa_ep = t.value - 1 - (i_prime - 1);
    res.toehold_lf_steps = t.used_steps;
  }
  return res;
}

pos_t SrIndex::decode_run_sample(u64 q, u64 add) const {
  pos_t sample = sample_of_run(core_, ext_.removed(), q);
  pos_t v = (sample % meta_.n) + 1 + add;
  if (v > meta_.n) raise(Errc::internal, "sample decode past the text end");
  return v;
}

PhiResult SrIndex::toehold_resolve(u64 q, QueryStats* stats) const {
  if (q < 1 || q > rlbwt_.r()) raise(Errc::out_of_range, "toehold_resolve");
  pos_t j = rlbwt_.run_end(q);
  u64 cur = q;
  u64 k = 0;
  while (!rlbwt_.is_run_end(j) || ext_.removed().access(cur)) {
    if (k == ext_.s()) raise(Errc::internal, "toehold walk exceeded s steps: corrupt samples");
    j = rlbwt_.lf(j);
    cur = rlbwt_.run_of(j);
    ++k;
    bump(stats, &QueryStats::toehold_lf_steps);
  }
  return PhiResult{decode_run_sample(cur, k), k};
}

SrIndex::Fastpath SrIndex::locate_fastpath_check(pos_t i) const {
  if (ext_.variant() < 1) raise(Errc::wrong_variant, "fast path requires variant >= 1");
  if (i < 1 || i > meta_.n) raise(Errc::out_of_range, "locate_fastpath_check");
  u64 q = core_.first().rank1(i);
  if (q == 0) q = core_.retained();  // cyclic predecessor
  if (ext_.valid().access(q)) return Fastpath::use_phi;
  if (ext_.variant() == 1) return Fastpath::must_step;
  u64 d = *ext_.next_removed_dist(q);
  pos_t f = core_.first().select1(q);
  pos_t delta = i >= f ? i - f : i + meta_.n - f;
  return delta < d ? Fastpath::use_phi : Fastpath::must_step;
}

std::vector<pos_t> SrIndex::locate_codes(std::span<const sym_t> pattern,
                                         QueryStats* stats) const {
  CountResult cr = count_codes(pattern, stats);
  std::vector<pos_t> out;
  u64 occ = cr.occ();
  if (occ == 0) return out;
  out.resize(occ);
  out[occ - 1] = *cr.sa_ep;
  bump(stats, &QueryStats::cells_filled);
  if (occ > 1) fill_cells(cr.sp, out, stats);
  return out;
}

// out holds Res[1..occ] (0-based storage); Res[occ] is already filled.
void SrIndex::fill_cells(pos_t sp, std::vector<pos_t>& out, QueryStats* stats) const {
  const pos_t n = meta_.n;
  const u64 s = ext_.s();
  const bool fast = ext_.variant() >= 1;
  auto cyc_prev = [n](pos_t v) { return v == 1 ? n : v - 1; };
  auto eval_phi = [&](pos_t i) {
    PhiInternals ph = phi_internals(core_, ext_.removed(), i);
    bump(stats, &QueryStats::phi_calls);
    if (ph.wrapped_first_to_run) bump(stats, &QueryStats::phi_wrap_calls);
    return ph.value;
  };

  struct Frame {
    pos_t row_lo;  // current-space row of Res[rs]; rows are LF^k images
    u64 rs, re;
    u64 k;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{sp, 1, out.size() - 1, 0});

  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();

    if (f.k == s) {
      // every cell here is safe for phi: s levels passed no retained sample
      for (u64 x = f.re; x >= f.rs; --x) {
        out[x - 1] = eval_phi(cyc_prev(out[x]));
        bump(stats, &QueryStats::cells_filled);
      }
      continue;
    }

    if (fast) {
      // consume certified cells from the right edge before splitting
      while (f.re >= f.rs) {
        pos_t i = cyc_prev(out[f.re]);
        if (locate_fastpath_check(i) != Fastpath::use_phi) break;
        out[f.re - 1] = eval_phi(i);
        bump(stats, &QueryStats::cells_filled);
        --f.re;
      }
      if (f.re < f.rs) continue;
    }

    // cut into maximal runs; push left to right so blocks complete right to
    // left, keeping Res[re+1] filled before any frame that may read it
    pos_t row_hi = f.row_lo + (f.re - f.rs);
    pos_t a = f.row_lo;
    u64 x = f.rs;
    while (a <= row_hi) {
      u64 q = rlbwt_.run_of(a);
      pos_t q_end = rlbwt_.run_end(q);
      pos_t b = std::min(q_end, row_hi);
      u64 xb = x + (b - a);
      u64 child_re = xb;
      if (q_end == b && !ext_.removed().access(q)) {
        out[xb - 1] = decode_run_sample(q, f.k);
        bump(stats, &QueryStats::cells_filled);
        if (kInstrument && stats) stats->max_cell_steps = std::max(stats->max_cell_steps, f.k);
        child_re = xb - 1;
      }
      if (child_re >= x) {
        stack.push_back(Frame{rlbwt_.lf(a), x, child_re, f.k + 1});
        bump(stats, &QueryStats::locate_lf_steps);
      }
      a = b + 1;
      x = xb + 1;
    }
  }
}

u64 SrIndex::size_in_bytes() const {
  return rlbwt_.size_in_bytes() + core_.size_in_bytes() + ext_.size_in_bytes() + 297;
}

}  // namespace sri

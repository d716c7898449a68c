#include "srindex/persist.hpp"

#include <cstring>
#include <fstream>

namespace sri {

namespace {

constexpr char kMagic[4] = {'S', 'R', 'I', 'X'};

class Writer {
 public:
  void u8_(u8 v) { buf_.push_back(v); }
  void u16_(u16 v) { raw(&v, 2); }
  void u32_(u32 v) { raw(&v, 4); }
  void u64_(u64 v) { raw(&v, 8); }
  void words(const std::vector<u64>& ws) {
    u64_(ws.size());
    for (u64 w : ws) u64_(w);
  }
  const std::vector<u8>& bytes() const { return buf_; }

 private:
  void raw(const void* p, u64 len) {
    const u8* b = static_cast<const u8*>(p);
    buf_.insert(buf_.end(), b, b + len);  // little-endian hosts only
  }
  std::vector<u8> buf_;
};

class Reader {
 public:
  Reader(const u8* data, u64 len) : data_(data), len_(len) {}
  u8 u8_() { return *take(1); }
  u16 u16_() { return load<u16>(); }
  u32 u32_() { return load<u32>(); }
  u64 u64_() { return load<u64>(); }
  std::vector<u64> words() {
    u64 count = u64_();
    if (count > (len_ - pos_) / 8) raise(Errc::corrupt, "truncated word array");
    std::vector<u64> ws(count);
    for (auto& w : ws) w = u64_();
    return ws;
  }
  u64 tell() const { return pos_; }
  bool exhausted() const { return pos_ == len_; }

 private:
  template <typename T>
  T load() {
    T v;
    std::memcpy(&v, take(sizeof(T)), sizeof(T));
    return v;
  }
  const u8* take(u64 len) {
    if (len_ - pos_ < len) raise(Errc::corrupt, "truncated block");
    const u8* p = data_ + pos_;
    pos_ += len;
    return p;
  }
  const u8* data_;
  u64 len_;
  u64 pos_ = 0;
};

void write_packed(Writer& w, const PackedIntArray& a) {
  w.u64_(a.size());
  w.u8_(a.width());
  w.words(a.words());
}

PackedIntArray read_packed(Reader& r) {
  u64 count = r.u64_();
  u8 width = r.u8_();
  if (width < 1 || width > 64) raise(Errc::corrupt, "packed array width out of range");
  return PackedIntArray::from_raw(count, width, r.words());
}

void write_dense(Writer& w, const DenseBitVector& bv) {
  w.u64_(bv.size());
  w.words(bv.words());
}

DenseBitVector read_dense(Reader& r) {
  u64 universe = r.u64_();
  return DenseBitVector::from_raw(universe, r.words());
}

void write_sparse(Writer& w, const SparseBitVector& bv) {
  w.u64_(bv.size());
  w.u64_(bv.ones());
  write_packed(w, bv.lows());
  write_dense(w, bv.highs());
}

SparseBitVector read_sparse(Reader& r) {
  u64 universe = r.u64_();
  u64 k = r.u64_();
  PackedIntArray lows = read_packed(r);
  DenseBitVector highs = read_dense(r);
  return SparseBitVector::from_raw(universe, k, std::move(lows), std::move(highs));
}

void append_block(std::vector<u8>& out, const std::string& name, const Writer& w,
                  ComponentSizes* sizes) {
  u64 len = w.bytes().size();
  Writer prefix;
  prefix.u64_(len);
  out.insert(out.end(), prefix.bytes().begin(), prefix.bytes().end());
  out.insert(out.end(), w.bytes().begin(), w.bytes().end());
  if (sizes) sizes->emplace_back(name, len + 8);
}

// runs fn on the payload of the next block and validates the length prefix
template <typename Fn>
auto parse_block(Reader& r, Fn fn) {
  u64 len = r.u64_();
  u64 start = r.tell();
  if constexpr (std::is_void_v<decltype(fn())>) {
    fn();
    if (r.tell() - start != len) raise(Errc::corrupt, "block length prefix disagrees");
  } else {
    auto value = fn();
    if (r.tell() - start != len) raise(Errc::corrupt, "block length prefix disagrees");
    return value;
  }
}

}  // namespace

std::vector<u8> serialize_index(const SrIndex& index, ComponentSizes* sizes) {
  const IndexMeta& meta = index.meta();
  std::vector<u8> out;

  Writer header;
  header.u8_(kMagic[0]);
  header.u8_(kMagic[1]);
  header.u8_(kMagic[2]);
  header.u8_(kMagic[3]);
  header.u16_(kFormatVersion);
  header.u8_(meta.variant);
  header.u8_(kChecksumFnv1a64);
  header.u64_(meta.n);
  header.u64_(meta.r);
  header.u32_(meta.sigma);
  header.u32_(static_cast<u32>(meta.s));
  header.u64_(meta.text_checksum);
  out.insert(out.end(), header.bytes().begin(), header.bytes().end());

  {
    Writer w;
    w.u32_(meta.sigma);
    for (u32 c = 0; c < meta.sigma; ++c) w.u8_(index.code_map().byte_of_code[c]);
    append_block(out, "code_map", w, sizes);
  }
  {
    Writer w;
    for (u64 v : index.rlbwt().c_table()) w.u64_(v);
    append_block(out, "c_table", w, sizes);
  }
  {
    Writer w;
    write_sparse(w, index.rlbwt().start());
    append_block(out, "start", w, sizes);
  }
  {
    Writer w;
    write_packed(w, index.rlbwt().letter().heads());
    append_block(out, "letter", w, sizes);
  }
  {
    Writer w;
    write_sparse(w, index.core().first());
    append_block(out, "first", w, sizes);
  }
  {
    Writer w;
    write_packed(w, index.core().first_to_run());
    append_block(out, "first_to_run", w, sizes);
  }
  {
    Writer w;
    write_packed(w, index.core().samples());
    append_block(out, "samples", w, sizes);
  }
  {
    Writer w;
    write_dense(w, index.ext().removed());
    append_block(out, "removed", w, sizes);
  }
  if (meta.variant >= 1) {
    Writer w;
    write_dense(w, index.ext().valid());
    append_block(out, "valid", w, sizes);
  }
  if (meta.variant == 2) {
    Writer w;
    write_packed(w, index.ext().valid_area());
    append_block(out, "valid_area", w, sizes);
  }
  {
    Writer w;
    w.u64_(index.core().sa_last());
    append_block(out, "sa_last", w, sizes);
  }
  return out;
}

u64 save_index(const SrIndex& index, std::ostream& out, ComponentSizes* sizes) {
  std::vector<u8> bytes = serialize_index(index, sizes);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(Errc::io_error, "save_index: write failed");
  return bytes.size();
}

u64 save_index_file(const SrIndex& index, const std::string& path, ComponentSizes* sizes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "save_index: cannot open " + path);
  return save_index(index, out, sizes);
}

SrIndex load_index(std::istream& in) {
  std::vector<u8> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 40) raise(Errc::corrupt, "file shorter than the header");
  Reader file(bytes.data(), bytes.size());

  char magic[4];
  for (auto& ch : magic) ch = static_cast<char>(file.u8_());
  if (std::memcmp(magic, kMagic, 4) != 0) raise(Errc::bad_magic, "not an index file");
  u16 version = file.u16_();
  if (version != kFormatVersion) raise(Errc::version_mismatch, "unsupported format version");
  u8 variant = file.u8_();
  if (variant > 2) raise(Errc::corrupt, "variant out of range");
  u8 checksum_algo = file.u8_();
  if (checksum_algo != kChecksumFnv1a64) raise(Errc::corrupt, "unknown checksum algorithm");
  u64 n = file.u64_();
  u64 r = file.u64_();
  u32 sigma = file.u32_();
  u32 s = file.u32_();
  u64 text_checksum = file.u64_();

  CodeMap map;
  parse_block(file, [&] {
    u32 sigma_in_map = file.u32_();
    if (sigma_in_map != sigma) raise(Errc::corrupt, "code map alphabet disagrees with header");
    map.sigma = sigma;
    for (u32 c = 0; c < sigma; ++c) {
      u8 b = file.u8_();
      map.byte_of_code[c] = b;
      if (c > 0) {
        if (map.code_of_byte[b] >= 0) raise(Errc::corrupt, "code map is not a bijection");
        map.code_of_byte[b] = static_cast<int>(c);
      }
    }
  });

  std::vector<u64> c_table(static_cast<u64>(sigma) + 1);
  parse_block(file, [&] {
    for (auto& v : c_table) v = file.u64_();
  });

  SparseBitVector start = parse_block(file, [&] { return read_sparse(file); });
  PackedIntArray heads = parse_block(file, [&] { return read_packed(file); });
  SparseBitVector first = parse_block(file, [&] { return read_sparse(file); });
  PackedIntArray first_to_run = parse_block(file, [&] { return read_packed(file); });
  PackedIntArray samples = parse_block(file, [&] { return read_packed(file); });
  DenseBitVector removed = parse_block(file, [&] { return read_dense(file); });

  std::optional<DenseBitVector> valid;
  if (variant >= 1) valid = parse_block(file, [&] { return read_dense(file); });
  PackedIntArray valid_area;
  if (variant == 2) valid_area = parse_block(file, [&] { return read_packed(file); });

  u64 sa_last = parse_block(file, [&] { return file.u64_(); });
  if (!file.exhausted()) raise(Errc::corrupt, "trailing bytes after the last block");

  if (start.size() != n || start.ones() != r || removed.size() != r || sa_last < 1 || sa_last > n)
    raise(Errc::corrupt, "component dimensions disagree with the header");

  RlBwt rlbwt(n, sigma, std::move(start), RunHeadSeq::from_raw(r, sigma, std::move(heads)),
              std::move(c_table));
  LocateCore core(std::move(first), std::move(first_to_run), std::move(samples), sa_last);
  SubsampleExt ext(s, variant, std::move(removed), std::move(valid), std::move(valid_area));
  return SrIndex(std::move(rlbwt), std::move(core), std::move(ext), std::move(map), text_checksum);
}

SrIndex load_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "load_index: cannot open " + path);
  return load_index(in);
}

}  // namespace sri

#include "chomp/store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "chomp/errors.hpp"

namespace chomp::store {

namespace {

using Rule = FormatError::Rule;

void require_four_rows(const PSet& pset) {
  if (pset.k() != 4) throw PreconditionError("CSV export holds 4-row P-sets only (k = " + std::to_string(pset.k()) + ")");
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <class T>
bool parse_uint(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

template <class T>
void put_le(std::string& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

template <class T>
T get_le(std::string_view bytes, std::size_t at) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<T>(static_cast<unsigned char>(bytes[at + i])) << (8 * i);
  }
  return v;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string format_csv(const PSet& pset) {
  require_four_rows(pset);
  std::string out;
  out.reserve(16 * pset.count() + 32);
  out.append(kCsvHeader).push_back('\n');
  char buf[32];
  for (std::uint64_t code : pset.sorted_codes()) {
    for (int i = 0; i < 4; ++i) {
      const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, packed_field(code, i));
      out.append(buf, end);
      out.push_back(i < 3 ? ',' : '\n');
    }
  }
  out.append("# count=").append(std::to_string(pset.count()));
  return out;
}

void write_csv(const PSet& pset, const std::filesystem::path& path) { write_file(path, format_csv(pset)); }

PSet parse_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  // A newline after the trailer is tolerated.
  if (lines.size() > 1 && lines.back().empty()) lines.pop_back();

  if (lines.empty() || lines[0] != kCsvHeader) {
    throw FormatError(Rule::header, 1, "expected header '" + std::string(kCsvHeader) + "'");
  }

  std::vector<std::uint64_t> codes;
  int n_max = 0;
  bool trailer = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const std::string_view line = lines[i];
    if (trailer) throw FormatError(Rule::missing_trailer, lineno, "content after the count trailer");
    if (line.starts_with("# count=")) {
      std::size_t declared = 0;
      if (!parse_uint(line.substr(8), declared)) throw FormatError(Rule::bad_number, lineno, "unreadable count trailer");
      if (declared != codes.size()) {
        throw FormatError(Rule::count_mismatch, lineno,
                          "trailer declares " + std::to_string(declared) + " rows, file has " + std::to_string(codes.size()));
      }
      trailer = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw FormatError(Rule::column_count, lineno,
                        "expected 4 columns, found " + std::to_string(fields.size()));
    }
    std::uint32_t row[4];
    for (int f = 0; f < 4; ++f) {
      if (!parse_uint(fields[static_cast<std::size_t>(f)], row[f]) || row[f] >= kFieldLimit) {
        throw FormatError(Rule::bad_number, lineno, "column " + std::to_string(f + 1) + " is not a 16-bit count");
      }
    }
    if (!(row[0] >= row[1] && row[1] >= row[2] && row[2] >= row[3]) || row[0] == 0) {
      throw FormatError(Rule::non_increasing, lineno, "row lengths must satisfy a >= b >= c >= d and a >= 1");
    }
    const std::uint64_t code = (std::uint64_t{row[0]} << 48) | (std::uint64_t{row[1]} << 32) |
                               (std::uint64_t{row[2]} << 16) | std::uint64_t{row[3]};
    if (!codes.empty() && code <= codes.back()) {
      throw FormatError(Rule::ordering, lineno, "rows not strictly increasing lexicographically");
    }
    codes.push_back(code);
    n_max = std::max(n_max, static_cast<int>(row[0]));
  }
  if (!trailer) throw FormatError(Rule::missing_trailer, lines.size(), "missing '# count=' trailer");
  if (codes.empty()) throw FormatError(Rule::count_mismatch, lines.size(), "no P-positions");
  return PSet::from_codes(n_max, 4, codes);
}

PSet read_csv(const std::filesystem::path& path) { return parse_csv(read_file(path)); }

DSequence d_sequence(const PSet& pset) {
  DSequence seq;
  const int last = pset.k() - 1;
  for (std::uint64_t code : pset.sorted_codes()) seq.values.push_back(packed_field(code, last));
  return seq;
}

std::string format_bfile(const DSequence& seq, long offset) {
  if (seq.values.empty()) throw PreconditionError("b-file needs a non-empty sequence");
  std::string out;
  long index = offset;
  for (std::uint32_t v : seq.values) {
    out.append(std::to_string(index++)).push_back(' ');
    out.append(std::to_string(v)).push_back('\n');
  }
  return out;
}

void write_bfile(const DSequence& seq, const std::filesystem::path& path, long offset) {
  write_file(path, format_bfile(seq, offset));
}

std::string format_cache(const PSet& pset) {
  std::string out;
  const auto codes = pset.sorted_codes();
  out.reserve(kCacheHeaderBytes + 8 * codes.size());
  out.append(kCacheMagic, 4);
  put_le<std::uint16_t>(out, kCacheVersion);
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(pset.k()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(pset.n_max()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(codes.size()));
  for (std::uint64_t c : codes) put_le<std::uint64_t>(out, c);
  return out;
}

void write_cache(const PSet& pset, const std::filesystem::path& path) { write_file(path, format_cache(pset)); }

PSet parse_cache(std::string_view bytes) {
  if (bytes.size() < kCacheHeaderBytes) throw FormatError(Rule::truncated, 0, "cache shorter than its header");
  if (!std::equal(kCacheMagic, kCacheMagic + 4, bytes.begin())) throw FormatError(Rule::magic, 0, "bad cache magic");
  const auto version = get_le<std::uint16_t>(bytes, 4);
  if (version != kCacheVersion) throw FormatError(Rule::version, 0, "unsupported cache version " + std::to_string(version));
  const auto k = get_le<std::uint16_t>(bytes, 6);
  const auto n_max = get_le<std::uint32_t>(bytes, 8);
  const auto count = get_le<std::uint32_t>(bytes, 12);
  if (bytes.size() != kCacheHeaderBytes + 8 * std::size_t{count}) {
    throw FormatError(Rule::truncated, 0,
                      "header count " + std::to_string(count) + " does not match payload of " +
                          std::to_string(bytes.size() - kCacheHeaderBytes) + " bytes");
  }
  if (k < 1 || k > 4 || n_max < 1 || n_max >= kFieldLimit) throw FormatError(Rule::header, 0, "cache header out of range");
  std::vector<std::uint64_t> codes(count);
  for (std::size_t i = 0; i < count; ++i) {
    codes[i] = get_le<std::uint64_t>(bytes, kCacheHeaderBytes + 8 * i);
    if (i > 0 && codes[i] <= codes[i - 1]) throw FormatError(Rule::unsorted, 0, "cache payload not strictly ascending");
  }
  return PSet::from_codes(static_cast<int>(n_max), k, codes);
}

PSet read_cache(const std::filesystem::path& path) { return parse_cache(read_file(path)); }

bool is_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char head[4] = {};
  in.read(head, 4);
  return in.gcount() == 4 && std::equal(head, head + 4, kCacheMagic);
}

PSet read_pset(const std::filesystem::path& path) {
  return is_cache_file(path) ? read_cache(path) : read_csv(path);
}

}  // namespace chomp::store

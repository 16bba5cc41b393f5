#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chomp/solver.hpp"

namespace chomp::store {

// CSV interchange: header `a,b,c,d`, one P-position per line in ascending
// lexicographic order, trailer `# count=<N>` with no newline after it.
// Only 4-row sets are written; n_max is recovered as the largest a, which is
// exact because (a, a-1, 0, 0) is a P-position for every a.
inline constexpr std::string_view kCsvHeader = "a,b,c,d";

std::string format_csv(const PSet& pset);
void write_csv(const PSet& pset, const std::filesystem::path& path);
PSet parse_csv(std::string_view text);
PSet read_csv(const std::filesystem::path& path);

// Fourth coordinates of the P-positions in ascending (a,b,c,d) order.
struct DSequence {
  std::vector<std::uint32_t> values;
};

DSequence d_sequence(const PSet& pset);

// OEIS b-file: one `index value` line per term, index starting at offset.
std::string format_bfile(const DSequence& seq, long offset = 1);
void write_bfile(const DSequence& seq, const std::filesystem::path& path, long offset = 1);

// Binary cache: 16-byte little-endian header (magic "CHMP", u16 version,
// u16 k, u32 n_max, u32 count) followed by count u64 codes, ascending.
inline constexpr char kCacheMagic[4] = {'C', 'H', 'M', 'P'};
inline constexpr std::uint16_t kCacheVersion = 1;
inline constexpr std::size_t kCacheHeaderBytes = 16;

std::string format_cache(const PSet& pset);
void write_cache(const PSet& pset, const std::filesystem::path& path);
PSet parse_cache(std::string_view bytes);
PSet read_cache(const std::filesystem::path& path);

// True when the file starts with the cache magic.
bool is_cache_file(const std::filesystem::path& path);
// read_cache or read_csv, chosen by magic bytes.
PSet read_pset(const std::filesystem::path& path);

// Whole-file helpers; throw std::runtime_error naming the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace chomp::store

#pragma once

// Per-state classification shared by the OpenMP kernel and the benchmarks.

#include <algorithm>
#include <array>
#include <cstdint>

#include "chomp/packed_set.hpp"
#include "chomp/position.hpp"
#include "chomp/solver.hpp"

namespace chomp::kernel {

inline constexpr int kShift[kMaxPackedRows] = {48, 32, 16, 0};

// Code after taking square (row, col) (0-based row, 1-based col): rows >= row
// are clipped to col - 1.
inline std::uint64_t clip_from(std::uint64_t code, const std::array<std::uint32_t, kMaxPackedRows>& r, int row,
                               std::uint32_t col, int k) noexcept {
  const std::uint32_t keep = col - 1;
  std::uint64_t out = code;
  for (int m = row; m < k; ++m) {
    if (r[static_cast<std::size_t>(m)] > keep) {
      out &= ~(std::uint64_t{0xFFFF} << kShift[m]);
      out |= static_cast<std::uint64_t>(keep) << kShift[m];
    }
  }
  return out;
}

inline std::array<std::uint32_t, kMaxPackedRows> fields(std::uint64_t code) noexcept {
  return {packed_field(code, 0), packed_field(code, 1), packed_field(code, 2), packed_field(code, 3)};
}

// True when some legal move from code reaches a member of pset (an N-position).
inline bool has_move_to_p(const PackedSet& pset, std::uint64_t code, int k, MoveOrder order) {
  const auto r = fields(code);
  switch (order) {
    case MoveOrder::bottom_row_first:
      for (int row = k - 1; row >= 0; --row) {
        const std::uint32_t lo = row == 0 ? 2 : 1;
        for (std::uint32_t col = r[static_cast<std::size_t>(row)]; col >= lo; --col) {
          if (pset.contains(clip_from(code, r, row, col, k))) return true;
        }
      }
      return false;
    case MoveOrder::top_row_first:
      for (int row = 0; row < k; ++row) {
        const std::uint32_t lo = row == 0 ? 2 : 1;
        for (std::uint32_t col = r[static_cast<std::size_t>(row)]; col >= lo; --col) {
          if (pset.contains(clip_from(code, r, row, col, k))) return true;
        }
      }
      return false;
    case MoveOrder::lexicographic: {
      std::uint32_t n = 0;
      for (int row = 0; row < k; ++row) n += r[static_cast<std::size_t>(row)];
      std::uint64_t buf[4 * 1024];
      std::uint64_t* out = buf;
      std::vector<std::uint64_t> heap;
      if (n > 4 * 1024) {
        heap.resize(n);
        out = heap.data();
      }
      std::size_t len = 0;
      for (int row = 0; row < k; ++row) {
        const std::uint32_t lo = row == 0 ? 2 : 1;
        for (std::uint32_t col = lo; col <= r[static_cast<std::size_t>(row)]; ++col) {
          out[len++] = clip_from(code, r, row, col, k);
        }
      }
      std::sort(out, out + len);
      for (std::size_t i = 0; i < len; ++i)
        if (pset.contains(out[i])) return true;
      return false;
    }
  }
  return false;
}

}  // namespace chomp::kernel

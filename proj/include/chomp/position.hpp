#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace chomp {

// Upper bound on rows for the unpacked (generic-k) path.
inline constexpr int kMaxRows = 8;
// Rows that fit into a PackedPosition.
inline constexpr int kMaxPackedRows = 4;
inline constexpr int kFieldBits = 16;
inline constexpr std::uint32_t kFieldLimit = 1u << kFieldBits;

// Row lengths of a Chomp board, longest (poisoned) row first.
// Always satisfies rows[0] >= rows[1] >= ... >= rows[k-1] >= 0.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<int> rows);
  explicit Position(std::span<const int> rows);

  int k() const noexcept { return k_; }
  int operator[](int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const int> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(k_)}; }
  long total() const noexcept;

  // rows[0] >= 1: the poison square is still on the board.
  bool playable() const noexcept { return k_ > 0 && rows_[0] >= 1; }

  std::string to_string() const;

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  int k_ = 0;
  std::array<int, kMaxRows> rows_{};
};

std::ostream& operator<<(std::ostream& os, const Position& p);

// rows[0] in bits 48-63 down to rows[3] in bits 0-15, so integer order is
// lexicographic order on the tuple.
struct PackedPosition {
  std::uint64_t code = 0;

  friend auto operator<=>(const PackedPosition&, const PackedPosition&) = default;
};

PackedPosition pack(const Position& p);
// Fields past k must be zero. Throws InvalidStateError on a decoded tuple
// that is not non-increasing.
Position unpack(PackedPosition x, int k = kMaxPackedRows);

inline constexpr std::uint32_t packed_field(std::uint64_t code, int row) noexcept {
  return static_cast<std::uint32_t>((code >> (kFieldBits * (kMaxPackedRows - 1 - row))) & 0xFFFFu);
}

// A legal move: take the square at 1-based (row, col) and everything in
// rows >= row with column >= col.
struct Move {
  int row = 1;
  int col = 1;
};

Position apply_move(const Position& p, Move m);

// Distinct positions reachable in one legal move, ascending. Empty for the
// terminal position (1,0,...,0).
std::vector<Position> successors(const Position& p);

// Number of tuples with 1 <= rows[0] <= n_max (all layers together).
std::uint64_t state_count(int n_max, int k);

// Calls f(const Position&) for every non-increasing k-tuple with component sum
// s and rows[0] <= n_max, in ascending lexicographic order.
template <class F>
void for_each_in_layer(int s, int n_max, int k, F&& f);

std::vector<Position> enumerate_layer(int s, int n_max, int k);

// Packed codes of one layer, ascending. Requires k <= 4.
std::vector<std::uint64_t> enumerate_layer_packed(int s, int n_max, int k);

namespace detail {

template <class F>
void fill_layer(std::array<int, kMaxRows>& rows, int row, int k, int remaining, int cap, F& f) {
  if (row == k - 1) {
    if (remaining <= cap) {
      rows[static_cast<std::size_t>(row)] = remaining;
      f(std::span<const int>(rows.data(), static_cast<std::size_t>(k)));
    }
    return;
  }
  const int rows_left = k - row;
  const int lo = (remaining + rows_left - 1) / rows_left;
  const int hi = remaining < cap ? remaining : cap;
  for (int v = lo; v <= hi; ++v) {
    rows[static_cast<std::size_t>(row)] = v;
    fill_layer(rows, row + 1, k, remaining - v, v, f);
  }
}

}  // namespace detail

template <class F>
void for_each_in_layer(int s, int n_max, int k, F&& f) {
  if (k < 1 || k > kMaxRows || s < 1) return;
  std::array<int, kMaxRows> rows{};
  auto emit = [&](std::span<const int> r) { f(Position(r)); };
  detail::fill_layer(rows, 0, k, s, n_max, emit);
}

}  // namespace chomp

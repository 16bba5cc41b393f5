#pragma once

// Every legal move from (a,b,c,d) shrinks one coordinate while clipping the
// ones after it, so the targets of one row's moves split into a few "lines":
// sets of positions with all but one coordinate fixed. A state is an
// N-position iff some line holds a P-position whose free coordinate lies
// below the state's. LineIndex keeps, per line, the smallest free
// coordinate over known P-positions, which answers each check in O(1).
//
// Row 4, x < d:         (a,b,c,x)   line (a,b,c)
// Row 3, d <= x < c:    (a,b,x,d)   line (a,b,_,d)
// Row 3, x < d:         (a,b,x,x)   line (a,b,=,=)
// Row 2, c <= x < b:    (a,x,c,d)   line (a,_,c,d)
// Row 2, d <= x < c:    (a,x,x,d)   line (a,=,=,d)
// Row 2, x < d:         (a,x,x,x)   line (a,=,=,=)
// Row 1, b <= x < a:    (x,b,c,d)   line (_,b,c,d)
// Row 1, c <= x < b:    (x,x,c,d)   line (=,=,c,d)
// Row 1, d <= x < c:    (x,x,x,d)   line (=,=,=,d)
// Row 1, 1 <= x < d:    (x,x,x,x)   line (=,=,=,=)
//
// Fewer rows than four are handled by zero trailing fields.

#include <cstdint>
#include <vector>

#include "chomp/position.hpp"
#include "chomp/solver.hpp"

namespace chomp::kernel {

class LineIndex {
 public:
  static constexpr std::uint16_t kNone = 0xFFFF;

  explicit LineIndex(int n_max)
      : n_(static_cast<std::uint32_t>(n_max)),
        abc_(tri3(n_ + 1), kNone),
        abd_(tri3(n_ + 1), kNone),
        acd_(tri3(n_ + 1), kNone),
        bcd_(tri3(n_ + 1), kNone),
        ab_diag_(tri2(n_ + 1), kNone),
        ad_diag_(tri2(n_ + 1), kNone),
        cd_diag_(tri2(n_ + 1), kNone),
        a_diag_(n_ + 1, kNone),
        d_diag_(n_ + 1, kNone) {}

  void add(std::uint64_t code) {
    const std::uint32_t a = packed_field(code, 0), b = packed_field(code, 1), c = packed_field(code, 2),
                        d = packed_field(code, 3);
    lower(abc_[i3(a, b, c)], d);
    lower(abd_[i3(a, b, d)], c);
    if (c == d) lower(ab_diag_[i2(a, b)], c);
    lower(acd_[i3(a, c, d)], b);
    if (b == c) lower(ad_diag_[i2(a, d)], b);
    if (b == d) lower(a_diag_[a], b);
    lower(bcd_[i3(b, c, d)], a);
    if (a == b) lower(cd_diag_[i2(c, d)], a);
    if (a == c) lower(d_diag_[d], a);
    if (a == d) all_diag_ = std::min<std::uint32_t>(all_diag_, a);
  }

  bool has_move_to_p(std::uint64_t code, MoveOrder order) const noexcept {
    const std::uint32_t a = packed_field(code, 0), b = packed_field(code, 1), c = packed_field(code, 2),
                        d = packed_field(code, 3);
    if (order == MoveOrder::bottom_row_first) {
      return row4(a, b, c, d) || row3(a, b, c, d) || row2(a, b, c, d) || row1(a, b, c, d);
    }
    return row1(a, b, c, d) || row2(a, b, c, d) || row3(a, b, c, d) || row4(a, b, c, d);
  }

  std::size_t memory_bytes() const noexcept {
    return (abc_.size() + abd_.size() + acd_.size() + bcd_.size() + ab_diag_.size() + ad_diag_.size() +
            cd_diag_.size() + a_diag_.size() + d_diag_.size()) *
           sizeof(std::uint16_t);
  }

 private:
  static std::size_t tri3(std::uint32_t x) noexcept {
    return static_cast<std::size_t>(x) * (x + 1) * (x + 2) / 6;
  }
  static std::size_t tri2(std::uint32_t x) noexcept { return static_cast<std::size_t>(x) * (x + 1) / 2; }
  // Index of a non-increasing triple x >= y >= z.
  static std::size_t i3(std::uint32_t x, std::uint32_t y, std::uint32_t z) noexcept {
    return tri3(x) + tri2(y) + z;
  }
  static std::size_t i2(std::uint32_t x, std::uint32_t y) noexcept { return tri2(x) + y; }
  static void lower(std::uint16_t& slot, std::uint32_t v) noexcept {
    if (v < slot) slot = static_cast<std::uint16_t>(v);
  }

  bool row4(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const noexcept {
    return d > 0 && abc_[i3(a, b, c)] < d;
  }
  bool row3(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const noexcept {
    return (c > d && abd_[i3(a, b, d)] < c) || (d > 0 && ab_diag_[i2(a, b)] < d);
  }
  bool row2(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const noexcept {
    return (b > c && acd_[i3(a, c, d)] < b) || (c > d && ad_diag_[i2(a, d)] < c) || (d > 0 && a_diag_[a] < d);
  }
  bool row1(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const noexcept {
    return (a > b && bcd_[i3(b, c, d)] < a) || (b > c && cd_diag_[i2(c, d)] < b) ||
           (c > d && d_diag_[d] < c) || (d > 1 && all_diag_ < d);
  }

  std::uint32_t n_;
  std::vector<std::uint16_t> abc_, abd_, acd_, bcd_;
  std::vector<std::uint16_t> ab_diag_, ad_diag_, cd_diag_;
  std::vector<std::uint16_t> a_diag_, d_diag_;
  std::uint32_t all_diag_ = kNone;
};

}  // namespace chomp::kernel

#include "chomp/position.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "chomp/errors.hpp"

namespace chomp {

Position::Position(std::initializer_list<int> rows)
    : Position(std::span<const int>(rows.begin(), rows.size())) {}

Position::Position(std::span<const int> rows) {
  if (rows.empty() || rows.size() > static_cast<std::size_t>(kMaxRows)) {
    throw InvalidStateError("position must have 1.." + std::to_string(kMaxRows) + " rows, got " +
                            std::to_string(rows.size()));
  }
  k_ = static_cast<int>(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) throw InvalidStateError("negative row length");
    if (i > 0 && rows[i] > rows[i - 1]) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " (" << rows[i] << ") longer than row " << i << " (" << rows[i - 1] << ")";
      throw InvalidStateError(msg.str());
    }
    rows_[i] = rows[i];
  }
}

long Position::total() const noexcept {
  long sum = 0;
  for (int i = 0; i < k_; ++i) sum += rows_[static_cast<std::size_t>(i)];
  return sum;
}

std::string Position::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Position& p) {
  os << '(';
  for (int i = 0; i < p.k(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

PackedPosition pack(const Position& p) {
  if (p.k() > kMaxPackedRows) {
    throw EncodingError("cannot pack " + std::to_string(p.k()) + " rows (max " + std::to_string(kMaxPackedRows) + ")");
  }
  std::uint64_t code = 0;
  for (int i = 0; i < p.k(); ++i) {
    if (static_cast<std::uint32_t>(p[i]) >= kFieldLimit) {
      throw EncodingError("row length " + std::to_string(p[i]) + " does not fit a 16-bit field");
    }
    code |= static_cast<std::uint64_t>(p[i]) << (kFieldBits * (kMaxPackedRows - 1 - i));
  }
  return PackedPosition{code};
}

Position unpack(PackedPosition x, int k) {
  if (k < 1 || k > kMaxPackedRows) throw EncodingError("unpack: k must be in 1..4");
  std::array<int, kMaxPackedRows> rows{};
  for (int i = 0; i < kMaxPackedRows; ++i) rows[static_cast<std::size_t>(i)] = static_cast<int>(packed_field(x.code, i));
  for (int i = k; i < kMaxPackedRows; ++i) {
    if (rows[static_cast<std::size_t>(i)] != 0) {
      throw InvalidStateError("packed code has a non-zero field beyond row " + std::to_string(k));
    }
  }
  return Position(std::span<const int>(rows.data(), static_cast<std::size_t>(k)));
}

Position apply_move(const Position& p, Move m) {
  if (m.row < 1 || m.row > p.k() || m.col < 1 || m.col > p[m.row - 1]) {
    throw PreconditionError("move does not name an existing square");
  }
  if (m.row == 1 && m.col == 1) throw PreconditionError("the poison square is never taken");
  std::array<int, kMaxRows> rows{};
  for (int i = 0; i < p.k(); ++i) {
    rows[static_cast<std::size_t>(i)] = i >= m.row - 1 ? std::min(p[i], m.col - 1) : p[i];
  }
  return Position(std::span<const int>(rows.data(), static_cast<std::size_t>(p.k())));
}

std::vector<Position> successors(const Position& p) {
  std::vector<Position> out;
  for (int row = 1; row <= p.k(); ++row) {
    for (int col = 1; col <= p[row - 1]; ++col) {
      if (row == 1 && col == 1) continue;
      out.push_back(apply_move(p, Move{row, col}));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t state_count(int n_max, int k) {
  // Non-increasing k-tuples bounded by n_max: C(n_max + k, k); minus the all-zero tuple.
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n_max + i) / static_cast<std::uint64_t>(i);
  return c - 1;
}

std::vector<Position> enumerate_layer(int s, int n_max, int k) {
  std::vector<Position> out;
  for_each_in_layer(s, n_max, k, [&](const Position& p) { out.push_back(p); });
  return out;
}

std::vector<std::uint64_t> enumerate_layer_packed(int s, int n_max, int k) {
  if (k < 1 || k > kMaxPackedRows) throw EncodingError("enumerate_layer_packed: k must be in 1..4");
  if (static_cast<std::uint32_t>(n_max) >= kFieldLimit) throw EncodingError("n_max does not fit a 16-bit field");
  std::vector<std::uint64_t> out;
  if (s < 1) return out;
  std::array<int, kMaxRows> rows{};
  auto emit = [&](std::span<const int> r) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      code |= static_cast<std::uint64_t>(r[i]) << (kFieldBits * (kMaxPackedRows - 1 - static_cast<int>(i)));
    }
    out.push_back(code);
  };
  detail::fill_layer(rows, 0, k, s, n_max, emit);
  return out;
}

}  // namespace chomp

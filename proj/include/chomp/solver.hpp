#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "chomp/packed_set.hpp"
#include "chomp/position.hpp"

namespace chomp {

enum class MoveOrder {
  bottom_row_first,  // last row first, columns descending
  top_row_first,     // first row first, columns descending
  lexicographic,     // resulting tuple ascending (smallest successor first)
};

enum class Strategy {
  // Per-line minima of known P-positions; O(1) checks per state.
  line_index,
  // Probe every legal move against the P-set hash, stopping at the first hit.
  move_scan,
};

// Default refusal threshold on the number of states a solve would visit.
inline constexpr std::uint64_t kDefaultStateCeiling = 3'000'000'000ULL;

struct SolveConfig {
  int n_max = 1;
  int k = 4;
  int thread_count = 1;
  MoveOrder move_order = MoveOrder::bottom_row_first;
  Strategy strategy = Strategy::line_index;
  std::uint64_t state_ceiling = kDefaultStateCeiling;
  bool allow_oversize = false;
  // One line per completed layer when non-null.
  std::ostream* progress = nullptr;

  // Throws PreconditionError on n_max < 1, k outside 1..4, thread_count < 1,
  // or n_max beyond a 16-bit field.
  void validate() const;
};

// All P-positions with rows[0] <= n_max. Immutable once built.
class PSet {
 public:
  PSet(int n_max, int k, PackedSet members);
  // codes must be valid packed positions for k; duplicates are rejected.
  static PSet from_codes(int n_max, int k, std::span<const std::uint64_t> codes);

  int n_max() const noexcept { return n_max_; }
  int k() const noexcept { return k_; }
  std::size_t count() const noexcept { return members_.size(); }
  bool contains(PackedPosition x) const noexcept { return members_.contains(x.code); }
  const PackedSet& members() const noexcept { return members_; }

  // Ascending, which is lexicographic order on the tuples.
  std::vector<std::uint64_t> sorted_codes() const;
  std::vector<Position> sorted_positions() const;

  friend bool operator==(const PSet& x, const PSet& y);

 private:
  int n_max_;
  int k_;
  PackedSet members_;
};

// Layered retrograde solve, each cell-count layer classified in parallel
// (OpenMP) against the P-positions of earlier layers.
PSet solve(const SolveConfig& cfg);

// Single-threaded reference: same layer schedule, but built on successors()
// and std::unordered_set. Slow; for cross-checking the kernel.
PSet solve_reference(const SolveConfig& cfg);

// Throws OutOfRangeError if rows[0] > pset.n_max(), PreconditionError on a
// row-count mismatch.
bool is_p(const PSet& pset, const Position& p);

// Groups the P-positions of a 4-row PSet by their (a, b, c) prefix.
class TripleIndex {
 public:
  struct Triple {
    int a = 0;
    int b = 0;
    int c = 0;
    friend auto operator<=>(const Triple&, const Triple&) = default;
  };

  explicit TripleIndex(const PSet& pset);

  int n_max() const noexcept { return n_max_; }
  std::size_t triple_count() const noexcept { return triples_.size(); }
  // Sum of all extension-list lengths; equals the PSet count.
  std::size_t total() const noexcept { return ds_.size(); }

  // d values completing (a,b,c) to a P-position, ascending. Empty if absent.
  std::span<const int> extensions(int a, int b, int c) const;
  bool contains(int a, int b, int c) const { return !extensions(a, b, c).empty(); }

  // Prefixes ascending lexicographically.
  std::span<const Triple> triples() const noexcept { return triples_; }
  std::span<const int> extensions_at(std::size_t i) const;

 private:
  int n_max_;
  std::vector<Triple> triples_;
  std::vector<std::uint32_t> offsets_;
  std::vector<int> ds_;
};

TripleIndex build_triple_index(const PSet& pset);

}  // namespace chomp

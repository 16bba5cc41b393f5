#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chomp/position.hpp"

namespace chomp::oracle {

// Plain top-down memoized evaluator over unpacked tuples. It re-derives the
// move rule on its own and shares no code with the layered solver.
struct OracleCache {
  std::map<std::vector<int>, bool> memo;  // true = P-position
};

// Not thread-safe: one cache per thread.
bool oracle_is_p(const Position& p, OracleCache& cache);

// Largest n_max oracle_pset accepts for k rows without an explicit override.
int default_ceiling(int k);

// All P-positions with 1 <= rows[0] <= n_max, ascending. Throws
// ResourceLimitError above the ceiling (default_ceiling(k) unless given).
std::vector<Position> oracle_pset(int n_max, int k, std::optional<int> ceiling = std::nullopt);

}  // namespace chomp::oracle

#include <doctest.h>

#include "chomp/errors.hpp"
#include "chomp/oracle.hpp"
#include "chomp/solver.hpp"

using namespace chomp;
using namespace chomp::oracle;

TEST_CASE("oracle_is_p examples") {
  OracleCache cache;
  CHECK(oracle_is_p(Position{1, 0, 0, 0}, cache));
  CHECK_FALSE(oracle_is_p(Position{2, 2, 0, 0}, cache));
  CHECK(oracle_is_p(Position{3, 1, 1, 0}, cache));
}

TEST_CASE("oracle_pset examples") {
  CHECK(oracle_pset(2, 2) == std::vector<Position>{{1, 0}, {2, 1}});
  CHECK(oracle_pset(2, 4) == std::vector<Position>{{1, 0, 0, 0}, {2, 1, 0, 0}, {2, 2, 1, 0}, {2, 2, 2, 1}});
  // Frozen from an independent memoized brute force; (3,3,2) is N via (3,3,2) -> (3,1,1).
  CHECK(oracle_pset(3, 3) == std::vector<Position>{{1, 0, 0}, {2, 1, 0}, {2, 2, 1}, {3, 1, 1}, {3, 2, 0}});
}

TEST_CASE("oracle ceilings") {
  CHECK_THROWS_AS(oracle_pset(26, 4), ResourceLimitError);
  CHECK_THROWS_AS(oracle_pset(61, 3), ResourceLimitError);
  CHECK_NOTHROW(oracle_pset(27, 4, 30));
}

TEST_CASE("property: memo satisfies the fixpoint") {
  OracleCache cache;
  oracle_is_p(Position{9, 7, 4, 2}, cache);
  REQUIRE(cache.memo.size() > 100);
  for (const auto& [rows, p] : cache.memo) {
    const Position pos{std::span<const int>(rows)};
    bool reaches_p = false;
    for (const Position& q : successors(pos)) {
      const auto it = cache.memo.find(std::vector<int>(q.rows().begin(), q.rows().end()));
      REQUIRE(it != cache.memo.end());
      reaches_p = reaches_p || it->second;
    }
    CHECK(p != reaches_p);
  }
}

TEST_CASE("deep positions do not overflow the stack") {
  OracleCache cache;
  CHECK(oracle_is_p(Position{400, 399}, cache));
}

TEST_CASE("cross-row consistency: 3-row oracle is the d = 0 slice of the 4-row oracle") {
  std::vector<Position> slice;
  for (const Position& p : oracle_pset(12, 4))
    if (p[3] == 0) slice.push_back(Position{p[0], p[1], p[2]});
  CHECK(slice == oracle_pset(12, 3));
}

TEST_CASE("oracle agrees with the solver") {
  SolveConfig cfg;
  cfg.n_max = 14;
  CHECK(oracle_pset(14, 4) == solve(cfg).sorted_positions());
  cfg.n_max = 30;
  cfg.k = 3;
  CHECK(oracle_pset(30, 3) == solve(cfg).sorted_positions());
}

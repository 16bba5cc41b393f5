#include <doctest.h>

#include <sstream>

#include "chomp/errors.hpp"
#include "chomp/solver.hpp"
#include "solver/kernel.hpp"

using namespace chomp;

namespace {

PSet run(int n_max, int k = 4, int threads = 1, MoveOrder order = MoveOrder::bottom_row_first,
         Strategy strategy = Strategy::line_index) {
  SolveConfig cfg;
  cfg.n_max = n_max;
  cfg.k = k;
  cfg.thread_count = threads;
  cfg.move_order = order;
  cfg.strategy = strategy;
  return solve(cfg);
}

}  // namespace

TEST_CASE("solve small boards") {
  CHECK(run(2).sorted_positions() ==
        std::vector<Position>{{1, 0, 0, 0}, {2, 1, 0, 0}, {2, 2, 1, 0}, {2, 2, 2, 1}});
  CHECK(run(1, 2).sorted_positions() == std::vector<Position>{{1, 0}});
}

TEST_CASE("is_p") {
  const PSet p = run(4);
  CHECK(is_p(p, Position{3, 3, 1, 1}));
  CHECK_FALSE(is_p(p, Position{1, 1, 0, 0}));
  CHECK(is_p(p, Position{4, 2, 2, 0}));
  CHECK_THROWS_AS(is_p(p, Position{5, 0, 0, 0}), OutOfRangeError);
  CHECK_THROWS_AS(is_p(p, Position{2, 1}), PreconditionError);
}

TEST_CASE("triple index") {
  const PSet p4 = run(4);
  const TripleIndex idx(p4);
  CHECK(std::vector<int>(idx.extensions(2, 2, 2).begin(), idx.extensions(2, 2, 2).end()) == std::vector<int>{1});
  CHECK(idx.extensions(2, 2, 0).empty());
  CHECK(std::vector<int>(idx.extensions(4, 1, 1).begin(), idx.extensions(4, 1, 1).end()) == std::vector<int>{1});
  CHECK(idx.total() == p4.count());
  CHECK_THROWS_AS(TripleIndex(run(3, 3)), PreconditionError);
}

TEST_CASE("config validation and resource ceiling") {
  SolveConfig cfg;
  cfg.n_max = 0;
  CHECK_THROWS_AS(solve(cfg), PreconditionError);
  cfg.n_max = 10;
  cfg.k = 5;
  CHECK_THROWS_AS(solve(cfg), PreconditionError);
  cfg.k = 4;
  cfg.thread_count = 0;
  CHECK_THROWS_AS(solve(cfg), PreconditionError);
  cfg.thread_count = 1;
  cfg.state_ceiling = 100;
  CHECK_THROWS_AS(solve(cfg), ResourceLimitError);
  cfg.allow_oversize = true;
  CHECK_NOTHROW(solve(cfg));
}

TEST_CASE("progress prints one line per layer") {
  std::ostringstream log;
  SolveConfig cfg;
  cfg.n_max = 3;
  cfg.progress = &log;
  solve(cfg);
  const std::string s = log.str();
  CHECK(std::count(s.begin(), s.end(), '\n') == 12);
  CHECK(s.find("layer 12/12 p_count=") != std::string::npos);
}

TEST_CASE("property: defining fixpoint on every state") {
  for (int k = 1; k <= 4; ++k) {
    const int n = k == 4 ? 14 : 20;
    const PSet p = run(n, k);
    CHECK(p.contains(pack(k == 1 ? Position{1} : k == 2 ? Position{1, 0} : k == 3 ? Position{1, 0, 0}
                                                                                   : Position{1, 0, 0, 0})));
    for (int s = 1; s <= k * n; ++s) {
      for (const Position& q : enumerate_layer(s, n, k)) {
        bool reaches_p = false;
        for (const Position& r : successors(q)) reaches_p = reaches_p || p.contains(pack(r));
        CHECK(p.contains(pack(q)) != reaches_p);
      }
    }
  }
}

TEST_CASE("two-row slice") {
  const PSet p = run(40);
  std::vector<Position> slice;
  for (const Position& q : p.sorted_positions())
    if (q[2] == 0 && q[3] == 0) slice.push_back(q);
  REQUIRE(slice.size() == 40);
  for (int a = 1; a <= 40; ++a) CHECK(slice[static_cast<std::size_t>(a - 1)] == Position{a, a - 1, 0, 0});
}

TEST_CASE("strategies, move orders, thread counts and the reference agree") {
  const auto expected = solve_reference(SolveConfig{.n_max = 16}).sorted_codes();
  for (Strategy st : {Strategy::line_index, Strategy::move_scan}) {
    for (MoveOrder mo : {MoveOrder::bottom_row_first, MoveOrder::top_row_first, MoveOrder::lexicographic}) {
      for (int t : {1, 4, 8}) CHECK(run(16, 4, t, mo, st).sorted_codes() == expected);
    }
  }
  for (int k = 1; k <= 3; ++k) {
    SolveConfig cfg;
    cfg.n_max = 25;
    cfg.k = k;
    CHECK(solve(cfg) == solve_reference(cfg));
  }
}

TEST_CASE("k-row sets nest: the 3-row set is the d = 0 slice") {
  const PSet three = run(30, 3);
  std::vector<std::uint64_t> slice;
  for (std::uint64_t c : run(30, 4).sorted_codes())
    if ((c & 0xFFFF) == 0) slice.push_back(c);
  CHECK(slice == three.sorted_codes());
}

TEST_CASE("PSet::from_codes validation") {
  CHECK_THROWS_AS(PSet::from_codes(2, 4, std::vector<std::uint64_t>{0x0001000000000000ULL, 0x0001000000000000ULL}),
                  InvalidStateError);
  CHECK_THROWS_AS(PSet::from_codes(1, 4, std::vector<std::uint64_t>{0x0002000100000000ULL}), OutOfRangeError);
}

TEST_CASE("packed set grows and finds everything") {
  PackedSet s;
  for (std::uint64_t i = 1; i <= 100000; ++i) CHECK(s.insert(i * 0x10001ULL));
  CHECK(s.size() == 100000);
  CHECK_FALSE(s.insert(0x10001ULL));
  for (std::uint64_t i = 1; i <= 100000; ++i) REQUIRE(s.contains(i * 0x10001ULL));
  CHECK_FALSE(s.contains(0x10000ULL));
}

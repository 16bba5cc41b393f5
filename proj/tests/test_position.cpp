#include <doctest.h>

#include <random>
#include <set>

#include "chomp/errors.hpp"
#include "chomp/position.hpp"

using namespace chomp;

TEST_CASE("pack lays out big-field-first") {
  CHECK(pack(Position{1, 0, 0, 0}).code == 0x0001000000000000ULL);
  CHECK(pack(Position{2, 2, 1, 0}).code == 0x0002000200010000ULL);
  CHECK(pack(Position{500, 500, 500, 500}).code == 0x01F401F401F401F4ULL);
}

TEST_CASE("pack rejects overflow") {
  CHECK_THROWS_AS(pack(Position{65536, 0, 0, 0}), EncodingError);
  CHECK_THROWS_AS(pack(Position{3, 2, 1, 1, 0}), EncodingError);
  CHECK_NOTHROW(pack(Position{65535, 65535, 0, 0}));
}

TEST_CASE("unpack inverts pack and rejects broken tuples") {
  CHECK(unpack(PackedPosition{0x0001000000000000ULL}) == Position{1, 0, 0, 0});
  CHECK(unpack(PackedPosition{0x0002000200020001ULL}) == Position{2, 2, 2, 1});
  CHECK_THROWS_AS(unpack(PackedPosition{0x0000000100000000ULL}), InvalidStateError);
  CHECK(unpack(PackedPosition{0x0003000100000000ULL}, 2) == Position{3, 1});
  CHECK_THROWS_AS(unpack(PackedPosition{0x0003000100000001ULL}, 3), InvalidStateError);
}

TEST_CASE("Position rejects increasing rows") {
  CHECK_THROWS_AS((Position{1, 2}), InvalidStateError);
  CHECK_THROWS_AS((Position{3, -1}), InvalidStateError);
  CHECK_FALSE(Position{0, 0, 0, 0}.playable());
}

namespace {

Position random_position(std::mt19937_64& rng, int k, int max_row) {
  std::vector<int> rows(static_cast<std::size_t>(k));
  for (auto& r : rows) r = static_cast<int>(rng() % static_cast<std::uint64_t>(max_row + 1));
  std::sort(rows.rbegin(), rows.rend());
  return Position{std::span<const int>(rows)};
}

}  // namespace

TEST_CASE("property: round trip and order embedding") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const int max_row = i % 2 ? 65535 : 40;
    const Position p = random_position(rng, 4, max_row);
    const Position q = random_position(rng, 4, max_row);
    REQUIRE(unpack(pack(p)) == p);
    CHECK((p < q) == (pack(p) < pack(q)));
  }
}

TEST_CASE("successors examples") {
  CHECK(successors(Position{1, 0, 0, 0}).empty());
  CHECK(successors(Position{2, 1, 0, 0}) == std::vector<Position>{{1, 1, 0, 0}, {2, 0, 0, 0}});
  CHECK(successors(Position{2, 2, 1, 0}) ==
        std::vector<Position>{{1, 1, 1, 0}, {2, 0, 0, 0}, {2, 1, 1, 0}, {2, 2, 0, 0}});
}

TEST_CASE("apply_move refuses the poison square") {
  CHECK_THROWS_AS(apply_move(Position{2, 1}, Move{1, 1}), PreconditionError);
  CHECK_THROWS_AS(apply_move(Position{2, 1}, Move{2, 2}), PreconditionError);
  CHECK(apply_move(Position{4, 3, 3, 2}, Move{2, 2}) == Position{4, 1, 1, 1});
}

TEST_CASE("property: successors descend, stay valid, keep the poison") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Position p = random_position(rng, 1 + static_cast<int>(rng() % 4), 12);
    if (!p.playable()) continue;
    for (const Position& q : successors(p)) {
      CHECK(q.total() < p.total());
      CHECK(q.playable());
    }
  }
}

TEST_CASE("enumerate_layer examples") {
  CHECK(enumerate_layer(1, 500, 4) == std::vector<Position>{{1, 0, 0, 0}});
  CHECK(enumerate_layer(3, 500, 4) == std::vector<Position>{{1, 1, 1, 0}, {2, 1, 0, 0}, {3, 0, 0, 0}});
  CHECK(enumerate_layer(3, 2, 4) == std::vector<Position>{{1, 1, 1, 0}, {2, 1, 0, 0}});
}

TEST_CASE("property: layers partition the state space") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 9; ++n) {
      std::set<Position> seen;
      std::size_t emitted = 0;
      for (int s = 1; s <= k * n; ++s) {
        const auto layer = enumerate_layer(s, n, k);
        CHECK(std::is_sorted(layer.begin(), layer.end()));
        for (const Position& p : layer) {
          CHECK(p.total() == s);
          CHECK(p[0] <= n);
          seen.insert(p);
          ++emitted;
        }
        const auto packed = enumerate_layer_packed(s, n, k);
        REQUIRE(packed.size() == layer.size());
        for (std::size_t i = 0; i < packed.size(); ++i) CHECK(packed[i] == pack(layer[i]).code);
      }
      CHECK(emitted == seen.size());
      CHECK(emitted == state_count(n, k));
    }
  }
}

TEST_CASE("state_count against brute force") {
  // Independent count by nested loops for k = 4.
  for (int n : {1, 2, 5, 13}) {
    std::uint64_t brute = 0;
    for (int a = 1; a <= n; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= b; ++c)
          for (int d = 0; d <= c; ++d) ++brute;
    CHECK(state_count(n, 4) == brute);
  }
  CHECK(state_count(500, 4) == 2656615625ULL);
}

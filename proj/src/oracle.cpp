#include "chomp/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "chomp/errors.hpp"

namespace chomp::oracle {

namespace {

using Rows = std::vector<int>;

// Every board reachable by removing square (r, c) together with all squares
// (r', c') with r' >= r and c' >= c, the poisoned (0, 0) excluded.
std::vector<Rows> children(const Rows& rows) {
  std::vector<Rows> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      if (r == 0 && c == 0) continue;
      Rows next = rows;
      for (std::size_t below = r; below < next.size(); ++below) next[below] = std::min(next[below], c);
      out.push_back(std::move(next));
    }
  }
  return out;
}

void collect_boards(Rows& rows, std::size_t i, int cap, std::vector<Rows>& out) {
  if (i == rows.size()) {
    out.push_back(rows);
    return;
  }
  for (int v = 0; v <= cap; ++v) {
    rows[i] = v;
    collect_boards(rows, i + 1, v, out);
  }
}

}  // namespace

bool oracle_is_p(const Position& p, OracleCache& cache) {
  const Rows root(p.rows().begin(), p.rows().end());
  std::vector<Rows> stack{root};
  while (!stack.empty()) {
    const Rows top = stack.back();
    if (cache.memo.count(top)) {
      stack.pop_back();
      continue;
    }
    bool pending = false;
    bool reaches_p = false;
    for (Rows& child : children(top)) {
      const auto it = cache.memo.find(child);
      if (it == cache.memo.end()) {
        stack.push_back(std::move(child));
        pending = true;
      } else if (it->second) {
        reaches_p = true;
      }
    }
    if (pending) continue;
    cache.memo.emplace(top, !reaches_p);
    stack.pop_back();
  }
  return cache.memo.at(root);
}

int default_ceiling(int k) {
  switch (k) {
    case 1:
      return 10000;
    case 2:
      return 300;
    case 3:
      return 60;
    case 4:
      return 25;
    default:
      return 12;
  }
}

std::vector<Position> oracle_pset(int n_max, int k, std::optional<int> ceiling) {
  if (k < 1 || k > kMaxRows) throw PreconditionError("oracle: k out of range");
  if (n_max < 1) throw PreconditionError("oracle: n_max must be >= 1");
  const int limit = ceiling.value_or(default_ceiling(k));
  if (n_max > limit) {
    throw ResourceLimitError("oracle refuses n_max = " + std::to_string(n_max) + " for k = " + std::to_string(k) +
                             " (ceiling " + std::to_string(limit) + ")");
  }
  OracleCache cache;
  std::vector<Position> out;
  Rows rows(static_cast<std::size_t>(k), 0);
  for (int first = 1; first <= n_max; ++first) {
    rows[0] = first;
    std::vector<Rows> boards;
    collect_boards(rows, 1, first, boards);
    for (const Rows& b : boards) {
      const Position p{std::span<const int>(b)};
      if (oracle_is_p(p, cache)) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chomp::oracle

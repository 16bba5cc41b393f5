#include <omp.h>

#include <optional>
#include <ostream>
#include <string>

#include "chomp/errors.hpp"
#include "chomp/solver.hpp"
#include "kernel.hpp"
#include "line_index.hpp"

namespace chomp {

namespace {

void check_ceiling(const SolveConfig& cfg) {
  const std::uint64_t states = state_count(cfg.n_max, cfg.k);
  if (states > cfg.state_ceiling && !cfg.allow_oversize) {
    throw ResourceLimitError("solve would visit " + std::to_string(states) + " states, above the ceiling of " +
                             std::to_string(cfg.state_ceiling));
  }
}

}  // namespace

PSet solve(const SolveConfig& cfg) {
  cfg.validate();
  check_ceiling(cfg);

  const int layers = cfg.k * cfg.n_max;
  const int threads = cfg.thread_count;
  const bool use_lines = cfg.strategy == Strategy::line_index;
  PackedSet members;
  std::optional<kernel::LineIndex> lines;
  if (use_lines) lines.emplace(cfg.n_max);
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(threads));

  for (int s = 1; s <= layers; ++s) {
    const std::vector<std::uint64_t> layer = enumerate_layer_packed(s, cfg.n_max, cfg.k);
    const auto size = static_cast<std::int64_t>(layer.size());

    // Moves strictly lower the cell count, so states in one layer never
    // depend on each other: members and lines stay read-only until the
    // barrier below.
#pragma omp parallel num_threads(threads)
    {
      auto& local = found[static_cast<std::size_t>(omp_get_thread_num())];
      local.clear();
#pragma omp for schedule(dynamic, 1024)
      for (std::int64_t i = 0; i < size; ++i) {
        const std::uint64_t code = layer[static_cast<std::size_t>(i)];
        const bool n_position = use_lines ? lines->has_move_to_p(code, cfg.move_order)
                                          : kernel::has_move_to_p(members, code, cfg.k, cfg.move_order);
        if (!n_position) local.push_back(code);
      }
    }

    std::size_t added = 0;
    for (const auto& f : found) added += f.size();
    members.reserve(members.size() + added);
    for (const auto& f : found) {
      for (std::uint64_t c : f) {
        members.insert(c);
        if (use_lines) lines->add(c);
      }
    }

    if (cfg.progress) *cfg.progress << "layer " << s << '/' << layers << " p_count=" << members.size() << '\n';
  }
  return PSet(cfg.n_max, cfg.k, std::move(members));
}

}  // namespace chomp

#include <ostream>
#include <unordered_set>

#include "chomp/errors.hpp"
#include "chomp/solver.hpp"

namespace chomp {

PSet solve_reference(const SolveConfig& cfg) {
  cfg.validate();
  if (state_count(cfg.n_max, cfg.k) > cfg.state_ceiling && !cfg.allow_oversize) {
    throw ResourceLimitError("reference solve above the state ceiling");
  }

  std::unordered_set<std::uint64_t> p_codes;
  const int layers = cfg.k * cfg.n_max;
  for (int s = 1; s <= layers; ++s) {
    std::vector<std::uint64_t> layer_p;
    for_each_in_layer(s, cfg.n_max, cfg.k, [&](const Position& p) {
      for (const Position& q : successors(p))
        if (p_codes.count(pack(q).code)) return;
      layer_p.push_back(pack(p).code);
    });
    p_codes.insert(layer_p.begin(), layer_p.end());
    if (cfg.progress) *cfg.progress << "layer " << s << '/' << layers << " p_count=" << p_codes.size() << '\n';
  }
  std::vector<std::uint64_t> codes(p_codes.begin(), p_codes.end());
  return PSet::from_codes(cfg.n_max, cfg.k, codes);
}

}  // namespace chomp

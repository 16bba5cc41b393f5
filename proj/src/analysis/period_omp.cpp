#include "autocorr_common.hpp"

namespace chomp::analysis {

AutocorrResult d_autocorrelation(std::span<const std::uint32_t> seq, int max_lag) {
  double denom = 0.0;
  const std::vector<double> x = detail::centered(seq, max_lag, denom);
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 2);
  // Each lag is an independent reduction; the per-lag sum order matches the
  // serial path, so results are bit-identical to it.
#pragma omp parallel for schedule(dynamic, 8)
  for (int l = 0; l <= max_lag + 1; ++l) r[static_cast<std::size_t>(l)] = detail::lag_sum(x, l) / denom;
  return detail::finish(std::move(r), max_lag);
}

}  // namespace chomp::analysis

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chomp/analysis.hpp"

namespace chomp::analysis::detail {

// Mean-centred copy of seq; denom receives the sum of squares.
std::vector<double> centered(std::span<const std::uint32_t> seq, int max_lag, double& denom);
double lag_sum(std::span<const double> x, int lag);
// r must cover lags 0..max_lag+1.
AutocorrResult finish(std::vector<double> r, int max_lag);

}  // namespace chomp::analysis::detail

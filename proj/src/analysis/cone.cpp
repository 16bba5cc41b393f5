#include <algorithm>
#include <climits>
#include <map>

#include "chomp/analysis.hpp"
#include "chomp/errors.hpp"

namespace chomp::analysis {

std::vector<int> cone_c_values(int c_max, int step) {
  std::vector<int> out;
  for (int c = step; c <= c_max; c += step) out.push_back(c);
  return out;
}

int default_cone_c_max(int n_max) {
  const int cap = std::min(300, 2 * n_max / 3);
  return cap / 5 * 5;
}

ConeFit cone_fit(std::span<const Triple> extending, std::span<const int> c_values, std::optional<int> bound,
                 int period) {
  if (period < 1) throw PreconditionError("cone_fit: period must be >= 1");
  struct Band {
    int min_gap = INT_MAX;
    int max_gap = INT_MIN;
    bool widest_at_bound = false;
    std::size_t triples = 0;
  };
  std::map<int, Band> bands;
  for (int c : c_values) bands.emplace(c, Band{});
  for (const Triple& t : extending) {
    const auto it = bands.find(t.c);
    if (it == bands.end()) continue;
    Band& band = it->second;
    const int gap = t.a - t.b;
    const bool at_bound = bound && t.a >= *bound;
    if (gap > band.max_gap) {
      band.max_gap = gap;
      band.widest_at_bound = at_bound;
    } else if (gap == band.max_gap) {
      band.widest_at_bound = band.widest_at_bound || at_bound;
    }
    band.min_gap = std::min(band.min_gap, gap);
    ++band.triples;
  }

  ConeFit fit;
  fit.period = period;
  for (const auto& [c, band] : bands) {
    if (band.triples == 0) {
      fit.skipped_empty.push_back(c);
    } else if (band.widest_at_bound) {
      fit.skipped_clipped.push_back(c);
    } else {
      fit.slices.push_back(ConeSlice{c, band.min_gap, band.max_gap, band.max_gap - band.min_gap, band.triples});
    }
  }
  if (fit.slices.size() < 3) {
    throw AnalysisError(AnalysisError::Kind::insufficient_data,
                        "cone_fit: " + std::to_string(fit.slices.size()) + " usable slices, need 3");
  }

  const double n = static_cast<double>(fit.slices.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const ConeSlice& s : fit.slices) {
    sx += s.c;
    sy += s.width;
    sxx += static_cast<double>(s.c) * s.c;
    sxy += static_cast<double>(s.c) * s.width;
  }
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;

  std::map<int, std::pair<double, int>> by_class;
  for (const ConeSlice& s : fit.slices) {
    auto& acc = by_class[s.c % period];
    acc.first += s.width - (fit.slope * s.c + fit.intercept);
    ++acc.second;
  }
  for (const auto& [cls, acc] : by_class) fit.residuals_by_class.emplace_back(cls, acc.first / acc.second);
  return fit;
}

}  // namespace chomp::analysis

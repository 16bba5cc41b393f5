#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "chomp/analysis.hpp"
#include "chomp/errors.hpp"

namespace chomp::analysis {

namespace {

double median(std::vector<double>& v) {
  const std::size_t n = v.size();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  const double hi = *mid;
  if (n % 2) return hi;
  const double lo = *std::max_element(v.begin(), mid);
  return 0.5 * (lo + hi);
}

void require_four_rows(std::span<const Position> pset) {
  for (const Position& p : pset) {
    if (p.k() != 4) throw PreconditionError("ratio analysis needs 4-row positions");
    if (p[0] < 1) throw PreconditionError("ratio analysis needs a >= 1");
  }
}

// Medians of b/a, c/a, d/a over positions with lo <= a <= hi.
RatioFit median_fit(std::span<const Position> pset, int lo, int hi, RatioMethod method) {
  std::array<std::vector<double>, 3> ratios;
  for (const Position& p : pset) {
    if (p[0] < lo || p[0] > hi) continue;
    const double a = p[0];
    for (int i = 0; i < 3; ++i) ratios[static_cast<std::size_t>(i)].push_back(p[i + 1] / a);
  }
  RatioFit fit;
  fit.method = method;
  fit.window_lo = lo;
  fit.window_hi = hi;
  fit.sample_count = ratios[0].size();
  if (fit.sample_count == 0) return fit;
  for (std::size_t i = 0; i < 3; ++i) fit.limits[i] = median(ratios[i]);
  return fit;
}

}  // namespace

std::string to_string(RatioMethod m) {
  switch (m) {
    case RatioMethod::windowed_median:
      return "windowed_median";
    case RatioMethod::rolling_window:
      return "rolling_window";
    case RatioMethod::power_law:
      return "power_law";
  }
  return "?";
}

RatioFit ratio_windowed_median(std::span<const Position> pset, int n_max, double a_min_fraction) {
  if (pset.empty()) throw PreconditionError("ratio_windowed_median: empty P-set");
  require_four_rows(pset);
  const int lo = static_cast<int>(std::floor(a_min_fraction * n_max)) + 1;
  RatioFit fit = median_fit(pset, lo, n_max, RatioMethod::windowed_median);
  if (fit.sample_count == 0) {
    throw AnalysisError(AnalysisError::Kind::empty_window,
                        "no P-positions with a in [" + std::to_string(lo) + ", " + std::to_string(n_max) + "]");
  }
  return fit;
}

std::vector<RollingBucket> ratio_rolling(std::span<const Position> pset, int n_max, int window_width) {
  if (pset.empty()) throw PreconditionError("ratio_rolling: empty P-set");
  if (window_width < 1) throw PreconditionError("ratio_rolling: window width must be >= 1");
  require_four_rows(pset);
  std::vector<RollingBucket> out;
  for (int lo = 1; lo <= n_max; lo += window_width) {
    const int hi = std::min(n_max, lo + window_width - 1);
    RatioFit fit = median_fit(pset, lo, hi, RatioMethod::rolling_window);
    if (fit.sample_count == 0) continue;
    out.push_back(RollingBucket{0.5 * (lo + hi), fit});
  }
  return out;
}

PowerLaw fit_power_law(std::span<const double> a, std::span<const double> y) {
  if (a.size() != y.size() || a.size() < 3) throw PreconditionError("fit_power_law: need >= 3 paired samples");
  const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
  if (*ymin == *ymax) {
    throw AnalysisError(AnalysisError::Kind::degenerate_fit, "constant data: exponent is unidentifiable");
  }
  const double n = static_cast<double>(a.size());
  double sy = 0.0;
  for (double v : y) sy += v;

  PowerLaw best;
  best.sse = std::numeric_limits<double>::infinity();
  std::vector<double> x(a.size());
  for (int step = 10; step <= 300; ++step) {
    const double p = step / 100.0;
    double sx = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      x[i] = std::pow(a[i], -p);
      sx += x[i];
      sxx += x[i] * x[i];
      sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    if (det <= 0.0) continue;
    const double scale = (n * sxy - sx * sy) / det;
    const double limit = (sy - scale * sx) / n;
    double sse = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double e = limit + scale * x[i] - y[i];
      sse += e * e;
    }
    if (sse < best.sse) best = PowerLaw{limit, scale, p, sse};
  }
  if (!std::isfinite(best.sse)) throw AnalysisError(AnalysisError::Kind::degenerate_fit, "no identifiable exponent");
  return best;
}

RatioFit ratio_powerlaw_fit(std::span<const Position> pset) {
  require_four_rows(pset);
  std::map<int, std::array<std::vector<double>, 3>> by_a;
  for (const Position& p : pset) {
    auto& slot = by_a[p[0]];
    for (int i = 0; i < 3; ++i) slot[static_cast<std::size_t>(i)].push_back(p[i + 1] / static_cast<double>(p[0]));
  }
  if (by_a.size() < 10) throw PreconditionError("ratio_powerlaw_fit: need >= 10 distinct a values");

  std::vector<double> xs;
  std::array<std::vector<double>, 3> ys;
  for (auto& [a, slot] : by_a) {
    xs.push_back(a);
    for (std::size_t i = 0; i < 3; ++i) ys[i].push_back(median(slot[i]));
  }

  RatioFit fit;
  fit.method = RatioMethod::power_law;
  fit.window_lo = by_a.begin()->first;
  fit.window_hi = by_a.rbegin()->first;
  fit.sample_count = pset.size();
  for (std::size_t i = 0; i < 3; ++i) {
    fit.power[i] = fit_power_law(xs, ys[i]);
    fit.limits[i] = fit.power[i].limit;
  }
  return fit;
}

}  // namespace chomp::analysis

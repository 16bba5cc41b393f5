#include <algorithm>
#include <cmath>

#include "autocorr_common.hpp"
#include "chomp/analysis.hpp"
#include "chomp/errors.hpp"

namespace chomp::analysis {

namespace detail {

std::vector<double> centered(std::span<const std::uint32_t> seq, int max_lag, double& denom) {
  if (max_lag < 1) throw PreconditionError("autocorrelation: max_lag must be >= 1");
  if (seq.size() <= 2 * static_cast<std::size_t>(max_lag)) {
    throw PreconditionError("autocorrelation: sequence length must exceed 2 * max_lag");
  }
  double mean = 0.0;
  for (std::uint32_t v : seq) mean += v;
  mean /= static_cast<double>(seq.size());
  std::vector<double> x(seq.size());
  denom = 0.0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    x[t] = seq[t] - mean;
    denom += x[t] * x[t];
  }
  if (denom == 0.0) throw AnalysisError(AnalysisError::Kind::zero_variance, "autocorrelation of a constant sequence");
  return x;
}

double lag_sum(std::span<const double> x, int lag) {
  double s = 0.0;
  const std::size_t n = x.size() - static_cast<std::size_t>(lag);
  for (std::size_t t = 0; t < n; ++t) s += x[t] * x[t + static_cast<std::size_t>(lag)];
  return s;
}

AutocorrResult finish(std::vector<double> r, int max_lag) {
  AutocorrResult out;
  // r holds one extra lag so that max_lag itself can be tested as a peak.
  for (int l = 2; l <= max_lag; ++l) {
    const auto i = static_cast<std::size_t>(l);
    if (r[i] > r[i - 1] && r[i] >= r[i + 1]) out.peak_lags.push_back(l);
  }
  std::stable_sort(out.peak_lags.begin(), out.peak_lags.end(),
                   [&](int x, int y) { return r[static_cast<std::size_t>(x)] > r[static_cast<std::size_t>(y)]; });
  r.resize(static_cast<std::size_t>(max_lag) + 1);
  out.r = std::move(r);
  return out;
}

}  // namespace detail

AutocorrResult d_autocorrelation_serial(std::span<const std::uint32_t> seq, int max_lag) {
  double denom = 0.0;
  const std::vector<double> x = detail::centered(seq, max_lag, denom);
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 2);
  for (int l = 0; l <= max_lag + 1; ++l) r[static_cast<std::size_t>(l)] = detail::lag_sum(x, l) / denom;
  return detail::finish(std::move(r), max_lag);
}

std::vector<ModScanResult> mod_chi2_scan(std::span<const LabeledTriple> universe, std::span<const int> moduli) {
  std::size_t positives = 0;
  for (const LabeledTriple& t : universe) positives += t.extends;
  const double rate = universe.empty() ? 0.0 : static_cast<double>(positives) / universe.size();

  std::vector<ModScanResult> out;
  for (int m : moduli) {
    if (m < 1) throw PreconditionError("mod_chi2_scan: modulus must be >= 1");
    std::vector<std::uint64_t> total(static_cast<std::size_t>(m)), hits(static_cast<std::size_t>(m));
    for (const LabeledTriple& t : universe) {
      const auto cls = static_cast<std::size_t>((t.a - t.b) % m);
      ++total[cls];
      hits[cls] += t.extends;
    }
    ModScanResult res;
    res.modulus = m;
    res.dof = m - 1;
    for (std::size_t cls = 0; cls < total.size(); ++cls) {
      if (total[cls] == 0) continue;
      ++res.classes_used;
      const double n = static_cast<double>(total[cls]);
      const double observed[2] = {static_cast<double>(hits[cls]), n - static_cast<double>(hits[cls])};
      const double expected[2] = {n * rate, n * (1.0 - rate)};
      for (int j = 0; j < 2; ++j) {
        if (expected[j] <= 0.0) continue;
        const double d = observed[j] - expected[j];
        res.chi2 += d * d / expected[j];
      }
    }
    out.push_back(res);
  }
  return out;
}

}  // namespace chomp::analysis

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chomp/position.hpp"
#include "chomp/solver.hpp"

namespace chomp::analysis {

using Triple = TripleIndex::Triple;

inline constexpr int kPeriod = 112;
// Published limit estimates for b/a, c/a, d/a; used as reference lines.
inline constexpr std::array<double, 3> kPublishedLimits = {0.762, 0.499, 0.224};

// ---------------------------------------------------------------------------
// Triple universe: every (a, b, c) with a >= b >= c >= 0 and 1 <= a <= n_max,
// labelled by whether some d completes it to a P-position.

struct LabeledTriple {
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  std::uint16_t c = 0;
  bool extends = false;
};

std::uint64_t triple_universe_size(int n_max);
// Ascending lexicographic order.
std::vector<LabeledTriple> triple_universe(const TripleIndex& index);
std::vector<Triple> extending_triples(const TripleIndex& index);

// ---------------------------------------------------------------------------
// Unique extension

struct ExtensionAudit {
  int n_max = 0;
  std::uint64_t triples_total = 0;
  std::uint64_t triples_extending = 0;
  std::size_t max_multiplicity = 0;
  std::vector<Triple> violations;  // triples with two or more extensions
  double fraction = 0.0;

  // Cross-check against the 3-row oracle for a <= three_row_bound (0 = skipped).
  int three_row_bound = 0;
  std::size_t three_row_p_count = 0;
  std::vector<Triple> three_row_not_extending;  // must stay empty
  std::size_t extending_within_bound = 0;
  std::size_t extending_three_row_n = 0;  // extending triples that are 3-row N-positions
};

// three_row_bound defaults to min(n_max, 50); pass 0 to skip the oracle pass.
ExtensionAudit audit_unique_extension(const TripleIndex& index, std::optional<int> three_row_bound = std::nullopt);

// ---------------------------------------------------------------------------
// Asymptotic ratios b/a, c/a, d/a

enum class RatioMethod { windowed_median, rolling_window, power_law };

std::string to_string(RatioMethod m);

// y(a) = limit + scale * a^(-exponent)
struct PowerLaw {
  double limit = 0.0;
  double scale = 0.0;
  double exponent = 0.0;
  double sse = 0.0;
};

struct RatioFit {
  RatioMethod method = RatioMethod::windowed_median;
  std::array<double, 3> limits{};  // L1, L2, L3
  int window_lo = 0;               // a range of the samples, inclusive
  int window_hi = 0;
  std::array<PowerLaw, 3> power{};  // power_law only
  std::size_t sample_count = 0;

  double L1() const { return limits[0]; }
  double L2() const { return limits[1]; }
  double L3() const { return limits[2]; }
};

struct RollingBucket {
  double a_center = 0.0;
  RatioFit fit;
};

// Medians over P-positions with a > a_min_fraction * n_max.
RatioFit ratio_windowed_median(std::span<const Position> pset, int n_max, double a_min_fraction = 0.9);

// Medians over consecutive a-buckets [1, w], [w+1, 2w], ...; empty buckets omitted.
std::vector<RollingBucket> ratio_rolling(std::span<const Position> pset, int n_max, int window_width = 25);

// Grid search over exponents 0.10, 0.11, ..., 3.00 with closed-form least
// squares for (limit, scale). Throws AnalysisError(degenerate_fit) when y is
// constant.
PowerLaw fit_power_law(std::span<const double> a, std::span<const double> y);

// Per coordinate, fits the per-a median ratio with fit_power_law.
RatioFit ratio_powerlaw_fit(std::span<const Position> pset);

// ---------------------------------------------------------------------------
// Period structure

struct AutocorrResult {
  std::vector<double> r;       // r[0..max_lag]
  std::vector<int> peak_lags;  // local maxima in [2, max_lag], r descending
};

// r[l] = sum_t (x_t - m)(x_{t+l} - m) / sum_t (x_t - m)^2 with m the full mean.
// Requires size > 2 * max_lag. OpenMP over lags.
AutocorrResult d_autocorrelation(std::span<const std::uint32_t> seq, int max_lag = 500);
// Single-threaded reference of the same quantity.
AutocorrResult d_autocorrelation_serial(std::span<const std::uint32_t> seq, int max_lag = 500);

struct ModScanResult {
  int modulus = 0;
  double chi2 = 0.0;
  int dof = 0;
  int classes_used = 0;
};

// Pearson chi-squared of residue (a - b) mod m against the extension label,
// expected counts from the marginal extension rate.
std::vector<ModScanResult> mod_chi2_scan(std::span<const LabeledTriple> universe, std::span<const int> moduli);

// ---------------------------------------------------------------------------
// Cone geometry

struct ConeSlice {
  int c = 0;
  int min_gap = 0;  // min a - b
  int max_gap = 0;
  int width = 0;    // max_gap - min_gap
  std::size_t triples = 0;
};

struct ConeFit {
  std::vector<ConeSlice> slices;     // slices used in the fit
  std::vector<int> skipped_empty;    // no extending triple at c
  std::vector<int> skipped_clipped;  // band cut off by a <= n_max
  double slope = 0.0;
  double intercept = 0.0;
  int period = kPeriod;
  // (c mod period, mean residual) for every class present, ascending.
  std::vector<std::pair<int, double>> residuals_by_class;
};

// width(c) = max(a-b) - min(a-b) over extending triples with that c.
// With a bound, a slice whose widest triple sits at a == bound is skipped as
// clipped: the band continues past the tabulated range there. Throws
// AnalysisError(insufficient_data) with fewer than 3 usable slices.
ConeFit cone_fit(std::span<const Triple> extending, std::span<const int> c_values,
                 std::optional<int> bound = std::nullopt, int period = kPeriod);

// 5, 10, ..., c_max
std::vector<int> cone_c_values(int c_max, int step = 5);
// Largest multiple of 5 not above min(300, 2 * n_max / 3).
int default_cone_c_max(int n_max);

// ---------------------------------------------------------------------------
// Mask classifier

enum class ClassWeighting {
  none,      // plain mean log-loss
  balanced,  // each class carries half the loss
};

struct ClassifierOptions {
  std::uint64_t seed = 42;
  double split = 0.8;
  double learning_rate = 0.1;
  int epochs = 500;
  int period = kPeriod;
  ClassWeighting weighting = ClassWeighting::balanced;
};

struct ClassifierModel {
  ClassifierOptions options;
  // [0]: standardized c; [1 + r]: one-hot of (a - b) mod period; back(): bias.
  std::vector<double> weights;
  double c_mean = 0.0;
  double c_std = 1.0;

  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t balanced_size = 0;
  double train_positive_rate = 0.0;
  double majority_baseline = 0.0;  // on the held-out split
  double raw_accuracy = 0.0;       // held-out split
  double balanced_accuracy = 0.0;  // class-balanced held-out sample
  double final_loss = 0.0;

  double probability(int a, int b, int c) const;
};

// Full-batch gradient descent; the seed fixes the split and the balanced
// subsample. Throws AnalysisError(single_class) when a class is missing.
ClassifierModel train_mask_classifier(std::span<const LabeledTriple> universe, const ClassifierOptions& options = {});

// ---------------------------------------------------------------------------
// Algebraic identity searches

struct Cubic {
  int p = 0;  // x^3 + p x^2 + q x + r
  int q = 0;
  int r = 0;
  std::array<double, 3> roots{};  // ascending
  double max_error = 0.0;
};

// Monic integer cubics with |p|, |q|, |r| <= coeff_bound having three real
// roots that match the limits (as a multiset) within tol each.
std::vector<Cubic> cubic_search(std::array<double, 3> limits, int coeff_bound = 12, double tol = 0.002);

// Real roots with multiplicity, ascending; empty unless all three are real.
std::vector<double> real_cubic_roots(double p, double q, double r);

struct TrigProximity {
  double L3 = 0.0;
  double target = 0.0;  // cos(3 pi / 7)
  double difference = 0.0;
};

TrigProximity trig_proximity_report(double L3);

}  // namespace chomp::analysis

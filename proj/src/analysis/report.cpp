#include "chomp/report.hpp"

#include <iomanip>
#include <sstream>

#include "chomp/store.hpp"

namespace chomp::report {

namespace {

constexpr const char* kUniverse = "all (a,b,c) with a >= b >= c >= 0 and 1 <= a <= n_max";

std::string num(double v, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << v;
  return os.str();
}

std::string triple(const analysis::Triple& t) {
  return std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c);
}

void series(std::ostringstream& os, const std::string& name, const std::vector<std::pair<double, double>>& pts) {
  os << "# series: " << name << "\nx,y\n";
  for (const auto& [x, y] : pts) os << num(x, 2) << ',' << num(y) << '\n';
  os << '\n';
}

}  // namespace

void write_bundle(const Bundle& bundle, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  store::write_file(dir / (bundle.name + ".txt"), bundle.text);
  for (const auto& [file, contents] : bundle.tables) store::write_file(dir / file, contents);
}

Bundle unique_report(const analysis::ExtensionAudit& audit) {
  std::ostringstream os;
  os << "analysis: unique_extension\n"
     << "universe: " << kUniverse << "\n"
     << "n_max: " << audit.n_max << "\n"
     << "triples_total: " << audit.triples_total << "\n"
     << "triples_extending: " << audit.triples_extending << "\n"
     << "fraction: " << num(audit.fraction) << "\n"
     << "max_multiplicity: " << audit.max_multiplicity << "\n"
     << "violations: " << audit.violations.size() << "\n";
  if (audit.three_row_bound > 0) {
    os << "three_row_bound: " << audit.three_row_bound << "\n"
       << "three_row_p_positions: " << audit.three_row_p_count << "\n"
       << "three_row_p_not_extending: " << audit.three_row_not_extending.size() << "\n"
       << "extending_within_bound: " << audit.extending_within_bound << "\n"
       << "extending_but_three_row_n: " << audit.extending_three_row_n << "\n";
  }
  std::ostringstream csv;
  csv << "a,b,c\n";
  for (const auto& t : audit.violations) csv << triple(t) << '\n';
  return Bundle{"unique", os.str(), {{"unique_violations.csv", csv.str()}}};
}

Bundle ratios_report(const RatioReport& r) {
  std::ostringstream os;
  os << "analysis: ratios\n"
     << "windowed_median.window: " << r.windowed.window_lo << ".." << r.windowed.window_hi << "\n"
     << "windowed_median.samples: " << r.windowed.sample_count << "\n";
  for (int i = 0; i < 3; ++i) os << "windowed_median.L" << i + 1 << ": " << num(r.windowed.limits[static_cast<std::size_t>(i)]) << "\n";
  if (!r.rolling.empty()) {
    const auto& last = r.rolling.back().fit;
    os << "rolling_window.final_bucket: " << last.window_lo << ".." << last.window_hi << "\n";
    for (int i = 0; i < 3; ++i) os << "rolling_window.L" << i + 1 << ": " << num(last.limits[static_cast<std::size_t>(i)]) << "\n";
  }
  if (r.power) {
    for (int i = 0; i < 3; ++i) {
      const auto& pl = r.power->power[static_cast<std::size_t>(i)];
      os << "power_law.L" << i + 1 << ": " << num(pl.limit) << " K=" << num(pl.scale) << " p=" << num(pl.exponent, 2)
         << "\n";
    }
  } else {
    os << "power_law: unavailable (" << r.power_error << ")\n";
  }
  os << "trig.cos_3pi_7: " << num(r.trig.target, 8) << "\n"
     << "trig.L3: " << num(r.trig.L3, 8) << "\n"
     << "trig.abs_difference: " << num(r.trig.difference, 8) << "\n"
     << "trig.note: proximity only; no identity is claimed\n";

  std::ostringstream csv;
  csv << "a_lo,a_hi,a_center,samples,b_over_a,c_over_a,d_over_a\n";
  for (const auto& b : r.rolling) {
    csv << b.fit.window_lo << ',' << b.fit.window_hi << ',' << num(b.a_center, 1) << ',' << b.fit.sample_count;
    for (double l : b.fit.limits) csv << ',' << num(l);
    csv << '\n';
  }
  return Bundle{"ratios", os.str(), {{"ratios_rolling.csv", csv.str()}}};
}

Bundle period_report(const analysis::AutocorrResult& acf, const std::vector<analysis::ModScanResult>& scan,
                     std::size_t sequence_length) {
  std::ostringstream os;
  os << "analysis: period\n"
     << "sequence_length: " << sequence_length << "\n"
     << "max_lag: " << acf.r.size() - 1 << "\n"
     << "top_peaks:";
  for (std::size_t i = 0; i < std::min<std::size_t>(10, acf.peak_lags.size()); ++i) {
    const int l = acf.peak_lags[i];
    os << ' ' << l << '(' << num(acf.r[static_cast<std::size_t>(l)], 4) << ')';
  }
  os << "\n";
  const auto rank_of = [&](int lag) {
    for (std::size_t i = 0; i < acf.peak_lags.size(); ++i)
      if (acf.peak_lags[i] == lag) return static_cast<long>(i) + 1;
    return -1L;
  };
  for (int lag : {112, 224, 336}) {
    if (static_cast<std::size_t>(lag) < acf.r.size()) {
      os << "lag_" << lag << ": r=" << num(acf.r[static_cast<std::size_t>(lag)], 4) << " peak_rank=" << rank_of(lag) << "\n";
    }
  }
  os << "chi2.universe: " << kUniverse << "\n";
  for (const auto& s : scan) os << "chi2.mod_" << s.modulus << ": " << num(s.chi2, 2) << " dof=" << s.dof << "\n";

  std::ostringstream acf_csv, chi_csv;
  acf_csv << "lag,r\n";
  for (std::size_t l = 0; l < acf.r.size(); ++l) acf_csv << l << ',' << num(acf.r[l]) << '\n';
  chi_csv << "modulus,chi2,dof,classes\n";
  for (const auto& s : scan) chi_csv << s.modulus << ',' << num(s.chi2, 4) << ',' << s.dof << ',' << s.classes_used << '\n';
  return Bundle{"period", os.str(), {{"period_autocorr.csv", acf_csv.str()}, {"period_chi2.csv", chi_csv.str()}}};
}

Bundle cone_report(const analysis::ConeFit& fit, int n_max) {
  std::ostringstream os;
  os << "analysis: cone\n"
     << "width: max(a-b) - min(a-b) over extending triples at fixed c\n"
     << "n_max: " << n_max << "\n"
     << "slices_used: " << fit.slices.size() << "\n"
     << "slope: " << num(fit.slope) << "\n"
     << "intercept: " << num(fit.intercept) << "\n"
     << "reference_slope: 1.375\n"
     << "skipped_empty:";
  for (int c : fit.skipped_empty) os << ' ' << c;
  os << "\nskipped_clipped_by_bound:";
  for (int c : fit.skipped_clipped) os << ' ' << c;
  os << "\n";
  std::ostringstream slices, resid;
  slices << "c,min_gap,max_gap,width,triples\n";
  for (const auto& s : fit.slices)
    slices << s.c << ',' << s.min_gap << ',' << s.max_gap << ',' << s.width << ',' << s.triples << '\n';
  resid << "c_mod_" << fit.period << ",mean_residual\n";
  for (const auto& [cls, r] : fit.residuals_by_class) resid << cls << ',' << num(r) << '\n';
  return Bundle{"cone", os.str(), {{"cone_slices.csv", slices.str()}, {"cone_residuals.csv", resid.str()}}};
}

Bundle classifier_report(const analysis::ClassifierModel& gate, const analysis::ClassifierModel& unweighted,
                         std::size_t universe_size) {
  std::ostringstream os;
  const auto& o = gate.options;
  os << "analysis: classifier\n"
     << "features: standardized c, one-hot (a-b) mod " << o.period << ", bias\n"
     << "universe_size: " << universe_size << "\n"
     << "seed: " << o.seed << "\n"
     << "split: " << num(o.split, 2) << "\n"
     << "learning_rate: " << num(o.learning_rate, 4) << "\n"
     << "epochs: " << o.epochs << "\n"
     << "train_size: " << gate.train_size << "\n"
     << "test_size: " << gate.test_size << "\n"
     << "train_positive_rate: " << num(gate.train_positive_rate) << "\n"
     << "majority_baseline: " << num(gate.majority_baseline) << "\n"
     << "balanced_weights.raw_accuracy: " << num(gate.raw_accuracy) << "\n"
     << "balanced_weights.balanced_accuracy: " << num(gate.balanced_accuracy) << "\n"
     << "balanced_weights.balanced_sample: " << gate.balanced_size << "\n"
     << "balanced_weights.final_loss: " << num(gate.final_loss) << "\n"
     << "unweighted.raw_accuracy: " << num(unweighted.raw_accuracy) << "\n"
     << "unweighted.balanced_accuracy: " << num(unweighted.balanced_accuracy) << "\n";
  std::ostringstream csv;
  csv << "feature,weight_balanced,weight_unweighted\n";
  for (std::size_t j = 0; j < gate.weights.size(); ++j) {
    std::string name = j == 0 ? "c_std" : j + 1 == gate.weights.size() ? "bias" : "res_" + std::to_string(j - 1);
    csv << name << ',' << num(gate.weights[j]) << ',' << num(unweighted.weights[j]) << '\n';
  }
  return Bundle{"classifier", os.str(), {{"classifier_weights.csv", csv.str()}}};
}

Bundle cubics_report(const std::array<double, 3>& limits, int coeff_bound, double tol,
                     const std::vector<analysis::Cubic>& cubics, const analysis::TrigProximity& trig) {
  std::ostringstream os;
  os << "analysis: cubics\n"
     << "limits: " << num(limits[0]) << ' ' << num(limits[1]) << ' ' << num(limits[2]) << "\n"
     << "coefficient_bound: " << coeff_bound << "\n"
     << "tolerance: " << num(tol) << "\n"
     << "matches: " << cubics.size() << "\n"
     << "trig.cos_3pi_7: " << num(trig.target, 8) << "\n"
     << "trig.abs_difference: " << num(trig.difference, 8) << "\n";
  std::ostringstream csv;
  csv << "p,q,r,root1,root2,root3,max_error\n";
  for (const auto& c : cubics) {
    csv << c.p << ',' << c.q << ',' << c.r;
    for (double x : c.roots) csv << ',' << num(x, 8);
    csv << ',' << num(c.max_error, 8) << '\n';
  }
  return Bundle{"cubics", os.str(), {{"cubics_matches.csv", csv.str()}}};
}

std::string plot_ratios(const std::vector<analysis::RollingBucket>& rolling, int n_max) {
  std::ostringstream os;
  os << "# panel: ratios\n";
  const char* names[3] = {"b/a", "c/a", "d/a"};
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& b : rolling) pts.emplace_back(b.a_center, b.fit.limits[i]);
    series(os, names[i], pts);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const double l = analysis::kPublishedLimits[i];
    series(os, "L" + std::to_string(i + 1) + " reference", {{1.0, l}, {static_cast<double>(n_max), l}});
  }
  return os.str();
}

std::string plot_autocorr(const analysis::AutocorrResult& acf) {
  std::ostringstream os;
  os << "# panel: autocorr\n";
  std::vector<std::pair<double, double>> pts;
  for (std::size_t l = 0; l < acf.r.size(); ++l) pts.emplace_back(static_cast<double>(l), acf.r[l]);
  series(os, "r", pts);
  return os.str();
}

}  // namespace chomp::report

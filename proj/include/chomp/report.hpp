#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "chomp/analysis.hpp"

namespace chomp::report {

// One analysis serialized as <name>.txt (key: value lines) plus CSV tables.
struct Bundle {
  std::string name;
  std::string text;
  std::vector<std::pair<std::string, std::string>> tables;  // file name, contents
};

// Creates dir if needed.
void write_bundle(const Bundle& bundle, const std::filesystem::path& dir);

Bundle unique_report(const analysis::ExtensionAudit& audit);

struct RatioReport {
  analysis::RatioFit windowed;
  std::vector<analysis::RollingBucket> rolling;
  std::optional<analysis::RatioFit> power;  // empty when the fit was degenerate
  std::string power_error;
  analysis::TrigProximity trig;
};
Bundle ratios_report(const RatioReport& r);

Bundle period_report(const analysis::AutocorrResult& acf, const std::vector<analysis::ModScanResult>& scan,
                     std::size_t sequence_length);

Bundle cone_report(const analysis::ConeFit& fit, int n_max);

// gate: model whose balanced accuracy is the headline; unweighted: the same
// split trained without class weights, for the raw-accuracy comparison.
Bundle classifier_report(const analysis::ClassifierModel& gate, const analysis::ClassifierModel& unweighted,
                         std::size_t universe_size);

Bundle cubics_report(const std::array<double, 3>& limits, int coeff_bound, double tol,
                     const std::vector<analysis::Cubic>& cubics, const analysis::TrigProximity& trig);

// Plot-ready panels: blocks of `# series: <name>` followed by an `x,y` table.
std::string plot_ratios(const std::vector<analysis::RollingBucket>& rolling, int n_max);
std::string plot_autocorr(const analysis::AutocorrResult& acf);

}  // namespace chomp::report

#include "chomp/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>

#include "chomp/analysis.hpp"
#include "chomp/errors.hpp"
#include "chomp/oracle.hpp"
#include "chomp/report.hpp"
#include "chomp/solver.hpp"
#include "chomp/store.hpp"

namespace chomp::cli {

namespace {

namespace fs = std::filesystem;

// Bad flags or inputs detected after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_threads() {
  if (const char* env = std::getenv("CHOMP_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return std::max(1, omp_get_max_threads());
}

struct SolveArgs {
  int max_n = 0;
  int k = 4;
  int threads = 0;
  std::string out;
  std::string cache;
  std::string strategy = "line";
  bool quiet = false;
  bool allow_large = false;
};

struct PsetSource {
  std::string pset;
  int max_n = 0;
  int threads = 0;
};

struct VerifyArgs {
  std::string pset;
  std::string mode;
  int limit = 0;
};

struct AnalyzeArgs {
  std::string kind;
  PsetSource source;
  std::string out;
  std::uint64_t seed = 42;
  int max_lag = 500;
  int c_max = 0;
  int epochs = 500;
  double learning_rate = 0.1;
  int coeff_bound = 12;
  double tol = 0.002;
  int three_row_bound = -1;
  std::vector<int> moduli = {7, 8, 14, 16, 28, 56, 112, 224};
};

struct ExportArgs {
  std::string pset;
  std::string bfile;
  long offset = 1;
};

struct PlotArgs {
  std::string kind;
  std::string pset;
  std::string out;
  int max_lag = 500;
  int window = 25;
};

PSet load_source(const PsetSource& src) {
  if (!src.pset.empty()) return store::read_pset(src.pset);
  if (src.max_n < 1) throw UsageError("give --pset FILE or --max-n N");
  SolveConfig cfg;
  cfg.n_max = src.max_n;
  cfg.thread_count = src.threads > 0 ? src.threads : default_threads();
  return solve(cfg);
}

void require_four_rows(const PSet& pset) {
  if (pset.k() != 4) throw UsageError("this command needs a 4-row P-set");
}

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  if (a.out.empty() && a.cache.empty()) throw UsageError("solve: give --out FILE and/or --cache FILE");
  if (!a.out.empty() && a.k != 4) throw UsageError("solve: CSV output holds 4-row sets only; use --cache for k != 4");
  SolveConfig cfg;
  cfg.n_max = a.max_n;
  cfg.k = a.k;
  cfg.thread_count = a.threads > 0 ? a.threads : default_threads();
  cfg.allow_oversize = a.allow_large;
  cfg.strategy = a.strategy == "scan" ? Strategy::move_scan : Strategy::line_index;
  cfg.progress = a.quiet ? nullptr : &err;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const PSet pset = solve(cfg);
  if (!a.out.empty()) store::write_csv(pset, a.out);
  if (!a.cache.empty()) store::write_cache(pset, a.cache);
  out << "n_max=" << pset.n_max() << " k=" << pset.k() << " p_positions=" << pset.count() << '\n';
  return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const PSet pset = store::read_pset(a.pset);
  const auto positions = pset.sorted_positions();
  if (a.mode == "2xn") {
    if (pset.k() < 2) throw UsageError("verify 2xn needs k >= 2");
    std::set<int> seen;
    std::size_t bad = 0;
    for (const Position& p : positions) {
      bool two_row = true;
      for (int i = 2; i < p.k(); ++i) two_row = two_row && p[i] == 0;
      if (!two_row) continue;
      if (p[1] != p[0] - 1) {
        out << "unexpected two-row P-position " << p << '\n';
        ++bad;
      }
      seen.insert(p[0]);
    }
    const std::size_t missing = static_cast<std::size_t>(pset.n_max()) - std::min<std::size_t>(seen.size(), pset.n_max());
    out << "2xn: " << seen.size() << " two-row P-positions, " << bad << " off-formula, " << missing << " missing\n";
    return bad == 0 && missing == 0 ? kExitOk : kExitCheckFailed;
  }

  const bool three = a.mode == "3xn";
  if (!three && a.mode != "oracle4") throw UsageError("verify: --mode must be 2xn, 3xn or oracle4");
  if (three && pset.k() != 4 && pset.k() != 3) throw UsageError("verify 3xn needs a 3- or 4-row P-set");
  if (!three && pset.k() != 4) throw UsageError("verify oracle4 needs a 4-row P-set");
  const int limit = a.limit > 0 ? a.limit : std::min(pset.n_max(), three ? 50 : 25);
  if (limit > pset.n_max()) throw UsageError("verify: --limit exceeds the P-set's n_max");

  std::vector<Position> expected = oracle::oracle_pset(limit, three ? 3 : 4);
  std::vector<Position> actual;
  for (const Position& p : positions) {
    if (p[0] > limit) continue;
    if (!three) {
      actual.push_back(p);
    } else if (p.k() == 3) {
      actual.push_back(p);
    } else if (p[3] == 0) {
      actual.push_back(Position{p[0], p[1], p[2]});
    }
  }
  std::vector<Position> only_oracle, only_pset;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(only_oracle));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(only_pset));
  for (const Position& p : only_oracle) out << "missing from P-set: " << p << '\n';
  for (const Position& p : only_pset) out << "not a P-position per oracle: " << p << '\n';
  out << a.mode << ": limit=" << limit << " oracle=" << expected.size() << " pset=" << actual.size()
      << " mismatches=" << only_oracle.size() + only_pset.size() << '\n';
  return only_oracle.empty() && only_pset.empty() ? kExitOk : kExitCheckFailed;
}

int run_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const PSet pset = load_source(a.source);
  require_four_rows(pset);
  const int n_max = pset.n_max();
  int status = kExitOk;
  report::Bundle bundle;

  if (a.kind == "unique") {
    const TripleIndex index(pset);
    std::optional<int> bound;
    if (a.three_row_bound >= 0) bound = a.three_row_bound;
    const auto audit = analysis::audit_unique_extension(index, bound);
    if (!audit.violations.empty() || !audit.three_row_not_extending.empty()) status = kExitCheckFailed;
    bundle = report::unique_report(audit);
  } else if (a.kind == "ratios" || a.kind == "cubics") {
    const auto positions = pset.sorted_positions();
    const auto windowed = analysis::ratio_windowed_median(positions, n_max);
    if (a.kind == "ratios") {
      report::RatioReport r{windowed, analysis::ratio_rolling(positions, n_max), std::nullopt, {},
                            analysis::trig_proximity_report(windowed.L3())};
      try {
        r.power = analysis::ratio_powerlaw_fit(positions);
      } catch (const std::exception& e) {
        r.power_error = e.what();
      }
      bundle = report::ratios_report(r);
    } else {
      const auto cubics = analysis::cubic_search(windowed.limits, a.coeff_bound, a.tol);
      bundle = report::cubics_report(windowed.limits, a.coeff_bound, a.tol, cubics,
                                     analysis::trig_proximity_report(windowed.L3()));
    }
  } else if (a.kind == "period") {
    const auto seq = store::d_sequence(pset);
    const int max_lag = std::min<int>(a.max_lag, static_cast<int>((seq.values.size() - 1) / 2));
    const auto acf = analysis::d_autocorrelation(seq.values, max_lag);
    const auto universe = analysis::triple_universe(TripleIndex(pset));
    bundle = report::period_report(acf, analysis::mod_chi2_scan(universe, a.moduli), seq.values.size());
  } else if (a.kind == "cone") {
    const TripleIndex index(pset);
    const int c_max = a.c_max > 0 ? a.c_max : analysis::default_cone_c_max(n_max);
    const auto fit = analysis::cone_fit(index.triples(), analysis::cone_c_values(c_max), n_max);
    bundle = report::cone_report(fit, n_max);
  } else if (a.kind == "classifier") {
    const auto universe = analysis::triple_universe(TripleIndex(pset));
    analysis::ClassifierOptions opts;
    opts.seed = a.seed;
    opts.epochs = a.epochs;
    opts.learning_rate = a.learning_rate;
    const auto gate = analysis::train_mask_classifier(universe, opts);
    opts.weighting = analysis::ClassWeighting::none;
    const auto plain = analysis::train_mask_classifier(universe, opts);
    bundle = report::classifier_report(gate, plain, universe.size());
  } else {
    throw UsageError("analyze: unknown analysis '" + a.kind + "'");
  }

  report::write_bundle(bundle, a.out);
  out << bundle.text;
  return status;
}

int run_export(const ExportArgs& a, std::ostream& out) {
  const PSet pset = store::read_pset(a.pset);
  const auto seq = store::d_sequence(pset);
  store::write_bfile(seq, a.bfile, a.offset);
  out << "wrote " << seq.values.size() << " terms to " << a.bfile << '\n';
  return kExitOk;
}

int run_plotdata(const PlotArgs& a, std::ostream& out) {
  const PSet pset = store::read_pset(a.pset);
  require_four_rows(pset);
  std::string text;
  if (a.kind == "ratios") {
    const auto positions = pset.sorted_positions();
    text = report::plot_ratios(analysis::ratio_rolling(positions, pset.n_max(), a.window), pset.n_max());
  } else if (a.kind == "autocorr") {
    const auto seq = store::d_sequence(pset);
    const int max_lag = std::min<int>(a.max_lag, static_cast<int>((seq.values.size() - 1) / 2));
    text = report::plot_autocorr(analysis::d_autocorrelation(seq.values, max_lag));
  } else {
    throw UsageError("plotdata: panel must be ratios or autocorr");
  }
  store::write_file(a.out, text);
  out << "wrote " << a.out << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"4-row Chomp P-position solver and analysis toolkit", "chomp"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Tabulate all P-positions with rows[0] <= N");
  solve_cmd->add_option("--max-n", solve_args.max_n, "Board width bound")->required()->check(CLI::Range(1, 65535));
  solve_cmd->add_option("--k", solve_args.k, "Rows (1..4)")->check(CLI::Range(1, 4));
  solve_cmd->add_option("--threads", solve_args.threads, "Worker threads (default: CHOMP_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", solve_args.out, "CSV output");
  solve_cmd->add_option("--cache", solve_args.cache, "Binary cache output");
  solve_cmd->add_option("--strategy", solve_args.strategy, "line (default) or scan")
      ->check(CLI::IsMember({"line", "scan"}));
  solve_cmd->add_flag("--quiet", solve_args.quiet, "No per-layer progress");
  solve_cmd->add_flag("--allow-large", solve_args.allow_large, "Lift the state-count ceiling");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a P-set against closed forms and the oracle");
  verify_cmd->add_option("--pset", verify_args.pset, "CSV or cache file")->required();
  verify_cmd->add_option("--mode", verify_args.mode, "2xn, 3xn or oracle4")
      ->required()
      ->check(CLI::IsMember({"2xn", "3xn", "oracle4"}));
  verify_cmd->add_option("--limit", verify_args.limit, "Largest a compared against the oracle")
      ->check(CLI::PositiveNumber);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run one analysis and write a report bundle");
  analyze_cmd->add_option("analysis", analyze_args.kind, "unique|ratios|period|cone|classifier|cubics")
      ->required()
      ->check(CLI::IsMember({"unique", "ratios", "period", "cone", "classifier", "cubics"}));
  auto* pset_opt = analyze_cmd->add_option("--pset", analyze_args.source.pset, "CSV or cache file");
  auto* maxn_opt = analyze_cmd->add_option("--max-n", analyze_args.source.max_n, "Solve on the fly instead")
                       ->check(CLI::Range(1, 65535));
  pset_opt->excludes(maxn_opt);
  analyze_cmd->add_option("--threads", analyze_args.source.threads, "Threads for an on-the-fly solve")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--out", analyze_args.out, "Report directory")->required();
  analyze_cmd->add_option("--seed", analyze_args.seed, "Classifier seed");
  analyze_cmd->add_option("--epochs", analyze_args.epochs, "Classifier epochs")->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--lr", analyze_args.learning_rate, "Classifier learning rate")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--max-lag", analyze_args.max_lag, "Autocorrelation lags")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--moduli", analyze_args.moduli, "Moduli for the chi-squared scan")->delimiter(',');
  analyze_cmd->add_option("--c-max", analyze_args.c_max, "Largest cone slice")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--bound", analyze_args.coeff_bound, "Cubic coefficient bound")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--tol", analyze_args.tol, "Cubic root tolerance")->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--three-row-bound", analyze_args.three_row_bound, "Oracle cross-check bound (0 = skip)")
      ->check(CLI::NonNegativeNumber);

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Write the d-sequence as an OEIS b-file");
  export_cmd->add_option("--pset", export_args.pset, "CSV or cache file")->required();
  export_cmd->add_option("--bfile", export_args.bfile, "b-file output")->required();
  export_cmd->add_option("--offset", export_args.offset, "Index of the first term");

  PlotArgs plot_args;
  auto* plot_cmd = app.add_subcommand("plotdata", "Write plot-ready series for one figure panel");
  plot_cmd->add_option("panel", plot_args.kind, "ratios|autocorr")
      ->required()
      ->check(CLI::IsMember({"ratios", "autocorr"}));
  plot_cmd->add_option("--pset", plot_args.pset, "CSV or cache file")->required();
  plot_cmd->add_option("--out", plot_args.out, "Output file")->required();
  plot_cmd->add_option("--max-lag", plot_args.max_lag, "Autocorrelation lags")->check(CLI::PositiveNumber);
  plot_cmd->add_option("--window", plot_args.window, "Rolling bucket width")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args, out, err);
    if (*verify_cmd) return run_verify(verify_args, out);
    if (*analyze_cmd) return run_analyze(analyze_args, out);
    if (*export_cmd) return run_export(export_args, out);
    if (*plot_cmd) return run_plotdata(plot_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace chomp::cli

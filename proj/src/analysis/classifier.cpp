#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "chomp/analysis.hpp"
#include "chomp/errors.hpp"

namespace chomp::analysis {

namespace {

// Uniform draw in [0, bound) from one 64-bit output (multiply-shift).
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

void shuffle(std::vector<std::uint32_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

double ClassifierModel::probability(int a, int b, int c) const {
  const int period = options.period;
  const double cs = (c - c_mean) / c_std;
  const auto residue = static_cast<std::size_t>(((a - b) % period + period) % period);
  return sigmoid(weights[0] * cs + weights[1 + residue] + weights.back());
}

ClassifierModel train_mask_classifier(std::span<const LabeledTriple> universe, const ClassifierOptions& options) {
  if (options.period < 1) throw PreconditionError("classifier: period must be >= 1");
  if (!(options.split > 0.0 && options.split < 1.0)) throw PreconditionError("classifier: split must be in (0, 1)");
  if (options.epochs < 0 || !(options.learning_rate > 0.0)) throw PreconditionError("classifier: bad schedule");
  const std::size_t positives = static_cast<std::size_t>(
      std::count_if(universe.begin(), universe.end(), [](const LabeledTriple& t) { return t.extends; }));
  if (positives == 0 || positives == universe.size()) {
    throw AnalysisError(AnalysisError::Kind::single_class, "classifier needs both extending and non-extending triples");
  }

  ClassifierModel model;
  model.options = options;
  const auto period = static_cast<std::size_t>(options.period);
  std::mt19937_64 rng(options.seed);

  std::vector<std::uint32_t> order(universe.size());
  std::iota(order.begin(), order.end(), 0u);
  shuffle(order, rng);
  const auto n_train = static_cast<std::size_t>(std::llround(options.split * static_cast<double>(universe.size())));
  const std::span<const std::uint32_t> train(order.data(), n_train);
  const std::span<const std::uint32_t> test(order.data() + n_train, order.size() - n_train);
  model.train_size = train.size();
  model.test_size = test.size();

  double sum_c = 0.0, sum_cc = 0.0;
  std::size_t train_pos = 0;
  int max_c = 0;
  for (std::uint32_t i : train) {
    const LabeledTriple& t = universe[i];
    sum_c += t.c;
    sum_cc += static_cast<double>(t.c) * t.c;
    train_pos += t.extends;
    max_c = std::max<int>(max_c, t.c);
  }
  if (train_pos == 0 || train_pos == train.size()) {
    throw AnalysisError(AnalysisError::Kind::single_class, "training split holds a single class");
  }
  const double n = static_cast<double>(train.size());
  model.c_mean = sum_c / n;
  const double var = sum_cc / n - model.c_mean * model.c_mean;
  model.c_std = var > 0.0 ? std::sqrt(var) : 1.0;
  model.train_positive_rate = static_cast<double>(train_pos) / n;

  double w_pos = 1.0, w_neg = 1.0;
  if (options.weighting == ClassWeighting::balanced) {
    w_pos = 0.5 / model.train_positive_rate;
    w_neg = 0.5 / (1.0 - model.train_positive_rate);
  }

  // Only c and the residue enter the model, so the full-batch gradient is a
  // sum over (c, residue) groups with their class counts.
  struct Group {
    double c_std;
    std::size_t residue;
    double pos;
    double neg;
  };
  std::vector<double> pos_count((static_cast<std::size_t>(max_c) + 1) * period, 0.0);
  std::vector<double> neg_count(pos_count.size(), 0.0);
  for (std::uint32_t i : train) {
    const LabeledTriple& t = universe[i];
    const std::size_t key = static_cast<std::size_t>(t.c) * period + static_cast<std::size_t>((t.a - t.b) % options.period);
    (t.extends ? pos_count : neg_count)[key] += 1.0;
  }
  std::vector<Group> groups;
  for (std::size_t key = 0; key < pos_count.size(); ++key) {
    if (pos_count[key] + neg_count[key] == 0.0) continue;
    groups.push_back(Group{(static_cast<double>(key / period) - model.c_mean) / model.c_std, key % period,
                           pos_count[key], neg_count[key]});
  }

  model.weights.assign(period + 2, 0.0);
  std::vector<double> grad(model.weights.size());
  auto& w = model.weights;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::fill(grad.begin(), grad.end(), 0.0);
    for (const Group& g : groups) {
      const double p = sigmoid(w[0] * g.c_std + w[1 + g.residue] + w.back());
      const double r = (w_pos * g.pos * (p - 1.0) + w_neg * g.neg * p) / n;
      grad[0] += r * g.c_std;
      grad[1 + g.residue] += r;
      grad.back() += r;
    }
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= options.learning_rate * grad[j];
  }

  double loss = 0.0;
  for (const Group& g : groups) {
    const double p = std::clamp(sigmoid(w[0] * g.c_std + w[1 + g.residue] + w.back()), 1e-15, 1.0 - 1e-15);
    loss -= w_pos * g.pos * std::log(p) + w_neg * g.neg * std::log(1.0 - p);
  }
  model.final_loss = loss / n;

  std::vector<std::uint32_t> test_pos, test_neg;
  std::size_t correct = 0;
  for (std::uint32_t i : test) {
    const LabeledTriple& t = universe[i];
    const bool predicted = model.probability(t.a, t.b, t.c) > 0.5;
    correct += predicted == t.extends;
    (t.extends ? test_pos : test_neg).push_back(i);
  }
  if (!test.empty()) {
    model.raw_accuracy = static_cast<double>(correct) / static_cast<double>(test.size());
    const double test_rate = static_cast<double>(test_pos.size()) / static_cast<double>(test.size());
    model.majority_baseline = std::max(test_rate, 1.0 - test_rate);
  }

  // Equal numbers of each class: the majority class is subsampled.
  auto& majority = test_pos.size() > test_neg.size() ? test_pos : test_neg;
  const auto& minority = test_pos.size() > test_neg.size() ? test_neg : test_pos;
  shuffle(majority, rng);
  majority.resize(minority.size());
  std::size_t balanced_correct = 0;
  for (const auto* part : {&test_pos, &test_neg}) {
    for (std::uint32_t i : *part) {
      const LabeledTriple& t = universe[i];
      balanced_correct += (model.probability(t.a, t.b, t.c) > 0.5) == t.extends;
    }
  }
  model.balanced_size = 2 * minority.size();
  if (model.balanced_size) {
    model.balanced_accuracy = static_cast<double>(balanced_correct) / static_cast<double>(model.balanced_size);
  }
  return model;
}

}  // namespace chomp::analysis

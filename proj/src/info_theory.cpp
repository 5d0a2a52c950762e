#include "streamprep/info_theory.hpp"

#include <cmath>

#include "streamprep/errors.hpp"

namespace streamprep::info_theory {

namespace {

constexpr double kSumTolerance = 1e-9;

double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

void FrequencyTable::add(double x, double y, std::int64_t count) {
  if (count < 0) throw AlgoError("FrequencyTable: negative count");
  if (count == 0) return;
  cells_[{x, y}] += count;
  total_ += count;
}

void FrequencyTable::merge(const FrequencyTable& other) {
  for (const auto& [key, c] : other.cells_) {
    cells_[key] += c;
    total_ += c;
  }
}

std::map<double, std::int64_t> FrequencyTable::marginalX() const {
  std::map<double, std::int64_t> m;
  for (const auto& [key, c] : cells_) m[key.first] += c;
  return m;
}

std::map<double, std::int64_t> FrequencyTable::marginalY() const {
  std::map<double, std::int64_t> m;
  for (const auto& [key, c] : cells_) m[key.second] += c;
  return m;
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  double sum = 0.0;
  for (double p : probs_) {
    if (p < -kSumTolerance || p > 1.0 + kSumTolerance)
      throw AlgoError("Distribution: probability out of [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw AlgoError("Distribution: probabilities do not sum to 1");
}

double entropy(const Distribution& d) {
  double h = 0.0;
  for (double p : d.probs()) h -= plog2p(p);
  return h < 0.0 ? 0.0 : h;
}

double entropy(const std::map<double, std::int64_t>& counts) {
  double n = 0.0;
  for (const auto& [v, c] : counts) n += static_cast<double>(c);
  if (n <= 0.0) return 0.0;
  double h = 0.0;
  for (const auto& [v, c] : counts) h -= plog2p(static_cast<double>(c) / n);
  return h < 0.0 ? 0.0 : h;
}

double entropyOfCounts(const std::vector<double>& counts) {
  double n = 0.0;
  for (double c : counts) n += c;
  if (n <= 0.0) return 0.0;
  double h = 0.0;
  for (double c : counts)
    if (c > 0.0) h -= plog2p(c / n);
  return h < 0.0 ? 0.0 : h;
}

double conditionalEntropy(const FrequencyTable& joint) {
  if (joint.empty()) throw AlgoError("conditionalEntropy: empty table");
  const double n = static_cast<double>(joint.total());
  // Group cells by y: H(X|Y) = sum_y P(y) * H(X | Y=y).
  std::map<double, double> yTotals;
  for (const auto& [key, c] : joint.cells()) yTotals[key.second] += static_cast<double>(c);
  double h = 0.0;
  for (const auto& [key, c] : joint.cells()) {
    const double py = yTotals[key.second] / n;
    const double pxGivenY = static_cast<double>(c) / yTotals[key.second];
    h -= py * plog2p(pxGivenY);
  }
  return h < 0.0 ? 0.0 : h;
}

double infoGain(const FrequencyTable& joint) {
  if (joint.empty()) throw AlgoError("infoGain: empty table");
  const double ig = entropy(joint.marginalX()) - conditionalEntropy(joint);
  return ig < 0.0 ? 0.0 : ig;
}

double symmetricalUncertainty(const FrequencyTable& joint) {
  if (joint.empty()) throw AlgoError("symmetricalUncertainty: empty table");
  const double hx = entropy(joint.marginalX());
  const double hy = entropy(joint.marginalY());
  if (hx + hy <= 0.0) return 0.0;  // both constant: no information either way
  const double su = 2.0 * infoGain(joint) / (hx + hy);
  return su < 0.0 ? 0.0 : (su > 1.0 ? 1.0 : su);
}

double quadraticEntropy(const std::vector<std::int64_t>& classCounts) {
  double n = 0.0;
  for (std::int64_t c : classCounts) {
    if (c < 0) throw AlgoError("quadraticEntropy: negative count");
    n += static_cast<double>(c);
  }
  if (n <= 0.0) throw AlgoError("quadraticEntropy: all counts are zero");
  double sum = 0.0;
  for (std::int64_t c : classCounts) {
    const double p = static_cast<double>(c) / n;
    sum += p * (1.0 - p);
  }
  return n * sum;
}

}  // namespace streamprep::info_theory

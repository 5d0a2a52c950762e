#pragma once

// Shared information-theoretic kernel: joint frequency tables, entropy,
// conditional entropy, information gain, symmetrical uncertainty and the
// quadratic (Gini-style) entropy. All logarithms are base 2.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "streamprep/dataflow.hpp"

namespace streamprep::info_theory {

// Joint frequency table of two discrete variables. Values are kept as the
// exact doubles observed in the data; continuous attributes are therefore
// counted per distinct value and normally pass through a discretizer first.
class FrequencyTable {
 public:
  void add(double x, double y, std::int64_t count = 1);
  void merge(const FrequencyTable& other);

  std::int64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<std::pair<double, double>, std::int64_t>& cells() const { return cells_; }

  std::map<double, std::int64_t> marginalX() const;
  std::map<double, std::int64_t> marginalY() const;

 private:
  std::map<std::pair<double, double>, std::int64_t> cells_;
  std::int64_t total_ = 0;
};

// Probability vector; each entry in [0,1], summing to 1 within 1e-9.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// H(X) in bits, with 0*log(0) := 0.
double entropy(const Distribution& d);
double entropy(const std::map<double, std::int64_t>& counts);

// Entropy of a raw (possibly fractional) count vector; zero mass gives 0.
double entropyOfCounts(const std::vector<double>& counts);

// H(X|Y) over the joint table; throws AlgoError on an empty table.
double conditionalEntropy(const FrequencyTable& joint);

// IG(X|Y) = H(X) - H(X|Y); throws AlgoError on an empty table.
double infoGain(const FrequencyTable& joint);

// SU(X,Y) = 2*IG/(H(X)+H(Y)) in [0,1]; defined as 0 when both variables
// are constant.
double symmetricalUncertainty(const FrequencyTable& joint);

// Interval-mass-weighted Gini impurity: n * sum_c p_c (1 - p_c).
// Throws AlgoError when all counts are zero.
double quadraticEntropy(const std::vector<std::int64_t>& classCounts);

// Exact joint counts of (xOf(e), yOf(e)) computed as per-partition partial
// counts merged with a dataflow reduce. The result is independent of the
// partitioning.
template <typename T, typename XFn, typename YFn>
FrequencyTable frequencies(const dataflow::PartitionedDataset<T>& ds, XFn xOf, YFn yOf,
                           dataflow::ExecMode mode = dataflow::ExecMode::parallel) {
  auto partials = dataflow::mapPartition(
      ds,
      [&](const std::vector<T>& part) {
        FrequencyTable t;
        for (const T& e : part) t.add(xOf(e), yOf(e));
        return std::vector<FrequencyTable>{std::move(t)};
      },
      mode);
  return dataflow::reduce(
      partials,
      [](FrequencyTable acc, const FrequencyTable& next) {
        acc.merge(next);
        return acc;
      },
      mode);
}

// Per-key counts; read them off marginalX().
template <typename T, typename KeyFn>
FrequencyTable frequencies(const dataflow::PartitionedDataset<T>& ds, KeyFn keyOf,
                           dataflow::ExecMode mode = dataflow::ExecMode::parallel) {
  return frequencies(ds, keyOf, [](const T&) { return 0.0; }, mode);
}

}  // namespace streamprep::info_theory

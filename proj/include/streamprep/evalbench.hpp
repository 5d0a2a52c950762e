#pragma once

// Classifiers and the cross-validation harness used for the accuracy
// experiments.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "streamprep/model.hpp"

namespace streamprep::evalbench {

// Seeded k-fold assignment; fold sizes differ by at most one.
struct FoldPlan {
  std::size_t k = 5;
  std::uint64_t seed = 42;
  std::vector<std::size_t> assignment;  // instance index -> fold id

  static FoldPlan make(std::size_t n, std::size_t k, std::uint64_t seed);
};

// Majority label among the k nearest training instances by Euclidean
// distance. Distance ties keep the lower instance index; vote ties pick the
// smaller label.
int knnPredict(const Dataset& train, const std::vector<double>& x, std::size_t k);

// Binary CART-style tree with Gini impurity splits over midpoints between
// consecutive distinct feature values. Deterministic tie-breaks: lower
// feature index, then lower threshold.
class DecisionTree {
 public:
  static DecisionTree fit(const Dataset& train, std::size_t maxDepth = 10, std::size_t minLeaf = 5);
  int predict(const std::vector<double>& x) const;
  std::size_t nodeCount() const { return nodes_.size(); }
  std::size_t depth() const;

 private:
  struct Node {
    bool leaf = true;
    int label = 0;
    std::size_t feature = 0;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
  };
  int build(const Dataset& train, std::vector<std::size_t>& idx, std::size_t lo, std::size_t hi,
            std::size_t depth, std::size_t maxDepth, std::size_t minLeaf);

  std::vector<Node> nodes_;
};

struct ClassifierSpec {
  enum class Kind { knn, dtree };
  Kind kind = Kind::knn;
  std::size_t knnK = 3;
  std::size_t maxDepth = 10;
  std::size_t minLeaf = 5;

  std::string describe() const;
};

struct EvalReport {
  std::string algorithm;
  std::string classifier;
  std::size_t knnK = 0;
  std::vector<double> foldAccuracy;  // meaningful only where !skipped
  std::vector<bool> skipped;
  double meanAccuracy = 0.0;
  double preprocessSeconds = 0.0;

  // Plain-text table row set / machine-readable CSV. Wall time is shown
  // only when includeTiming is set so written artifacts stay reproducible.
  static std::string tableHeader(std::size_t folds, bool includeTiming);
  std::string tableRow(bool includeTiming) const;
  static std::string csvHeader();
  std::string csvRows() const;
};

using PipelineFactory = std::function<std::shared_ptr<Transformer>()>;

// For each fold: fit the pipeline on the training split only, transform
// both splits, train the classifier and score accuracy on the test split.
// A fold whose preprocessing fails or yields zero features is skipped and
// marked. `makePipeline` may return nullptr for the no-preprocessing
// baseline.
EvalReport crossValidate(const Dataset& ds, const PipelineFactory& makePipeline,
                         const ClassifierSpec& clf, const FoldPlan& plan,
                         const std::string& algorithmName);

}  // namespace streamprep::evalbench

#pragma once

// The three feature selectors: information-gain ranking, FCBF predominant
// feature filtering and the OFS truncated online classifier.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "streamprep/dataflow.hpp"
#include "streamprep/model.hpp"

namespace streamprep::fselect {

struct FeatureGain {
  std::size_t feature = 0;
  double gain = 0.0;
};

struct GainRanking {
  std::vector<FeatureGain> gains;        // one entry per feature, index order
  std::vector<std::size_t> selected;     // selectNF best indices, ascending
  std::size_t selectNF = 0;
};

// Ranks features by IG(class | feature) and keeps the selectNF best.
// Ties break toward the lower feature index.
class InfoGainSelector : public Transformer {
 public:
  explicit InfoGainSelector(std::size_t selectNF) : selectNF_(selectNF) {}

  InfoGainSelector& setPartitions(std::size_t n) { partitions_ = n ? n : 1; return *this; }
  InfoGainSelector& setMode(dataflow::ExecMode m) { mode_ = m; return *this; }

  std::string name() const override { return "infogain"; }
  const GainRanking& ranking() const;

 protected:
  void doFit(const Dataset& ds) override;
  Dataset doTransform(const Dataset& ds) const override;

 private:
  std::size_t selectNF_;
  std::size_t partitions_ = 4;
  dataflow::ExecMode mode_ = dataflow::ExecMode::parallel;
  GainRanking ranking_;
};

struct SUEntry {
  std::size_t feature = 0;
  double su = 0.0;  // SU(feature, class)
};

// Fast correlation-based filter. Features with SU(i, class) >= delta are
// ranked descending; walking the ranking, each kept feature removes every
// later feature j with SU(j, i) >= SU(j, class). The selection size is
// data-driven.
class FcbfSelector : public Transformer {
 public:
  explicit FcbfSelector(double delta);

  FcbfSelector& setPartitions(std::size_t n) { partitions_ = n ? n : 1; return *this; }
  FcbfSelector& setMode(dataflow::ExecMode m) { mode_ = m; return *this; }

  std::string name() const override { return "fcbf"; }

  // Relevant features sorted by descending SU(i, class).
  const std::vector<SUEntry>& suList() const;
  // Predominant features, ascending index order. May be empty.
  const std::vector<std::size_t>& selected() const;

 protected:
  void doFit(const Dataset& ds) override;
  Dataset doTransform(const Dataset& ds) const override;

 private:
  double delta_;
  std::size_t partitions_ = 4;
  dataflow::ExecMode mode_ = dataflow::ExecMode::parallel;
  std::vector<SUEntry> suList_;
  std::vector<std::size_t> selected_;
};

struct OfsConfig {
  double eta = 0.2;        // learning rate
  double lambda = 0.01;    // L2 regularization; 0 disables projection
  std::size_t budget = 0;  // max nonzero weights B; 0 means all features
  double epsilon = 0.0;    // >0 enables the partial-information variant
  std::uint64_t seed = 42;
};

// Online classifier with at most B nonzero weights. Labels are -1/+1.
class OfsState {
 public:
  OfsState(std::size_t dimension, const OfsConfig& cfg);

  // Mistake-driven step: no-op when y*<w,x> > 0, otherwise a regularized
  // gradient step, an L2 projection onto the ball of radius 1/sqrt(lambda)
  // and truncation to the B largest-magnitude weights (ties keep the lower
  // index). With epsilon > 0 only a sensed subset of x is observed.
  void update(const std::vector<double>& x, int y);

  // Indices of the selectNF largest |w_i|, ties toward the lower index.
  // Requires at least one update.
  std::vector<std::size_t> select(std::size_t selectNF) const;

  const std::vector<double>& weights() const { return w_; }
  std::size_t dimension() const { return w_.size(); }
  std::size_t updates() const { return updates_; }

 private:
  void truncateToBudget();

  std::vector<double> w_;
  OfsConfig cfg_;
  std::size_t updates_ = 0;
  std::mt19937_64 rng_;
};

// Transformer wrapper: streams the dataset through an OfsState (labels must
// be the two dense classes 0/1, mapped to -1/+1) and keeps the selectNF
// most important features. No separate fitting phase is required.
class OfsFilter : public Transformer {
 public:
  OfsFilter(std::size_t selectNF, const OfsConfig& cfg) : selectNF_(selectNF), cfg_(cfg) {}

  std::string name() const override { return "ofs"; }
  bool requiresFit() const override { return false; }
  const std::vector<std::size_t>& selected() const;

 protected:
  void doFit(const Dataset& ds) override;
  Dataset doTransform(const Dataset& ds) const override;

 private:
  std::size_t selectNF_;
  OfsConfig cfg_;
  std::vector<std::size_t> selected_;
};

// Keeps the listed feature columns (ascending), preserving relative order.
Dataset keepFeatures(const Dataset& ds, const std::vector<std::size_t>& features);

}  // namespace streamprep::fselect

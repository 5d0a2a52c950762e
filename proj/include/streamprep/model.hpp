#pragma once

// Core data model: labeled instances, the fit/transform contract, pipeline
// chaining and min-max normalization.

#include <memory>
#include <string>
#include <vector>

#include "streamprep/errors.hpp"

namespace streamprep {

// One stream element: a dense-encoded class label plus a fixed-width
// numeric feature vector. Feature values must be finite.
struct LabeledInstance {
  int label = 0;
  std::vector<double> features;
};

using Dataset = std::vector<LabeledInstance>;

// Returns the common feature count; throws DataError on an empty dataset,
// ragged widths or non-finite values.
std::size_t checkUniform(const Dataset& ds);

class Transformer {
 public:
  virtual ~Transformer() = default;

  virtual std::string name() const = 0;

  // Whether transform() may only be called after fit(). Streaming
  // algorithms (OFS, IDA, LOFD) fit themselves on first transform.
  virtual bool requiresFit() const { return true; }

  bool fitted() const { return fitted_; }

  // Validates the dataset and replaces any previous state.
  void fit(const Dataset& ds);

  // Labels and instance order are always preserved; only features change.
  // Once fitted, transform never mutates the fitted state.
  Dataset transform(const Dataset& ds);

 protected:
  virtual void doFit(const Dataset& ds) = 0;
  virtual Dataset doTransform(const Dataset& ds) const = 0;

  bool fitted_ = false;
};

// Ordered stage composition. fit() runs stage i's fit followed by its
// transform before fitting stage i+1; transform() composes the stage
// transforms in order.
class Pipeline : public Transformer {
 public:
  Pipeline() = default;
  explicit Pipeline(std::vector<std::shared_ptr<Transformer>> stages) : stages_(std::move(stages)) {}

  void add(std::shared_ptr<Transformer> stage) { stages_.push_back(std::move(stage)); }
  std::size_t stageCount() const { return stages_.size(); }
  const std::shared_ptr<Transformer>& stage(std::size_t i) const { return stages_.at(i); }

  std::string name() const override;
  bool requiresFit() const override;

 protected:
  void doFit(const Dataset& ds) override;
  Dataset doTransform(const Dataset& ds) const override;

 private:
  std::vector<std::shared_ptr<Transformer>> stages_;
};

Pipeline chain(std::shared_ptr<Transformer> a, std::shared_ptr<Transformer> b);

// Scales v into [0,1] given fitted bounds. A constant feature (lo == hi)
// maps to 0.5; values outside the fitted range clamp to the nearest bound.
double minmaxScale(double v, double lo, double hi);

class MinMaxScaler : public Transformer {
 public:
  std::string name() const override { return "minmax"; }
  const std::vector<double>& mins() const { return mins_; }
  const std::vector<double>& maxs() const { return maxs_; }

 protected:
  void doFit(const Dataset& ds) override;
  Dataset doTransform(const Dataset& ds) const override;

 private:
  std::vector<double> mins_;
  std::vector<double> maxs_;
};

}  // namespace streamprep

#include "streamprep/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace streamprep {

std::size_t checkUniform(const Dataset& ds) {
  if (ds.empty()) throw DataError("empty dataset");
  const std::size_t d = ds.front().features.size();
  if (d == 0) throw DataError("instances carry no features");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i].features.size() != d) {
      std::ostringstream os;
      os << "instance " << i << " has " << ds[i].features.size() << " features, expected " << d;
      throw DataError(os.str());
    }
    for (double v : ds[i].features)
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "instance " << i << " has a non-finite feature value";
        throw DataError(os.str());
      }
  }
  return d;
}

void Transformer::fit(const Dataset& ds) {
  checkUniform(ds);
  fitted_ = false;
  doFit(ds);
  fitted_ = true;
}

Dataset Transformer::transform(const Dataset& ds) {
  if (!fitted_) {
    if (requiresFit()) throw AlgoError(name() + ": transform called before fit");
    fit(ds);
  }
  if (ds.empty()) return {};
  checkUniform(ds);
  return doTransform(ds);
}

std::string Pipeline::name() const {
  std::string n = "pipeline(";
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    if (i) n += ",";
    n += stages_[i]->name();
  }
  return n + ")";
}

bool Pipeline::requiresFit() const {
  for (const auto& s : stages_)
    if (s->requiresFit()) return true;
  return false;
}

void Pipeline::doFit(const Dataset& ds) {
  Dataset cur = ds;
  for (auto& s : stages_) {
    s->fit(cur);
    cur = s->transform(cur);
  }
}

Dataset Pipeline::doTransform(const Dataset& ds) const {
  Dataset cur = ds;
  for (const auto& s : stages_) cur = s->transform(cur);
  return cur;
}

Pipeline chain(std::shared_ptr<Transformer> a, std::shared_ptr<Transformer> b) {
  return Pipeline({std::move(a), std::move(b)});
}

double minmaxScale(double v, double lo, double hi) {
  if (lo > hi) throw AlgoError("minmaxScale: lo > hi");
  if (lo == hi) return 0.5;
  const double s = (v - lo) / (hi - lo);
  return std::clamp(s, 0.0, 1.0);
}

void MinMaxScaler::doFit(const Dataset& ds) {
  const std::size_t d = ds.front().features.size();
  mins_.assign(d, ds.front().features[0]);
  maxs_.assign(d, ds.front().features[0]);
  for (std::size_t f = 0; f < d; ++f) mins_[f] = maxs_[f] = ds.front().features[f];
  for (const auto& inst : ds)
    for (std::size_t f = 0; f < d; ++f) {
      mins_[f] = std::min(mins_[f], inst.features[f]);
      maxs_[f] = std::max(maxs_[f], inst.features[f]);
    }
}

Dataset MinMaxScaler::doTransform(const Dataset& ds) const {
  const std::size_t d = mins_.size();
  if (ds.front().features.size() != d)
    throw DataError("minmax: dataset width does not match fitted state");
  Dataset out = ds;
  for (auto& inst : out)
    for (std::size_t f = 0; f < d; ++f)
      inst.features[f] = minmaxScale(inst.features[f], mins_[f], maxs_[f]);
  return out;
}

}  // namespace streamprep

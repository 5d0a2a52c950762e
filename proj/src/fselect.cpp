#include "streamprep/fselect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "streamprep/info_theory.hpp"

namespace streamprep::fselect {

namespace it = streamprep::info_theory;
namespace df = streamprep::dataflow;

namespace {

// SU between feature `f` and the class, or between two features when
// other != SIZE_MAX. Computed from exact joint counts over the dataset.
double featureSU(const df::PartitionedDataset<LabeledInstance>& pds, std::size_t f,
                 std::size_t other, df::ExecMode mode) {
  auto xOf = [f](const LabeledInstance& e) { return e.features[f]; };
  it::FrequencyTable joint =
      other == SIZE_MAX
          ? it::frequencies(pds, xOf, [](const LabeledInstance& e) { return static_cast<double>(e.label); }, mode)
          : it::frequencies(pds, xOf, [other](const LabeledInstance& e) { return e.features[other]; }, mode);
  return it::symmetricalUncertainty(joint);
}

}  // namespace

Dataset keepFeatures(const Dataset& ds, const std::vector<std::size_t>& features) {
  Dataset out;
  out.reserve(ds.size());
  for (const auto& inst : ds) {
    LabeledInstance r;
    r.label = inst.label;
    r.features.reserve(features.size());
    for (std::size_t f : features) r.features.push_back(inst.features.at(f));
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// InfoGain

const GainRanking& InfoGainSelector::ranking() const {
  if (!fitted()) throw AlgoError("infogain: not fitted");
  return ranking_;
}

void InfoGainSelector::doFit(const Dataset& ds) {
  const std::size_t d = ds.front().features.size();
  if (selectNF_ < 1 || selectNF_ > d) {
    std::ostringstream os;
    os << "infogain: selectNF " << selectNF_ << " out of range [1," << d << "]";
    throw AlgoError(os.str());
  }

  auto pds = df::PartitionedDataset<LabeledInstance>::fromVector(ds, partitions_);

  // One gain per feature, computed in parallel (the per-feature frequency
  // pass stays serial to avoid nested parallelism).
  std::vector<std::size_t> featureIdx(d);
  std::iota(featureIdx.begin(), featureIdx.end(), 0);
  auto idxDs = df::PartitionedDataset<std::size_t>::fromVector(featureIdx, partitions_);
  auto gains = df::map(
      idxDs,
      [&](const std::size_t& f) {
        auto joint = it::frequencies(
            pds, [](const LabeledInstance& e) { return static_cast<double>(e.label); },
            [f](const LabeledInstance& e) { return e.features[f]; }, df::ExecMode::serial);
        return FeatureGain{f, it::infoGain(joint)};
      },
      mode_);

  ranking_.gains = gains.flatten();
  std::sort(ranking_.gains.begin(), ranking_.gains.end(),
            [](const FeatureGain& a, const FeatureGain& b) { return a.feature < b.feature; });

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ranking_.gains[a].gain > ranking_.gains[b].gain;  // ties keep lower index
  });
  ranking_.selected.assign(order.begin(), order.begin() + selectNF_);
  std::sort(ranking_.selected.begin(), ranking_.selected.end());
  ranking_.selectNF = selectNF_;
}

Dataset InfoGainSelector::doTransform(const Dataset& ds) const {
  if (ds.front().features.size() != ranking_.gains.size())
    throw DataError("infogain: dataset width does not match fitted state");
  return keepFeatures(ds, ranking_.selected);
}

// ---------------------------------------------------------------------------
// FCBF

FcbfSelector::FcbfSelector(double delta) : delta_(delta) {
  if (delta < 0.0 || delta >= 1.0) throw UsageError("fcbf: threshold must be in [0,1)");
}

const std::vector<SUEntry>& FcbfSelector::suList() const {
  if (!fitted()) throw AlgoError("fcbf: not fitted");
  return suList_;
}

const std::vector<std::size_t>& FcbfSelector::selected() const {
  if (!fitted()) throw AlgoError("fcbf: not fitted");
  return selected_;
}

void FcbfSelector::doFit(const Dataset& ds) {
  const std::size_t d = ds.front().features.size();
  auto pds = df::PartitionedDataset<LabeledInstance>::fromVector(ds, partitions_);

  std::vector<std::size_t> featureIdx(d);
  std::iota(featureIdx.begin(), featureIdx.end(), 0);
  auto idxDs = df::PartitionedDataset<std::size_t>::fromVector(featureIdx, partitions_);
  auto su = df::map(
      idxDs,
      [&](const std::size_t& f) {
        return SUEntry{f, featureSU(pds, f, SIZE_MAX, df::ExecMode::serial)};
      },
      mode_);
  std::vector<SUEntry> all = su.flatten();
  std::sort(all.begin(), all.end(), [](const SUEntry& a, const SUEntry& b) { return a.feature < b.feature; });

  // Relevance filter, then descending SU order (ties toward lower index).
  suList_.clear();
  for (const auto& e : all)
    if (e.su >= delta_) suList_.push_back(e);
  std::stable_sort(suList_.begin(), suList_.end(),
                   [](const SUEntry& a, const SUEntry& b) { return a.su > b.su; });

  // Predominance pass: the head of the remaining list is kept, and every
  // later feature whose correlation to it reaches its class correlation is
  // removed as a redundant peer.
  std::vector<bool> removed(suList_.size(), false);
  selected_.clear();
  for (std::size_t i = 0; i < suList_.size(); ++i) {
    if (removed[i]) continue;
    const std::size_t fi = suList_[i].feature;
    selected_.push_back(fi);
    for (std::size_t j = i + 1; j < suList_.size(); ++j) {
      if (removed[j]) continue;
      const double suJI = featureSU(pds, suList_[j].feature, fi, df::ExecMode::serial);
      if (suJI >= suList_[j].su) removed[j] = true;
    }
  }
  std::sort(selected_.begin(), selected_.end());
}

Dataset FcbfSelector::doTransform(const Dataset& ds) const {
  if (selected_.empty()) throw AlgoError("fcbf: selection is empty (no feature reached the threshold)");
  for (std::size_t f : selected_)
    if (f >= ds.front().features.size())
      throw DataError("fcbf: dataset width does not match fitted state");
  return keepFeatures(ds, selected_);
}

// ---------------------------------------------------------------------------
// OFS

OfsState::OfsState(std::size_t dimension, const OfsConfig& cfg)
    : w_(dimension, 0.0), cfg_(cfg), rng_(cfg.seed) {
  if (dimension == 0) throw AlgoError("ofs: zero dimension");
  if (cfg_.budget == 0 || cfg_.budget > dimension) cfg_.budget = dimension;
  if (cfg_.eta <= 0.0) throw UsageError("ofs: eta must be positive");
  if (cfg_.lambda < 0.0) throw UsageError("ofs: lambda must be nonnegative");
  if (cfg_.epsilon < 0.0 || cfg_.epsilon > 1.0) throw UsageError("ofs: epsilon must be in [0,1]");
}

void OfsState::update(const std::vector<double>& x, int y) {
  const std::size_t d = w_.size();
  if (x.size() != d) throw DataError("ofs: feature dimension mismatch");
  if (y != -1 && y != 1) throw AlgoError("ofs: labels must be -1 or +1");

  std::vector<double> sensed;
  const std::vector<double>* input = &x;
  if (cfg_.epsilon > 0.0) {
    // Partial information: sense B attributes (uniformly at random with
    // probability epsilon, otherwise the current support) and reweight the
    // observed entries to keep the gradient unbiased.
    sensed.assign(d, 0.0);
    std::vector<char> inSupport(d, 0);
    for (std::size_t i = 0; i < d; ++i) inSupport[i] = w_[i] != 0.0;
    std::vector<std::size_t> chosen;
    std::bernoulli_distribution explore(cfg_.epsilon);
    if (explore(rng_)) {
      std::vector<std::size_t> all(d);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng_);
      chosen.assign(all.begin(), all.begin() + cfg_.budget);
    } else {
      for (std::size_t i = 0; i < d; ++i)
        if (inSupport[i]) chosen.push_back(i);
    }
    const double base = cfg_.epsilon * static_cast<double>(cfg_.budget) / static_cast<double>(d);
    for (std::size_t i : chosen) {
      const double denom = base + (1.0 - cfg_.epsilon) * (inSupport[i] ? 1.0 : 0.0);
      if (denom > 0.0) sensed[i] = x[i] / denom;
    }
    input = &sensed;
  }

  ++updates_;
  double margin = 0.0;
  for (std::size_t i = 0; i < d; ++i) margin += w_[i] * (*input)[i];
  margin *= y;
  if (margin > 0.0) return;  // correctly classified: no change

  const double decay = 1.0 - cfg_.lambda * cfg_.eta;
  for (std::size_t i = 0; i < d; ++i) w_[i] = decay * w_[i] + cfg_.eta * y * (*input)[i];

  if (cfg_.lambda > 0.0) {
    const double radius = 1.0 / std::sqrt(cfg_.lambda);
    double norm2 = 0.0;
    for (double wi : w_) norm2 += wi * wi;
    const double norm = std::sqrt(norm2);
    if (norm > radius)
      for (double& wi : w_) wi *= radius / norm;
  }

  truncateToBudget();
}

void OfsState::truncateToBudget() {
  const std::size_t d = w_.size();
  if (cfg_.budget >= d) return;
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(w_[a]) > std::abs(w_[b]); });
  std::vector<char> keep(d, 0);
  for (std::size_t i = 0; i < cfg_.budget; ++i) keep[order[i]] = 1;
  for (std::size_t i = 0; i < d; ++i)
    if (!keep[i]) w_[i] = 0.0;
}

std::vector<std::size_t> OfsState::select(std::size_t selectNF) const {
  const std::size_t d = w_.size();
  if (selectNF > d) throw AlgoError("ofs: more features requested than available");
  if (updates_ == 0) throw AlgoError("ofs: no updates performed, weights are untrained");
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(w_[a]) > std::abs(w_[b]); });
  std::vector<std::size_t> out(order.begin(), order.begin() + selectNF);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::size_t>& OfsFilter::selected() const {
  if (!fitted()) throw AlgoError("ofs: not fitted");
  return selected_;
}

void OfsFilter::doFit(const Dataset& ds) {
  const std::size_t d = ds.front().features.size();
  if (selectNF_ < 1 || selectNF_ > d) {
    std::ostringstream os;
    os << "ofs: selectNF " << selectNF_ << " out of range [1," << d << "]";
    throw AlgoError(os.str());
  }
  std::set<int> labels;
  for (const auto& inst : ds) labels.insert(inst.label);
  if (labels.size() > 2 || *labels.rbegin() > 1 || *labels.begin() < 0)
    throw AlgoError("ofs: only binary datasets (labels 0/1) are accepted");

  OfsState state(d, cfg_);
  for (const auto& inst : ds) state.update(inst.features, inst.label == 1 ? 1 : -1);
  selected_ = state.updates() > 0 ? state.select(selectNF_) : std::vector<std::size_t>{};
  if (selected_.empty()) throw AlgoError("ofs: empty dataset, nothing selected");
}

Dataset OfsFilter::doTransform(const Dataset& ds) const {
  for (std::size_t f : selected_)
    if (f >= ds.front().features.size())
      throw DataError("ofs: dataset width does not match fitted state");
  return keepFeatures(ds, selected_);
}

}  // namespace streamprep::fselect

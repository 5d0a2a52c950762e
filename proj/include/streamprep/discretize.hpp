#pragma once

// The three online discretizers (IDA, PiD, LOFD), their supporting data
// structures and bin application.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "streamprep/model.hpp"

namespace streamprep::discretize {

// Per-feature strictly ascending cut points {k_1, ..., k_{m-1}} defining
// bins b_1 = [-inf, k_1], b_i = (k_{i-1}, k_i], b_m = (k_{m-1}, +inf].
class CutPointMatrix {
 public:
  CutPointMatrix() = default;
  explicit CutPointMatrix(std::vector<std::vector<double>> perFeature);

  std::size_t featureCount() const { return perFeature_.size(); }
  const std::vector<double>& cutsFor(std::size_t f) const { return perFeature_.at(f); }

  // 1-based bin index of v for feature f.
  std::size_t binOf(std::size_t f, double v) const;

  std::string toJson() const;
  static CutPointMatrix fromJson(const std::string& text);

 private:
  std::vector<std::vector<double>> perFeature_;
};

// Replaces every feature value by its 1-based bin index; labels and order
// are untouched.
Dataset applyDiscretization(const Dataset& ds, const CutPointMatrix& cuts);

// Double-ended priority queue stored as an array of (low, high) pairs.
// Min and max are O(1); push, popMin, popMax and removal of an arbitrary
// slot are O(log n).
class IntervalHeap {
 public:
  std::size_t size() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }
  double min() const;
  double max() const;
  void push(double v);
  double popMin();
  double popMax();
  // Removes the value at slot index `idx` in [0, size()).
  double removeAt(std::size_t idx);
  const std::vector<double>& slots() const { return slots_; }

 private:
  std::size_t hiSlot(std::size_t node) const;
  void siftUpMin(std::size_t node);
  void siftUpMax(std::size_t node);
  void siftDownMin(std::size_t node);
  void siftDownMax(std::size_t node);
  void fixSlot(std::size_t slot);

  std::vector<double> slots_;
};

// Decides, for the n-th stream value, whether it enters a reservoir of
// capacity s and which slot it takes: the first s values are appended,
// afterwards a value replaces a uniformly random slot with probability s/n.
class ReservoirGate {
 public:
  explicit ReservoirGate(std::size_t capacity) : capacity_(capacity) {}

  struct Decision {
    bool keep = false;
    bool append = false;
    std::size_t slot = 0;
  };

  Decision offer(std::mt19937_64& rng);
  std::size_t seen() const { return seen_; }
  std::size_t stored() const { return std::min(seen_, capacity_); }
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  std::size_t seen_ = 0;
};

// Plain vector-backed uniform reservoir sample.
class ReservoirSample {
 public:
  explicit ReservoirSample(std::size_t capacity) : gate_(capacity) {}

  void insert(double v, std::mt19937_64& rng);
  const std::vector<double>& values() const { return values_; }
  std::size_t seen() const { return gate_.seen(); }
  std::size_t capacity() const { return gate_.capacity(); }

 private:
  ReservoirGate gate_;
  std::vector<double> values_;
};

// One attribute of IDA: a reservoir sample kept in per-bin interval heaps,
// rebalanced after every change so heap j always holds the j-th quantile
// slice of the sample.
class IdaAttribute {
 public:
  IdaAttribute(std::size_t bins, std::size_t sampleSize, std::uint64_t seed);

  void offer(double v);
  std::size_t seen() const { return gate_.seen(); }
  std::size_t stored() const;

  // bins-1 cut points at the midpoints between adjacent heap extremes;
  // duplicates collapse, so fewer cuts may be returned.
  std::vector<double> cutPoints() const;

  const std::vector<IntervalHeap>& heaps() const { return heaps_; }

 private:
  void insertValue(double v);
  void removeGlobalSlot(std::size_t idx);
  void rebalance();

  std::size_t bins_;
  ReservoirGate gate_;
  std::vector<IntervalHeap> heaps_;
  std::mt19937_64 rng_;
};

// Incremental quantile discretizer over a per-attribute reservoir sample.
// No fitting phase is required.
class IdaDiscretizer : public Transformer {
 public:
  IdaDiscretizer(std::size_t bins, std::size_t sampleSize, std::uint64_t seed = 42);

  std::string name() const override { return "ida"; }
  bool requiresFit() const override { return false; }

  // Streaming entry point.
  void observe(const LabeledInstance& inst);

  CutPointMatrix cutPoints() const;
  const IdaAttribute& attribute(std::size_t f) const { return attrs_.at(f); }

 protected:
  void doFit(const Dataset& ds) override;
  Dataset doTransform(const Dataset& ds) const override;

 private:
  void ensureAttrs(std::size_t d);

  std::size_t bins_;
  std::size_t sampleSize_;
  std::uint64_t seed_;
  std::vector<IdaAttribute> attrs_;
};

// Fayyad-Irani MDL stop criterion on class-count vectors: accept the split
// iff Gain > log2(N-1)/N + Delta/N. Throws AlgoError when a side is empty
// or the set has fewer than two elements.
bool mdlAcceptSplit(const std::vector<double>& leftClassCounts,
                    const std::vector<double>& rightClassCounts);

// One attribute of PiD: the layer-1 equal-width histogram with split
// counters plus the recursive-entropy layer-2 cut search over its breaks.
class PidAttribute {
 public:
  PidAttribute(double rangeLo, double rangeHi, std::size_t l1Bins, double step, double alpha);

  void observe(double v, int label);

  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<double>& counts() const { return counts_; }
  double totalSeen() const { return seen_; }

  // Layer-2 cuts; always a subset of the layer-1 breaks.
  std::vector<double> layer2Cuts() const;

 private:
  std::size_t intervalOf(double v) const;
  void split(std::size_t idx);
  void mdlSearch(std::size_t lo, std::size_t hi, std::vector<double>& out) const;

  std::vector<double> breaks_;
  std::vector<double> counts_;                    // one per interval
  std::vector<std::vector<double>> classCounts_;  // per interval, per class
  double step_;
  double alpha_;
  double seen_ = 0.0;
};

struct PidConfig {
  double alpha = 0.10;
  std::size_t l1Bins = 5;
  double step = 0.0;  // 0: derived as (rangeHi-rangeLo)/l1Bins
  std::size_t updateEvery = 50;
  double rangeLo = 0.0;  // the usual pipeline min-max-normalizes first
  double rangeHi = 1.0;
};

// Two-layer incremental discretizer. Requires fit; the layer-2 cuts are
// refreshed every updateEvery instances and once more when fitting ends.
class PidDiscretizer : public Transformer {
 public:
  explicit PidDiscretizer(const PidConfig& cfg = {});

  std::string name() const override { return "pid"; }

  void observe(const LabeledInstance& inst);

  CutPointMatrix cutPoints() const;
  const PidAttribute& attribute(std::size_t f) const { return attrs_.at(f); }

 protected:
  void doFit(const Dataset& ds) override;
  Dataset doTransform(const Dataset& ds) const override;

 private:
  void ensureAttrs(std::size_t d);
  void refreshCuts();

  PidConfig cfg_;
  std::vector<PidAttribute> attrs_;
  std::vector<std::vector<double>> cuts_;  // cached layer-2 output
  std::size_t sinceRefresh_ = 0;
};

// One attribute of LOFD: an ordered interval map with per-interval class
// histograms, a sorted point multiset for boundary detection and a
// timestamped FIFO queue bounding the number of stored points.
class LofdAttribute {
 public:
  LofdAttribute(std::size_t initTh, std::size_t capacity);

  void observe(double v, int label);

  bool initialized() const { return init_; }
  // Interval boundaries without the final maximum; strictly ascending.
  std::vector<double> cutPoints() const;

  std::size_t intervalCount() const { return intervals_.size(); }
  std::size_t queueSize() const { return queue_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::vector<double> boundaries() const;
  std::int64_t histogramMass() const;

 private:
  struct Interval {
    std::vector<std::int64_t> hist;
    int label = 0;
  };
  using IntervalMap = std::map<double, Interval>;

  void initialize();
  void ingest(double v, int label);
  void addPoint(double v, int label);
  void boundarySplit(double boundary);
  // Merges adjacent intervals when the quadratic entropy of the union is
  // strictly below the sum of the parts; returns the surviving interval.
  IntervalMap::iterator tryMerge(IntervalMap::iterator left, IntervalMap::iterator right);
  void evict();

  IntervalMap intervals_;
  std::map<double, std::vector<std::int64_t>> points_;
  struct QueuedPoint {
    double value;
    int label;
    std::uint64_t stamp;
  };
  std::deque<QueuedPoint> queue_;
  std::vector<std::pair<double, int>> initBuf_;
  std::size_t initTh_;
  std::size_t capacity_;
  std::uint64_t clock_ = 0;
  bool init_ = false;
};

struct LofdConfig {
  std::size_t initTh = 1;
  std::size_t histogramCapacity = 10000;
};

// Local online fusion discretizer. No fitting phase is required.
class LofdDiscretizer : public Transformer {
 public:
  explicit LofdDiscretizer(const LofdConfig& cfg = {});

  std::string name() const override { return "lofd"; }
  bool requiresFit() const override { return false; }

  void observe(const LabeledInstance& inst);

  CutPointMatrix cutPoints() const;
  const LofdAttribute& attribute(std::size_t f) const { return attrs_.at(f); }

 protected:
  void doFit(const Dataset& ds) override;
  Dataset doTransform(const Dataset& ds) const override;

 private:
  void ensureAttrs(std::size_t d);

  LofdConfig cfg_;
  std::vector<LofdAttribute> attrs_;
};

}  // namespace streamprep::discretize

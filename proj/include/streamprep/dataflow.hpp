#pragma once

// Minimal deterministic partition-parallel executor. The four primitives
// (map, mapPartition, reduce, groupReduce) come in two execution modes:
// a serial reference path and an OpenMP path with one task per partition.
// Both paths must produce identical results for pure user functions; the
// serial path is the specification and is kept for testing and benchmarks.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "streamprep/errors.hpp"

namespace streamprep::dataflow {

enum class ExecMode { serial, parallel };

template <typename T>
class PartitionedDataset {
 public:
  PartitionedDataset() : parts_(1) {}

  explicit PartitionedDataset(std::vector<std::vector<T>> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) parts_.emplace_back();
  }

  // Splits `items` into `numPartitions` contiguous chunks whose sizes differ
  // by at most one; concatenating the chunks in order gives back `items`.
  static PartitionedDataset fromVector(std::vector<T> items, std::size_t numPartitions) {
    if (numPartitions == 0) numPartitions = 1;
    std::vector<std::vector<T>> parts(numPartitions);
    const std::size_t n = items.size();
    const std::size_t base = n / numPartitions;
    const std::size_t extra = n % numPartitions;
    std::size_t pos = 0;
    for (std::size_t p = 0; p < numPartitions; ++p) {
      const std::size_t len = base + (p < extra ? 1 : 0);
      parts[p].reserve(len);
      for (std::size_t i = 0; i < len; ++i) parts[p].push_back(std::move(items[pos++]));
    }
    return PartitionedDataset(std::move(parts));
  }

  const std::vector<std::vector<T>>& partitions() const { return parts_; }
  std::size_t partitionCount() const { return parts_.size(); }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& p : parts_) n += p.size();
    return n;
  }

  std::vector<T> flatten() const {
    std::vector<T> out;
    out.reserve(size());
    for (const auto& p : parts_) out.insert(out.end(), p.begin(), p.end());
    return out;
  }

 private:
  std::vector<std::vector<T>> parts_;
};

namespace detail {

struct CapturedError {
  std::size_t partition = 0;
  std::size_t element = 0;
  bool hasElement = false;
  std::string what;
};

[[noreturn]] inline void rethrow(const char* op, const CapturedError& e) {
  std::ostringstream os;
  os << op << ": partition " << e.partition;
  if (e.hasElement) os << ", element " << e.element;
  os << ": " << e.what;
  throw AlgoError(os.str());
}

// Runs `body(p)` for every partition index. OpenMP tasks may not leak
// exceptions, so failures are captured per partition and the lowest
// partition's error is rethrown after the join.
template <typename Body>
void forEachPartition(std::size_t count, ExecMode mode, const char* op,
                      std::vector<std::optional<CapturedError>>& errs, Body&& body) {
  errs.assign(count, std::nullopt);
  auto guarded = [&](std::size_t p) {
    try {
      body(p);
    } catch (const CapturedError& ce) {
      errs[p] = ce;
    } catch (const std::exception& ex) {
      errs[p] = CapturedError{p, 0, false, ex.what()};
    }
  };
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long p = 0; p < static_cast<long long>(count); ++p)
      guarded(static_cast<std::size_t>(p));
  } else {
    for (std::size_t p = 0; p < count; ++p) guarded(p);
  }
  for (const auto& e : errs)
    if (e) rethrow(op, *e);
}

}  // namespace detail

// Element-wise transformation; partition structure is preserved.
template <typename T, typename F>
auto map(const PartitionedDataset<T>& ds, F fn, ExecMode mode = ExecMode::parallel)
    -> PartitionedDataset<std::decay_t<std::invoke_result_t<F&, const T&>>> {
  using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
  const auto& in = ds.partitions();
  std::vector<std::vector<U>> out(in.size());
  std::vector<std::optional<detail::CapturedError>> errs;
  detail::forEachPartition(in.size(), mode, "map", errs, [&](std::size_t p) {
    const auto& part = in[p];
    out[p].reserve(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
      try {
        out[p].push_back(fn(part[i]));
      } catch (const std::exception& ex) {
        throw detail::CapturedError{p, i, true, ex.what()};
      }
    }
  });
  return PartitionedDataset<U>(std::move(out));
}

// Whole-partition transformation; output partitions may change length.
template <typename T, typename F>
auto mapPartition(const PartitionedDataset<T>& ds, F fn, ExecMode mode = ExecMode::parallel)
    -> PartitionedDataset<typename std::decay_t<std::invoke_result_t<F&, const std::vector<T>&>>::value_type> {
  using OutVec = std::decay_t<std::invoke_result_t<F&, const std::vector<T>&>>;
  using U = typename OutVec::value_type;
  const auto& in = ds.partitions();
  std::vector<std::vector<U>> out(in.size());
  std::vector<std::optional<detail::CapturedError>> errs;
  detail::forEachPartition(in.size(), mode, "mapPartition", errs,
                           [&](std::size_t p) { out[p] = fn(in[p]); });
  return PartitionedDataset<U>(std::move(out));
}

// Left fold over the logical dataset in partition order. The parallel path
// folds each partition independently and combines the partials in partition
// order, which equals the serial fold whenever `fn` is associative.
template <typename T, typename F>
T reduce(const PartitionedDataset<T>& ds, F fn, ExecMode mode = ExecMode::parallel) {
  const auto& in = ds.partitions();
  if (mode == ExecMode::serial) {
    std::optional<T> acc;
    for (std::size_t p = 0; p < in.size(); ++p) {
      for (const T& e : in[p]) {
        if (!acc)
          acc = e;
        else
          acc = fn(std::move(*acc), e);
      }
    }
    if (!acc) throw AlgoError("reduce: empty dataset");
    return std::move(*acc);
  }

  std::vector<std::optional<T>> partials(in.size());
  std::vector<std::optional<detail::CapturedError>> errs;
  detail::forEachPartition(in.size(), mode, "reduce", errs, [&](std::size_t p) {
    std::optional<T> acc;
    for (const T& e : in[p]) {
      if (!acc)
        acc = e;
      else
        acc = fn(std::move(*acc), e);
    }
    partials[p] = std::move(acc);
  });
  std::optional<T> acc;
  for (auto& part : partials) {
    if (!part) continue;
    if (!acc)
      acc = std::move(*part);
    else
      acc = fn(std::move(*acc), *part);
  }
  if (!acc) throw AlgoError("reduce: empty dataset");
  return std::move(*acc);
}

// Groups elements by key and applies `g` once per group. Output is a single
// partition ordered by ascending key; within a group, elements appear in
// logical dataset order.
template <typename T, typename KeyFn, typename GroupFn>
auto groupReduce(const PartitionedDataset<T>& ds, KeyFn key, GroupFn g,
                 ExecMode mode = ExecMode::parallel)
    -> PartitionedDataset<std::decay_t<std::invoke_result_t<
        GroupFn&, const std::decay_t<std::invoke_result_t<KeyFn&, const T&>>&, const std::vector<T>&>>> {
  using K = std::decay_t<std::invoke_result_t<KeyFn&, const T&>>;
  using R = std::decay_t<std::invoke_result_t<GroupFn&, const K&, const std::vector<T>&>>;
  const auto& in = ds.partitions();

  std::map<K, std::vector<T>> groups;
  if (mode == ExecMode::parallel) {
    std::vector<std::map<K, std::vector<T>>> locals(in.size());
    std::vector<std::optional<detail::CapturedError>> errs;
    detail::forEachPartition(in.size(), mode, "groupReduce", errs, [&](std::size_t p) {
      for (const T& e : in[p]) locals[p][key(e)].push_back(e);
    });
    for (auto& local : locals) {
      for (auto& [k, v] : local) {
        auto& dst = groups[k];
        dst.insert(dst.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
      }
    }
  } else {
    for (const auto& part : in)
      for (const T& e : part) groups[key(e)].push_back(e);
  }

  std::vector<std::pair<const K*, const std::vector<T>*>> ordered;
  ordered.reserve(groups.size());
  for (const auto& [k, v] : groups) ordered.emplace_back(&k, &v);

  std::vector<R> out(ordered.size());
  std::vector<std::optional<detail::CapturedError>> errs;
  detail::forEachPartition(ordered.size(), mode, "groupReduce", errs,
                           [&](std::size_t i) { out[i] = g(*ordered[i].first, *ordered[i].second); });
  return PartitionedDataset<R>(std::vector<std::vector<R>>{std::move(out)});
}

}  // namespace streamprep::dataflow

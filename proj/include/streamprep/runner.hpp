#pragma once

// Configuration and entry point shared by the CLI and the integration
// tests. One command per run; all artifacts are deterministic for a fixed
// config and seed.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace streamprep {

struct RunConfig {
  enum class Command { discretize, select, evaluate };
  Command command = Command::discretize;

  std::string inputPath;
  std::string outputPrefix;                 // artifact paths derive from this
  std::size_t labelCol = SIZE_MAX;          // SIZE_MAX: last column
  std::vector<std::size_t> dropCols;

  std::string algo;                         // ida|pid|lofd|infogain|fcbf|ofs|none

  // discretizers
  std::size_t bins = 5;
  std::size_t sampleSize = 1000;            // IDA reservoir size s
  double alpha = 0.10;
  std::size_t l1Bins = 5;
  double step = 0.0;                        // 0: derived from range and l1Bins
  std::size_t updateEvery = 50;
  double rangeLo = 0.0;
  double rangeHi = 1.0;
  std::size_t initTh = 1;
  std::size_t histogramCapacity = 10000;

  // selectors
  double delta = 0.05;
  std::size_t selectNF = 0;                 // 0: floor(d/2), at least 1
  double eta = 0.2;
  double lambda = 0.01;
  std::size_t budget = 0;                   // OFS B; 0: all features
  double epsilon = 0.0;
  std::string ovrLabel;                     // one-vs-rest target (raw label text)

  // evaluation
  std::size_t folds = 5;
  std::size_t knnK = 3;
  std::string classifier = "knn";           // knn|dtree
  std::size_t maxDepth = 10;
  std::size_t minLeaf = 5;

  int normalize = -1;                       // -1 auto (on for pid), 0 off, 1 on
  std::uint64_t seed = 42;
  std::size_t partitions = 4;
};

// Executes the configured command, writing artifacts next to outputPrefix
// and a summary of the effective configuration to `log`. Throws UsageError,
// DataError or AlgoError on failure.
void run(const RunConfig& cfg, std::ostream& log);

}  // namespace streamprep

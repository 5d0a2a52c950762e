#pragma once

#include <stdexcept>
#include <string>

namespace streamprep {

// Invalid input data: unreadable files, ragged rows, dimension mismatches.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Algorithm-level failure: unfitted transformer, empty reduce, empty selection.
struct AlgoError : std::runtime_error {
  explicit AlgoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad command-line or run configuration.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace streamprep

#pragma once

// CSV ingestion and writing. Dialect: comma separator, period decimal
// point, optional header detected by a non-numeric first row. Numeric
// output uses shortest round-trip formatting.

#include <iosfwd>
#include <string>
#include <vector>

#include "streamprep/model.hpp"

namespace streamprep::csv {

struct IngestResult {
  Dataset data;
  std::vector<std::string> labelNames;  // dense label id -> original text
  bool hadHeader = false;
  std::vector<std::string> header;      // raw header cells when present
  std::size_t featureCount = 0;
};

// Parses the stream; `labelCol` and `dropCols` index the original file
// columns (0-based). Throws DataError with row/column positions on
// unparseable cells, ragged rows or empty input.
IngestResult ingest(std::istream& in, std::size_t labelCol,
                    const std::vector<std::size_t>& dropCols = {});

// File variant; labelCol == SIZE_MAX selects the last column.
IngestResult ingestFile(const std::string& path, std::size_t labelCol,
                        const std::vector<std::size_t>& dropCols = {});

// Writes features followed by the original label text as the last column.
void write(std::ostream& out, const Dataset& ds, const std::vector<std::string>& labelNames);
void writeFile(const std::string& path, const Dataset& ds,
               const std::vector<std::string>& labelNames);

// Shortest decimal form that parses back to exactly v.
std::string formatDouble(double v);

}  // namespace streamprep::csv

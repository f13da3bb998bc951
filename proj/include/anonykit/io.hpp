#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anonykit/core.hpp"
#include "anonykit/rect_partition.hpp"

namespace anonykit {

// Labelled record counts obtained from a name-frequency file, together with
// the scale factor that converted percentages to integer counts.
struct FrequencyTable {
  std::vector<std::string> labels;
  std::vector<Size> counts;
  Size scale = 1000;
  std::string source;

  Size total() const;
  Size max_count() const;
};

// Reads whitespace-separated rows `NAME FREQ CUMFREQ RANK` where FREQ is a
// percentage with a short decimal part. Each count is FREQ * scale, computed
// exactly on the decimal representation; a product that is not an integer
// raises NonIntegralFrequency. Duplicate labels and counts below 1 are
// ParseErrors; a file with no data rows is EmptyFile.
FrequencyTable load_frequency_table(const std::string& path, Size scale = 1000);

// Graph instance file: header `n m k`, then m edge lines `u v` (0-based),
// then n vertex-weight lines, then optionally a line `tree` followed by n-1
// edge lines naming a spanning tree to use instead of the built-in one.
struct GraphInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Size> weights;
  Size k = 0;
  std::optional<std::vector<std::pair<int, int>>> tree_edges;
};

GraphInstance load_graph_instance(const std::string& path);

// Point CSV with header `x,y,weight` and integer fields.
WeightedPointSet load_point_csv(const std::string& path);

// Whitespace-separated integer group sizes.
std::vector<Size> load_sizes(const std::string& path);

}  // namespace anonykit

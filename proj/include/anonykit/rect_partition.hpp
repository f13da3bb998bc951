#pragma once

#include <vector>

#include "anonykit/core.hpp"

namespace anonykit {

// One planar location together with the number of records mapped to it.
struct WeightedPoint {
  Size x = 0;
  Size y = 0;
  Size weight = 0;
};

// Validated, canonically ordered point set. Duplicate (x, y) locations are
// merged by summing their weights; the number of merges performed is kept so
// callers can warn about them.
class WeightedPointSet {
 public:
  explicit WeightedPointSet(std::vector<WeightedPoint> points);

  const std::vector<WeightedPoint>& points() const { return points_; }
  int n() const { return static_cast<int>(points_.size()); }
  Size total_weight() const { return total_; }
  int merged_duplicates() const { return merged_; }

 private:
  std::vector<WeightedPoint> points_;  // sorted by (x, y), distinct
  Size total_ = 0;
  int merged_ = 0;
};

// Half-open axis-aligned rectangle [x_lo, x_hi) x [y_lo, y_hi).
struct Rect {
  Size x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;

  bool operator==(const Rect&) const = default;
};

// Node of a rectangle-splitting tree, stored in a flat preorder vector.
// Internal nodes cut along `axis` (0 = vertical line x = cut, 1 = horizontal
// line y = cut); the low child keeps [lo, cut), the high child [cut, hi).
struct RectNode {
  Rect rect;
  Size weight = 0;
  int axis = -1;  // -1 for leaves
  Size cut = 0;
  int low = -1, high = -1;

  bool leaf() const { return axis < 0; }
};

// Binary partition of the bounding rectangle of a point set. The constructor
// checks the structural invariants: node 0 is the root, every internal node's
// children tile it exactly along the stated cut, and weights add up.
class RectTree {
 public:
  explicit RectTree(std::vector<RectNode> nodes);

  const std::vector<RectNode>& nodes() const { return nodes_; }
  const RectNode& root() const { return nodes_.front(); }

  // Indices of leaf nodes, in preorder.
  std::vector<int> leaves() const;
  int leaf_count() const;

  // Maximum leaf weight.
  Size cost() const;

 private:
  std::vector<RectNode> nodes_;
};

// Recursively cuts the bounding rectangle wherever some axis-aligned line
// strictly between two point locations leaves weight >= k on both sides,
// preferring the cut that minimizes the heavier side (ties: vertical before
// horizontal, then the lower cut coordinate). Stops when no such cut exists,
// so every leaf holds weight >= k and admits no further feasible cut.
RectTree kd_partition(const WeightedPointSet& points, Size k);

struct GuillotineResult {
  Size cost;
  RectTree tree;
};

// Exact minimum over all recursive axis-aligned cuttings whose leaves all
// weigh >= k of the maximum leaf weight, by memoized recursion over the
// coordinate-aligned sub-rectangles. Requires at most 12 distinct coordinate
// values per axis.
GuillotineResult guillotine_optimal(const WeightedPointSet& points, Size k);

}  // namespace anonykit

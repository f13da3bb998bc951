#include "anonykit/rect_partition.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

namespace anonykit {

namespace {

constexpr Size kInf = std::numeric_limits<Size>::max();

// Coordinate-compressed grid with 2D prefix sums over point weights.
struct Grid {
  std::vector<Size> xs, ys;      // distinct coordinates, ascending
  std::vector<Size> prefix;      // (nx+1) x (ny+1), row-major
  int nx = 0, ny = 0;

  explicit Grid(const WeightedPointSet& pts) {
    for (const auto& p : pts.points()) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    nx = static_cast<int>(xs.size());
    ny = static_cast<int>(ys.size());

    std::vector<Size> cell(static_cast<std::size_t>(nx) * ny, 0);
    for (const auto& p : pts.points()) {
      const int i = static_cast<int>(
          std::lower_bound(xs.begin(), xs.end(), p.x) - xs.begin());
      const int j = static_cast<int>(
          std::lower_bound(ys.begin(), ys.end(), p.y) - ys.begin());
      cell[static_cast<std::size_t>(i) * ny + j] += p.weight;
    }
    prefix.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), 0);
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < ny; ++j) {
        at(i + 1, j + 1) = cell[static_cast<std::size_t>(i) * ny + j] +
                           at(i, j + 1) + at(i + 1, j) - at(i, j);
      }
    }
  }

  Size& at(int i, int j) {
    return prefix[static_cast<std::size_t>(i) * (ny + 1) + j];
  }
  Size at(int i, int j) const {
    return prefix[static_cast<std::size_t>(i) * (ny + 1) + j];
  }

  // Weight inside the compressed index range [a,b) x [c,d).
  Size weight(int a, int b, int c, int d) const {
    return at(b, d) - at(a, d) - at(b, c) + at(a, c);
  }

  // Original-coordinate rectangle covered by the compressed range. Lower
  // edges of non-root ranges sit one past the previous coordinate, so no
  // point ever lies on a cut line.
  Rect rect(int a, int b, int c, int d) const {
    Rect r;
    r.x_lo = (a == 0) ? xs[0] : xs[a - 1] + 1;
    r.x_hi = xs[b - 1] + 1;
    r.y_lo = (c == 0) ? ys[0] : ys[c - 1] + 1;
    r.y_hi = ys[d - 1] + 1;
    return r;
  }

  Size cut_coord(int axis, int m) const {
    return axis == 0 ? xs[m - 1] + 1 : ys[m - 1] + 1;
  }
};

void check_k_and_total(Size k, Size total) {
  if (k < 1) fail(errc::non_positive_size, "k must be >= 1");
  if (total < k) {
    fail(errc::infeasible_total, "total weight " + std::to_string(total) +
                                     " is below k=" + std::to_string(k));
  }
}

}  // namespace

WeightedPointSet::WeightedPointSet(std::vector<WeightedPoint> points) {
  if (points.empty()) {
    fail(errc::empty_instance, "point set must not be empty");
  }
  for (const auto& p : points) {
    if (p.weight < 1) {
      fail(errc::non_positive_size, "point weights must be >= 1");
    }
    if (p.x == std::numeric_limits<Size>::max() ||
        p.y == std::numeric_limits<Size>::max()) {
      fail(errc::too_large, "coordinates must leave room for half-open covers");
    }
  }
  std::sort(points.begin(), points.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) {
              return std::tie(a.x, a.y) < std::tie(b.x, b.y);
            });
  __int128 total = 0;
  for (const auto& p : points) {
    if (!points_.empty() && points_.back().x == p.x &&
        points_.back().y == p.y) {
      points_.back().weight += p.weight;
      ++merged_;
    } else {
      points_.push_back(p);
    }
    total += p.weight;
  }
  if (total > static_cast<__int128>(std::numeric_limits<Size>::max())) {
    fail(errc::too_large, "total weight overflows 64-bit range");
  }
  total_ = static_cast<Size>(total);
}

RectTree::RectTree(std::vector<RectNode> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) {
    fail(errc::precondition_violated, "rectangle tree must not be empty");
  }
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<int> stack{0};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const int idx = stack.back();
    stack.pop_back();
    if (idx < 0 || idx >= static_cast<int>(nodes_.size()) || seen[idx]) {
      fail(errc::precondition_violated, "malformed rectangle tree links");
    }
    seen[idx] = 1;
    ++visited;
    const RectNode& nd = nodes_[idx];
    if (nd.rect.x_lo >= nd.rect.x_hi || nd.rect.y_lo >= nd.rect.y_hi) {
      fail(errc::precondition_violated, "empty rectangle in tree");
    }
    if (nd.leaf()) {
      if (nd.low != -1 || nd.high != -1) {
        fail(errc::precondition_violated, "leaf with children");
      }
      continue;
    }
    if (nd.axis != 0 && nd.axis != 1) {
      fail(errc::precondition_violated, "cut axis must be 0 or 1");
    }
    if (nd.low < 0 || nd.high < 0 ||
        nd.low >= static_cast<int>(nodes_.size()) ||
        nd.high >= static_cast<int>(nodes_.size())) {
      fail(errc::precondition_violated, "child index out of range");
    }
    const RectNode& lo = nodes_[nd.low];
    const RectNode& hi = nodes_[nd.high];
    Rect expect_lo = nd.rect, expect_hi = nd.rect;
    if (nd.axis == 0) {
      if (nd.cut <= nd.rect.x_lo || nd.cut >= nd.rect.x_hi) {
        fail(errc::precondition_violated, "cut outside rectangle");
      }
      expect_lo.x_hi = nd.cut;
      expect_hi.x_lo = nd.cut;
    } else {
      if (nd.cut <= nd.rect.y_lo || nd.cut >= nd.rect.y_hi) {
        fail(errc::precondition_violated, "cut outside rectangle");
      }
      expect_lo.y_hi = nd.cut;
      expect_hi.y_lo = nd.cut;
    }
    if (lo.rect != expect_lo || hi.rect != expect_hi) {
      fail(errc::precondition_violated, "children do not tile their parent");
    }
    if (lo.weight + hi.weight != nd.weight) {
      fail(errc::precondition_violated, "child weights do not add up");
    }
    stack.push_back(nd.high);
    stack.push_back(nd.low);
  }
  if (visited != nodes_.size()) {
    fail(errc::precondition_violated, "unreachable nodes in rectangle tree");
  }
}

std::vector<int> RectTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (nodes_[i].leaf()) out.push_back(i);
  }
  return out;
}

int RectTree::leaf_count() const { return static_cast<int>(leaves().size()); }

Size RectTree::cost() const {
  Size best = 0;
  for (const auto& nd : nodes_) {
    if (nd.leaf()) best = std::max(best, nd.weight);
  }
  return best;
}

RectTree kd_partition(const WeightedPointSet& points, Size k) {
  check_k_and_total(k, points.total_weight());
  const Grid grid(points);

  std::vector<RectNode> nodes;
  // Preorder build; returns the node's index.
  auto rec = [&](auto&& self, int a, int b, int c, int d) -> int {
    const Size w = grid.weight(a, b, c, d);
    Size best_heavy = kInf;
    int best_axis = -1, best_m = -1;
    for (int axis = 0; axis < 2; ++axis) {
      const int lo = axis == 0 ? a : c;
      const int hi = axis == 0 ? b : d;
      for (int m = lo + 1; m < hi; ++m) {
        const Size wl = axis == 0 ? grid.weight(a, m, c, d)
                                  : grid.weight(a, b, c, m);
        const Size wr = w - wl;
        if (wl < k || wr < k) continue;
        const Size heavy = std::max(wl, wr);
        if (heavy < best_heavy) {
          best_heavy = heavy;
          best_axis = axis;
          best_m = m;
        }
      }
    }

    const int idx = static_cast<int>(nodes.size());
    nodes.push_back(RectNode{grid.rect(a, b, c, d), w, -1, 0, -1, -1});
    if (best_axis < 0) return idx;

    nodes[idx].axis = best_axis;
    nodes[idx].cut = grid.cut_coord(best_axis, best_m);
    int lo_child, hi_child;
    if (best_axis == 0) {
      lo_child = self(self, a, best_m, c, d);
      hi_child = self(self, best_m, b, c, d);
    } else {
      lo_child = self(self, a, b, c, best_m);
      hi_child = self(self, a, b, best_m, d);
    }
    nodes[idx].low = lo_child;
    nodes[idx].high = hi_child;
    return idx;
  };
  rec(rec, 0, grid.nx, 0, grid.ny);
  return RectTree(std::move(nodes));
}

GuillotineResult guillotine_optimal(const WeightedPointSet& points, Size k) {
  check_k_and_total(k, points.total_weight());
  const Grid grid(points);
  if (grid.nx > 12 || grid.ny > 12) {
    fail(errc::too_large,
         "exact cutting handles at most 12 distinct coordinates per axis");
  }

  const int nx = grid.nx, ny = grid.ny;
  const int xb = nx + 1, yb = ny + 1;
  auto id = [&](int a, int b, int c, int d) {
    return ((static_cast<std::size_t>(a) * xb + b) * yb + c) * yb + d;
  };
  const std::size_t cells = static_cast<std::size_t>(xb) * xb * yb * yb;
  std::vector<Size> best(cells, -1);                     // -1 = not computed
  std::vector<std::pair<int, int>> choice(cells, {-2, 0});  // axis, cut index

  auto solve = [&](auto&& self, int a, int b, int c, int d) -> Size {
    const std::size_t key = id(a, b, c, d);
    if (best[key] >= 0 || choice[key].first != -2) return best[key];
    const Size w = grid.weight(a, b, c, d);
    Size v = w >= k ? w : kInf;
    std::pair<int, int> ch{-1, 0};
    for (int axis = 0; axis < 2; ++axis) {
      const int lo = axis == 0 ? a : c;
      const int hi = axis == 0 ? b : d;
      for (int m = lo + 1; m < hi; ++m) {
        const Size l = axis == 0 ? self(self, a, m, c, d)
                                 : self(self, a, b, c, m);
        const Size r = axis == 0 ? self(self, m, b, c, d)
                                 : self(self, a, b, m, d);
        if (l == kInf || r == kInf) continue;
        const Size sub = std::max(l, r);
        if (sub < v) {
          v = sub;
          ch = {axis, m};
        }
      }
    }
    best[key] = v;
    choice[key] = ch;
    return v;
  };
  const Size cost = solve(solve, 0, nx, 0, ny);
  // A single leaf covering everything is always allowed, so cost < kInf here.

  std::vector<RectNode> nodes;
  auto build = [&](auto&& self, int a, int b, int c, int d) -> int {
    const int idx = static_cast<int>(nodes.size());
    nodes.push_back(
        RectNode{grid.rect(a, b, c, d), grid.weight(a, b, c, d), -1, 0, -1, -1});
    const auto [axis, m] = choice[id(a, b, c, d)];
    if (axis < 0) return idx;
    nodes[idx].axis = axis;
    nodes[idx].cut = grid.cut_coord(axis, m);
    int lo_child, hi_child;
    if (axis == 0) {
      lo_child = self(self, a, m, c, d);
      hi_child = self(self, m, b, c, d);
    } else {
      lo_child = self(self, a, b, c, m);
      hi_child = self(self, a, b, m, d);
    }
    nodes[idx].low = lo_child;
    nodes[idx].high = hi_child;
    return idx;
  };
  build(build, 0, nx, 0, ny);
  return GuillotineResult{cost, RectTree(std::move(nodes))};
}

}  // namespace anonykit

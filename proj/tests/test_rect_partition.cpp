#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "anonykit/rect_partition.hpp"
#include "anonykit/rng.hpp"
#include "oracles.hpp"

using namespace anonykit;
using testsupport::exact_guillotine;
using testsupport::kNoCover;
using testsupport::OraclePoint;
using testsupport::random_points;

namespace {

// Center of weight 3 plus four weight-2 neighbours: every candidate cut
// strands a side below k=3, so the whole square is one leaf of 5k-4 = 11.
WeightedPointSet degenerate_11() {
  return WeightedPointSet(
      {{0, 0, 3}, {0, 1, 2}, {0, -1, 2}, {1, 0, 2}, {-1, 0, 2}});
}

bool contains(const Rect& r, Size x, Size y) {
  return r.x_lo <= x && x < r.x_hi && r.y_lo <= y && y < r.y_hi;
}

bool overlap(const Rect& a, const Rect& b) {
  return a.x_lo < b.x_hi && b.x_lo < a.x_hi && a.y_lo < b.y_hi &&
         b.y_lo < a.y_hi;
}

// Structural audit of a partition tree against the point set it was built
// from: leaves disjoint, tiling the root by area, every point in exactly one
// leaf, stored weights matching recomputed ones.
void audit_tree(const RectTree& tree, const WeightedPointSet& pts) {
  const auto leaf_ids = tree.leaves();
  __int128 area = 0;
  for (std::size_t i = 0; i < leaf_ids.size(); ++i) {
    const Rect& r = tree.nodes()[leaf_ids[i]].rect;
    area += static_cast<__int128>(r.x_hi - r.x_lo) * (r.y_hi - r.y_lo);
    for (std::size_t j = i + 1; j < leaf_ids.size(); ++j) {
      CHECK_FALSE(overlap(r, tree.nodes()[leaf_ids[j]].rect));
    }
  }
  const Rect& root = tree.root().rect;
  CHECK(area == static_cast<__int128>(root.x_hi - root.x_lo) *
                    (root.y_hi - root.y_lo));

  Size covered = 0;
  for (int id : leaf_ids) {
    const RectNode& leaf = tree.nodes()[id];
    Size w = 0;
    for (const auto& p : pts.points()) {
      if (contains(leaf.rect, p.x, p.y)) w += p.weight;
    }
    CHECK(w == leaf.weight);
    covered += w;
  }
  CHECK(covered == pts.total_weight());
}

// True when some axis-aligned cut between two point coordinates inside the
// leaf keeps weight >= k on both sides; recomputed from raw points.
bool leaf_splittable(const RectTree& tree, int leaf_id,
                     const WeightedPointSet& pts, Size k) {
  const Rect& r = tree.nodes()[leaf_id].rect;
  std::vector<WeightedPoint> inside;
  for (const auto& p : pts.points()) {
    if (contains(r, p.x, p.y)) inside.push_back(p);
  }
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<Size> coords;
    for (const auto& p : inside) coords.push_back(axis == 0 ? p.x : p.y);
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
      Size lo = 0, hi = 0;
      for (const auto& p : inside) {
        ((axis == 0 ? p.x : p.y) <= coords[i] ? lo : hi) += p.weight;
      }
      if (lo >= k && hi >= k) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("point sets merge duplicates and validate weights") {
  const WeightedPointSet pts({{1, 1, 2}, {0, 0, 1}, {1, 1, 3}});
  CHECK(pts.n() == 2);
  CHECK(pts.merged_duplicates() == 1);
  CHECK(pts.total_weight() == 6);
  CHECK(pts.points()[0].x == 0);  // canonical (x, y) order
  CHECK(pts.points()[1].weight == 5);

  CHECK_THROWS_AS(WeightedPointSet({}), Error);
  CHECK_THROWS_AS(WeightedPointSet({{0, 0, 0}}), Error);
  CHECK_THROWS_AS(WeightedPointSet({{0, 0, -2}}), Error);
}

TEST_CASE("kd partition worked examples") {
  const auto degen = kd_partition(degenerate_11(), 3);
  CHECK(degen.leaf_count() == 1);
  CHECK(degen.cost() == 11);
  audit_tree(degen, degenerate_11());

  const WeightedPointSet two({{0, 0, 3}, {10, 0, 3}});
  const auto split = kd_partition(two, 3);
  CHECK(split.leaf_count() == 2);
  CHECK(split.cost() == 3);
  CHECK(split.root().axis == 0);
  audit_tree(split, two);

  const WeightedPointSet one({{5, 5, 3}});
  const auto single = kd_partition(one, 3);
  CHECK(single.leaf_count() == 1);
  CHECK(single.cost() == 3);

  CHECK_THROWS_AS(kd_partition(one, 4), Error);  // total below k
}

TEST_CASE("rect tree constructor rejects malformed trees") {
  // Children failing to tile their parent.
  std::vector<RectNode> bad;
  bad.push_back({{0, 10, 0, 10}, 6, 0, 5, 1, 2});
  bad.push_back({{0, 5, 0, 10}, 3, -1, 0, -1, -1});
  bad.push_back({{5, 9, 0, 10}, 3, -1, 0, -1, -1});  // x_hi should be 10
  CHECK_THROWS_AS(RectTree(std::move(bad)), Error);

  std::vector<RectNode> weights_off;
  weights_off.push_back({{0, 10, 0, 10}, 6, 0, 5, 1, 2});
  weights_off.push_back({{0, 5, 0, 10}, 3, -1, 0, -1, -1});
  weights_off.push_back({{5, 10, 0, 10}, 4, -1, 0, -1, -1});
  CHECK_THROWS_AS(RectTree(std::move(weights_off)), Error);

  std::vector<RectNode> empty_rect;
  empty_rect.push_back({{0, 0, 0, 10}, 1, -1, 0, -1, -1});
  CHECK_THROWS_AS(RectTree(std::move(empty_rect)), Error);
}

TEST_CASE("guillotine_optimal worked examples") {
  CHECK(guillotine_optimal(degenerate_11(), 3).cost == 11);

  const WeightedPointSet corners({{0, 0, 3}, {0, 9, 3}, {9, 0, 3}, {9, 9, 3}});
  const auto quad = guillotine_optimal(corners, 3);
  CHECK(quad.cost == 3);
  CHECK(quad.tree.leaf_count() == 4);
  audit_tree(quad.tree, corners);

  // Collinear 2,2,2 with k=3: both cut positions strand a lone 2.
  const WeightedPointSet line({{0, 0, 2}, {1, 0, 2}, {2, 0, 2}});
  CHECK(guillotine_optimal(line, 3).cost == 6);

  std::vector<WeightedPoint> wide;
  for (int i = 0; i < 13; ++i) wide.push_back({i, 0, 1});
  CHECK_THROWS_AS(guillotine_optimal(WeightedPointSet(wide), 2), Error);
  try {
    guillotine_optimal(WeightedPointSet(wide), 2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("kd partition properties on random point sets") {
  SplitMix64 rng(271828u);
  int checked = 0;
  while (checked < 150) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const auto raw = random_points(rng, n, 10, 1, 6);
    std::vector<WeightedPoint> input;
    for (const auto& p : raw) input.push_back({p.x, p.y, p.w});
    const WeightedPointSet pts(std::move(input));
    const Size k = 1 + static_cast<Size>(rng.below(8));
    if (pts.total_weight() < k) continue;
    ++checked;

    const RectTree tree = kd_partition(pts, k);
    audit_tree(tree, pts);
    for (int leaf : tree.leaves()) {
      CHECK(tree.nodes()[leaf].weight >= k);
      CHECK_FALSE(leaf_splittable(tree, leaf, pts, k));
    }

    const GuillotineResult best = guillotine_optimal(pts, k);
    audit_tree(best.tree, pts);
    CHECK(best.tree.cost() == best.cost);
    CHECK(tree.cost() >= best.cost);
    CHECK(tree.cost() <= 5 * best.cost);
    const Size kappa = std::max(k, pts.total_weight() > 0
                                       ? std::max_element(
                                             pts.points().begin(),
                                             pts.points().end(),
                                             [](const auto& a, const auto& b) {
                                               return a.weight < b.weight;
                                             })
                                             ->weight
                                       : k);
    CHECK(best.cost >= kappa);
  }
}

TEST_CASE("guillotine_optimal agrees with the naive recursion") {
  SplitMix64 rng(141421u);
  int checked = 0;
  while (checked < 60) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const auto raw = random_points(rng, n, 8, 1, 5);
    const Size k = 1 + static_cast<Size>(rng.below(7));
    Size total = 0;
    for (const auto& p : raw) total += p.w;
    if (total < k) continue;
    ++checked;

    // Merge duplicates for the oracle the same way the point set does.
    std::vector<WeightedPoint> input;
    for (const auto& p : raw) input.push_back({p.x, p.y, p.w});
    const WeightedPointSet pts(std::move(input));
    std::vector<OraclePoint> merged;
    for (const auto& p : pts.points()) merged.push_back({p.x, p.y, p.weight});

    const Size naive = exact_guillotine(merged, k);
    REQUIRE(naive != kNoCover);
    CHECK(guillotine_optimal(pts, k).cost == naive);
  }
}

TEST_CASE("partition trees are deterministic") {
  const WeightedPointSet pts(
      {{0, 0, 2}, {3, 1, 2}, {1, 4, 2}, {4, 4, 2}, {2, 2, 1}});
  const auto a = kd_partition(pts, 3);
  const auto b = kd_partition(pts, 3);
  REQUIRE(a.nodes().size() == b.nodes().size());
  for (std::size_t i = 0; i < a.nodes().size(); ++i) {
    CHECK(a.nodes()[i].rect == b.nodes()[i].rect);
    CHECK(a.nodes()[i].weight == b.nodes()[i].weight);
  }
}

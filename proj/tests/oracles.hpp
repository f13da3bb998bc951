#pragma once

// Brute-force reference solvers and instance generators used only by tests.
// The solvers here deliberately share no code or strategy with the library:
// they enumerate set partitions as restricted growth strings, or recurse on
// raw point lists, so agreement with the library is meaningful evidence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "anonykit/core.hpp"
#include "anonykit/rng.hpp"

namespace testsupport {

using anonykit::Size;

inline constexpr Size kNoCover = -1;

// Minimum over all set partitions with every block total >= k of the maximum
// block total; kNoCover when no such partition exists. Exponential, n <= 9.
inline Size exact_cover_by_partitions(const std::vector<Size>& sizes, Size k) {
  const int n = static_cast<int>(sizes.size());
  std::vector<int> block(n, 0);
  Size best = kNoCover;
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::vector<Size> level(used, 0);
      for (int j = 0; j < n; ++j) level[block[j]] += sizes[j];
      Size mx = 0;
      for (Size l : level) {
        if (l < k) return;
        mx = std::max(mx, l);
      }
      if (best == kNoCover || mx < best) best = mx;
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return best;
}

// Same enumeration, restricted to blocks that are connected under adj.
inline Size exact_connected_by_partitions(
    const std::vector<std::vector<int>>& adj, const std::vector<Size>& weights,
    Size k) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> block(n, 0);
  Size best = kNoCover;
  auto block_connected = [&](int b, int used) {
    (void)used;
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (block[v] == b) members.push_back(v);
    }
    std::vector<char> in(n, 0), seen(n, 0);
    for (int v : members) in[v] = 1;
    std::vector<int> queue{members[0]};
    seen[members[0]] = 1;
    std::size_t reached = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int w : adj[queue[h]]) {
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    return reached == members.size();
  };
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::vector<Size> level(used, 0);
      for (int j = 0; j < n; ++j) level[block[j]] += weights[j];
      Size mx = 0;
      for (Size l : level) {
        if (l < k) return;
        mx = std::max(mx, l);
      }
      for (int b = 0; b < used; ++b) {
        if (!block_connected(b, used)) return;
      }
      if (best == kNoCover || mx < best) best = mx;
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return best;
}

struct OraclePoint {
  Size x = 0, y = 0, w = 0;
};

// Minimum over all recursive axis-aligned cuttings (every leaf >= k) of the
// maximum leaf weight, recursing directly on point lists with no memoization
// and no coordinate compression. Exponential, <= 9 points.
inline Size exact_guillotine(const std::vector<OraclePoint>& pts, Size k) {
  Size total = 0;
  for (const auto& p : pts) total += p.w;
  Size best = total >= k ? total : kNoCover;

  auto try_axis = [&](auto key) {
    std::vector<Size> coords;
    for (const auto& p : pts) coords.push_back(key(p));
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
      std::vector<OraclePoint> lo, hi;
      for (const auto& p : pts) {
        (key(p) <= coords[i] ? lo : hi).push_back(p);
      }
      const Size a = exact_guillotine(lo, k);
      if (a == kNoCover) continue;
      const Size b = exact_guillotine(hi, k);
      if (b == kNoCover) continue;
      const Size cand = std::max(a, b);
      if (best == kNoCover || cand < best) best = cand;
    }
  };
  try_axis([](const OraclePoint& p) { return p.x; });
  try_axis([](const OraclePoint& p) { return p.y; });
  return best;
}

// --- deterministic generators ---------------------------------------------

inline std::vector<Size> random_sizes(anonykit::SplitMix64& rng, int n,
                                      Size lo, Size hi) {
  std::vector<Size> sizes(n);
  for (auto& s : sizes) {
    s = lo + static_cast<Size>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  return sizes;
}

// Random spanning tree plus a few extra edges; always connected and simple.
inline std::vector<std::pair<int, int>> random_connected_edges(
    anonykit::SplitMix64& rng, int n, int extra) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.below(v));
    edges.emplace_back(u, v);
    have[u][v] = have[v][u] = 1;
  }
  for (int t = 0; t < extra; ++t) {
    const int u = static_cast<int>(rng.below(n));
    const int v = static_cast<int>(rng.below(n));
    if (u == v || have[u][v]) continue;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    have[u][v] = have[v][u] = 1;
  }
  return edges;
}

inline std::vector<OraclePoint> random_points(anonykit::SplitMix64& rng, int n,
                                              Size coord_range, Size w_lo,
                                              Size w_hi) {
  std::vector<OraclePoint> pts(n);
  for (auto& p : pts) {
    p.x = static_cast<Size>(rng.below(static_cast<std::uint64_t>(coord_range)));
    p.y = static_cast<Size>(rng.below(static_cast<std::uint64_t>(coord_range)));
    p.w = w_lo +
          static_cast<Size>(rng.below(static_cast<std::uint64_t>(w_hi - w_lo + 1)));
  }
  return pts;
}

}  // namespace testsupport

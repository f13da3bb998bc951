#include "anonykit/tree_partition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>

namespace anonykit {

namespace {

std::pair<int, int> norm_edge(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<std::pair<int, int>> edges,
                             std::vector<Size> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n_ < 1) {
    fail(errc::precondition_violated, "graph needs at least one vertex");
  }
  if (static_cast<int>(weights_.size()) != n_) {
    fail(errc::precondition_violated,
         "expected " + std::to_string(n_) + " vertex weights, got " +
             std::to_string(weights_.size()));
  }
  __int128 total = 0;
  for (Size w : weights_) {
    if (w < 0) {
      fail(errc::precondition_violated, "vertex weights must be >= 0");
    }
    total += w;
  }
  if (total > static_cast<__int128>(std::numeric_limits<Size>::max())) {
    fail(errc::too_large, "total vertex weight overflows 64-bit range");
  }
  total_ = static_cast<Size>(total);

  std::set<std::pair<int, int>> seen;
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      fail(errc::precondition_violated, "edge endpoint out of range");
    }
    if (u == v) {
      fail(errc::precondition_violated,
           "self-loop at vertex " + std::to_string(u));
    }
    if (!seen.insert(norm_edge(u, v)).second) {
      fail(errc::precondition_violated, "duplicate edge " + std::to_string(u) +
                                            "-" + std::to_string(v));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
}

bool WeightedGraph::connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int v : adj_[queue[h]]) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return static_cast<int>(queue.size()) == n_;
}

SpanningTree::SpanningTree(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (static_cast<int>(edges_.size()) != n_ - 1) {
    fail(errc::precondition_violated,
         "a spanning tree of " + std::to_string(n_) + " vertices needs " +
             std::to_string(n_ - 1) + " edges");
  }
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (const auto& nbrs : adj_) {
    degree_ = std::max(degree_, static_cast<int>(nbrs.size()));
  }
}

SpanningTree build_spanning_tree(const WeightedGraph& g) {
  const int n = g.n();
  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    for (int v : g.adjacency()[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    fail(errc::disconnected, "graph is not connected");
  }
  if (n == 1) return SpanningTree(1, {});

  std::set<std::pair<int, int>> tree;
  std::vector<std::set<int>> tadj(n);
  std::vector<int> deg(n, 0);
  auto link = [&](int u, int v) {
    tree.insert(norm_edge(u, v));
    tadj[u].insert(v);
    tadj[v].insert(u);
    ++deg[u];
    ++deg[v];
  };
  auto unlink = [&](int u, int v) {
    tree.erase(norm_edge(u, v));
    tadj[u].erase(v);
    tadj[v].erase(u);
    --deg[u];
    --deg[v];
  };
  for (int v = 1; v < n; ++v) link(parent[v], v);

  // Swap non-tree edges in while that removes a tree edge at a maximum-degree
  // vertex. Each swap strictly lowers the sorted degree sequence, so the loop
  // terminates on its own.
  for (;;) {
    const int max_deg = *std::max_element(deg.begin(), deg.end());
    if (max_deg <= 2) break;

    std::vector<std::pair<int, int>> nontree;
    for (const auto& [u, v] : g.edges()) {
      const auto e = norm_edge(u, v);
      if (!tree.count(e)) nontree.push_back(e);
    }
    std::sort(nontree.begin(), nontree.end());

    bool moved = false;
    for (const auto& [u, v] : nontree) {
      if (deg[u] > max_deg - 2 || deg[v] > max_deg - 2) continue;
      // Tree path from u to v.
      std::vector<int> from(n, -1);
      std::vector<int> bfs{u};
      from[u] = u;
      for (std::size_t h = 0; h < bfs.size() && from[v] < 0; ++h) {
        for (int w : tadj[bfs[h]]) {
          if (from[w] < 0) {
            from[w] = bfs[h];
            bfs.push_back(w);
          }
        }
      }
      std::vector<int> path;
      for (int w = v; w != u; w = from[w]) path.push_back(w);
      path.push_back(u);
      std::reverse(path.begin(), path.end());
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (deg[path[i]] == max_deg) {
          unlink(path[i - 1], path[i]);
          link(u, v);
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (!moved) break;
  }
  return SpanningTree(n, {tree.begin(), tree.end()});
}

SpanningTree validate_supplied_tree(const WeightedGraph& g,
                                    std::vector<std::pair<int, int>> edges) {
  const int n = g.n();
  if (static_cast<int>(edges.size()) != n - 1) {
    fail(errc::invalid_supplied_tree,
         "supplied tree has " + std::to_string(edges.size()) + " edges, need " +
             std::to_string(n - 1));
  }
  std::set<std::pair<int, int>> graph_edges;
  for (const auto& [u, v] : g.edges()) graph_edges.insert(norm_edge(u, v));

  std::set<std::pair<int, int>> tree;
  for (auto& [u, v] : edges) {
    const auto e = norm_edge(u, v);
    if (!graph_edges.count(e)) {
      fail(errc::invalid_supplied_tree,
           "supplied tree edge " + std::to_string(u) + "-" + std::to_string(v) +
               " is not a graph edge");
    }
    if (!tree.insert(e).second) {
      fail(errc::invalid_supplied_tree, "supplied tree repeats an edge");
    }
  }
  // n-1 distinct edges span iff they connect everything.
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : tree) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int v : adj[queue[h]]) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    fail(errc::invalid_supplied_tree, "supplied tree does not span the graph");
  }
  return SpanningTree(n, {tree.begin(), tree.end()});
}

Size GraphPartition::cost() const {
  return *std::max_element(part_weights.begin(), part_weights.end());
}

GraphPartition split_tree(const SpanningTree& tree,
                          std::span<const Size> weights, Size k) {
  const int n = tree.n();
  if (static_cast<int>(weights.size()) != n) {
    fail(errc::precondition_violated, "weight count does not match the tree");
  }
  if (k < 1) fail(errc::precondition_violated, "k must be >= 1");
  Size total = 0;
  Size max_weight = 0;
  for (Size w : weights) {
    if (w < 0) fail(errc::precondition_violated, "weights must be >= 0");
    total += w;
    max_weight = std::max(max_weight, w);
  }
  if (total < k) {
    fail(errc::infeasible_total,
         "total weight " + std::to_string(total) + " is below k=" +
             std::to_string(k));
  }

  GraphPartition out;
  out.k = k;
  out.kappa = std::max(k, max_weight);
  out.tree_degree = tree.degree();

  std::vector<char> alive(n, 1);
  Size alive_total = total;
  int alive_count = n;

  std::vector<int> parent(n), dfs_order(n), subtree_start;
  std::vector<Size> below(n);

  for (;;) {
    // Root the remaining subtree at its smallest vertex and compute subtree
    // weights below every edge.
    int root = 0;
    while (!alive[root]) ++root;
    std::vector<int> order;
    order.reserve(alive_count);
    parent[root] = -1;
    order.push_back(root);
    for (std::size_t h = 0; h < order.size(); ++h) {
      const int u = order[h];
      for (int v : tree.adjacency()[u]) {
        if (alive[v] && v != parent[u]) {
          parent[v] = u;
          order.push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      below[*it] = weights[*it];
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (parent[*it] >= 0) below[parent[*it]] += below[*it];
    }

    // Pick the feasible cut with the lightest split-off side; ties prefer
    // the lexicographically smallest edge, then the side away from the root.
    Size best_lighter = std::numeric_limits<Size>::max();
    std::pair<int, int> best_key{0, 0};
    int best_child = -1;
    bool emit_child_side = true;
    for (int v : order) {
      if (parent[v] < 0) continue;
      const Size wb = below[v];
      const Size wr = alive_total - wb;
      if (wb < k || wr < k) continue;
      const Size lighter = std::min(wb, wr);
      const auto key = norm_edge(parent[v], v);
      if (lighter < best_lighter ||
          (lighter == best_lighter && key < best_key)) {
        best_lighter = lighter;
        best_key = key;
        best_child = v;
        emit_child_side = wb <= wr;
      }
    }

    if (best_child < 0) {
      std::vector<int> part;
      part.reserve(alive_count);
      for (int v = 0; v < n; ++v) {
        if (alive[v]) part.push_back(v);
      }
      out.parts.push_back(std::move(part));
      out.part_weights.push_back(alive_total);
      return out;
    }

    // Collect the subtree below the cut edge.
    std::vector<int> side{best_child};
    for (std::size_t h = 0; h < side.size(); ++h) {
      for (int v : tree.adjacency()[side[h]]) {
        if (alive[v] && parent[v] == side[h]) side.push_back(v);
      }
    }
    std::vector<int> emitted;
    if (emit_child_side) {
      emitted = side;
    } else {
      std::vector<char> in_side(n, 0);
      for (int v : side) in_side[v] = 1;
      for (int v = 0; v < n; ++v) {
        if (alive[v] && !in_side[v]) emitted.push_back(v);
      }
    }
    std::sort(emitted.begin(), emitted.end());
    Size emitted_weight = 0;
    for (int v : emitted) {
      emitted_weight += weights[v];
      alive[v] = 0;
    }
    alive_count -= static_cast<int>(emitted.size());
    alive_total -= emitted_weight;
    out.parts.push_back(std::move(emitted));
    out.part_weights.push_back(emitted_weight);
  }
}

GraphPartition partition_graph(const WeightedGraph& g, Size k,
                               const SpanningTree* supplied_tree) {
  const SpanningTree tree = supplied_tree
                                ? validate_supplied_tree(g, supplied_tree->edges())
                                : build_spanning_tree(g);
  return split_tree(tree, g.weights(), k);
}

ExactGraphResult exact_connected_partition(const WeightedGraph& g, Size k) {
  const int n = g.n();
  if (n > 12) {
    fail(errc::too_large,
         "exact partition handles at most 12 vertices, got " +
             std::to_string(n));
  }
  if (!g.connected()) fail(errc::disconnected, "graph is not connected");
  if (k < 1) fail(errc::precondition_violated, "k must be >= 1");
  if (g.total_weight() < k) {
    fail(errc::infeasible_total,
         "total weight " + std::to_string(g.total_weight()) +
             " is below k=" + std::to_string(k));
  }

  const int full = (1 << n) - 1;
  std::vector<Size> weight(full + 1, 0);
  for (int mask = 1; mask <= full; ++mask) {
    const int low = mask & -mask;
    weight[mask] =
        weight[mask ^ low] + g.weight(std::countr_zero(static_cast<unsigned>(mask)));
  }
  std::vector<char> conn(full + 1, 0);
  for (int mask = 1; mask <= full; ++mask) {
    const int start = std::countr_zero(static_cast<unsigned>(mask));
    int reach = 1 << start;
    std::vector<int> queue{start};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int v : g.adjacency()[queue[h]]) {
        if ((mask >> v & 1) && !(reach >> v & 1)) {
          reach |= 1 << v;
          queue.push_back(v);
        }
      }
    }
    conn[mask] = (reach == mask);
  }

  const Size INF = std::numeric_limits<Size>::max();
  std::vector<Size> f(full + 1, INF);
  std::vector<int> choice(full + 1, 0);
  f[0] = 0;
  for (int mask = 1; mask <= full; ++mask) {
    const int low = mask & -mask;
    for (int sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || !conn[sub] || weight[sub] < k) continue;
      const Size rest = f[mask ^ sub];
      if (rest == INF) continue;
      const Size cand = std::max(weight[sub], rest);
      if (cand < f[mask]) {
        f[mask] = cand;
        choice[mask] = sub;
      }
    }
  }
  if (f[full] == INF) {
    // Cannot happen for a connected graph with total >= k (the whole vertex
    // set is always one feasible part), but keep the failure honest.
    fail(errc::infeasible_total, "no feasible connected partition");
  }

  ExactGraphResult out;
  out.cost = f[full];
  for (int mask = full; mask;) {
    const int sub = choice[mask];
    std::vector<int> part;
    for (int v = 0; v < n; ++v) {
      if (sub >> v & 1) part.push_back(v);
    }
    out.parts.push_back(std::move(part));
    mask ^= sub;
  }
  return out;
}

}  // namespace anonykit

#ifndef ANONYKIT_TREE_PARTITION_HPP
#define ANONYKIT_TREE_PARTITION_HPP

#include <span>
#include <optional>
#include <utility>
#include <vector>

#include "anonykit/core.hpp"

namespace anonykit {

// Connected vertex-weighted graph. Edges are undirected, simple and 0-based;
// weights may be zero (a zero-weight vertex still has to land in some part).
// Planarity is neither required nor verified: the partitioning below is valid
// for any connected graph, only the degree of the spanning tree it finds may
// differ from what a planar-specific construction would give.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<std::pair<int, int>> edges,
                std::vector<Size> weights);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Size>& weights() const { return weights_; }
  Size weight(int v) const { return weights_[v]; }
  Size total_weight() const { return total_; }
  // Neighbour lists in input edge order.
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  bool connected() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Size> weights_;
  std::vector<std::vector<int>> adj_;
  Size total_ = 0;
};

// Spanning tree of a graph, tracked by its edge set; degree() is the maximum
// vertex degree d, which parameterizes every bound downstream.
class SpanningTree {
 public:
  SpanningTree(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  int degree() const { return degree_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  int degree_ = 0;
};

// BFS spanning tree followed by degree-reducing edge swaps: while some vertex
// has maximum degree D, look for a non-tree edge whose endpoints have degree
// at most D-2 and whose tree path crosses a degree-D vertex; swapping it in
// strictly lowers the sorted degree sequence, so the search terminates. Low
// degree is a heuristic goal here, not a guarantee - all bounds are stated in
// terms of the degree actually achieved. Throws `disconnected` when the graph
// has unreachable vertices.
SpanningTree build_spanning_tree(const WeightedGraph& g);

// Wraps a caller-supplied tree after checking it is a spanning tree of g
// using only edges of g (invalid_supplied_tree otherwise).
SpanningTree validate_supplied_tree(const WeightedGraph& g,
                                    std::vector<std::pair<int, int>> edges);

// Connected partition with the certified size bound attached. Parts appear in
// emission order; the final (uncuttable) remainder is always last.
struct GraphPartition {
  std::vector<std::vector<int>> parts;  // sorted vertex lists
  std::vector<Size> part_weights;
  Size k = 0;
  Size kappa = 0;     // max(k, largest vertex weight)
  int tree_degree = 0;

  // Certified bound on every part: kappa + d*(k-1). Non-final parts obey the
  // tighter kappa + (d-1)*(k-1).
  Size bound() const { return kappa + static_cast<Size>(tree_degree) * (k - 1); }
  Size cost() const;
};

// Repeatedly cuts the tree edge that splits off the lightest feasible part:
// an edge qualifies when both sides weigh at least k, and the lighter side is
// emitted (ties: smallest (min endpoint, max endpoint) edge, then the side
// away from the smallest remaining vertex). When no edge qualifies the
// remainder becomes the final part. Requires total weight >= k.
GraphPartition split_tree(const SpanningTree& tree,
                          std::span<const Size> weights, Size k);

// Convenience composition: spanning tree (built or supplied) + split_tree.
GraphPartition partition_graph(const WeightedGraph& g, Size k,
                               const SpanningTree* supplied_tree = nullptr);

// Optimal connected min-max partition by dynamic programming over vertex
// subsets (parts must induce connected subgraphs and weigh >= k). Exponential;
// rejects more than 12 vertices with too_large.
struct ExactGraphResult {
  Size cost = 0;
  std::vector<std::vector<int>> parts;
};

ExactGraphResult exact_connected_partition(const WeightedGraph& g, Size k);

}  // namespace anonykit

#endif  // ANONYKIT_TREE_PARTITION_HPP

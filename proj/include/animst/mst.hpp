#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "animst/graph.hpp"

namespace animst {

struct Adjacent {
  Vertex vertex = 0;
  double weight = 0.0;
};

/// A validated spanning tree: k - 1 edges, connected, acyclic.
class SpanningTree {
 public:
  /// Throws a validation error if `edges` is not a spanning tree on k
  /// vertices. Edge order is preserved.
  static SpanningTree from_edges(std::size_t k, std::vector<WeightedEdge> edges);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  std::span<const Adjacent> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  double total_weight() const noexcept { return total_weight_; }

 private:
  SpanningTree() = default;

  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<Adjacent>> adjacency_;
  double total_weight_ = 0.0;
};

/// Kruskal's algorithm. Edges are sorted by (w, u, v) so the result is the
/// same for any input order. Throws a computation error naming the number
/// of components when the edges do not connect all k vertices.
SpanningTree kruskal(std::size_t k, std::vector<WeightedEdge> edges);

// Tree file layout (little-endian):
//
//   offset  size     field
//   0       8        magic "ANMSTTRE"
//   8       1        version (1)
//   9       3        reserved, zero
//   12      4        u32 k
//   16      8        f64 total weight
//   24      16*(k-1) edges in Kruskal acceptance order: u32 u, u32 v, f64 w
void save_tree(const std::filesystem::path& path, const SpanningTree& tree);
SpanningTree load_tree(const std::filesystem::path& path);

}  // namespace animst

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "animst/mst.hpp"

namespace animst {

struct NeighborResult {
  std::string id;
  double delta = 0.0;
};

struct NearestResult {
  std::string id;
  std::size_t hops = 0;
};

struct PathResult {
  std::string from;
  std::string to;
  std::size_t hops = 0;
  std::vector<std::string> via;  // intermediate vertices, in walk order
};

/// Recommendation queries over a spanning tree whose vertices carry ids.
/// Distances are tree hops; unknown ids raise a usage error naming the id.
class TreeQuery {
 public:
  TreeQuery(SpanningTree tree, std::vector<std::string> ids);

  const SpanningTree& tree() const noexcept { return tree_; }
  std::size_t index_of(std::string_view id) const;

  /// Tree-adjacent items ordered by (delta, id).
  std::vector<NeighborResult> neighbors(std::string_view id) const;
  PathResult path(std::string_view from, std::string_view to) const;
  /// The `count` closest other items ordered by (hops, id).
  std::vector<NearestResult> k_nearest(std::string_view id,
                                       std::size_t count) const;
  /// Hop distance from `source` to every vertex.
  std::vector<std::size_t> hops_from(std::size_t source) const;

 private:
  SpanningTree tree_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace animst

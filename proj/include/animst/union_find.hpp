#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "animst/graph.hpp"

namespace animst {

/// Disjoint-set forest with path compression and union by rank.
///
/// Vertices must be registered with make_set before find/unite; touching
/// an unregistered vertex throws a contract error.
class DisjointSet {
 public:
  DisjointSet() = default;
  /// Registers vertices 0..n-1.
  explicit DisjointSet(std::size_t n);

  void make_set(Vertex v);
  bool contains(Vertex v) const noexcept;

  Vertex find(Vertex v);
  /// Merges the sets of u and v. Returns false if they were already joined.
  bool unite(Vertex u, Vertex v);

  std::size_t set_count() const noexcept { return sets_; }

 private:
  static constexpr Vertex kUnregistered = ~Vertex{0};

  void require(Vertex v) const;

  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_ = 0;
};

}  // namespace animst

#pragma once

#include <cstdint>
#include <utility>

namespace animst {

using Vertex = std::uint32_t;

/// Undirected edge with u < v and a finite non-negative weight.
struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

inline WeightedEdge make_edge(Vertex a, Vertex b, double w) {
  if (b < a) std::swap(a, b);
  return {a, b, w};
}

/// Total order used by Kruskal: weight first, then endpoints.
inline bool edge_less(const WeightedEdge& a, const WeightedEdge& b) {
  if (a.w != b.w) return a.w < b.w;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

}  // namespace animst

#include "animst/union_find.hpp"

#include <string>
#include <utility>

#include "animst/error.hpp"

namespace animst {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
  for (std::size_t v = 0; v < n; ++v) parent_[v] = static_cast<Vertex>(v);
}

void DisjointSet::make_set(Vertex v) {
  if (v == kUnregistered) throw Error(ErrorKind::contract, "vertex id out of range");
  if (v >= parent_.size()) {
    parent_.resize(static_cast<std::size_t>(v) + 1, kUnregistered);
    rank_.resize(parent_.size(), 0);
  }
  if (parent_[v] != kUnregistered) return;
  parent_[v] = v;
  ++sets_;
}

bool DisjointSet::contains(Vertex v) const noexcept {
  return v < parent_.size() && parent_[v] != kUnregistered;
}

void DisjointSet::require(Vertex v) const {
  if (!contains(v))
    throw Error(ErrorKind::contract, "vertex " + std::to_string(v) + " was never registered");
}

Vertex DisjointSet::find(Vertex v) {
  require(v);
  Vertex root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) v = std::exchange(parent_[v], root);
  return root;
}

bool DisjointSet::unite(Vertex u, Vertex v) {
  Vertex a = find(u);
  Vertex b = find(v);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

}  // namespace animst

#include "animst/query.hpp"

#include <algorithm>

#include "animst/error.hpp"

namespace animst {

TreeQuery::TreeQuery(SpanningTree tree, std::vector<std::string> ids)
    : tree_(std::move(tree)), ids_(std::move(ids)) {
  if (ids_.size() != tree_.size())
    throw Error(ErrorKind::validation, "tree has " + std::to_string(tree_.size()) +
                                           " vertices but " + std::to_string(ids_.size()) +
                                           " ids were given");
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second)
      throw Error(ErrorKind::validation, "duplicate id '" + ids_[i] + "'");
  }
}

std::size_t TreeQuery::index_of(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) throw Error(ErrorKind::usage, "unknown id '" + std::string(id) + "'");
  return it->second;
}

std::vector<NeighborResult> TreeQuery::neighbors(std::string_view id) const {
  std::vector<NeighborResult> out;
  for (const auto& a : tree_.neighbors(static_cast<Vertex>(index_of(id))))
    out.push_back({ids_[a.vertex], a.weight});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.delta != b.delta ? a.delta < b.delta : a.id < b.id;
  });
  return out;
}

std::vector<std::size_t> TreeQuery::hops_from(std::size_t source) const {
  constexpr auto kUnseen = ~std::size_t{0};
  std::vector<std::size_t> hops(tree_.size(), kUnseen);
  std::vector<Vertex> queue{static_cast<Vertex>(source)};
  hops[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (const auto& a : tree_.neighbors(v)) {
      if (hops[a.vertex] != kUnseen) continue;
      hops[a.vertex] = hops[v] + 1;
      queue.push_back(a.vertex);
    }
  }
  return hops;
}

PathResult TreeQuery::path(std::string_view from, std::string_view to) const {
  const auto source = index_of(from);
  const auto target = index_of(to);
  PathResult result{std::string(from), std::string(to), 0, {}};
  if (source == target) return result;

  // Walk back from the target along strictly decreasing hop counts.
  const auto hops = hops_from(source);
  result.hops = hops[target];
  std::vector<std::string> reversed;
  std::size_t v = target;
  while (hops[v] > 1) {
    for (const auto& a : tree_.neighbors(static_cast<Vertex>(v))) {
      if (hops[a.vertex] + 1 == hops[v]) {
        v = a.vertex;
        break;
      }
    }
    reversed.push_back(ids_[v]);
  }
  result.via.assign(reversed.rbegin(), reversed.rend());
  return result;
}

std::vector<NearestResult> TreeQuery::k_nearest(std::string_view id, std::size_t count) const {
  const auto source = index_of(id);
  const auto hops = hops_from(source);
  std::vector<NearestResult> all;
  all.reserve(tree_.size() - 1);
  for (std::size_t v = 0; v < tree_.size(); ++v) {
    if (v != source) all.push_back({ids_[v], hops[v]});
  }
  const auto by_hops_then_id = [](const auto& a, const auto& b) {
    return a.hops != b.hops ? a.hops < b.hops : a.id < b.id;
  };
  const auto n = std::min(count, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n), all.end(),
                    by_hops_then_id);
  all.resize(n);
  return all;
}

}  // namespace animst

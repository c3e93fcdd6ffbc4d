#include "animst/mst.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>

#include "animst/error.hpp"
#include "animst/union_find.hpp"
#include "binary_io.hpp"

namespace animst {
namespace {

constexpr std::array<char, 8> kTreeMagic = {'A', 'N', 'M', 'S', 'T', 'T', 'R', 'E'};
constexpr std::uint8_t kTreeVersion = 1;

void check_edge(const WeightedEdge& e, std::size_t k) {
  if (!(e.u < e.v) || e.v >= k)
    throw Error(ErrorKind::validation, "edge (" + std::to_string(e.u) + ", " +
                                           std::to_string(e.v) + ") is not a valid pair on " +
                                           std::to_string(k) + " vertices");
  if (!std::isfinite(e.w) || e.w < 0.0)
    throw Error(ErrorKind::validation, "edge (" + std::to_string(e.u) + ", " +
                                           std::to_string(e.v) + ") has invalid weight");
}

}  // namespace

SpanningTree SpanningTree::from_edges(std::size_t k, std::vector<WeightedEdge> edges) {
  if (k < 2) throw Error(ErrorKind::validation, "a spanning tree needs at least 2 vertices");
  if (edges.size() != k - 1)
    throw Error(ErrorKind::validation, "spanning tree on " + std::to_string(k) +
                                           " vertices needs " + std::to_string(k - 1) +
                                           " edges, got " + std::to_string(edges.size()));
  DisjointSet sets(k);
  SpanningTree tree;
  tree.adjacency_.resize(k);
  for (const auto& e : edges) {
    check_edge(e, k);
    if (!sets.unite(e.u, e.v))
      throw Error(ErrorKind::validation, "edge (" + std::to_string(e.u) + ", " +
                                             std::to_string(e.v) + ") closes a cycle");
    tree.adjacency_[e.u].push_back({e.v, e.w});
    tree.adjacency_[e.v].push_back({e.u, e.w});
    tree.total_weight_ += e.w;
  }
  tree.edges_ = std::move(edges);
  return tree;
}

SpanningTree kruskal(std::size_t k, std::vector<WeightedEdge> edges) {
  if (k < 2) throw Error(ErrorKind::validation, "a spanning tree needs at least 2 vertices");
  for (const auto& e : edges) check_edge(e, k);
  std::sort(edges.begin(), edges.end(), edge_less);

  DisjointSet sets(k);
  std::vector<WeightedEdge> chosen;
  chosen.reserve(k - 1);
  for (const auto& e : edges) {
    if (sets.unite(e.u, e.v)) {
      chosen.push_back(e);
      if (chosen.size() == k - 1) break;
    }
  }
  if (sets.set_count() != 1)
    throw Error(ErrorKind::computation,
                "graph not connected: " + std::to_string(sets.set_count()) + " components");
  return SpanningTree::from_edges(k, std::move(chosen));
}

void save_tree(const std::filesystem::path& path, const SpanningTree& tree) {
  std::vector<unsigned char> bytes(kTreeMagic.begin(), kTreeMagic.end());
  bytes.push_back(kTreeVersion);
  bytes.insert(bytes.end(), 3, 0);
  detail::put_u32(bytes, static_cast<std::uint32_t>(tree.size()));
  detail::put_f64(bytes, tree.total_weight());
  for (const auto& e : tree.edges()) {
    detail::put_u32(bytes, e.u);
    detail::put_u32(bytes, e.v);
    detail::put_f64(bytes, e.w);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::io, "cannot write tree file '" + path.string() + "'");
}

SpanningTree load_tree(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open tree file '" + path.string() + "'");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  auto bad = [&](const std::string& what) {
    return Error(ErrorKind::io, "tree file '" + path.string() + "': " + what);
  };
  if (bytes.size() < 24) throw bad("truncated header");
  if (std::memcmp(bytes.data(), kTreeMagic.data(), kTreeMagic.size()) != 0)
    throw bad("bad magic");
  if (bytes[8] != kTreeVersion) throw bad("unsupported version " + std::to_string(bytes[8]));
  const std::size_t k = detail::get_u32(bytes.data() + 12);
  if (k < 2 || bytes.size() != 24 + 16 * (k - 1)) throw bad("size does not match vertex count");
  std::vector<WeightedEdge> edges(k - 1);
  const unsigned char* p = bytes.data() + 24;
  for (auto& e : edges) {
    e = {detail::get_u32(p), detail::get_u32(p + 4), detail::get_f64(p + 8)};
    p += 16;
  }
  return SpanningTree::from_edges(k, std::move(edges));
}

}  // namespace animst

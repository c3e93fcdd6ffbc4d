#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing
// here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "animst/dataset.hpp"
#include "animst/graph.hpp"
#include "animst/mst.hpp"

namespace animst::testing {

inline SpanningTree tree_of(std::size_t k, const std::vector<std::pair<Vertex, Vertex>>& edges,
                            double w = 1.0) {
  std::vector<WeightedEdge> list;
  for (auto [a, b] : edges) list.push_back(make_edge(a, b, w));
  return SpanningTree::from_edges(k, std::move(list));
}

inline SpanningTree path_tree(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return tree_of(n, e);
}

/// Star with centre 0 and `leaves` leaves.
inline SpanningTree star_tree(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return tree_of(leaves + 1, e);
}

/// Uniform random labelled tree decoded from a random Prüfer sequence.
inline std::vector<std::pair<Vertex, Vertex>> prufer_decode(const std::vector<Vertex>& seq,
                                                            std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (auto v : seq) ++degree[v];
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (auto v : seq) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

inline SpanningTree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 2) return tree_of(2, {{0, 1}});
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = static_cast<Vertex>(rng() % n);
  std::vector<WeightedEdge> edges;
  for (auto [a, b] : prufer_decode(seq, n))
    edges.push_back(make_edge(a, b, static_cast<double>(rng() % 1000) / 1000.0));
  return SpanningTree::from_edges(n, std::move(edges));
}

/// Hop distances from one source by plain BFS over an edge list.
inline std::vector<std::size_t> bfs_oracle(const SpanningTree& tree, Vertex source) {
  std::vector<std::vector<Vertex>> adj(tree.size());
  for (const auto& e : tree.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::size_t> dist(tree.size(), SIZE_MAX);
  std::vector<Vertex> q{source};
  dist[source] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (auto w : adj[q[h]])
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[q[h]] + 1;
        q.push_back(w);
      }
  return dist;
}

/// Minimum total weight over every spanning tree of the complete graph on
/// n vertices, enumerating all n^(n-2) Prüfer sequences.
inline double brute_force_mst_weight(std::size_t n,
                                     const std::vector<std::vector<double>>& weight) {
  if (n == 2) return weight[0][1];
  std::vector<Vertex> seq(n - 2, 0);
  double best = INFINITY;
  while (true) {
    double total = 0.0;
    auto edges = prufer_decode(seq, n);
    // Sum in ascending weight order so both sides add identical terms in
    // the same order as Kruskal.
    std::vector<double> ws;
    for (auto [a, b] : edges) ws.push_back(weight[a][b]);
    std::sort(ws.begin(), ws.end());
    for (double w : ws) total += w;
    best = std::min(best, total);
    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return best;
}

/// Figure-style branch: 3598-3841-3907 with 3907 also joined to 3817,
/// 2936 and 2354.
inline std::vector<std::string> fig_branch_ids() {
  return {"3598", "3841", "3907", "3817", "2936", "2354"};
}

inline SpanningTree fig_branch_tree() {
  return SpanningTree::from_edges(
      6, {make_edge(0, 1, 0.31), make_edge(1, 2, 0.22), make_edge(2, 3, 0.27),
          make_edge(2, 4, 0.45), make_edge(2, 5, 0.38)});
}

// ---------------------------------------------------------------------
// Similarity oracle: set-based recomputation of the whole pair table.

struct OraclePair {
  std::size_t i, j;
  double crew_raw, score_raw;
  unsigned topic_raw;
  double crew_norm, score_norm, topic_norm, delta;
};

inline std::vector<OraclePair> brute_force_pair_table(const Catalog& catalog) {
  const std::size_t k = catalog.size();
  std::vector<std::vector<double>> hist(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t total = 0;
    for (auto c : catalog[i].votes) total += c;
    for (auto c : catalog[i].votes)
      hist[i].push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  auto shared = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end()), both;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::inserter(both, both.begin()));
    return both.size();
  };
  std::vector<OraclePair> table;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      OraclePair p{};
      p.i = i;
      p.j = j;
      p.crew_raw = std::log(1.0 + static_cast<double>(shared(catalog[i].crew, catalog[j].crew)));
      double chi = 0.0;
      for (std::size_t n = 0; n < hist[i].size(); ++n) {
        const double x = hist[i][n], y = hist[j][n];
        if (x + y > 0.0) chi += (x - y) * (x - y) / (x + y);
      }
      p.score_raw = chi;
      p.topic_raw = static_cast<unsigned>(shared(catalog[i].topics, catalog[j].topics));
      table.push_back(p);
    }
  double lo[3] = {INFINITY, INFINITY, INFINITY}, hi[3] = {-INFINITY, -INFINITY, -INFINITY};
  for (const auto& p : table) {
    const double z[3] = {p.crew_raw, p.score_raw, static_cast<double>(p.topic_raw)};
    for (int m = 0; m < 3; ++m) {
      lo[m] = std::min(lo[m], z[m]);
      hi[m] = std::max(hi[m], z[m]);
    }
  }
  auto scale = [&](double z, int m) { return hi[m] == lo[m] ? 0.0 : (z - lo[m]) / (hi[m] - lo[m]); };
  for (auto& p : table) {
    p.crew_norm = 1.0 - scale(p.crew_raw, 0);
    p.score_norm = scale(p.score_raw, 1);
    p.topic_norm = 1.0 - scale(static_cast<double>(p.topic_raw), 2);
    p.delta = std::sqrt(p.crew_norm * p.crew_norm + p.score_norm * p.score_norm +
                        p.topic_norm * p.topic_norm);
  }
  return table;
}

/// Small random catalog with overlapping pools so every measure varies.
inline Catalog random_catalog(std::size_t k, std::mt19937_64& rng, std::size_t n_categories = 11) {
  std::vector<AnimeRecord> records;
  for (std::size_t i = 0; i < k; ++i) {
    AnimeRecord r;
    r.id = "r" + std::to_string(i);
    r.title = "Record " + std::to_string(i);
    std::set<std::string> crew, topics;
    const auto nc = 1 + rng() % 8;
    while (crew.size() < nc) crew.insert("c" + std::to_string(rng() % 12));
    const auto nt = 1 + rng() % 4;
    while (topics.size() < nt) topics.insert("t" + std::to_string(rng() % 6));
    r.crew.assign(crew.begin(), crew.end());
    r.topics.assign(topics.begin(), topics.end());
    r.votes.resize(n_categories);
    for (auto& v : r.votes) v = rng() % 3 == 0 ? 0 : rng() % 50;
    r.votes[rng() % n_categories] += 1;
    records.push_back(std::move(r));
  }
  return Catalog::create(std::move(records), n_categories);
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("animst-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace animst::testing

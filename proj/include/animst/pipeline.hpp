#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "animst/centrality.hpp"
#include "animst/dataset.hpp"
#include "animst/mst.hpp"
#include "animst/similarity.hpp"

namespace animst {

struct PipelineOptions {
  unsigned workers = 1;
  /// When set, pass one streams raw pairs to this file and pass two rereads
  /// it; otherwise the raw table is held in memory.
  std::optional<std::filesystem::path> pair_cache;
  EigenOptions eigen;
};

struct PairwiseResult {
  std::vector<WeightedEdge> edges;
  NormalizationStats stats;
  std::uint64_t pairs = 0;
};

/// Similarities for every pair, normalized and fused into edge weights.
PairwiseResult compute_distance_edges(const Catalog& catalog,
                                      const PipelineOptions& options);

struct PipelineResult {
  NormalizationStats stats;
  std::uint64_t pairs = 0;
  SpanningTree tree;
  CentralityReport centrality;
};

/// Similarities, spanning tree and centralities in one call.
PipelineResult run_pipeline(const Catalog& catalog,
                            const PipelineOptions& options);

}  // namespace animst

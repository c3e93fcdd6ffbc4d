#include "animst/pipeline.hpp"

#include "animst/pair_cache.hpp"

namespace animst {

PairwiseResult compute_distance_edges(const Catalog& catalog, const PipelineOptions& options) {
  const PairFeatures features(catalog);
  PairwiseResult result;
  result.pairs = pair_count(catalog.size());
  result.edges.reserve(result.pairs);

  if (options.pair_cache) {
    {
      PairCacheWriter writer(*options.pair_cache, static_cast<std::uint32_t>(catalog.size()));
      result.stats = stream_raw_pairs(features, options.workers,
                                      [&](std::span<const RawPair> block) { writer.append(block); });
      writer.finish();
    }
    PairCacheReader reader(*options.pair_cache);
    std::vector<RawPair> block;
    while (reader.next_block(block, 1 << 18)) append_fused_edges(block, result.stats, result.edges);
  } else {
    std::vector<RawPair> raw;
    raw.reserve(result.pairs);
    result.stats = stream_raw_pairs(features, options.workers, [&](std::span<const RawPair> block) {
      raw.insert(raw.end(), block.begin(), block.end());
    });
    append_fused_edges(raw, result.stats, result.edges);
  }
  return result;
}

PipelineResult run_pipeline(const Catalog& catalog, const PipelineOptions& options) {
  auto pairwise = compute_distance_edges(catalog, options);
  auto tree = kruskal(catalog.size(), std::move(pairwise.edges));
  auto centrality = compute_centrality(tree, options.eigen);
  return {pairwise.stats, pairwise.pairs, std::move(tree), std::move(centrality)};
}

}  // namespace animst

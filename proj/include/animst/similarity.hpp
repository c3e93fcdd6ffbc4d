#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "animst/dataset.hpp"
#include "animst/graph.hpp"

namespace animst {

/// Crew overlap: ln(1 + |a ∩ b|). Inputs are treated as sets.
double crew_similarity(std::span<const std::string> a,
                       std::span<const std::string> b);

/// Number of shared topics, |a ∩ b|. Inputs are treated as sets.
std::uint32_t topic_similarity(std::span<const std::string> a,
                               std::span<const std::string> b);

/// Vote counts normalized to a probability vector.
class ScoreHistogram {
 public:
  ScoreHistogram() = default;
  explicit ScoreHistogram(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t n) const { return probs_[n]; }

 private:
  std::vector<double> probs_;
};

/// Throws a validation error naming `record_id` when every count is zero.
ScoreHistogram score_histogram(std::span<const std::uint64_t> votes,
                               std::string_view record_id = {});

/// Chi-squared distance, summed in ascending category order. Terms with
/// x_n + y_n = 0 contribute nothing.
double score_similarity(const ScoreHistogram& x, const ScoreHistogram& y);

/// Global min/max of one measure over all unordered pairs.
struct MeasureRange {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  void include(double z) noexcept {
    if (z < min) min = z;
    if (z > max) max = z;
  }
  void merge(const MeasureRange& other) noexcept {
    if (other.empty()) return;
    include(other.min);
    include(other.max);
  }
  bool empty() const noexcept { return min > max; }

  friend bool operator==(const MeasureRange&, const MeasureRange&) = default;
};

struct NormalizationStats {
  MeasureRange crew;
  MeasureRange score;
  MeasureRange topic;

  void merge(const NormalizationStats& other) noexcept {
    crew.merge(other.crew);
    score.merge(other.score);
    topic.merge(other.topic);
  }

  friend bool operator==(const NormalizationStats&,
                         const NormalizationStats&) = default;
};

/// Min-max scaling into [0,1]; a degenerate range maps every value to 0.
double normalize(double value, const MeasureRange& range);

/// Aligned components and their Euclidean norm.
struct FusedDistance {
  double crew = 0.0;   // 1 - normalized crew similarity
  double score = 0.0;  // normalized chi-squared distance
  double topic = 0.0;  // 1 - normalized topic similarity
  double delta = 0.0;
};

FusedDistance fuse(double crew_norm_raw, double score_norm,
                   double topic_norm_raw);

/// Raw measures of one pair (i < j), as stored in the pair cache.
struct RawPair {
  Vertex i = 0;
  Vertex j = 0;
  double crew = 0.0;
  double score = 0.0;
  std::uint32_t topic = 0;

  friend bool operator==(const RawPair&, const RawPair&) = default;
};

struct SimilarityVector {
  Vertex i = 0;
  Vertex j = 0;
  double crew_raw = 0.0;
  double score_raw = 0.0;
  std::uint32_t topic_raw = 0;
  double crew_norm = 0.0;
  double score_norm = 0.0;
  double topic_norm = 0.0;
  double delta = 0.0;
};

SimilarityVector make_similarity(const RawPair& raw,
                                 const NormalizationStats& stats);

inline std::uint64_t pair_count(std::size_t k) {
  return static_cast<std::uint64_t>(k) * (k - 1) / 2;
}

/// Position of pair (i, j), i < j, in row-major enumeration order.
inline std::uint64_t pair_index(std::size_t i, std::size_t j, std::size_t k) {
  return static_cast<std::uint64_t>(i) * k - static_cast<std::uint64_t>(i) * (i + 1) / 2 +
         (j - i - 1);
}

/// Per-record features prepared for fast pair evaluation: crew and topic
/// strings are interned to sorted integer ids, votes become histograms.
class PairFeatures {
 public:
  explicit PairFeatures(const Catalog& catalog);

  std::size_t size() const noexcept { return histograms_.size(); }
  RawPair raw_pair(Vertex i, Vertex j) const;

 private:
  std::vector<std::vector<std::uint32_t>> crew_;
  std::vector<std::vector<std::uint32_t>> topics_;
  std::vector<ScoreHistogram> histograms_;
  std::vector<double> crew_log_;  // ln(1 + c) lookup
};

/// Receives consecutive blocks of raw pairs in enumeration order.
using RawPairSink = std::function<void(std::span<const RawPair>)>;

/// Pass one of the pipeline: evaluates every pair i < j, hands blocks to
/// `sink` in enumeration order and folds the global min/max. `workers`
/// threads split each block; the output does not depend on `workers`.
NormalizationStats stream_raw_pairs(const PairFeatures& features,
                                    unsigned workers, const RawPairSink& sink);

struct RawPairTable {
  std::vector<RawPair> pairs;
  NormalizationStats stats;
};

RawPairTable compute_raw_pairs(const Catalog& catalog, unsigned workers = 1);

/// Pass two: normalized, aligned, fused distances as MST edge candidates.
void append_fused_edges(std::span<const RawPair> raw,
                        const NormalizationStats& stats,
                        std::vector<WeightedEdge>& out);

}  // namespace animst

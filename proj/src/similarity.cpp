#include "animst/similarity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "animst/error.hpp"

namespace animst {
namespace {

std::size_t shared_strings(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::unordered_set<std::string_view> small(a.begin(), a.end());
  std::unordered_set<std::string_view> counted;
  for (const auto& s : b) {
    if (small.contains(s)) counted.insert(s);
  }
  return counted.size();
}

std::uint32_t shared_sorted(const std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b) {
  std::uint32_t n = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++n;
      ++ia;
      ++ib;
    }
  }
  return n;
}

class Interner {
 public:
  std::vector<std::uint32_t> intern(std::span<const std::string> values) {
    std::vector<std::uint32_t> out;
    out.reserve(values.size());
    for (const auto& v : values) {
      const auto [it, inserted] = ids_.emplace(v, static_cast<std::uint32_t>(ids_.size()));
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
};

constexpr std::uint64_t kBlockPairs = std::uint64_t{1} << 20;

}  // namespace

double crew_similarity(std::span<const std::string> a, std::span<const std::string> b) {
  return std::log(1.0 + static_cast<double>(shared_strings(a, b)));
}

std::uint32_t topic_similarity(std::span<const std::string> a,
                               std::span<const std::string> b) {
  return static_cast<std::uint32_t>(shared_strings(a, b));
}

ScoreHistogram score_histogram(std::span<const std::uint64_t> votes,
                               std::string_view record_id) {
  std::uint64_t total = 0;
  for (auto c : votes) total += c;
  if (total == 0)
    throw Error(ErrorKind::validation,
                "empty histogram: record '" + std::string(record_id) + "' has no votes");
  std::vector<double> probs(votes.size());
  const double denom = static_cast<double>(total);
  for (std::size_t n = 0; n < votes.size(); ++n)
    probs[n] = static_cast<double>(votes[n]) / denom;
  return ScoreHistogram(std::move(probs));
}

double score_similarity(const ScoreHistogram& x, const ScoreHistogram& y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::validation, "histogram dimension mismatch: " +
                                           std::to_string(x.size()) + " vs " +
                                           std::to_string(y.size()));
  double sum = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double s = x[n] + y[n];
    if (s == 0.0) continue;
    const double d = x[n] - y[n];
    sum += d * d / s;
  }
  return sum;
}

double normalize(double value, const MeasureRange& range) {
  if (!(range.max > range.min)) return 0.0;
  return (value - range.min) / (range.max - range.min);
}

FusedDistance fuse(double crew_norm_raw, double score_norm, double topic_norm_raw) {
  FusedDistance f;
  f.crew = 1.0 - crew_norm_raw;
  f.score = score_norm;
  f.topic = 1.0 - topic_norm_raw;
  f.delta = std::sqrt(f.crew * f.crew + f.score * f.score + f.topic * f.topic);
  return f;
}

SimilarityVector make_similarity(const RawPair& raw, const NormalizationStats& stats) {
  const auto f = fuse(normalize(raw.crew, stats.crew), normalize(raw.score, stats.score),
                      normalize(static_cast<double>(raw.topic), stats.topic));
  return {raw.i,   raw.j,   raw.crew,    raw.score, raw.topic,
          f.crew, f.score, f.topic, f.delta};
}

PairFeatures::PairFeatures(const Catalog& catalog) {
  Interner crew_names;
  Interner topic_names;
  std::size_t max_crew = 0;
  for (const auto& r : catalog.records()) {
    crew_.push_back(crew_names.intern(r.crew));
    topics_.push_back(topic_names.intern(r.topics));
    histograms_.push_back(score_histogram(r.votes, r.id));
    max_crew = std::max(max_crew, crew_.back().size());
  }
  crew_log_.resize(max_crew + 1);
  for (std::size_t c = 0; c <= max_crew; ++c)
    crew_log_[c] = std::log(1.0 + static_cast<double>(c));
}

RawPair PairFeatures::raw_pair(Vertex i, Vertex j) const {
  RawPair p;
  p.i = i;
  p.j = j;
  p.crew = crew_log_[shared_sorted(crew_[i], crew_[j])];
  p.score = score_similarity(histograms_[i], histograms_[j]);
  p.topic = shared_sorted(topics_[i], topics_[j]);
  return p;
}

NormalizationStats stream_raw_pairs(const PairFeatures& features, unsigned workers,
                                    const RawPairSink& sink) {
  const std::size_t k = features.size();
  workers = std::max(1u, workers);
  NormalizationStats total;
  std::vector<RawPair> block;
  std::vector<std::uint64_t> row_offset;

  std::size_t row = 0;
  while (row + 1 < k) {
    // Rows [row, row_end) form one block of roughly kBlockPairs pairs.
    row_offset.clear();
    std::uint64_t block_size = 0;
    std::size_t row_end = row;
    while (row_end + 1 < k && (block_size == 0 || block_size < kBlockPairs)) {
      row_offset.push_back(block_size);
      block_size += k - 1 - row_end;
      ++row_end;
    }
    block.resize(block_size);

    std::atomic<std::size_t> next_row{row};
    auto work = [&](NormalizationStats& stats) {
      for (std::size_t i = next_row++; i < row_end; i = next_row++) {
        RawPair* out = block.data() + row_offset[i - row];
        for (std::size_t j = i + 1; j < k; ++j) {
          *out = features.raw_pair(static_cast<Vertex>(i), static_cast<Vertex>(j));
          stats.crew.include(out->crew);
          stats.score.include(out->score);
          stats.topic.include(static_cast<double>(out->topic));
          ++out;
        }
      }
    };

    std::vector<NormalizationStats> partial(workers);
    if (workers == 1) {
      work(partial[0]);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(partial[w]));
    }
    for (const auto& p : partial) total.merge(p);

    sink(block);
    row = row_end;
  }
  return total;
}

RawPairTable compute_raw_pairs(const Catalog& catalog, unsigned workers) {
  PairFeatures features(catalog);
  RawPairTable table;
  table.pairs.reserve(pair_count(catalog.size()));
  table.stats = stream_raw_pairs(features, workers, [&](std::span<const RawPair> block) {
    table.pairs.insert(table.pairs.end(), block.begin(), block.end());
  });
  return table;
}

void append_fused_edges(std::span<const RawPair> raw, const NormalizationStats& stats,
                        std::vector<WeightedEdge>& out) {
  for (const auto& p : raw) out.push_back({p.i, p.j, make_similarity(p, stats).delta});
}

}  // namespace animst

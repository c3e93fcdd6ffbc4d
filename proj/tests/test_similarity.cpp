#include <doctest.h>

#include <cmath>
#include <random>

#include "animst/error.hpp"
#include "animst/pair_cache.hpp"
#include "animst/pipeline.hpp"
#include "animst/similarity.hpp"
#include "support.hpp"

using namespace animst;
using S = std::vector<std::string>;

TEST_SUITE_BEGIN("similarity");

TEST_CASE("crew similarity is ln(1 + shared)") {
  CHECK(crew_similarity(S{"a", "b", "c"}, S{"b", "c", "d"}) == doctest::Approx(1.0986).epsilon(1e-4));
  CHECK(crew_similarity(S{"a", "b", "c"}, S{"b", "c", "d"}) == std::log(3.0));
  CHECK(crew_similarity(S{"a"}, S{"b"}) == 0.0);
  CHECK(crew_similarity(S{"a", "b"}, S{"a", "b"}) == std::log(3.0));
  CHECK(crew_similarity(S{}, S{}) == 0.0);
}

TEST_CASE("topic similarity counts shared topics") {
  CHECK(topic_similarity(S{"action", "ninja"}, S{"action", "pirates"}) == 1);
  const S x{"a", "b", "c", "d"};
  CHECK(topic_similarity(x, x) == 4);
  CHECK(topic_similarity(S{"a"}, S{"b", "c"}) == 0);
}

TEST_CASE("score histogram") {
  std::vector<std::uint64_t> two(11, 0);
  two[0] = two[1] = 1;
  const auto h = score_histogram(two);
  CHECK(h.size() == 11);
  CHECK(h[0] == 0.5);
  CHECK(h[1] == 0.5);
  for (std::size_t n = 2; n < 11; ++n) CHECK(h[n] == 0.0);

  std::vector<std::uint64_t> last(11, 0);
  last[10] = 4;
  CHECK(score_histogram(last)[10] == 1.0);

  try {
    score_histogram(std::vector<std::uint64_t>(11, 0), "silent-1");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("empty histogram") != std::string::npos);
    CHECK(std::string(e.what()).find("silent-1") != std::string::npos);
  }
}

TEST_CASE("chi-squared score similarity") {
  const ScoreHistogram a({0.5, 0.5}), b({0.25, 0.75});
  CHECK(score_similarity(a, a) == 0.0);
  CHECK(score_similarity(ScoreHistogram({1, 0}), ScoreHistogram({0, 1})) == 2.0);
  // 0.0625/0.75 + 0.0625/1.25, evaluated independently.
  CHECK(score_similarity(a, b) == doctest::Approx(0.13333333333333333).epsilon(1e-15));
  CHECK(score_similarity(ScoreHistogram({0, 1}), ScoreHistogram({0, 1})) == 0.0);
  CHECK_THROWS_AS(score_similarity(a, ScoreHistogram({1, 0, 0})), Error);
}

TEST_CASE("normalize and fuse") {
  CHECK(normalize(4, {2, 6}) == 0.5);
  CHECK(normalize(2, {2, 6}) == 0.0);
  CHECK(normalize(5, {5, 5}) == 0.0);

  CHECK(fuse(1, 0, 1).delta == 0.0);
  CHECK(fuse(0, 1, 0).delta == std::sqrt(3.0));
  const auto mid = fuse(0.5, 0.5, 0.5);
  CHECK(mid.delta == doctest::Approx(0.8660254037844386).epsilon(1e-15));
  CHECK(mid.crew == 0.5);
  CHECK(mid.topic == 0.5);
  const auto f = fuse(0.2, 0.3, 0.9);
  CHECK(f.crew == doctest::Approx(0.8));
  CHECK(f.score == 0.3);
  CHECK(f.topic == doctest::Approx(0.1));
}

TEST_CASE("raw pair table") {
  SUBCASE("k = 2 has one pair and a degenerate range") {
    std::mt19937_64 rng(1);
    const auto t = compute_raw_pairs(testing::random_catalog(2, rng));
    REQUIRE(t.pairs.size() == 1);
    CHECK(t.stats.crew.min == t.stats.crew.max);
    CHECK(t.stats.score.min == t.stats.score.max);
    CHECK(t.stats.topic.min == t.stats.topic.max);
    const auto v = make_similarity(t.pairs[0], t.stats);
    CHECK(v.crew_norm == 1.0);  // normalized 0, inverted
    CHECK(v.score_norm == 0.0);
    CHECK(v.topic_norm == 1.0);
  }

  SUBCASE("k = 4 hand-built records match exhaustive recomputation") {
    std::vector<AnimeRecord> records = {
        {"a", "A", {"x", "y", "z"}, {5, 0, 0, 1}, {"action", "ninja"}},
        {"b", "B", {"y", "z", "w"}, {4, 1, 0, 1}, {"action", "pirates"}},
        {"c", "C", {"q"}, {0, 0, 3, 3}, {"romance"}},
        {"d", "D", {"x", "y", "z", "q"}, {1, 1, 1, 1}, {"action", "ninja", "romance"}}};
    const auto catalog = Catalog::create(records, 4);
    const auto table = compute_raw_pairs(catalog);
    const auto oracle = testing::brute_force_pair_table(catalog);
    REQUIRE(table.pairs.size() == 6);
    double crew_min = INFINITY, crew_max = -INFINITY;
    for (std::size_t p = 0; p < 6; ++p) {
      CHECK(table.pairs[p].i == oracle[p].i);
      CHECK(table.pairs[p].j == oracle[p].j);
      CHECK(table.pairs[p].crew == oracle[p].crew_raw);
      CHECK(table.pairs[p].score == oracle[p].score_raw);
      CHECK(table.pairs[p].topic == oracle[p].topic_raw);
      crew_min = std::min(crew_min, oracle[p].crew_raw);
      crew_max = std::max(crew_max, oracle[p].crew_raw);
    }
    CHECK(table.stats.crew.min == crew_min);
    CHECK(table.stats.crew.max == crew_max);
    CHECK(crew_max == std::log(4.0));  // a and d share x, y, z
    CHECK(table.stats.topic.min == 0.0);
    CHECK(table.stats.topic.max == 2.0);
  }

  SUBCASE("paper scale pair count") {
    CHECK(pair_count(4029) == 8114406);
    CHECK(pair_index(0, 1, 4029) == 0);
    CHECK(pair_index(4027, 4028, 4029) == pair_count(4029) - 1);
  }

  SUBCASE("all-zero votes surface as an empty-histogram error") {
    std::vector<AnimeRecord> records = {{"a", "A", {}, {1, 0}, {}}, {"mute", "B", {}, {0, 0}, {}}};
    const auto catalog = Catalog::create(records, 2);
    try {
      compute_raw_pairs(catalog);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("mute") != std::string::npos);
    }
  }
}

TEST_CASE("worker count does not change results") {
  const auto catalog = generate_synthetic(150, 5, 11);
  const auto one = compute_raw_pairs(catalog, 1);
  const auto four = compute_raw_pairs(catalog, 4);
  CHECK(one.pairs == four.pairs);
  CHECK(one.stats == four.stats);
}

TEST_CASE("pair cache round trip and pipeline equivalence") {
  const auto dir = testing::scratch_dir("pair-cache");
  const auto catalog = generate_synthetic(60, 2, 11);
  const auto table = compute_raw_pairs(catalog);

  PipelineOptions cached;
  cached.pair_cache = dir / "pairs.bin";
  const auto via_cache = compute_distance_edges(catalog, cached);
  const auto in_memory = compute_distance_edges(catalog, PipelineOptions{});
  CHECK(read_pair_cache(dir / "pairs.bin") == table.pairs);
  CHECK(via_cache.edges == in_memory.edges);
  CHECK(via_cache.stats == table.stats);
  CHECK(std::filesystem::file_size(dir / "pairs.bin") ==
        kPairCacheHeaderBytes + kPairCacheRecordBytes * pair_count(60));

  PairCacheReader reader(dir / "pairs.bin");
  CHECK(reader.k() == 60);
  CHECK(reader.pair_count() == pair_count(60));

  // Corrupt magic is rejected.
  {
    std::fstream f(dir / "pairs.bin", std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.put('X');
  }
  CHECK_THROWS_AS(PairCacheReader(dir / "pairs.bin"), Error);
}

TEST_CASE("properties over random record pairs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto catalog = testing::random_catalog(2 + rng() % 6, rng);
    const auto t = compute_raw_pairs(catalog);
    for (const auto& p : t.pairs) {
      const auto& a = catalog[p.i];
      const auto& b = catalog[p.j];
      // Symmetry of every raw measure.
      CHECK(crew_similarity(a.crew, b.crew) == crew_similarity(b.crew, a.crew));
      CHECK(topic_similarity(a.topics, b.topics) == topic_similarity(b.topics, a.topics));
      const auto ha = score_histogram(a.votes), hb = score_histogram(b.votes);
      CHECK(score_similarity(ha, hb) == score_similarity(hb, ha));
      CHECK(p.crew == crew_similarity(a.crew, b.crew));
      CHECK(p.topic == topic_similarity(a.topics, b.topics));

      const auto v = make_similarity(p, t.stats);
      CHECK(v.crew_norm >= 0.0);
      CHECK(v.crew_norm <= 1.0);
      CHECK(v.score_norm >= 0.0);
      CHECK(v.score_norm <= 1.0);
      CHECK(v.topic_norm >= 0.0);
      CHECK(v.topic_norm <= 1.0);
      CHECK(v.delta >= 0.0);
      CHECK(v.delta <= std::sqrt(3.0));
      CHECK(std::abs(v.delta - std::hypot(v.crew_norm, v.score_norm, v.topic_norm)) <= 1e-12);
    }
  }
}

TEST_CASE("monotone in shared members, identity on copies") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testing::random_catalog(2, rng);
    S crew_a = c[0].crew, crew_b = c[1].crew, top_a = c[0].topics, top_b = c[1].topics;
    const double before = crew_similarity(crew_a, crew_b);
    const auto topics_before = topic_similarity(top_a, top_b);
    crew_a.push_back("shared-new");
    crew_b.push_back("shared-new");
    top_a.push_back("shared-topic");
    top_b.push_back("shared-topic");
    CHECK(crew_similarity(crew_a, crew_b) >= before);
    CHECK(topic_similarity(top_a, top_b) >= topics_before);

    // A copy scores zero chi-squared and maximal overlap with itself.
    const auto h = score_histogram(c[0].votes);
    CHECK(score_similarity(h, h) == 0.0);
    CHECK(crew_similarity(c[0].crew, c[0].crew) >= crew_similarity(c[0].crew, c[1].crew));
    CHECK(topic_similarity(c[0].topics, c[0].topics) >=
          topic_similarity(c[0].topics, c[1].topics));
  }
}

TEST_SUITE_END();

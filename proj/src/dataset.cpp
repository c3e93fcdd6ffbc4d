#include "animst/dataset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "animst/error.hpp"

namespace animst {
namespace {

using ordered_json = nlohmann::ordered_json;

Error invalid(const std::string& message) {
  return Error(ErrorKind::validation, message);
}

void require_unique(const std::vector<std::string>& values, const std::string& id,
                    const char* field) {
  std::unordered_set<std::string_view> seen;
  for (const auto& v : values) {
    if (!seen.insert(v).second)
      throw invalid("record '" + id + "': duplicate " + field + " entry '" + v + "'");
  }
}

std::vector<std::string> string_list(const ordered_json& j, const char* key) {
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw std::invalid_argument(std::string("'") + key + "' is not a list");
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

AnimeRecord parse_record(const std::string& line) {
  const auto j = ordered_json::parse(line);
  if (!j.is_object()) throw std::invalid_argument("line is not a JSON object");
  AnimeRecord r;
  r.id = j.at("id").get<std::string>();
  r.title = j.at("title").get<std::string>();
  r.crew = string_list(j, "crew");
  r.topics = string_list(j, "topics");
  const auto& votes = j.at("votes");
  if (!votes.is_array()) throw std::invalid_argument("'votes' is not a list");
  for (const auto& v : votes) {
    if (!v.is_number_integer())
      throw std::invalid_argument("vote counts must be integers");
    if (v.is_number_unsigned()) {
      r.votes.push_back(v.get<std::uint64_t>());
    } else {
      const auto signed_count = v.get<std::int64_t>();
      if (signed_count < 0) throw std::invalid_argument("negative vote count");
      r.votes.push_back(static_cast<std::uint64_t>(signed_count));
    }
  }
  return r;
}

// Bounded draws and reals built directly on the engine output so the
// synthetic catalogs are identical across standard library vendors.
class SyntheticRng {
 public:
  explicit SyntheticRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

constexpr std::array<const char*, 40> kTopicVocabulary = {
    "action",     "adventure",   "comedy",      "drama",        "fantasy",
    "horror",     "mystery",     "psychological", "romance",    "science fiction",
    "slice of life", "sports",   "supernatural", "thriller",    "tragedy",
    "magic",      "mecha",       "military",    "music",        "ninja",
    "pirates",    "school",      "space",       "samurai",      "detectives",
    "martial arts", "idols",     "vampires",    "time travel",  "post-apocalyptic",
    "cooking",    "isekai",      "superpowers", "demons",       "robots",
    "historical", "parody",      "harem",       "shounen",      "seinen"};

constexpr std::size_t kClusterSize = 80;

std::string synthetic_id(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "syn%05zu", i + 1);
  return buf;
}

std::string crew_name(std::uint64_t cluster, std::uint64_t member) {
  return "crew-" + std::to_string(cluster) + "-" + std::to_string(member);
}

}  // namespace

Catalog Catalog::create(std::vector<AnimeRecord> records, std::size_t n_categories) {
  if (n_categories == 0) throw invalid("n_categories must be positive");
  if (records.size() < 2)
    throw invalid("catalog too small: need at least 2 records, got " +
                  std::to_string(records.size()));
  Catalog c;
  c.n_categories_ = n_categories;
  c.index_.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.id.empty()) throw invalid("record " + std::to_string(i + 1) + ": empty id");
    if (r.votes.size() != n_categories)
      throw invalid("record '" + r.id + "': expected " + std::to_string(n_categories) +
                    " vote counts, got " + std::to_string(r.votes.size()));
    require_unique(r.crew, r.id, "crew");
    require_unique(r.topics, r.id, "topic");
    if (!c.index_.emplace(r.id, i).second) throw invalid("duplicate id '" + r.id + "'");
  }
  c.records_ = std::move(records);
  return c;
}

std::optional<std::size_t> Catalog::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Catalog::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::usage, "unknown id '" + std::string(id) + "'");
}

Catalog parse_catalog(std::istream& in, std::size_t n_categories) {
  std::vector<AnimeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(parse_record(line));
    } catch (const std::exception& e) {
      throw invalid("line " + std::to_string(line_no) + ": malformed record: " + e.what());
    }
  }
  return Catalog::create(std::move(records), n_categories);
}

Catalog load_catalog(const std::filesystem::path& path, std::size_t n_categories) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open catalog '" + path.string() + "'");
  return parse_catalog(in, n_categories);
}

void write_catalog(std::ostream& out, const Catalog& catalog) {
  for (const auto& r : catalog.records()) {
    ordered_json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["crew"] = r.crew;
    j["votes"] = r.votes;
    j["topics"] = r.topics;
    out << j.dump() << '\n';
  }
}

void save_catalog(const std::filesystem::path& path, const Catalog& catalog) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write catalog '" + path.string() + "'");
  write_catalog(out, catalog);
  if (!out) throw Error(ErrorKind::io, "write failed for '" + path.string() + "'");
}

Catalog generate_synthetic(std::size_t k, std::uint64_t seed, std::size_t n_categories) {
  if (k < 2)
    throw invalid("catalog too small: need at least 2 records, got " + std::to_string(k));
  if (n_categories == 0) throw invalid("n_categories must be positive");

  SyntheticRng rng(seed);
  // Items belong to "franchise" clusters that mostly share a crew sub-pool
  // and a block of topics; a few guest members cross clusters.
  const std::uint64_t clusters = std::max<std::uint64_t>(3, k / 15);

  std::vector<AnimeRecord> records;
  records.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    AnimeRecord r;
    r.id = synthetic_id(i);
    r.title = "Synthetic Series " + std::to_string(i + 1);

    // Records 0 and 1 share cluster 0 and record 2 sits alone in cluster 1
    // with no guests, so both overlapping and disjoint crews always occur.
    const std::uint64_t cluster = i < 2 ? 0 : i == 2 ? 1 : 2 + rng.below(clusters - 2);
    const bool pinned = i < 3;

    const auto crew_size = rng.between(5, 40);
    std::unordered_set<std::string> crew_seen;
    while (r.crew.size() < crew_size) {
      const bool guest = !pinned && rng.unit() < 0.15;
      const auto c = guest ? rng.below(clusters) : cluster;
      auto name = crew_name(c, rng.below(kClusterSize));
      if (crew_seen.insert(name).second) r.crew.push_back(std::move(name));
    }
    if (i == 1 && !crew_seen.contains(records[0].crew.front()))
      r.crew.back() = records[0].crew.front();

    // Discretized bell shape of votes around a per-item quality level.
    const double centre = rng.unit() * static_cast<double>(n_categories - 1);
    const double spread = 0.6 + 2.0 * rng.unit();
    const auto total = static_cast<std::uint64_t>(std::exp(rng.unit() * std::log(3000.0)));
    std::vector<double> weight(n_categories);
    double weight_sum = 0.0;
    for (std::size_t n = 0; n < n_categories; ++n) {
      const double z = (static_cast<double>(n) - centre) / spread;
      weight[n] = std::exp(-0.5 * z * z);
      weight_sum += weight[n];
    }
    std::uint64_t vote_sum = 0;
    r.votes.resize(n_categories);
    for (std::size_t n = 0; n < n_categories; ++n) {
      r.votes[n] = static_cast<std::uint64_t>(
          std::floor(static_cast<double>(total) * weight[n] / weight_sum));
      vote_sum += r.votes[n];
    }
    if (vote_sum == 0) r.votes[static_cast<std::size_t>(std::lround(centre))] = 1;

    const auto topic_count = rng.between(1, 8);
    const auto block = (cluster * 7) % kTopicVocabulary.size();
    std::unordered_set<std::string> topic_seen;
    while (r.topics.size() < topic_count) {
      const auto t = rng.unit() < 0.6 ? (block + rng.below(10)) % kTopicVocabulary.size()
                                       : rng.below(kTopicVocabulary.size());
      std::string name = kTopicVocabulary[t];
      if (topic_seen.insert(name).second) r.topics.push_back(std::move(name));
    }

    records.push_back(std::move(r));
  }
  return Catalog::create(std::move(records), n_categories);
}

}  // namespace animst

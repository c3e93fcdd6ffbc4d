#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace animst {

/// Number of vote categories used by Anime News Network ratings
/// (Masterpiece ... Worst ever).
inline constexpr std::size_t kDefaultCategories = 11;

/// One catalog item. `crew` and `topics` have set semantics but keep
/// their file order so that a write/load round trip is field-for-field.
struct AnimeRecord {
  std::string id;
  std::string title;
  std::vector<std::string> crew;
  std::vector<std::uint64_t> votes;
  std::vector<std::string> topics;

  friend bool operator==(const AnimeRecord&, const AnimeRecord&) = default;
};

/// Validated, immutable collection of records addressed by dense index
/// 0..k-1 in input order.
class Catalog {
 public:
  /// Validates every record invariant and throws `Error` (validation) on
  /// the first violation. Requires at least two records.
  static Catalog create(std::vector<AnimeRecord> records,
                        std::size_t n_categories);

  std::size_t size() const noexcept { return records_.size(); }
  std::size_t n_categories() const noexcept { return n_categories_; }
  const std::vector<AnimeRecord>& records() const noexcept { return records_; }
  const AnimeRecord& operator[](std::size_t i) const { return records_[i]; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Like `find` but throws a usage error naming the id when absent.
  std::size_t index_of(std::string_view id) const;

  friend bool operator==(const Catalog& a, const Catalog& b) {
    return a.n_categories_ == b.n_categories_ && a.records_ == b.records_;
  }

 private:
  Catalog() = default;

  std::vector<AnimeRecord> records_;
  std::size_t n_categories_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Parses the line-delimited JSON record format. Blank lines are skipped.
Catalog parse_catalog(std::istream& in, std::size_t n_categories);
Catalog load_catalog(const std::filesystem::path& path,
                     std::size_t n_categories = kDefaultCategories);

/// Writes one JSON object per line with keys id, title, crew, votes, topics
/// in that order.
void write_catalog(std::ostream& out, const Catalog& catalog);
void save_catalog(const std::filesystem::path& path, const Catalog& catalog);

/// Deterministic synthetic catalog for tests and benchmarks.
Catalog generate_synthetic(std::size_t k, std::uint64_t seed,
                           std::size_t n_categories = kDefaultCategories);

}  // namespace animst

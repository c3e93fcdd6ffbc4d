#pragma once

// Pair cache file layout (all integers and doubles little-endian):
//
//   offset  size  field
//   0       8     magic "ANMSTPRC"
//   8       1     version (1)
//   9       3     reserved, zero
//   12      4     u32 k (vertex count)
//   16      8     u64 pair count, k(k-1)/2
//   24      28*n  records: u32 i, u32 j, f64 crew_raw, f64 score_raw,
//                 u32 topic_raw
//
// Records appear in row-major (i, j) order with i < j.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <vector>

#include "animst/similarity.hpp"

namespace animst {

inline constexpr std::uint8_t kPairCacheVersion = 1;
inline constexpr std::size_t kPairCacheHeaderBytes = 24;
inline constexpr std::size_t kPairCacheRecordBytes = 28;

class PairCacheWriter {
 public:
  PairCacheWriter(const std::filesystem::path& path, std::uint32_t k);

  void append(std::span<const RawPair> pairs);
  /// Flushes and checks that exactly k(k-1)/2 records were written.
  void finish();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::uint64_t expected_ = 0;
  std::uint64_t written_ = 0;
  std::vector<unsigned char> buffer_;
};

class PairCacheReader {
 public:
  explicit PairCacheReader(const std::filesystem::path& path);

  std::uint32_t k() const noexcept { return k_; }
  std::uint64_t pair_count() const noexcept { return count_; }

  /// Reads up to `max_records` into `out` (replacing its contents).
  /// Returns false once the file is exhausted.
  bool next_block(std::vector<RawPair>& out, std::size_t max_records);

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::uint32_t k_ = 0;
  std::uint64_t count_ = 0;
  std::uint64_t read_ = 0;
  std::vector<unsigned char> buffer_;
};

std::vector<RawPair> read_pair_cache(const std::filesystem::path& path);

}  // namespace animst

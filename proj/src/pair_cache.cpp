#include "animst/pair_cache.hpp"

#include <array>
#include <cstring>

#include "animst/error.hpp"
#include "binary_io.hpp"

namespace animst {
namespace {

constexpr std::array<char, 8> kMagic = {'A', 'N', 'M', 'S', 'T', 'P', 'R', 'C'};

Error io_error(const std::filesystem::path& path, const std::string& what) {
  return Error(ErrorKind::io, "pair cache '" + path.string() + "': " + what);
}

}  // namespace

PairCacheWriter::PairCacheWriter(const std::filesystem::path& path, std::uint32_t k)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), expected_(pair_count(k)) {
  if (!out_) throw io_error(path_, "cannot open for writing");
  std::vector<unsigned char> header(kMagic.begin(), kMagic.end());
  header.push_back(kPairCacheVersion);
  header.insert(header.end(), 3, 0);
  detail::put_u32(header, k);
  detail::put_u64(header, expected_);
  out_.write(reinterpret_cast<const char*>(header.data()),
             static_cast<std::streamsize>(header.size()));
}

void PairCacheWriter::append(std::span<const RawPair> pairs) {
  buffer_.clear();
  buffer_.reserve(pairs.size() * kPairCacheRecordBytes);
  for (const auto& p : pairs) {
    detail::put_u32(buffer_, p.i);
    detail::put_u32(buffer_, p.j);
    detail::put_f64(buffer_, p.crew);
    detail::put_f64(buffer_, p.score);
    detail::put_u32(buffer_, p.topic);
  }
  out_.write(reinterpret_cast<const char*>(buffer_.data()),
             static_cast<std::streamsize>(buffer_.size()));
  written_ += pairs.size();
  if (!out_) throw io_error(path_, "write failed");
}

void PairCacheWriter::finish() {
  out_.flush();
  if (!out_) throw io_error(path_, "write failed");
  if (written_ != expected_)
    throw io_error(path_, "wrote " + std::to_string(written_) + " records, expected " +
                              std::to_string(expected_));
  out_.close();
}

PairCacheReader::PairCacheReader(const std::filesystem::path& path)
    : path_(path), in_(path, std::ios::binary) {
  if (!in_) throw io_error(path_, "cannot open");
  std::array<unsigned char, kPairCacheHeaderBytes> header{};
  in_.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in_.gcount() != static_cast<std::streamsize>(header.size()))
    throw io_error(path_, "truncated header");
  if (std::memcmp(header.data(), kMagic.data(), kMagic.size()) != 0)
    throw io_error(path_, "bad magic");
  if (header[8] != kPairCacheVersion)
    throw io_error(path_, "unsupported version " + std::to_string(header[8]));
  k_ = detail::get_u32(header.data() + 12);
  count_ = detail::get_u64(header.data() + 16);
  if (count_ != animst::pair_count(k_)) throw io_error(path_, "pair count does not match k");
}

bool PairCacheReader::next_block(std::vector<RawPair>& out, std::size_t max_records) {
  out.clear();
  const auto remaining = count_ - read_;
  if (remaining == 0) return false;
  const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, max_records));
  buffer_.resize(n * kPairCacheRecordBytes);
  in_.read(reinterpret_cast<char*>(buffer_.data()), static_cast<std::streamsize>(buffer_.size()));
  if (in_.gcount() != static_cast<std::streamsize>(buffer_.size()))
    throw io_error(path_, "truncated records");
  out.resize(n);
  const unsigned char* p = buffer_.data();
  for (auto& r : out) {
    r.i = detail::get_u32(p);
    r.j = detail::get_u32(p + 4);
    r.crew = detail::get_f64(p + 8);
    r.score = detail::get_f64(p + 16);
    r.topic = detail::get_u32(p + 24);
    p += kPairCacheRecordBytes;
  }
  read_ += n;
  return true;
}

std::vector<RawPair> read_pair_cache(const std::filesystem::path& path) {
  PairCacheReader reader(path);
  std::vector<RawPair> all;
  all.reserve(reader.pair_count());
  std::vector<RawPair> block;
  while (reader.next_block(block, 1 << 16)) all.insert(all.end(), block.begin(), block.end());
  return all;
}

}  // namespace animst

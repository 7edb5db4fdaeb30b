#pragma once

#include "planar/recursion.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace planar {

/// File could not be read, written, or parsed.
class CacheIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A stored value disagrees with recomputation. key() is "d,r,s,theta".
class CacheValidationError : public std::runtime_error {
 public:
  CacheValidationError(const CountKey& key, const std::string& what)
      : std::runtime_error(what), key_(key) {}
  const CountKey& key() const { return key_; }

 private:
  CountKey key_;
};

struct CacheLoadOptions {
  double sample_fraction = 0.01;
  std::size_t min_sample = 10;
  std::uint64_t seed = 0x5eed;
};

// Format: one "d,r,s,theta=count" line per entry, sorted by key, LF endings.
void write_cache(std::ostream& out, const MemoTable& memo);
void save_cache(const std::filesystem::path& path, const MemoTable& memo);

/// Parses every line, then recomputes a sample of the entries from scratch
/// and throws CacheValidationError on the first disagreement. An empty file
/// yields an empty table.
MemoTable read_cache(std::istream& in, const CacheLoadOptions& options = {});
MemoTable load_cache(const std::filesystem::path& path, const CacheLoadOptions& options = {});

}  // namespace planar

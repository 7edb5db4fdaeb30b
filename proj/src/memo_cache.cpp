#include "planar/memo_cache.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace planar {

namespace {

int parse_int(std::string_view text, const std::string& line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw CacheIoError("malformed cache line: '" + line + "'");
  return value;
}

std::pair<CountKey, BigCount> parse_line(const std::string& line) {
  const auto eq = line.find('=');
  if (eq == std::string::npos) throw CacheIoError("malformed cache line: '" + line + "'");
  std::string_view key_text(line.data(), eq);
  int fields[4];
  for (int i = 0; i < 4; ++i) {
    const auto comma = key_text.find(',');
    if ((i < 3) == (comma == std::string_view::npos))
      throw CacheIoError("malformed cache key: '" + line + "'");
    fields[i] = parse_int(key_text.substr(0, comma), line);
    if (i < 3) key_text.remove_prefix(comma + 1);
  }
  CountKey key{fields[0], fields[1], fields[2], fields[3]};
  try {
    return {key, parse_decimal(std::string_view(line).substr(eq + 1))};
  } catch (const std::invalid_argument&) {
    throw CacheIoError("malformed cache value: '" + line + "'");
  }
}

}  // namespace

void write_cache(std::ostream& out, const MemoTable& memo) {
  for (const auto& [key, value] : memo.entries()) {
    out << key.to_string() << '=' << to_decimal(value) << '\n';
  }
}

void save_cache(const std::filesystem::path& path, const MemoTable& memo) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheIoError("cannot open cache for writing: " + path.string());
  write_cache(out, memo);
  out.flush();
  if (!out) throw CacheIoError("failed writing cache: " + path.string());
}

MemoTable read_cache(std::istream& in, const CacheLoadOptions& options) {
  MemoTable memo;
  std::vector<CountKey> keys;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto [key, value] = parse_line(line);
    try {
      memo.insert(key, value);
    } catch (const IntegrityError&) {
      throw CacheValidationError(key, "cache holds conflicting values for " + key.to_string());
    }
    keys.push_back(key);
  }
  if (in.bad()) throw CacheIoError("failed reading cache");

  const auto wanted = static_cast<std::size_t>(
      std::ceil(options.sample_fraction * static_cast<double>(keys.size())));
  const std::size_t sample_size = std::min(keys.size(), std::max(wanted, options.min_sample));
  std::vector<CountKey> sample;
  std::sample(keys.begin(), keys.end(), std::back_inserter(sample), sample_size,
              std::mt19937_64(options.seed));

  MemoTable fresh;
  for (const auto& key : sample) {
    const BigCount expected = n_planar(key, fresh);
    const BigCount stored = *memo.find(key);
    if (stored != expected) {
      throw CacheValidationError(key, "cache entry " + key.to_string() + " holds " +
                                          to_decimal(stored) + " but recomputes to " +
                                          to_decimal(expected));
    }
  }
  return memo;
}

MemoTable load_cache(const std::filesystem::path& path, const CacheLoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheIoError("cannot open cache for reading: " + path.string());
  return read_cache(in, options);
}

}  // namespace planar

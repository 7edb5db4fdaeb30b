#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planar/memo_cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using planar::MemoTable;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("planar_cache_test_" + name);
}

}  // namespace

TEST_CASE("write format is sorted key=value lines") {
  MemoTable memo;
  memo.insert({2, 8, 0, 0}, 92);
  memo.insert({1, 4, 0, 1}, 2);
  std::ostringstream out;
  planar::write_cache(out, memo);
  CHECK(out.str() == "1,4,0,1=2\n2,8,0,0=92\n");
}

TEST_CASE("save then load is lossless") {
  MemoTable memo;
  planar::n_planar({5, 17, 0, 0}, memo);
  const auto path = temp_file("roundtrip");
  planar::save_cache(path, memo);
  const MemoTable loaded = planar::load_cache(path, {.sample_fraction = 1.0});
  CHECK(loaded.entries() == memo.entries());
  std::filesystem::remove(path);
}

TEST_CASE("empty input gives an empty table") {
  std::istringstream in("");
  CHECK(planar::read_cache(in).size() == 0);
}

TEST_CASE("tampered entry is named") {
  MemoTable memo;
  planar::n_planar({4, 14, 0, 0}, memo);
  std::ostringstream out;
  planar::write_cache(out, memo);
  std::string text = out.str();
  const std::string target = "4,14,0,0=3727920";
  REQUIRE(text.find(target) != std::string::npos);
  text.replace(text.find(target), target.size(), "4,14,0,0=3727921");
  std::istringstream in(text);
  try {
    planar::read_cache(in, {.sample_fraction = 1.0});
    FAIL("expected validation failure");
  } catch (const planar::CacheValidationError& e) {
    CHECK(e.key().to_string() == "4,14,0,0");
    CHECK(std::string(e.what()).find("4,14,0,0") != std::string::npos);
  }
}

TEST_CASE("small caches are validated in full at the default sample rate") {
  std::istringstream in("1,4,0,1=2\n2,8,0,0=93\n");
  CHECK_THROWS_AS(planar::read_cache(in), planar::CacheValidationError);
}

TEST_CASE("off-shell entries with nonzero values fail validation") {
  std::istringstream in("3,10,0,0=5\n");
  CHECK_THROWS_AS(planar::read_cache(in), planar::CacheValidationError);
}

TEST_CASE("duplicate keys with conflicting values are rejected") {
  std::istringstream in("2,8,0,0=92\n2,8,0,0=91\n");
  CHECK_THROWS_AS(planar::read_cache(in), planar::CacheValidationError);
}

TEST_CASE("malformed lines are I/O errors") {
  for (const char* bad : {"2,8,0=92\n", "2,8,0,0,1=92\n", "2,8,0,0\n", "2,8,x,0=92\n", "2,8,0,0=9.2\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(planar::read_cache(in), planar::CacheIoError);
  }
  CHECK_THROWS_AS(planar::load_cache(temp_file("does_not_exist")), planar::CacheIoError);
}

TEST_CASE("default sample size is bounded below by ten") {
  // 1% of a few dozen entries rounds up below the floor of ten.
  MemoTable memo;
  for (int d = 1; d <= 3; ++d)
    for (int s = 0; s <= 3; ++s)
      for (int theta = 0; theta <= 3; ++theta) planar::n_planar({d, 3 * d + 2 - 2 * s - theta, s, theta}, memo);
  std::ostringstream out;
  planar::write_cache(out, memo);
  std::istringstream in(out.str());
  CHECK(planar::read_cache(in).entries() == memo.entries());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planar/p2_oracle.hpp"
#include "planar/recursion.hpp"

#include <thread>
#include <vector>

using planar::BigCount;
using planar::CountKey;
using planar::MemoTable;
using planar::n_planar;

TEST_CASE("base degrees delegate to the rings") {
  MemoTable memo;
  CHECK(n_planar({2, 8, 0, 0}, memo) == 92);
  CHECK(n_planar({1, 2, 0, 3}, memo) == 1);
  CHECK(n_planar({1, 4, 0, 1}, memo) == 2);
}

TEST_CASE("line-only planar counts") {
  MemoTable memo;
  CHECK(n_planar({3, 11, 0, 0}, memo) == 12960);
  CHECK(n_planar({4, 14, 0, 0}, memo) == 3727920);
  CHECK(n_planar({5, 17, 0, 0}, memo) == 1979329280L);
  CHECK(n_planar({6, 20, 0, 0}, memo) == BigCount("1763519463360"));
}

TEST_CASE("vanishing conventions") {
  MemoTable memo;
  CHECK(n_planar({3, 10, 0, 0}, memo) == 0);
  CHECK(n_planar({3, 1, 5, 0}, memo) == 0);
  CHECK(n_planar({3, 7, 0, 4}, memo) == 0);
  CHECK(n_planar({3, -1, 6, 0}, memo) == 0);
  CHECK(n_planar({0, 2, 0, 0}, memo) == 0);
  CHECK(n_planar({-1, 0, 0, 0}, memo) == 0);
  CHECK(memo.size() == 0);
}

TEST_CASE("cubics through three points and five lines equal plane cubics through eight points") {
  MemoTable memo;
  CHECK(planar::kontsevich_p2(3) == 12);
  CHECK(n_planar({3, 5, 3, 0}, memo) == 12);
}

TEST_CASE("b_term examples") {
  MemoTable memo;
  CHECK(planar::b_term(1, 4, 0, 1, 1, 1, 0, memo) == 2);
  CHECK(planar::b_term(1, 2, 0, 1, 2, 0, 3, memo) == 1);
  CHECK(planar::b_term(1, 0, 0, 1, 0, 0, 0, memo) == 0);
  CHECK(planar::b_term(0, 4, 0, 1, 1, 1, 0, memo) == 0);
}

TEST_CASE("vanishing sweep for d <= 5") {
  MemoTable memo;
  for (int d = 1; d <= 5; ++d)
    for (int r = 0; r <= 20; ++r)
      for (int s = 0; s <= 5; ++s)
        for (int theta = 0; theta <= 5; ++theta) {
          const CountKey key{d, r, s, theta};
          const BigCount value = n_planar(key, memo);
          if (!key.on_shell() || s > 3 || theta > 3) {
            CAPTURE(key.to_string());
            REQUIRE(value == 0);
          }
        }
}

TEST_CASE("b_term is symmetric at theta = 0") {
  MemoTable memo;
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = 1; d1 + d2 <= 5; ++d2)
      for (int r1 = 0; r1 <= 12; ++r1)
        for (int r2 = 0; r2 <= 12; ++r2)
          for (int s1 = 0; s1 <= 3; ++s1)
            for (int s2 = 0; s2 <= 3; ++s2)
              REQUIRE(planar::b_term(d1, r1, s1, d2, r2, s2, 0, memo) ==
                      planar::b_term(d2, r2, s2, d1, r1, s1, 0, memo));
}

TEST_CASE("memo table contract") {
  MemoTable memo;
  const CountKey key{3, 11, 0, 0};
  memo.insert(key, 12960);
  memo.insert(key, 12960);
  CHECK(memo.size() == 1);
  CHECK_THROWS_AS(memo.insert(key, 12961), planar::IntegrityError);
  CHECK(*memo.find(key) == 12960);
  CHECK_FALSE(memo.find({3, 9, 1, 0}).has_value());
  CHECK(memo.hits() == 1);
  CHECK(memo.misses() == 1);
}

TEST_CASE("a poisoned memo entry is served back") {
  MemoTable memo;
  memo.insert({3, 11, 0, 0}, 7);
  CHECK(n_planar({3, 11, 0, 0}, memo) == 7);
}

TEST_CASE("warm and cold memo agree, values are nonnegative") {
  MemoTable warm;
  std::vector<std::pair<CountKey, BigCount>> first;
  for (int d = 1; d <= 7; ++d)
    for (int s = 0; s <= 3; ++s)
      for (int theta = 0; theta <= 3; ++theta) {
        const CountKey key{d, 3 * d + 2 - 2 * s - theta, s, theta};
        first.emplace_back(key, n_planar(key, warm));
      }
  for (const auto& [key, value] : first) {
    MemoTable cold;
    CAPTURE(key.to_string());
    REQUIRE(n_planar(key, warm) == value);
    REQUIRE(n_planar(key, cold) == value);
    REQUIRE(value >= 0);
  }
}

TEST_CASE("concurrent evaluation on a shared memo") {
  MemoTable shared;
  std::vector<BigCount> results(4);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < results.size(); ++t)
    workers.emplace_back([&, t] { results[t] = n_planar({6, 20, 0, 0}, shared); });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == BigCount("1763519463360"));
  MemoTable cold;
  n_planar({6, 20, 0, 0}, cold);
  CHECK(cold.entries() == shared.entries());
}

TEST_CASE("degree splitting at d = 2 agrees with the conic ring when r >= 3") {
  MemoTable memo;
  int compared = 0;
  for (const auto& key : std::vector<CountKey>{
           {2, 8, 0, 0}, {2, 7, 0, 1}, {2, 6, 0, 2}, {2, 5, 0, 3}, {2, 6, 1, 0}, {2, 5, 1, 1},
           {2, 4, 1, 2}, {2, 3, 1, 3}, {2, 4, 2, 0}, {2, 3, 2, 1}}) {
    CAPTURE(key.to_string());
    CHECK(planar::degree_split(key, memo) == n_planar(key, memo));
    ++compared;
  }
  CHECK(compared == 10);
  // With r < 3 there are no spare line conditions to split; the formula
  // does not apply and indeed misses the single conic through 3 points.
  CHECK(planar::degree_split({2, 2, 3, 0}, memo) == 0);
  CHECK(n_planar({2, 2, 3, 0}, memo) == 1);
}

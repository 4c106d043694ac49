#include <doctest.h>

#include "armleg/errors.hpp"
#include "armleg/partition.hpp"
#include "oracles.hpp"

using namespace armleg;

TEST_CASE("from_row_lengths builds canonical diagrams") {
  YoungDiagram empty = YoungDiagram::from_row_lengths({});
  CHECK(empty.empty());
  CHECK(empty.area() == 0);
  CHECK(empty.to_string() == "-");

  YoungDiagram pairs = YoungDiagram::from_row_lengths({8, 8, 6, 6, 2, 2});
  CHECK(pairs.area() == 32);
  CHECK(pairs.height() == 6);
  CHECK(pairs.width() == 8);
  CHECK(pairs.column_height(0) == 6);
  CHECK(pairs.column_height(5) == 4);
  CHECK(pairs.column_height(7) == 2);
  CHECK(pairs.column_height(8) == 0);
  CHECK(pairs.row_length(6) == 0);

  CHECK_THROWS_AS(YoungDiagram::from_row_lengths({3, 4}), ValidationError);
  CHECK_THROWS_AS(YoungDiagram::from_row_lengths({3, 0}), ValidationError);
  CHECK_THROWS_AS(YoungDiagram::from_row_lengths({-1}), ValidationError);
}

TEST_CASE("partition text format") {
  CHECK(YoungDiagram::parse("8,8,6,6,2,2") == YoungDiagram::from_row_lengths({8, 8, 6, 6, 2, 2}));
  CHECK(YoungDiagram::parse("").empty());
  CHECK(YoungDiagram::parse("-").empty());
  CHECK(YoungDiagram::parse(" 3, 1 ") == YoungDiagram::from_row_lengths({3, 1}));
  CHECK_THROWS_AS(YoungDiagram::parse("3,,1"), ValidationError);
  CHECK_THROWS_AS(YoungDiagram::parse("3,x"), ValidationError);
  CHECK_THROWS_AS(YoungDiagram::parse("1,2"), ValidationError);

  for (std::int64_t n = 0; n <= 8; ++n) {
    for (const auto& d : enumerate_partitions(n)) CHECK(YoungDiagram::parse(d.to_string()) == d);
  }
}

TEST_CASE("arm and leg inside the diagram") {
  const auto block = YoungDiagram::from_row_lengths({7, 7, 7, 7, 3, 3, 3});
  CHECK(arm_leg_inside(block, {1, 2}) == HookPair{5, 4});
  CHECK(arm_leg_inside(YoungDiagram::from_row_lengths({1}), {0, 0}) == HookPair{0, 0});
  CHECK(arm_leg_inside(YoungDiagram::from_row_lengths({8, 8, 6, 6, 2, 2}), {2, 1}) == HookPair{5, 2});
  CHECK_THROWS_AS(arm_leg_inside(block, {7, 0}), BoxOutsideDiagram);
  CHECK_THROWS_AS(arm_leg_inside(block, {0, 7}), BoxOutsideDiagram);
}

TEST_CASE("arm and leg in the complement") {
  const auto block = YoungDiagram::from_row_lengths({7, 7, 7, 7, 3, 3, 3});
  CHECK(arm_leg_complement(block, {8, 4}) == HookPair{5, 4});
  CHECK(arm_leg_complement(YoungDiagram::from_row_lengths({8, 8, 6, 6, 2, 2}), {7, 5}) == HookPair{5, 3});
  CHECK(arm_leg_complement(YoungDiagram(), {3, 2}) == HookPair{3, 2});
  CHECK_THROWS_AS(arm_leg_complement(block, {1, 2}), BoxInsideDiagram);
}

TEST_CASE("hook geometry agrees with the counting oracle") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (const auto& d : enumerate_partitions(n)) {
      for (std::int64_t y = 0; y <= d.height() + 2; ++y) {
        for (std::int64_t x = 0; x <= d.width() + 2; ++x) {
          if (d.contains({x, y})) {
            auto h = arm_leg_inside(d, {x, y});
            CHECK(std::pair(h.arm, h.leg) == oracle::arm_leg_inside(d, {x, y}));
          } else {
            auto h = arm_leg_complement(d, {x, y});
            CHECK(std::pair(h.arm, h.leg) == oracle::arm_leg_complement(d, {x, y}));
          }
        }
      }
    }
  }
}

TEST_CASE("complement hook is non-negative exactly off the diagram") {
  for (const auto& d : enumerate_partitions(7)) {
    for (std::int64_t y = 0; y <= 8; ++y) {
      for (std::int64_t x = 0; x <= 8; ++x) {
        const bool both_nonneg = x - d.row_length(y) >= 0 && y - d.column_height(x) >= 0;
        CHECK(both_nonneg == !d.contains({x, y}));
      }
    }
  }
}

TEST_CASE("hook_census examples") {
  CHECK(hook_census(YoungDiagram(), 0, 0) == HookCensus{0, 1});
  CHECK(hook_census(YoungDiagram::from_row_lengths({1}), 0, 0) == HookCensus{1, 2});
  const auto block = YoungDiagram::from_row_lengths({7, 7, 7, 7, 3, 3, 3});
  CHECK(hook_census(block, 5, 4) == HookCensus{1, 2});
  CHECK(complement_boxes_with_hook(block, 5, 4) == std::vector<Box>{{8, 4}, {5, 8}});
  CHECK(inside_boxes_with_hook(block, 5, 4) == std::vector<Box>{{1, 2}});
  CHECK_THROWS_AS(hook_census(block, -1, 0), ValidationError);
}

TEST_CASE("hook_census matches exhaustive scan and is always (k, k+1)") {
  for (std::int64_t n = 0; n <= 10; ++n) {
    for (const auto& d : enumerate_partitions(n)) {
      for (std::int64_t a = 0; a <= 10; ++a) {
        for (std::int64_t l = 0; l <= 10; ++l) {
          auto [in, out] = oracle::hook_boxes(d, a, l);
          CHECK(inside_boxes_with_hook(d, a, l) == in);
          CHECK(complement_boxes_with_hook(d, a, l) == out);
          const auto c = hook_census(d, a, l);
          CHECK(c.complement == c.inside + 1);
          // Window bound for the complement scan.
          for (Box b : out) CHECK(b.y <= d.height() + l);
        }
      }
    }
  }
}

TEST_CASE("transpose") {
  CHECK(transpose(YoungDiagram()).empty());
  CHECK(transpose(YoungDiagram::from_row_lengths({2, 1})) == YoungDiagram::from_row_lengths({2, 1}));
  CHECK(transpose(YoungDiagram::from_row_lengths({8, 8, 6, 6, 2, 2})) ==
        YoungDiagram::from_row_lengths({6, 6, 4, 4, 4, 4, 2, 2}));

  for (std::int64_t n = 0; n <= 8; ++n) {
    for (const auto& d : enumerate_partitions(n)) {
      const auto t = transpose(d);
      CHECK(transpose(t) == d);
      CHECK(t.rows() == d.columns());
      for (Box c : d.boxes()) {
        auto h = arm_leg_inside(d, c);
        CHECK(arm_leg_inside(t, {c.y, c.x}) == HookPair{h.leg, h.arm});
      }
      for (std::int64_t y = 0; y <= d.height() + 2; ++y) {
        for (std::int64_t x = 0; x <= d.width() + 2; ++x) {
          if (d.contains({x, y})) continue;
          auto h = arm_leg_complement(d, {x, y});
          CHECK(arm_leg_complement(t, {y, x}) == HookPair{h.leg, h.arm});
        }
      }
    }
  }
}

TEST_CASE("enumerate_partitions") {
  auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0].to_string() == "4");
  CHECK(four[1].to_string() == "3,1");
  CHECK(four[2].to_string() == "2,2");
  CHECK(four[3].to_string() == "2,1,1");
  CHECK(four[4].to_string() == "1,1,1,1");

  CHECK(enumerate_partitions(10).size() == 42);

  for (std::int64_t n = 0; n <= 30; ++n) {
    auto parts = enumerate_partitions(n);
    CHECK(static_cast<std::int64_t>(parts.size()) == oracle::count_partitions(n));
    for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i - 1].rows() > parts[i].rows());
    for (const auto& d : parts) CHECK(d.area() == n);
  }
}

TEST_CASE("partition stream restarts") {
  PartitionStream s(5);
  std::vector<std::string> first, second;
  while (auto d = s.next()) first.push_back(d->to_string());
  CHECK_FALSE(s.next().has_value());
  s.restart();
  while (auto d = s.next()) second.push_back(d->to_string());
  CHECK(first == second);
  CHECK(first.size() == 7);
  CHECK_THROWS_AS(PartitionStream(-1), ValidationError);
}

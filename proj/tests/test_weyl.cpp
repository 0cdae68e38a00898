#include <random>
#include <set>

#include "doctest.h"
#include "weyl.hpp"

using namespace tpb;

namespace {

ZVec zv(std::vector<long> v) {
  ZVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

std::vector<ParabolicType> compositions(std::size_t r) {
  std::vector<ParabolicType> out;
  // Bits of mask mark the places where a part ends.
  for (std::size_t mask = 0; mask < (std::size_t(1) << (r - 1)); ++mask) {
    ParabolicType t;
    std::size_t part = 1;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      if (mask & (std::size_t(1) << i)) {
        t.push_back(part);
        part = 1;
      } else {
        ++part;
      }
    }
    t.push_back(part);
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("dominant representative worked examples") {
  auto [d1, p1] = dominant_representative(zv({1, 3, 2}));
  CHECK(d1 == zv({3, 2, 1}));
  CHECK(p1 == std::vector<std::size_t>{2, 0, 1});

  auto [d2, p2] = dominant_representative(zv({0, 0}));
  CHECK(d2 == zv({0, 0}));
  CHECK(p2 == std::vector<std::size_t>{0, 1});

  auto [d3, p3] = dominant_representative(zv({5, 5, 1}));
  CHECK(d3 == zv({5, 5, 1}));
  CHECK(p3 == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("dominant representative reconstructs the input") {
  std::mt19937 rng(1311);
  std::uniform_int_distribution<int> dim(1, 6), entry(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = dim(rng);
    ZVec v(r);
    for (auto& x : v) x = entry(rng);
    auto [d, perm] = dominant_representative(v);
    for (std::size_t i = 0; i + 1 < r; ++i) REQUIRE(d[i] >= d[i + 1]);
    for (std::size_t i = 0; i < r; ++i) REQUIRE(d[perm[i]] == v[i]);
    std::set<std::size_t> seen(perm.begin(), perm.end());
    REQUIRE(seen.size() == r);
  }
}

TEST_CASE("parabolic type") {
  CHECK(parabolic_type(zv({3, 2, 1})) == ParabolicType{1, 1, 1});
  CHECK(parabolic_type(zv({2, 2, 0})) == ParabolicType{2, 1});
  CHECK(parabolic_type(zv({7, 7, 7})) == ParabolicType{3});
  CHECK_THROWS_AS(parabolic_type(zv({1, 2})), tpb::Error);
}

TEST_CASE("fixed point counts") {
  CHECK(fixed_points({1, 2}).size() == 3);
  CHECK(fixed_points({1, 1, 1}).size() == 6);
  CHECK(fixed_points({3}).size() == 1);
  CHECK(fixed_point_count({1, 2}) == 3);
  CHECK(fixed_point_count({2, 2}) == 6);
}

TEST_CASE("fixed points match multinomial counts for r <= 5") {
  for (std::size_t r = 1; r <= 5; ++r) {
    for (const auto& type : compositions(r)) {
      auto pts = fixed_points(type);
      REQUIRE(Int(static_cast<unsigned long>(pts.size())) == fixed_point_count(type));
      // Pairwise distinct and structurally valid.
      std::set<std::vector<std::vector<std::size_t>>> uniq(pts.begin(), pts.end());
      REQUIRE(uniq.size() == pts.size());
      for (const auto& pt : pts) {
        REQUIRE(pt.size() == type.size());
        std::set<std::size_t> all;
        for (std::size_t b = 0; b < pt.size(); ++b) {
          REQUIRE(pt[b].size() == type[b]);
          REQUIRE(std::is_sorted(pt[b].begin(), pt[b].end()));
          all.insert(pt[b].begin(), pt[b].end());
        }
        REQUIRE(all.size() == r);
      }
    }
  }
}

TEST_CASE("fixed points come out in lexicographic order") {
  auto pts = fixed_points({1, 2});
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  CHECK(pts[1] == std::vector<std::vector<std::size_t>>{{1}, {0, 2}});
  CHECK(pts[2] == std::vector<std::vector<std::size_t>>{{2}, {0, 1}});
}

#pragma once

// Small zoo of fans and maps shared by the test binaries.

#include <vector>

#include "fan.hpp"
#include "plmap.hpp"
#include "rational.hpp"

namespace tpbtest {

inline tpb::ZVec zv(std::vector<long> v) {
  tpb::ZVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

inline tpb::QMat qm(std::vector<tpb::QVec> rows) {
  return tpb::QMat::from_rows(rows, rows.empty() ? 0 : rows[0].size());
}

inline tpb::Fan p1() { return tpb::Fan::build(1, {zv({1}), zv({-1})}, {{0}, {1}}); }

inline tpb::Fan p2() {
  return tpb::Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline tpb::Fan p1xp1() {
  return tpb::Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, 0}), zv({0, -1})},
                         {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline tpb::Fan p112() {
  return tpb::Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline tpb::Fan cube() {
  std::vector<tpb::ZVec> rays = {zv({1, 1, 1}),   zv({1, 1, -1}),  zv({1, -1, 1}),
                                 zv({1, -1, -1}), zv({-1, 1, 1}),  zv({-1, 1, -1}),
                                 zv({-1, -1, 1}), zv({-1, -1, -1})};
  std::vector<std::vector<std::size_t>> cones = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5},
                                                 {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}};
  return tpb::Fan::build(3, rays, cones);
}

// Chart whose first weight row is the functional u and whose other rows
// vanish; identity frame.
inline tpb::Chart support_chart(std::vector<std::size_t> cone, const tpb::QVec& u,
                                std::size_t rank) {
  tpb::QMat w(rank, u.size());
  for (std::size_t j = 0; j < u.size(); ++j) w.at(0, j) = u[j];
  return tpb::Chart{std::move(cone), tpb::QMat::identity(rank), w};
}

// Rank 2 map on the line fan: weights (2,1)v on the right half, zero on
// the left.
inline tpb::PLMap p1_example_map(const tpb::Fan& f) {
  tpb::QMat wr(2, 1);
  wr.at(0, 0) = 2;
  wr.at(1, 0) = 1;
  tpb::QMat wl(2, 1);
  return tpb::make_plmap(
      f, 2,
      {tpb::Chart{{0}, tpb::QMat::identity(2), wr}, tpb::Chart{{1}, tpb::QMat::identity(2), wl}});
}

inline tpb::PLMap p2_support_map(const tpb::Fan& f) {
  using tpb::Rat;
  return tpb::make_plmap(f, 2,
                         {support_chart({0, 1}, {Rat(0), Rat(0)}, 2),
                          support_chart({1, 2}, {Rat(1), Rat(0)}, 2),
                          support_chart({0, 2}, {Rat(0), Rat(1)}, 2)});
}

inline tpb::PLMap p112_support_map(const tpb::Fan& f) {
  using tpb::Rat;
  return tpb::make_plmap(f, 2,
                         {support_chart({0, 1}, {Rat(0), Rat(0)}, 2),
                          support_chart({1, 2}, {Rat(2), Rat(0)}, 2),
                          support_chart({0, 2}, {Rat(0), Rat(1)}, 2)});
}

inline tpb::PLMap p1xp1_support_map(const tpb::Fan& f) {
  using tpb::Rat;
  return tpb::make_plmap(f, 2,
                         {support_chart({0, 1}, {Rat(1), Rat(1)}, 2),
                          support_chart({1, 2}, {Rat(0), Rat(1)}, 2),
                          support_chart({2, 3}, {Rat(0), Rat(0)}, 2),
                          support_chart({0, 3}, {Rat(1), Rat(0)}, 2)});
}

inline tpb::PLMap cube_support_map(const tpb::Fan& f) {
  using tpb::Rat;
  return tpb::make_plmap(f, 2,
                         {support_chart({0, 1, 2, 3}, {Rat(1), Rat(0), Rat(0)}, 2),
                          support_chart({4, 5, 6, 7}, {Rat(-1), Rat(0), Rat(0)}, 2),
                          support_chart({0, 1, 4, 5}, {Rat(0), Rat(1), Rat(0)}, 2),
                          support_chart({2, 3, 6, 7}, {Rat(0), Rat(-1), Rat(0)}, 2),
                          support_chart({0, 2, 4, 6}, {Rat(0), Rat(0), Rat(1)}, 2),
                          support_chart({1, 3, 5, 7}, {Rat(0), Rat(0), Rat(-1)}, 2)});
}

}  // namespace tpbtest

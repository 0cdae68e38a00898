#include "doctest.h"
#include "fan.hpp"

using namespace tpb;

namespace {

ZVec zv(std::vector<long> v) {
  ZVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

QVec qv(std::vector<long> v) {
  QVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

Fan p2() {
  return Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

Fan p1() { return Fan::build(1, {zv({1}), zv({-1})}, {{0}, {1}}); }

Fan p1xp1() {
  return Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, 0}), zv({0, -1})},
                    {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Fan p112() {
  return Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}});
}

Fan cube() {
  // Rays: all sign patterns of (+-1,+-1,+-1); maximal cones over the six faces.
  std::vector<ZVec> rays = {zv({1, 1, 1}),   zv({1, 1, -1}),  zv({1, -1, 1}),
                            zv({1, -1, -1}), zv({-1, 1, 1}),  zv({-1, 1, -1}),
                            zv({-1, -1, 1}), zv({-1, -1, -1})};
  std::vector<std::vector<std::size_t>> cones = {
      {0, 1, 2, 3},  // x = +1
      {4, 5, 6, 7},  // x = -1
      {0, 1, 4, 5},  // y = +1
      {2, 3, 6, 7},  // y = -1
      {0, 2, 4, 6},  // z = +1
      {1, 3, 5, 7},  // z = -1
  };
  return Fan::build(3, rays, cones);
}

}  // namespace

TEST_CASE("standard fans build and classify") {
  Fan f2 = p2();
  CHECK(f2.is_complete());
  CHECK(f2.is_simplicial());

  Fan f1 = p1();
  CHECK(f1.is_complete());
  CHECK(f1.is_simplicial());

  Fan q = p1xp1();
  CHECK(q.is_complete());
  CHECK(q.is_simplicial());

  Fan w = p112();
  CHECK(w.is_complete());
  CHECK(w.is_simplicial());

  Fan c = cube();
  CHECK(c.is_complete());
  CHECK_FALSE(c.is_simplicial());
  for (const auto& cone : c.maximal_cones()) {
    CHECK(cone.rays.size() == 4);
    CHECK(cone.dim == 3);
  }
}

TEST_CASE("fan validation failures") {
  CHECK_THROWS_WITH_AS(Fan::build(2, {zv({1, 0}), zv({-1, 0})}, {{0, 1}}),
                       doctest::Contains("NotStronglyConvex"), tpb::Error);
  CHECK_THROWS_WITH_AS(Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({1, 1})}, {{0, 1, 2}}),
                       doctest::Contains("NotAFan"), tpb::Error);
  CHECK_THROWS_WITH_AS(Fan::build(2, {zv({2, 0}), zv({0, 1})}, {{0, 1}}),
                       doctest::Contains("NonPrimitiveRay"), tpb::Error);
  CHECK_THROWS_WITH_AS(Fan::build(2, {zv({1, 0}), zv({1, 0})}, {{0, 1}}),
                       doctest::Contains("DuplicateRay"), tpb::Error);
  CHECK_THROWS_WITH_AS(
      Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}, {0}}),
      doctest::Contains("NotMaximalCone"), tpb::Error);
  CHECK_THROWS_WITH_AS(
      Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({1, 1})}, {{0, 1}}),
      doctest::Contains("UnusedRay"), tpb::Error);
  // Overlapping interiors: (1,1) is interior to cone{(1,0),(1,2)}.
  CHECK_THROWS_WITH_AS(
      Fan::build(2, {zv({1, 0}), zv({1, 2}), zv({1, 1}), zv({0, 1})}, {{0, 1}, {2, 3}}),
      doctest::Contains("NotAFan"), tpb::Error);
}

TEST_CASE("completeness flips when a cone is removed") {
  Fan partial = Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, -1})}, {{0, 1}, {1, 2}});
  CHECK_FALSE(partial.is_complete());

  Fan half = Fan::build(2, {zv({1, 0}), zv({0, 1})}, {{0, 1}});
  CHECK_FALSE(half.is_complete());
}

TEST_CASE("facets shared") {
  auto shared = p2().facets_shared();
  REQUIRE(shared.size() == 3);
  for (const auto& [face, incident] : shared) {
    CHECK(face.size() == 1);
    CHECK(incident.size() == 2);
  }

  auto single = Fan::build(2, {zv({1, 0}), zv({0, 1})}, {{0, 1}}).facets_shared();
  REQUIRE(single.size() == 2);
  for (const auto& [face, incident] : single) CHECK(incident.size() == 1);

  // For P^1 the unique facet is the zero face, shared by both rays.
  auto f1 = p1().facets_shared();
  REQUIRE(f1.size() == 1);
  CHECK(f1.begin()->first.empty());
  CHECK(f1.begin()->second.size() == 2);
}

TEST_CASE("point location") {
  Fan f = p2();
  auto c1 = f.locate(qv({2, 3}));
  REQUIRE(c1.has_value());
  CHECK(c1->rays == std::vector<std::size_t>{0, 1});
  CHECK(c1->dim == 2);

  auto c0 = f.locate(qv({0, 0}));
  REQUIRE(c0.has_value());
  CHECK(c0->rays.empty());
  CHECK(c0->dim == 0);

  auto cr = f.locate(qv({3, 0}));
  REQUIRE(cr.has_value());
  CHECK(cr->rays == std::vector<std::size_t>{0});
  CHECK(cr->dim == 1);

  Fan half = Fan::build(2, {zv({1, 0}), zv({0, 1})}, {{0, 1}});
  CHECK_FALSE(half.locate(qv({-1, -1})).has_value());
  CHECK(half.locate(qv({1, 1})).has_value());
}

TEST_CASE("complete fans locate every point") {
  for (const Fan& f : {p2(), p1xp1(), p112()}) {
    for (long x = -3; x <= 3; ++x) {
      for (long y = -3; y <= 3; ++y) {
        auto c = f.locate(qv({x, y}));
        REQUIRE(c.has_value());
      }
    }
  }
}

TEST_CASE("cone records carry saturated bases") {
  Fan f = p112();
  const Cone& c = f.maximal_cones()[2];  // rays (1,0) and (-1,-2)
  REQUIRE(c.rays == std::vector<std::size_t>{0, 2});
  REQUIRE(c.sat_basis.size() == 2);
  // The lattice between the rays is all of Z^2 even though the cone has
  // multiplicity 2.
  CHECK(lattice_member(zv({0, 1}), c.sat_basis));

  Fan f1 = p1();
  CHECK(f1.maximal_cones()[0].sat_basis == std::vector<ZVec>{zv({1})});
}

TEST_CASE("face lattices include cone and origin") {
  Fan f = p2();
  for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) {
    const auto& faces = f.faces_of(i);
    CHECK(faces.size() == 4);  // 0, two rays, the cone
  }
  Fan c = cube();
  for (std::size_t i = 0; i < c.maximal_cones().size(); ++i) {
    // 0, four rays, four 2D edges, the cone itself.
    CHECK(c.faces_of(i).size() == 10);
  }
}

TEST_CASE("intersection faces of maximal cone pairs") {
  Fan f = p2();
  CHECK(f.intersection_face(0, 1) == std::vector<std::size_t>{1});
  CHECK(f.intersection_face(0, 2) == std::vector<std::size_t>{0});
  CHECK(f.intersection_face(1, 2) == std::vector<std::size_t>{2});

  Fan q = p1xp1();
  CHECK(q.intersection_face(0, 2).empty());  // opposite quadrants meet at 0
  CHECK(q.intersection_face(0, 1) == std::vector<std::size_t>{1});

  Fan c = cube();
  CHECK(c.intersection_face(0, 1).empty());                          // opposite faces
  CHECK(c.intersection_face(0, 4) == std::vector<std::size_t>{0, 2});  // shared edge
}

#include <vector>

#include "building.hpp"
#include "doctest.h"
#include "fan.hpp"
#include "plmap.hpp"

using namespace tpb;

namespace {

ZVec zv(std::vector<long> v) {
  ZVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

QMat qm(std::vector<QVec> rows) {
  return QMat::from_rows(rows, rows.empty() ? 0 : rows[0].size());
}

Fan p1() { return Fan::build(1, {zv({1}), zv({-1})}, {{0}, {1}}); }

Fan p2() {
  return Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

Fan p1xp1() {
  return Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, 0}), zv({0, -1})},
                    {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Fan p112() {
  return Fan::build(2, {zv({1, 0}), zv({0, 1}), zv({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}});
}

Fan cube() {
  std::vector<ZVec> rays = {zv({1, 1, 1}),   zv({1, 1, -1}),  zv({1, -1, 1}),
                            zv({1, -1, -1}), zv({-1, 1, 1}),  zv({-1, 1, -1}),
                            zv({-1, -1, 1}), zv({-1, -1, -1})};
  std::vector<std::vector<std::size_t>> cones = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5},
                                                 {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}};
  return Fan::build(3, rays, cones);
}

// Chart whose first weight row is the linear functional u and whose other
// rows vanish; the frame is the identity.
Chart support_chart(std::vector<std::size_t> cone, const QVec& u, std::size_t rank) {
  QMat w(rank, u.size());
  for (std::size_t j = 0; j < u.size(); ++j) w.at(0, j) = u[j];
  return Chart{std::move(cone), QMat::identity(rank), w};
}

// v followed by one vanishing row: line bundle style rank 2 weight data.
PLMap p1_example() {
  Fan f = p1();
  QMat wr(2, 1);
  wr.at(0, 0) = 2;
  wr.at(1, 0) = 1;
  QMat wl(2, 1);
  return make_plmap(f, 2, {Chart{{0}, QMat::identity(2), wr}, Chart{{1}, QMat::identity(2), wl}});
}

PLMap p1xp1_support() {
  Fan f = p1xp1();
  return make_plmap(f, 2,
                    {support_chart({0, 1}, {Rat(1), Rat(1)}, 2),
                     support_chart({1, 2}, {Rat(0), Rat(1)}, 2),
                     support_chart({2, 3}, {Rat(0), Rat(0)}, 2),
                     support_chart({0, 3}, {Rat(1), Rat(0)}, 2)});
}

}  // namespace

TEST_CASE("chart lists are checked and reordered") {
  Fan f = p2();
  QMat z(2, 2);
  auto ch = [&](std::vector<std::size_t> cone) { return Chart{cone, QMat::identity(2), z}; };

  // Shuffled input charts land in fan cone order.
  PLMap plm = make_plmap(f, 2, {ch({2, 1}), ch({0, 2}), ch({0, 1})});
  REQUIRE(plm.charts.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(plm.charts[i].cone == f.maximal_cones()[i].rays);

  CHECK_THROWS_WITH_AS(make_plmap(f, 2, {ch({0, 1}), ch({1, 2})}),
                       doctest::Contains("ChartConeMismatch"), tpb::Error);
  CHECK_THROWS_WITH_AS(make_plmap(f, 2, {ch({0, 1}), ch({1, 2}), ch({1, 0})}),
                       doctest::Contains("ChartConeMismatch"), tpb::Error);
  CHECK_THROWS_WITH_AS(make_plmap(f, 2, {ch({0, 1}), ch({1, 2}), ch({0, 1, 2})}),
                       doctest::Contains("ChartConeMismatch"), tpb::Error);
  CHECK_THROWS_WITH_AS(make_plmap(f, 2, {ch({0, 1}), ch({1, 2}), Chart{{0, 2}, QMat(2, 2), z}}),
                       doctest::Contains("SingularFrame"), tpb::Error);
  CHECK_THROWS_WITH_AS(
      make_plmap(f, 2, {ch({0, 1}), ch({1, 2}), Chart{{0, 2}, QMat::identity(2), QMat(2, 3)}}),
      doctest::Contains("RankMismatch"), tpb::Error);
  CHECK_THROWS_WITH_AS(
      make_plmap(f, 2, {ch({0, 1}), ch({1, 2}), Chart{{0, 2}, QMat::identity(3), QMat(3, 2)}}),
      doctest::Contains("RankMismatch"), tpb::Error);
}

TEST_CASE("validation passes on the half line example") {
  Fan f = p1();
  PLMap plm = p1_example();
  CHECK(validate(f, plm).empty());
}

TEST_CASE("evaluation on the half line example") {
  Fan f = p1();
  PLMap plm = p1_example();

  WeightedFlag right = evaluate(f, plm, {Rat(1)});
  WeightedFlag expect_right =
      make_weighted_flag(2, {qm({{Rat(1), Rat(0)}}), QMat::identity(2)}, {Rat(2), Rat(1)});
  CHECK(wf_equal(right, expect_right));

  WeightedFlag left = evaluate(f, plm, {Rat(-3)});
  WeightedFlag expect_left = make_weighted_flag(2, {QMat::identity(2)}, {Rat(0)});
  CHECK(wf_equal(left, expect_left));

  // Origin: trivial flag with weight zero whichever chart is used.
  CHECK(wf_equal(evaluate(f, plm, {Rat(0)}), expect_left));

  // Positive homogeneity along each cone.
  WeightedFlag scaled = evaluate(f, plm, {Rat(5, 2)});
  CHECK(scaled.steps == expect_right.steps);
  CHECK(scaled.weights == QVec{Rat(5), Rat(5, 2)});
}

TEST_CASE("evaluation groups equal weights") {
  Fan f = p1();
  QMat wr(3, 1);
  wr.at(0, 0) = 2;
  wr.at(1, 0) = 1;
  wr.at(2, 0) = 1;
  PLMap plm = make_plmap(
      f, 3, {Chart{{0}, QMat::identity(3), wr}, Chart{{1}, QMat::identity(3), QMat(3, 1)}});
  WeightedFlag v = evaluate(f, plm, {Rat(1)});
  REQUIRE(v.steps.size() == 2);
  CHECK(v.steps[0] == qm({{Rat(1), Rat(0), Rat(0)}}));
  CHECK(v.steps[1] == QMat::identity(3));
  CHECK(v.weights == QVec{Rat(2), Rat(1)});
}

TEST_CASE("points outside the support are rejected") {
  Fan f = Fan::build(2, {zv({1, 0}), zv({1, 2})}, {{0, 1}});
  QMat w(2, 2);
  w.at(0, 0) = 1;
  PLMap plm = make_plmap(f, 2, {Chart{{0, 1}, QMat::identity(2), w}});
  CHECK_THROWS_WITH_AS(evaluate(f, plm, {Rat(-1), Rat(0)}),
                       doctest::Contains("PointOutsideSupport"), tpb::Error);
  CHECK_THROWS_WITH_AS(evaluate(f, plm, {Rat(1)}), doctest::Contains("RankMismatch"), tpb::Error);
}

TEST_CASE("integrality is checked on the whole cone, not just the rays") {
  // W sends the rays (1,0) and (1,2) to lattice vectors but maps (0,1) to
  // half-integers.
  Fan f = Fan::build(2, {zv({1, 0}), zv({1, 2})}, {{0, 1}});
  QMat w(2, 2);
  w.at(0, 0) = 1;
  w.at(0, 1) = Rat(-1, 2);
  w.at(1, 0) = 0;
  w.at(1, 1) = Rat(1, 2);
  PLMap plm = make_plmap(f, 2, {Chart{{0, 1}, QMat::identity(2), w}});

  auto viols = validate(f, plm);
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].kind == "IntegralityViolation");
  CHECK(viols[0].cone_a == std::vector<std::size_t>{0, 1});

  // Ray images really are integral.
  for (const ZVec& ray : f.rays()) {
    for (const Rat& x : w.mul_vec(to_qvec(ray))) CHECK(is_integer(x));
  }
}

TEST_CASE("support style maps pass validation") {
  Fan f2 = p2();
  PLMap m2 = make_plmap(f2, 2,
                        {support_chart({0, 1}, {Rat(0), Rat(0)}, 2),
                         support_chart({1, 2}, {Rat(1), Rat(0)}, 2),
                         support_chart({0, 2}, {Rat(0), Rat(1)}, 2)});
  CHECK(validate(f2, m2).empty());

  Fan f112 = p112();
  PLMap m112 = make_plmap(f112, 2,
                          {support_chart({0, 1}, {Rat(0), Rat(0)}, 2),
                           support_chart({1, 2}, {Rat(2), Rat(0)}, 2),
                           support_chart({0, 2}, {Rat(0), Rat(1)}, 2)});
  CHECK(validate(f112, m112).empty());

  CHECK(validate(p1xp1(), p1xp1_support()).empty());

  Fan fc = cube();
  PLMap mc = make_plmap(fc, 2,
                        {support_chart({0, 1, 2, 3}, {Rat(1), Rat(0), Rat(0)}, 2),
                         support_chart({4, 5, 6, 7}, {Rat(-1), Rat(0), Rat(0)}, 2),
                         support_chart({0, 1, 4, 5}, {Rat(0), Rat(1), Rat(0)}, 2),
                         support_chart({2, 3, 6, 7}, {Rat(0), Rat(-1), Rat(0)}, 2),
                         support_chart({0, 2, 4, 6}, {Rat(0), Rat(0), Rat(1)}, 2),
                         support_chart({1, 3, 5, 7}, {Rat(0), Rat(0), Rat(-1)}, 2)});
  CHECK(validate(fc, mc).empty());
}

TEST_CASE("boundary points evaluate identically through either chart") {
  Fan f = p1xp1();
  PLMap plm = p1xp1_support();

  // (1,0) sits on the face shared by the first and fourth cones.
  WeightedFlag v = evaluate(f, plm, {Rat(1), Rat(0)});
  WeightedFlag expect =
      make_weighted_flag(2, {qm({{Rat(1), Rat(0)}}), QMat::identity(2)}, {Rat(1), Rat(0)});
  CHECK(wf_equal(v, expect));

  // Same value computed from the fourth chart by hand.
  const Chart& se = plm.charts[3];
  CHECK(wf_equal(weighted_flag_from_frame(se.frame, se.wmat.mul_vec({Rat(1), Rat(0)})), expect));

  // Deep in the first cone the weights add up.
  WeightedFlag inner = evaluate(f, plm, {Rat(3), Rat(2)});
  CHECK(inner.weights == QVec{Rat(5), Rat(0)});
}

TEST_CASE("weight mismatch on a shared face is reported") {
  Fan f = p2();
  // First chart restricts to the functional y on the ray (0,1), second to 0:
  // the weight multisets on the face differ.
  PLMap plm = make_plmap(f, 2,
                         {support_chart({0, 1}, {Rat(0), Rat(1)}, 2),
                          support_chart({1, 2}, {Rat(0), Rat(0)}, 2),
                          support_chart({0, 2}, {Rat(0), Rat(0)}, 2)});
  auto viols = validate(f, plm);
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].kind == "FaceAgreementViolation");
  CHECK(viols[0].cone_a == std::vector<std::size_t>{0, 1});
  CHECK(viols[0].cone_b == std::vector<std::size_t>{1, 2});
}

TEST_CASE("matching weights with different spans are reported") {
  Fan f = p1xp1();
  PLMap plm = p1xp1_support();
  // Move the weight of the fourth chart to the second row without touching
  // the frame: weights still match on the shared face, the spans do not.
  QMat w(2, 2);
  w.at(1, 0) = 1;
  plm.charts[3].wmat = w;

  auto viols = validate(f, plm);
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].kind == "FaceAgreementViolation");
  CHECK(viols[0].cone_a == std::vector<std::size_t>{0, 1});
  CHECK(viols[0].cone_b == std::vector<std::size_t>{0, 3});
}

TEST_CASE("frame changes that preserve the value pass validation") {
  Fan f = p1xp1();
  PLMap plm = p1xp1_support();
  // Swap the frame columns of the fourth chart and its weight rows in sync.
  QMat swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  QMat w(2, 2);
  w.at(1, 0) = 1;
  plm.charts[3].frame = swap;
  plm.charts[3].wmat = w;
  CHECK(validate(f, plm).empty());

  WeightedFlag v = evaluate(f, plm, {Rat(1), Rat(0)});
  WeightedFlag expect =
      make_weighted_flag(2, {qm({{Rat(1), Rat(0)}}), QMat::identity(2)}, {Rat(1), Rat(0)});
  CHECK(wf_equal(v, expect));
}

TEST_CASE("agreement must hold on every ordering cell of a shared face") {
  // Two full dimensional cones in rank three sharing the quadrant spanned
  // by e1, e2. The weight rows x and y trade places across that face.
  Fan f = Fan::build(3, {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1}), zv({0, 0, -1})},
                     {{0, 1, 2}, {0, 1, 3}});
  QMat w(2, 3);
  w.at(0, 0) = 1;
  w.at(1, 1) = 1;

  PLMap good = make_plmap(
      f, 2, {Chart{{0, 1, 2}, QMat::identity(2), w}, Chart{{0, 1, 3}, QMat::identity(2), w}});
  CHECK(validate(f, good).empty());

  // Shear the second frame: spans agree where x > y (first column is shared)
  // but differ where y > x. Only the cell enumeration catches this.
  QMat shear = QMat::identity(2);
  shear.at(0, 1) = 1;
  PLMap bad = make_plmap(
      f, 2, {Chart{{0, 1, 2}, QMat::identity(2), w}, Chart{{0, 1, 3}, shear, w}});
  auto viols = validate(f, bad);
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].kind == "FaceAgreementViolation");

  // The two values genuinely differ at a point with y > x.
  QVec pt = {Rat(1), Rat(2), Rat(0)};
  WeightedFlag a = weighted_flag_from_frame(bad.charts[0].frame, w.mul_vec(pt));
  WeightedFlag b = weighted_flag_from_frame(bad.charts[1].frame, w.mul_vec(pt));
  CHECK_FALSE(wf_equal(a, b));
  // ... and agree where x > y.
  QVec pt2 = {Rat(2), Rat(1), Rat(0)};
  CHECK(wf_equal(weighted_flag_from_frame(bad.charts[0].frame, w.mul_vec(pt2)),
                 weighted_flag_from_frame(bad.charts[1].frame, w.mul_vec(pt2))));
}

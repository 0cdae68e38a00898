#include <random>

#include "doctest.h"
#include "poly.hpp"

using namespace tpb;

namespace {

Poly random_poly(std::mt19937& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> nterms(0, 4), expn(0, 2), num(-5, 5), den(1, 3);
  Poly p(nvars);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Mono m(nvars);
    for (auto& e : m) e = static_cast<unsigned>(expn(rng));
    Rat c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

QVec random_point(std::mt19937& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  QVec x(nvars);
  for (auto& v : x) {
    v = Rat(num(rng), den(rng));
    v.canonicalize();
  }
  return x;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
  Poly e0 = elem_sym(3, 0);
  CHECK(e0 == Poly::constant(3, 1));

  Poly e1 = elem_sym(2, 1);
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  CHECK(e1 == x.add(y));

  Poly e2 = elem_sym(2, 2);
  CHECK(e2 == x.mul(y));

  Poly f = elem_sym(3, 2);
  Poly a = Poly::variable(3, 0), b = Poly::variable(3, 1), c = Poly::variable(3, 2);
  CHECK(f == a.mul(b).add(a.mul(c)).add(b.mul(c)));

  CHECK(elem_sym(4, 2).terms().size() == 6);
  CHECK(elem_sym(5, 5).terms().size() == 1);
}

TEST_CASE("total degree and zero polynomial") {
  Poly z(3);
  CHECK(z.is_zero());
  CHECK(z.total_degree() == 0);
  CHECK(z.eval({Rat(1), Rat(2), Rat(3)}) == 0);

  Poly p(2);
  p.add_term({2, 1}, Rat(1));
  p.add_term({0, 1}, Rat(-7));
  CHECK(p.total_degree() == 3);

  // Terms that cancel disappear from the canonical form.
  Poly q(2);
  q.add_term({1, 1}, Rat(2));
  q.add_term({1, 1}, Rat(-2));
  CHECK(q.is_zero());
}

TEST_CASE("evaluation") {
  Poly s = elem_sym(2, 1).pow(2);  // (x + y)^2
  CHECK(s.eval({Rat(1), Rat(2)}) == 9);
  CHECK(s.eval({Rat(1, 2), Rat(1, 2)}) == 1);

  Poly p(1);
  p.add_term({3}, Rat(1));
  p.add_term({0}, Rat(-1));
  CHECK(p.eval({Rat(2)}) == 7);
}

TEST_CASE("pow expands binomials") {
  Poly xp1 = Poly::variable(1, 0).add(Poly::constant(1, 1));
  Poly cube = xp1.pow(3);
  Poly expect(1);
  expect.add_term({3}, Rat(1));
  expect.add_term({2}, Rat(3));
  expect.add_term({1}, Rat(3));
  expect.add_term({0}, Rat(1));
  CHECK(cube == expect);
  CHECK(xp1.pow(0) == Poly::constant(1, 1));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t nv = 1 + trial % 3;
    Poly a = random_poly(rng, nv), b = random_poly(rng, nv), c = random_poly(rng, nv);
    REQUIRE(a.add(b) == b.add(a));
    REQUIRE(a.mul(b) == b.mul(a));
    REQUIRE(a.mul(b).mul(c) == a.mul(b.mul(c)));
    REQUIRE(a.add(b).mul(c) == a.mul(c).add(b.mul(c)));
    REQUIRE(a.add(a.scale(Rat(-1))).is_zero());
    QVec pt = random_point(rng, nv);
    REQUIRE(a.mul(b).eval(pt) == a.eval(pt) * b.eval(pt));
    REQUIRE(a.add(b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}

TEST_CASE("variable permutation") {
  Poly p(2);
  p.add_term({2, 1}, Rat(1));  // x^2 y
  Poly q = apply_var_permutation(p, {1, 0});
  Poly expect(2);
  expect.add_term({1, 2}, Rat(1));  // x y^2
  CHECK(q == expect);
  CHECK(apply_var_permutation(q, {1, 0}) == p);

  Poly e2 = elem_sym(3, 2);
  CHECK(apply_var_permutation(e2, {2, 0, 1}) == e2);
}

TEST_CASE("symmetry detection") {
  for (std::size_t k = 0; k <= 3; ++k) CHECK(is_symmetric(elem_sym(3, k)));

  Poly psum = Poly::variable(2, 0).pow(2).add(Poly::variable(2, 1).pow(2));
  CHECK(is_symmetric(psum));

  CHECK(is_symmetric(Poly::constant(2, Rat(5))));
  CHECK_FALSE(is_symmetric(Poly::variable(2, 0).pow(2)));

  Poly skew = Poly::variable(2, 0).add(Poly::variable(2, 1).scale(Rat(2)));
  CHECK_FALSE(is_symmetric(skew));
}

TEST_CASE("linear substitution") {
  // x -> 2t, y -> t turns e_1 into 3t and e_2 into 2t^2.
  QMat w(2, 1);
  w.at(0, 0) = 2;
  w.at(1, 0) = 1;
  Poly c1 = compose_linear(elem_sym(2, 1), w);
  Poly expect1(1);
  expect1.add_term({1}, Rat(3));
  CHECK(c1 == expect1);

  Poly c2 = compose_linear(elem_sym(2, 2), w);
  Poly expect2(1);
  expect2.add_term({2}, Rat(2));
  CHECK(c2 == expect2);

  // Identity substitution is the identity.
  Poly p(2);
  p.add_term({2, 1}, Rat(3, 2));
  p.add_term({0, 0}, Rat(-1));
  CHECK(compose_linear(p, QMat::identity(2)) == p);

  // Zero matrix keeps only the constant term.
  CHECK(compose_linear(p, QMat(2, 2)) == Poly::constant(2, Rat(-1)));
}

TEST_CASE("linear substitution respects evaluation and composition") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t nv = 1 + trial % 3, mv = 1 + (trial / 3) % 3;
    Poly p = random_poly(rng, nv);
    QMat m(nv, mv);
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < mv; ++j) {
        m.at(i, j) = Rat(num(rng), den(rng));
        m.at(i, j).canonicalize();
      }
    QVec y = random_point(rng, mv);
    REQUIRE(compose_linear(p, m).eval(y) == p.eval(m.mul_vec(y)));

    QMat m2(mv, 2);
    for (std::size_t i = 0; i < mv; ++i)
      for (std::size_t j = 0; j < 2; ++j) m2.at(i, j) = num(rng);
    REQUIRE(compose_linear(compose_linear(p, m), m2) == compose_linear(p, m.mul(m2)));
  }
}

#include "exactlin.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace tpb {

ZMat ZMat::identity(std::size_t n) {
  ZMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat ZMat::from_rows(const std::vector<ZVec>& rows, std::size_t cols) {
  ZMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(Err::Internal, "ShapeMismatch", "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ZVec ZMat::row(std::size_t i) const {
  ZVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

ZMat ZMat::transpose() const {
  ZMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ZMat ZMat::mul(const ZMat& m) const {
  if (cols_ != m.rows_) fail(Err::Internal, "ShapeMismatch", "matrix product shape mismatch");
  ZMat r(rows_, m.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < m.cols_; ++j) r.at(i, j) += x * m.at(k, j);
    }
  return r;
}

QMat ZMat::to_qmat() const {
  QMat q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) q.at(i, j) = Rat(at(i, j));
  return q;
}

bool ZMat::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(i, j) != 0) return false;
  return true;
}

namespace {

void swap_rows(ZMat& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(ZMat& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// rows[r] -= q * rows[p]
void submul_row(ZMat& m, std::size_t r, std::size_t p, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) -= q * m.at(p, j);
}

}  // namespace

HnfResult hermite_normal_form(const ZMat& m) {
  ZMat h = m;
  ZMat u = ZMat::identity(m.rows());
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    std::size_t sel = m.rows();
    for (std::size_t r = prow; r < m.rows(); ++r)
      if (h.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != prow) {
      swap_rows(h, sel, prow);
      swap_rows(u, sel, prow);
    }
    // Kill entries below the pivot with extended-gcd row combinations.
    for (std::size_t r = prow + 1; r < m.rows(); ++r) {
      if (h.at(r, col) == 0) continue;
      Int a = h.at(prow, col), b = h.at(r, col), g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int ag = a / g, bg = b / g;
      // [p q; -bg ag] has determinant 1 and sends (a, b) to (g, 0).
      for (ZMat* t : {&h, &u}) {
        for (std::size_t j = 0; j < t->cols(); ++j) {
          Int x = t->at(prow, j), y = t->at(r, j);
          t->at(prow, j) = p * x + q * y;
          t->at(r, j) = -bg * x + ag * y;
        }
      }
    }
    if (h.at(prow, col) < 0) {
      negate_row(h, prow);
      negate_row(u, prow);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < prow; ++r) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(r, col).get_mpz_t(), h.at(prow, col).get_mpz_t());
      submul_row(h, r, prow, q);
      submul_row(u, r, prow, q);
    }
    ++prow;
  }
  return {h, u};
}

ZVec primitive_vector(const ZVec& v) {
  Int g(0);
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) fail(Err::Input, "ZeroVector", "primitive_vector of the zero vector");
  ZVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::vector<ZVec> integer_kernel(const ZMat& m) {
  // HNF of m^T: zero rows of h correspond to rows of u spanning the kernel.
  auto [h, u] = hermite_normal_form(m.transpose());
  std::vector<ZVec> ker;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (h.row_is_zero(i)) ker.push_back(u.row(i));
  if (ker.empty()) return {};
  // Canonicalize the basis of the kernel lattice.
  auto [kh, ku] = hermite_normal_form(ZMat::from_rows(ker, m.cols()));
  std::vector<ZVec> out;
  for (std::size_t i = 0; i < kh.rows(); ++i)
    if (!kh.row_is_zero(i)) out.push_back(kh.row(i));
  return out;
}

std::vector<ZVec> saturated_lattice_basis(const std::vector<ZVec>& gens, std::size_t n) {
  std::vector<ZVec> ann = integer_kernel(ZMat::from_rows(gens, n));
  return integer_kernel(ZMat::from_rows(ann, n));
}

bool lattice_member(const ZVec& v, const std::vector<ZVec>& basis) {
  if (v.empty()) return true;
  std::size_t n = v.size();
  auto [h, u] = hermite_normal_form(ZMat::from_rows(basis, n));
  // Reduce v by the echelon rows; membership iff it reduces to zero.
  ZVec w = v;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (row < h.rows() && h.at(row, col) != 0) {
      Int q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[col].get_mpz_t(), h.at(row, col).get_mpz_t());
      if (r != 0) return false;
      for (std::size_t j = col; j < n; ++j) w[j] -= q * h.at(row, j);
      ++row;
    }
    if (w[col] != 0) return false;
  }
  return true;
}

namespace {

// Scale so the first nonzero coefficient (or the bound) has absolute value 1;
// keeps the constraint set small and detects duplicates.
LinIneq normalize_ineq(LinIneq c) {
  Rat scale(0);
  for (const Rat& x : c.a)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  if (scale == 0) scale = abs(c.b);
  if (scale != 0 && scale != 1) {
    for (Rat& x : c.a) x /= scale;
    c.b /= scale;
  }
  return c;
}

bool fm_feasible_rec(std::vector<LinIneq> cons, std::size_t nvars, QVec& point_out) {
  if (nvars == 0) {
    for (const auto& c : cons)
      if (c.b > 0) return false;
    point_out.clear();
    return true;
  }
  std::size_t k = nvars - 1;
  std::vector<LinIneq> lower, upper, rest;
  for (auto& c : cons) {
    if (c.a[k] > 0)
      lower.push_back(std::move(c));  // x_k >= (b - a'·x') / a_k
    else if (c.a[k] < 0)
      upper.push_back(std::move(c));
    else {
      c.a.pop_back();
      rest.push_back(std::move(c));
    }
  }
  std::set<std::pair<QVec, Rat>> seen;
  auto push = [&](LinIneq c) {
    c = normalize_ineq(std::move(c));
    if (seen.insert({c.a, c.b}).second) rest.push_back(std::move(c));
  };
  for (auto& c : rest) seen.insert({c.a, c.b});
  for (const auto& lo : lower)
    for (const auto& up : upper) {
      // (-up.a[k]) * lo + lo.a[k] * up, both multipliers positive.
      Rat ml = -up.a[k], mu = lo.a[k];
      LinIneq c;
      c.a.resize(k);
      for (std::size_t j = 0; j < k; ++j) c.a[j] = ml * lo.a[j] + mu * up.a[j];
      c.b = ml * lo.b + mu * up.b;
      push(std::move(c));
    }
  if (!fm_feasible_rec(std::move(rest), k, point_out)) return false;
  // Back-substitute x_k within [max lower, min upper].
  bool have_lo = false, have_up = false;
  Rat lo_val(0), up_val(0);
  for (const auto& c : lower) {
    Rat bound = c.b;
    for (std::size_t j = 0; j < k; ++j) bound -= c.a[j] * point_out[j];
    bound /= c.a[k];
    if (!have_lo || bound > lo_val) lo_val = bound;
    have_lo = true;
  }
  for (const auto& c : upper) {
    Rat bound = c.b;
    for (std::size_t j = 0; j < k; ++j) bound -= c.a[j] * point_out[j];
    bound /= c.a[k];
    if (!have_up || bound < up_val) up_val = bound;
    have_up = true;
  }
  Rat xk(0);
  if (have_lo && have_up)
    xk = (lo_val + up_val) / 2;
  else if (have_lo)
    xk = lo_val;
  else if (have_up)
    xk = up_val;
  point_out.push_back(xk);
  return true;
}

}  // namespace

std::optional<QVec> fm_point(const std::vector<LinIneq>& cons, std::size_t nvars) {
  for (const auto& c : cons)
    if (c.a.size() != nvars) fail(Err::Internal, "ShapeMismatch", "constraint arity mismatch");
  QVec point;
  std::vector<LinIneq> work = cons;
  if (!fm_feasible_rec(std::move(work), nvars, point)) return std::nullopt;
  for (const auto& c : cons)
    if (dot(c.a, point) < c.b) fail(Err::Internal, "FMWitness", "witness fails a constraint");
  return point;
}

std::optional<QVec> cone_member_certificate(const QVec& v, const std::vector<QVec>& rays) {
  std::size_t n = v.size();
  std::size_t m = rays.size();
  for (const auto& r : rays)
    if (r.size() != n) fail(Err::Internal, "ShapeMismatch", "ray dimension mismatch");
  std::vector<LinIneq> cons;
  for (std::size_t i = 0; i < m; ++i) {
    LinIneq c{QVec(m, Rat(0)), Rat(0)};
    c.a[i] = 1;
    cons.push_back(std::move(c));  // c_i >= 0
  }
  for (std::size_t j = 0; j < n; ++j) {
    QVec row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = rays[i][j];
    cons.push_back({row, v[j]});
    cons.push_back({vec_scale(Rat(-1), row), -v[j]});
  }
  return fm_point(cons, m);
}

bool cone_member(const QVec& v, const std::vector<QVec>& rays) {
  return cone_member_certificate(v, rays).has_value();
}

}  // namespace tpb

#include "rational.hpp"

#include "error.hpp"

namespace tpb {

std::string rat_to_string(const Rat& q) {
  // mpq_class canonicalizes to lowest terms with positive denominator.
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // Accept "p" and "p/q" with optional leading '-' on p; nothing else.
  auto ok_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = (allow_sign && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!ok_int(s, true)) return std::nullopt;
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!ok_int(num, true) || !ok_int(den, false)) return std::nullopt;
  Int d(den);
  if (d == 0) return std::nullopt;
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat dot(const QVec& a, const QVec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec vec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_scale(const Rat& c, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool vec_is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

QVec to_qvec(const ZVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  QMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(Err::Internal, "ShapeMismatch", "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::from_cols(const std::vector<QVec>& cols, std::size_t rows) {
  QMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(Err::Internal, "ShapeMismatch", "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

QVec QMat::row(std::size_t i) const {
  QVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

QVec QMat::col(std::size_t j) const {
  QVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMat QMat::mul(const QMat& m) const {
  if (cols_ != m.rows_) fail(Err::Internal, "ShapeMismatch", "matrix product shape mismatch");
  QMat r(rows_, m.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < m.cols_; ++j) r.at(i, j) += x * m.at(k, j);
    }
  return r;
}

QVec QMat::mul_vec(const QVec& v) const {
  if (cols_ != v.size()) fail(Err::Internal, "ShapeMismatch", "matrix-vector shape mismatch");
  QVec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

QMat QMat::stack_rows(const QMat& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) fail(Err::Internal, "ShapeMismatch", "stack shape mismatch");
  QMat r(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

std::vector<std::size_t> QMat::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols_ && prow < rows_; ++col) {
    std::size_t sel = rows_;
    for (std::size_t r = prow; r < rows_; ++r)
      if (at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == rows_) continue;
    if (sel != prow)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(prow, j));
    Rat inv = 1 / at(prow, col);
    for (std::size_t j = col; j < cols_; ++j) at(prow, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == prow || at(r, col) == 0) continue;
      Rat f = at(r, col);
      for (std::size_t j = col; j < cols_; ++j) at(r, j) -= f * at(prow, j);
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

std::size_t QMat::rank() const {
  QMat c = *this;
  return c.rref_in_place().size();
}

Rat QMat::det() const {
  if (rows_ != cols_) fail(Err::Internal, "ShapeMismatch", "determinant of non-square matrix");
  QMat c = *this;
  Rat d(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t sel = rows_;
    for (std::size_t r = col; r < rows_; ++r)
      if (c.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == rows_) return Rat(0);
    if (sel != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(c.at(sel, j), c.at(col, j));
      d = -d;
    }
    d *= c.at(col, col);
    Rat inv = 1 / c.at(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (c.at(r, col) == 0) continue;
      Rat f = c.at(r, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) c.at(r, j) -= f * c.at(col, j);
    }
  }
  return d;
}

std::optional<QMat> QMat::inverse() const {
  if (rows_ != cols_) fail(Err::Internal, "ShapeMismatch", "inverse of non-square matrix");
  QMat aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto piv = aug.rref_in_place();
  if (piv.size() != rows_ || (rows_ > 0 && piv.back() >= cols_)) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    if (piv[i] != i) return std::nullopt;
  QMat inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<QVec> kernel_basis(const QMat& m) {
  QMat r = m;
  auto pivots = r.rref_in_place();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t prow = 0; prow < pivots.size(); ++prow) v[pivots[prow]] = -r.at(prow, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat rowspace_rref(const QMat& m) {
  QMat r = m;
  auto pivots = r.rref_in_place();
  QMat out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
  return out;
}

bool subspace_contains(const QMat& space_rref, const QVec& v) {
  if (vec_is_zero(v)) return true;
  QMat aug = space_rref.stack_rows(QMat::from_rows({v}, v.size()));
  return aug.rank() == space_rref.rows();
}

bool subspace_subset(const QMat& a_rref, const QMat& b_rref) {
  for (std::size_t i = 0; i < a_rref.rows(); ++i)
    if (!subspace_contains(b_rref, a_rref.row(i))) return false;
  return true;
}

QMat subspace_sum(const QMat& a, const QMat& b) { return rowspace_rref(a.stack_rows(b)); }

QMat subspace_intersection(const QMat& a_rref, const QMat& b_rref) {
  std::size_t n = a_rref.cols();
  // x in A iff ann(A) x = 0; stack both annihilators.
  std::vector<QVec> ann;
  for (const QMat* s : {&a_rref, &b_rref}) {
    for (auto& f : kernel_basis(*s)) ann.push_back(std::move(f));
  }
  if (ann.empty()) return rowspace_rref(QMat::identity(n));
  std::vector<QVec> xs = kernel_basis(QMat::from_rows(ann, n));
  if (xs.empty()) return QMat(0, n);
  return rowspace_rref(QMat::from_rows(xs, n));
}

std::optional<QMat> solve_columns(const QMat& m, const QMat& rhs) {
  if (m.rows() != rhs.rows()) fail(Err::Internal, "ShapeMismatch", "solve shape mismatch");
  QMat aug(m.rows(), m.cols() + rhs.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) aug.at(i, m.cols() + j) = rhs.at(i, j);
  }
  auto pivots = aug.rref_in_place();
  // A pivot in the rhs block means some system is inconsistent.
  for (auto p : pivots)
    if (p >= m.cols()) return std::nullopt;
  QMat x(m.cols(), rhs.cols());
  for (std::size_t prow = 0; prow < pivots.size(); ++prow)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(pivots[prow], j) = aug.at(prow, m.cols() + j);
  return x;
}

}  // namespace tpb

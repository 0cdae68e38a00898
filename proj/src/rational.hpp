#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tpb {

using Rat = mpq_class;
using Int = mpz_class;
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

// "p/q" in lowest terms with q > 0; plain "p" when q == 1.
std::string rat_to_string(const Rat& q);
std::optional<Rat> rat_from_string(const std::string& s);

bool is_integer(const Rat& q);

Rat dot(const QVec& a, const QVec& b);
QVec vec_add(const QVec& a, const QVec& b);
QVec vec_scale(const Rat& c, const QVec& v);
bool vec_is_zero(const QVec& v);
QVec to_qvec(const ZVec& v);

// Dense rational matrix, row major, value semantics.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols);
  static QMat from_cols(const std::vector<QVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QVec row(std::size_t i) const;
  QVec col(std::size_t j) const;
  QMat transpose() const;
  QMat mul(const QMat& m) const;
  QVec mul_vec(const QVec& v) const;          // this * v
  QMat stack_rows(const QMat& below) const;   // [this; below]

  bool operator==(const QMat& o) const = default;

  // Gauss-Jordan to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;
  Rat det() const;                      // square only
  std::optional<QMat> inverse() const;  // square only; nullopt if singular

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Basis of {x : m x = 0}: one vector per free column of the RREF, in
// increasing free-column order, with a 1 in the free coordinate.
std::vector<QVec> kernel_basis(const QMat& m);

// Subspaces of Q^n are represented by their RREF basis matrix (rows = basis,
// no zero rows); equal subspaces get identical representations.
QMat rowspace_rref(const QMat& m);
bool subspace_contains(const QMat& space_rref, const QVec& v);
bool subspace_subset(const QMat& a_rref, const QMat& b_rref);  // a <= b
QMat subspace_sum(const QMat& a, const QMat& b);
QMat subspace_intersection(const QMat& a_rref, const QMat& b_rref);

// Particular solutions of m x = rhs (free variables set to 0), one column per
// rhs column; nullopt if any system is inconsistent.
std::optional<QMat> solve_columns(const QMat& m, const QMat& rhs);

}  // namespace tpb

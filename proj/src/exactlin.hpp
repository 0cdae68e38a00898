#pragma once

#include <optional>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tpb {

// Dense integer matrix, row major.
class ZMat {
 public:
  ZMat() : rows_(0), cols_(0) {}
  ZMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static ZMat identity(std::size_t n);
  static ZMat from_rows(const std::vector<ZVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ZVec row(std::size_t i) const;
  ZMat transpose() const;
  ZMat mul(const ZMat& m) const;
  QMat to_qmat() const;
  bool row_is_zero(std::size_t i) const;

  bool operator==(const ZMat& o) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// h = u * m with u unimodular; h in row-style Hermite normal form: row
// echelon, pivots positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
  ZMat h;
  ZMat u;
};
HnfResult hermite_normal_form(const ZMat& m);

// v / gcd(v); direction preserved. Errors on the zero vector.
ZVec primitive_vector(const ZVec& v);

// Canonical Z-basis of {x in Z^n : m x = 0} (rows of the HNF of the kernel
// lattice). The result is a saturated lattice.
std::vector<ZVec> integer_kernel(const ZMat& m);

// Canonical Z-basis of span_Q(gens) ∩ Z^n.
std::vector<ZVec> saturated_lattice_basis(const std::vector<ZVec>& gens, std::size_t n);

// Membership of v in the Z-span of basis (an arbitrary generating set).
bool lattice_member(const ZVec& v, const std::vector<ZVec>& basis);

// Linear constraint a·x >= b.
struct LinIneq {
  QVec a;
  Rat b;
};

// Exact Fourier-Motzkin elimination. Returns a point satisfying every
// constraint, or nullopt if the system is infeasible.
std::optional<QVec> fm_point(const std::vector<LinIneq>& cons, std::size_t nvars);

// Is v a nonnegative rational combination of the rays?
bool cone_member(const QVec& v, const std::vector<QVec>& rays);
// The combination coefficients, when v is a member.
std::optional<QVec> cone_member_certificate(const QVec& v, const std::vector<QVec>& rays);

}  // namespace tpb

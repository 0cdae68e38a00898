#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tpb {

// Exponent vector, one entry per variable.
using Mono = std::vector<unsigned>;

// Sparse multivariate polynomial over Q in canonical form: monomials keyed
// by exponent vector, no zero coefficients stored. Equality of canonical
// forms is equality of polynomials.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t total_degree() const;  // 0 for the zero polynomial

  void add_term(const Mono& m, const Rat& c);

  Poly add(const Poly& o) const;
  Poly sub(const Poly& o) const;
  Poly mul(const Poly& o) const;
  Poly scale(const Rat& c) const;
  Poly pow(unsigned e) const;

  Rat eval(const QVec& x) const;

  bool operator==(const Poly&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Mono, Rat> terms_;
};

// Substitute x_i = sum_j m(i,j) y_j; p must have m.rows() variables, the
// result has m.cols() variables.
Poly compose_linear(const Poly& p, const QMat& m);

// x_i -> x_perm[i]
Poly apply_var_permutation(const Poly& p, const std::vector<std::size_t>& perm);

// Invariance under all adjacent variable swaps.
bool is_symmetric(const Poly& p);

// Elementary symmetric polynomial e_k in r variables; e_0 = 1.
Poly elem_sym(std::size_t r, std::size_t k);

}  // namespace tpb

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "building.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace tpb {

// lambda(s) = g * diag(s^{a_1}, ..., s^{a_r}) * g^{-1}
struct OneParamSubgroup {
  QMat frame;   // invertible r x r
  ZVec weights;

  std::size_t rank() const { return weights.size(); }
  bool operator==(const OneParamSubgroup&) const = default;
};

OneParamSubgroup make_onepar(const QMat& frame, const ZVec& weights);

// Laurent polynomial in one variable: exponent -> coefficient, no zeros.
using LPoly = std::map<long, Rat>;

// r x r matrix of Laurent polynomials, row major.
struct LaurentMat {
  std::size_t n = 0;
  std::vector<LPoly> entries;

  LPoly& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const LPoly& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

// lambda1(s) * lambda2(s)^{-1}, expanded symbolically.
LaurentMat onepar_product_inverse(const OneParamSubgroup& l1, const OneParamSubgroup& l2);

// The limit as s -> 0, which exists in GL(r) iff no entry has a negative
// exponent and the constant-term matrix is invertible.
std::optional<QMat> laurent_limit(const LaurentMat& m);

// lambda1 ~ lambda2 iff lim_{s->0} lambda1(s) lambda2(s)^{-1} exists in GL(r).
bool equivalent(const OneParamSubgroup& l1, const OneParamSubgroup& l2);

// x lambda x^{-1}: same weights, frame multiplied on the left.
OneParamSubgroup conjugate(const QMat& x, const OneParamSubgroup& l);

// Membership in P_lambda = { x : x lambda x^{-1} ~ lambda }.
bool in_parabolic(const QMat& x, const OneParamSubgroup& l);

// The weighted flag whose stabilizer is P_lambda: frame columns grouped by
// weight, largest weight first.
WeightedFlag parabolic_flag(const OneParamSubgroup& l);

}  // namespace tpb

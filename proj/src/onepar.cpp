#include "onepar.hpp"

namespace tpb {

OneParamSubgroup make_onepar(const QMat& frame, const ZVec& weights) {
  if (frame.rows() != frame.cols() || frame.rows() != weights.size())
    fail(Err::Input, "RankMismatch", "frame must be square with one weight per column");
  if (frame.det() == 0) fail(Err::Input, "SingularFrame", "frame must be invertible");
  return {frame, weights};
}

namespace {

void lp_add_term(LPoly& p, long e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

}  // namespace

LaurentMat onepar_product_inverse(const OneParamSubgroup& l1, const OneParamSubgroup& l2) {
  std::size_t r = l1.rank();
  if (r != l2.rank()) fail(Err::Input, "RankMismatch", "ranks differ");
  auto g1inv = l1.frame.inverse();
  auto g2inv = l2.frame.inverse();
  if (!g1inv || !g2inv) fail(Err::Input, "SingularFrame", "frame must be invertible");
  QMat c = g1inv->mul(l2.frame);

  // g1 * (D1(s) c D2(s)^{-1}) * g2^{-1}; the middle factor has entries
  // c_ij s^{a_i - b_j}.
  LaurentMat m;
  m.n = r;
  m.entries.assign(r * r, {});
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = 0; l < r; ++l) {
          if (c.at(k, l) == 0) continue;
          Rat coeff = l1.frame.at(i, k) * c.at(k, l) * g2inv->at(l, j);
          Int exp = l1.weights[k] - l2.weights[l];
          if (!exp.fits_slong_p()) fail(Err::Input, "WeightOverflow", "weight out of range");
          lp_add_term(m.at(i, j), exp.get_si(), coeff);
        }
      }
    }
  }
  return m;
}

std::optional<QMat> laurent_limit(const LaurentMat& m) {
  QMat limit(m.n, m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      for (const auto& [e, c] : m.at(i, j)) {
        if (e < 0) return std::nullopt;
        if (e == 0) limit.at(i, j) = c;
      }
    }
  }
  if (limit.det() == 0) return std::nullopt;
  return limit;
}

bool equivalent(const OneParamSubgroup& l1, const OneParamSubgroup& l2) {
  return laurent_limit(onepar_product_inverse(l1, l2)).has_value();
}

OneParamSubgroup conjugate(const QMat& x, const OneParamSubgroup& l) {
  if (x.rows() != x.cols() || x.rows() != l.rank())
    fail(Err::Input, "RankMismatch", "conjugating matrix has wrong size");
  if (x.det() == 0) fail(Err::Input, "SingularFrame", "conjugating matrix must be invertible");
  return {x.mul(l.frame), l.weights};
}

bool in_parabolic(const QMat& x, const OneParamSubgroup& l) {
  return equivalent(conjugate(x, l), l);
}

WeightedFlag parabolic_flag(const OneParamSubgroup& l) {
  return weighted_flag_from_frame(l.frame, to_qvec(l.weights));
}

}  // namespace tpb

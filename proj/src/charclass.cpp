#include "charclass.hpp"

#include <algorithm>
#include <sstream>

namespace tpb {

namespace {

std::string index_set(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << '}';
  return os.str();
}

// Columns span the face, so equality after substitution is equality of the
// restrictions.
QMat face_inclusion(const Fan& fan, const std::vector<std::size_t>& face) {
  const std::size_t n = fan.lattice_rank();
  QMat b(n, face.size());
  for (std::size_t t = 0; t < face.size(); ++t) {
    QVec ray = to_qvec(fan.rays()[face[t]]);
    for (std::size_t i = 0; i < n; ++i) b.at(i, t) = ray[i];
  }
  return b;
}

}  // namespace

PiecewisePoly make_piecewise(const Fan& fan,
                             std::vector<std::pair<std::vector<std::size_t>, Poly>> pieces) {
  const std::size_t nc = fan.maximal_cones().size();
  const std::size_t n = fan.lattice_rank();
  if (pieces.size() != nc)
    fail(Err::Input, "PieceConeMismatch",
         "expected " + std::to_string(nc) + " cone polynomials, got " +
             std::to_string(pieces.size()));

  std::vector<Poly> ordered(nc);
  std::vector<bool> seen(nc, false);
  for (auto& [cone, poly] : pieces) {
    std::sort(cone.begin(), cone.end());
    std::size_t pos = nc;
    for (std::size_t i = 0; i < nc; ++i)
      if (fan.maximal_cones()[i].rays == cone) {
        pos = i;
        break;
      }
    if (pos == nc)
      fail(Err::Input, "PieceConeMismatch",
           "polynomial cone " + index_set(cone) + " is not a maximal cone of the fan");
    if (seen[pos])
      fail(Err::Input, "PieceConeMismatch", "two polynomials for cone " + index_set(cone));
    if (poly.nvars() != n)
      fail(Err::Input, "ArityMismatch", "polynomial on cone " + index_set(cone) + " has " +
                                            std::to_string(poly.nvars()) +
                                            " variables, lattice rank is " + std::to_string(n));
    seen[pos] = true;
    ordered[pos] = std::move(poly);
  }

  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = i + 1; j < nc; ++j) {
      const auto& face = fan.intersection_face(i, j);
      QMat b = face_inclusion(fan, face);
      if (compose_linear(ordered[i], b) == compose_linear(ordered[j], b)) continue;
      fail(Err::Input, "FaceAgreementViolation",
           "polynomials of cones " + index_set(fan.maximal_cones()[i].rays) + " and " +
               index_set(fan.maximal_cones()[j].rays) + " differ on their common face " +
               index_set(face));
    }

  return PiecewisePoly{n, std::move(ordered)};
}

PiecewisePoly pp_add(const PiecewisePoly& a, const PiecewisePoly& b) {
  if (a.nvars != b.nvars || a.per_cone.size() != b.per_cone.size())
    fail(Err::Input, "ArityMismatch", "piecewise polynomials live on different fans");
  PiecewisePoly out{a.nvars, {}};
  out.per_cone.reserve(a.per_cone.size());
  for (std::size_t i = 0; i < a.per_cone.size(); ++i)
    out.per_cone.push_back(a.per_cone[i].add(b.per_cone[i]));
  return out;
}

PiecewisePoly pp_mul(const PiecewisePoly& a, const PiecewisePoly& b) {
  if (a.nvars != b.nvars || a.per_cone.size() != b.per_cone.size())
    fail(Err::Input, "ArityMismatch", "piecewise polynomials live on different fans");
  PiecewisePoly out{a.nvars, {}};
  out.per_cone.reserve(a.per_cone.size());
  for (std::size_t i = 0; i < a.per_cone.size(); ++i)
    out.per_cone.push_back(a.per_cone[i].mul(b.per_cone[i]));
  return out;
}

PiecewisePoly pp_scale(const Rat& c, const PiecewisePoly& a) {
  PiecewisePoly out{a.nvars, {}};
  out.per_cone.reserve(a.per_cone.size());
  for (const Poly& p : a.per_cone) out.per_cone.push_back(p.scale(c));
  return out;
}

Rat pp_eval(const Fan& fan, const PiecewisePoly& pp, const QVec& v) {
  if (v.size() != fan.lattice_rank())
    fail(Err::Input, "RankMismatch", "point length does not match the lattice rank");
  if (pp.per_cone.size() != fan.maximal_cones().size())
    fail(Err::Input, "PieceConeMismatch", "piecewise polynomial does not match the fan");
  for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i) {
    const Cone& c = fan.maximal_cones()[i];
    std::vector<QVec> gens;
    gens.reserve(c.rays.size());
    for (std::size_t rix : c.rays) gens.push_back(to_qvec(fan.rays()[rix]));
    if (cone_member(v, gens)) return pp.per_cone[i].eval(v);
  }
  fail(Err::Input, "PointOutsideSupport", "point is outside the support of the fan");
}

PiecewisePoly chern_weil(const Fan& fan, const PLMap& plm, const Poly& q) {
  if (q.nvars() != plm.rank)
    fail(Err::Input, "ArityMismatch", "polynomial has " + std::to_string(q.nvars()) +
                                          " variables, map has rank " + std::to_string(plm.rank));
  if (!is_symmetric(q))
    fail(Err::Input, "NotSymmetric", "characteristic classes need symmetric polynomials");
  if (plm.charts.size() != fan.maximal_cones().size())
    fail(Err::Input, "ChartConeMismatch", "chart list does not match the fan");
  PiecewisePoly out{fan.lattice_rank(), {}};
  out.per_cone.reserve(plm.charts.size());
  for (const Chart& ch : plm.charts) out.per_cone.push_back(compose_linear(q, ch.wmat));
  return out;
}

PsiData make_psi(const Fan& fan, std::size_t rank, std::vector<PiecewisePoly> classes) {
  if (rank == 0) fail(Err::Input, "RankMismatch", "rank must be positive");
  if (classes.size() != rank)
    fail(Err::Input, "RankMismatch", "expected " + std::to_string(rank) + " classes, got " +
                                         std::to_string(classes.size()));
  for (const PiecewisePoly& pp : classes) {
    if (pp.nvars != fan.lattice_rank() || pp.per_cone.size() != fan.maximal_cones().size())
      fail(Err::Input, "PieceConeMismatch", "class does not match the fan");
  }
  return PsiData{rank, std::move(classes)};
}

std::vector<std::string> psi_degree_warnings(const Fan& fan, const PsiData& psi) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < psi.classes.size(); ++k) {
    for (std::size_t i = 0; i < psi.classes[k].per_cone.size(); ++i) {
      std::size_t deg = psi.classes[k].per_cone[i].total_degree();
      if (deg <= k + 1) continue;
      out.push_back("class " + std::to_string(k + 1) + " on cone " +
                    index_set(fan.maximal_cones()[i].rays) + " has total degree " +
                    std::to_string(deg) + ", expected at most " + std::to_string(k + 1));
    }
  }
  return out;
}

namespace {

// Integer roots of a monic integer polynomial, with multiplicity; nullopt
// unless it splits completely over Z. coef[k] multiplies t^(deg-k).
std::optional<std::vector<Int>> integer_roots(std::vector<Int> coef) {
  std::vector<Int> roots;
  while (coef.size() > 1) {
    const std::size_t deg = coef.size() - 1;
    Int root;
    bool found = false;
    if (coef[deg] == 0) {
      root = 0;
      found = true;
    } else {
      Int n = abs(coef[deg]);
      for (Int d(1); d * d <= n && !found; d += 1) {
        if (n % d != 0) continue;
        const Int q = n / d;
        for (const Int& cand : {Int(d), Int(-d), Int(q), Int(-q)}) {
          Int val = 0;
          for (const Int& c : coef) val = val * cand + c;
          if (val == 0) {
            root = cand;
            found = true;
            break;
          }
        }
      }
    }
    if (!found) return std::nullopt;
    // Synthetic division by (t - root); remainder is zero by construction.
    std::vector<Int> next(deg);
    Int carry = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      carry = carry * root + coef[k];
      next[k] = carry;
    }
    coef = std::move(next);
    roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end(), [](const Int& a, const Int& b) { return a > b; });
  return roots;
}

}  // namespace

ZVec psi_ray_weights(const Fan& fan, const PsiData& psi, std::size_t ray) {
  if (ray >= fan.rays().size())
    fail(Err::Input, "BadRayIndex", "ray index " + std::to_string(ray) + " out of range");
  QVec v = to_qvec(fan.rays()[ray]);
  const std::size_t r = psi.rank;

  std::vector<Int> elem(r);
  for (std::size_t k = 0; k < r; ++k) {
    Rat val = pp_eval(fan, psi.classes[k], v);
    if (!is_integer(val))
      fail(Err::Input, "NonIntegralOrbit",
           "class " + std::to_string(k + 1) + " takes the non-integer value " +
               rat_to_string(val) + " at ray " + std::to_string(ray));
    elem[k] = val.get_num();
  }

  // Monic polynomial whose elementary symmetric values are the class values.
  std::vector<Int> coef(r + 1);
  coef[0] = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    coef[k] = elem[k - 1];
    if (k % 2) coef[k] = -coef[k];
  }

  auto roots = integer_roots(std::move(coef));
  if (!roots) {
    std::ostringstream os;
    os << "class values (";
    for (std::size_t k = 0; k < r; ++k) {
      if (k) os << ',';
      os << elem[k];
    }
    os << ") at ray " << ray << " do not split into integer weights";
    fail(Err::Input, "NonIntegralOrbit", os.str());
  }
  return *roots;
}

}  // namespace tpb

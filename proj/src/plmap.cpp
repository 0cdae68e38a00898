#include "plmap.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

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

std::string qvec_str(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << rat_to_string(v[i]);
  }
  os << ')';
  return os.str();
}

// RREF basis of the span of the selected frame columns.
QMat col_span(const QMat& frame, const std::vector<std::size_t>& cols) {
  std::vector<QVec> rows;
  rows.reserve(cols.size());
  for (std::size_t j : cols) rows.push_back(frame.col(j));
  return rowspace_rref(QMat::from_rows(rows, frame.rows()));
}

void check_face_pair(const Fan& fan, const PLMap& plm, std::size_t i, std::size_t j,
                     std::vector<Violation>& out) {
  const std::vector<std::size_t>& face = fan.intersection_face(i, j);
  const Chart& a = plm.charts[i];
  const Chart& b = plm.charts[j];
  const std::size_t r = plm.rank;
  const std::size_t d = face.size();

  // Key of a weight row: its values on the face ray generators. Two rows
  // restrict to the same functional on the face iff their keys coincide.
  auto keys_of = [&](const Chart& ch) {
    std::vector<QVec> keys(r, QVec(d, Rat(0)));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t t = 0; t < d; ++t)
        keys[k][t] = dot(ch.wmat.row(k), to_qvec(fan.rays()[face[t]]));
    return keys;
  };
  const std::vector<QVec> ka = keys_of(a);
  const std::vector<QVec> kb = keys_of(b);

  std::map<QVec, std::vector<std::size_t>> ga, gb;
  for (std::size_t k = 0; k < r; ++k) ga[ka[k]].push_back(k);
  for (std::size_t k = 0; k < r; ++k) gb[kb[k]].push_back(k);

  bool same_multiset = ga.size() == gb.size();
  if (same_multiset)
    for (const auto& [key, rows] : ga) {
      auto it = gb.find(key);
      if (it == gb.end() || it->second.size() != rows.size()) {
        same_multiset = false;
        break;
      }
    }
  if (!same_multiset) {
    out.push_back({"FaceAgreementViolation",
                   "weight multisets of cones " + index_set(a.cone) + " and " +
                       index_set(b.cone) + " differ on their common face " + index_set(face),
                   a.cone, b.cone});
    return;
  }

  const std::size_t m = ga.size();
  if (m <= 1) return;  // single weight group: both values are the trivial flag

  std::vector<QVec> keys;
  std::vector<std::vector<std::size_t>> rows_a, rows_b;
  keys.reserve(m);
  for (auto& [key, rows] : ga) {
    keys.push_back(key);
    rows_a.push_back(rows);
    rows_b.push_back(gb[key]);
  }

  // Spans only depend on the set of groups in a prefix, not on the order.
  std::map<std::vector<std::size_t>, bool> memo;
  auto prefix_equal = [&](std::vector<std::size_t> set) {
    std::sort(set.begin(), set.end());
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    std::vector<std::size_t> ca, cb;
    for (std::size_t g : set) {
      ca.insert(ca.end(), rows_a[g].begin(), rows_a[g].end());
      cb.insert(cb.end(), rows_b[g].begin(), rows_b[g].end());
    }
    bool eq = col_span(a.frame, ca) == col_span(b.frame, cb);
    memo.emplace(std::move(set), eq);
    return eq;
  };

  // The two charts agree everywhere on the face iff the cumulative spans agree on every
  // strict weight order realized somewhere on the face: tie points are
  // limits of full-dimensional order cells, and their flag steps are the
  // cell prefixes at tie block boundaries.
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::vector<LinIneq> cons;
    for (std::size_t t = 0; t < d; ++t) {
      QVec e(d, Rat(0));
      e[t] = 1;
      cons.push_back({e, Rat(0)});
    }
    for (std::size_t t = 0; t + 1 < m; ++t) {
      QVec diff(d, Rat(0));
      for (std::size_t s = 0; s < d; ++s)
        diff[s] = keys[perm[t]][s] - keys[perm[t + 1]][s];
      cons.push_back({diff, Rat(1)});  // strict separation, rescaled
    }
    if (!fm_point(cons, d)) continue;
    for (std::size_t t = 1; t < m; ++t) {
      if (prefix_equal({perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(t)})) continue;
      out.push_back({"FaceAgreementViolation",
                     "charts of cones " + index_set(a.cone) + " and " + index_set(b.cone) +
                         " take different values on their common face " + index_set(face),
                     a.cone, b.cone});
      return;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

PLMap make_plmap(const Fan& fan, std::size_t rank, std::vector<Chart> charts) {
  if (rank == 0) fail(Err::Input, "RankMismatch", "rank must be positive");
  const std::size_t nc = fan.maximal_cones().size();
  if (charts.size() != nc)
    fail(Err::Input, "ChartConeMismatch",
         "expected " + std::to_string(nc) + " charts, got " + std::to_string(charts.size()));
  const std::size_t n = fan.lattice_rank();

  std::vector<Chart> ordered(nc);
  std::vector<bool> seen(nc, false);
  for (Chart& ch : charts) {
    std::sort(ch.cone.begin(), ch.cone.end());
    std::size_t pos = nc;
    for (std::size_t i = 0; i < nc; ++i)
      if (fan.maximal_cones()[i].rays == ch.cone) {
        pos = i;
        break;
      }
    if (pos == nc)
      fail(Err::Input, "ChartConeMismatch",
           "chart cone " + index_set(ch.cone) + " is not a maximal cone of the fan");
    if (seen[pos])
      fail(Err::Input, "ChartConeMismatch", "two charts for cone " + index_set(ch.cone));
    if (ch.frame.rows() != rank || ch.frame.cols() != rank)
      fail(Err::Input, "RankMismatch",
           "frame of chart " + index_set(ch.cone) + " must be " + std::to_string(rank) + "x" +
               std::to_string(rank));
    if (ch.frame.det() == 0)
      fail(Err::Input, "SingularFrame", "frame of chart " + index_set(ch.cone) + " is singular");
    if (ch.wmat.rows() != rank || ch.wmat.cols() != n)
      fail(Err::Input, "RankMismatch",
           "weight matrix of chart " + index_set(ch.cone) + " must be " + std::to_string(rank) +
               "x" + std::to_string(n));
    seen[pos] = true;
    ordered[pos] = std::move(ch);
  }
  return PLMap{rank, std::move(ordered)};
}

std::vector<Violation> validate(const Fan& fan, const PLMap& plm) {
  const std::size_t nc = fan.maximal_cones().size();
  if (plm.charts.size() != nc)
    fail(Err::Input, "ChartConeMismatch", "chart list does not match the fan");
  for (std::size_t i = 0; i < nc; ++i)
    if (plm.charts[i].cone != fan.maximal_cones()[i].rays)
      fail(Err::Input, "ChartConeMismatch", "chart list does not match the fan");

  std::vector<Violation> out;

  // Lattice points of a cone must get integer weights; the saturated basis
  // of the cone's span generates all of them.
  for (std::size_t i = 0; i < nc; ++i) {
    const Cone& c = fan.maximal_cones()[i];
    const Chart& ch = plm.charts[i];
    for (const ZVec& bvec : c.sat_basis) {
      QVec w = ch.wmat.mul_vec(to_qvec(bvec));
      bool ok = true;
      for (const Rat& x : w) ok = ok && is_integer(x);
      if (!ok) {
        out.push_back({"IntegralityViolation",
                       "lattice vector " + qvec_str(to_qvec(bvec)) + " of cone " +
                           index_set(c.rays) + " has weights " + qvec_str(w),
                       c.rays,
                       {}});
        break;
      }
    }
  }

  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = i + 1; j < nc; ++j) check_face_pair(fan, plm, i, j, out);

  return out;
}

WeightedFlag evaluate(const Fan& fan, const PLMap& plm, const QVec& v) {
  if (v.size() != fan.lattice_rank())
    fail(Err::Input, "RankMismatch", "point has length " + std::to_string(v.size()) +
                                         ", lattice rank is " +
                                         std::to_string(fan.lattice_rank()));
  if (plm.charts.size() != fan.maximal_cones().size())
    fail(Err::Input, "ChartConeMismatch", "chart list does not match the fan");
  for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i) {
    const Cone& c = fan.maximal_cones()[i];
    std::vector<QVec> gens;
    gens.reserve(c.rays.size());
    for (std::size_t rix : c.rays) gens.push_back(to_qvec(fan.rays()[rix]));
    if (!cone_member(v, gens)) continue;
    const Chart& ch = plm.charts[i];
    return weighted_flag_from_frame(ch.frame, ch.wmat.mul_vec(v));
  }
  fail(Err::Input, "PointOutsideSupport",
       "point " + qvec_str(v) + " is outside the support of the fan");
}

}  // namespace tpb

#include "building.hpp"

#include <algorithm>
#include <map>

namespace tpb {

namespace {

void check_chain(std::size_t rank, const std::vector<QMat>& steps) {
  if (steps.empty()) fail(Err::Input, "InvalidFlag", "flag needs at least one step");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].cols() != rank)
      fail(Err::Input, "RankMismatch", "flag step has wrong ambient dimension");
    if (i > 0) {
      if (!subspace_subset(steps[i - 1], steps[i]) || steps[i - 1].rows() >= steps[i].rows())
        fail(Err::Input, "InvalidFlag", "flag steps must strictly increase");
    }
  }
  if (steps.back().rows() != rank)
    fail(Err::Input, "InvalidFlag", "last flag step must be the full space");
}

}  // namespace

PlainFlag make_plain_flag(std::size_t rank, const std::vector<QMat>& proper_steps) {
  PlainFlag f;
  f.rank = rank;
  for (const auto& s : proper_steps) f.steps.push_back(rowspace_rref(s));
  if (f.steps.empty() || f.steps.back().rows() != rank)
    f.steps.push_back(QMat::identity(rank));
  check_chain(rank, f.steps);
  return f;
}

WeightedFlag make_weighted_flag(std::size_t rank, const std::vector<QMat>& steps,
                                const QVec& weights) {
  WeightedFlag wf;
  wf.rank = rank;
  for (const auto& s : steps) wf.steps.push_back(rowspace_rref(s));
  wf.weights = weights;
  check_chain(rank, wf.steps);
  if (wf.weights.size() != wf.steps.size())
    fail(Err::Input, "InvalidFlag", "one weight per flag step required");
  for (std::size_t i = 0; i + 1 < wf.weights.size(); ++i)
    if (!(wf.weights[i] > wf.weights[i + 1]))
      fail(Err::Input, "InvalidFlag", "weights must strictly decrease");
  return wf;
}

WeightedFlag weighted_flag_from_frame(const QMat& frame, const QVec& weights) {
  std::size_t r = frame.rows();
  if (frame.cols() != r || weights.size() != r)
    fail(Err::Input, "RankMismatch", "frame must be square with one weight per column");
  if (frame.det() == 0) fail(Err::Input, "SingularFrame", "frame must be invertible");
  QVec distinct = weights;
  std::sort(distinct.begin(), distinct.end(), std::greater<Rat>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<QMat> steps;
  for (const Rat& t : distinct) {
    std::vector<QVec> cols;
    for (std::size_t j = 0; j < r; ++j)
      if (weights[j] >= t) cols.push_back(frame.col(j));
    steps.push_back(rowspace_rref(QMat::from_rows(cols, r)));
  }
  WeightedFlag wf;
  wf.rank = r;
  wf.steps = std::move(steps);
  wf.weights = std::move(distinct);
  return wf;
}

bool wf_equal(const WeightedFlag& a, const WeightedFlag& b) { return a == b; }

PlainFlag strip_weights(const WeightedFlag& wf) {
  PlainFlag f;
  f.rank = wf.rank;
  f.steps = wf.steps;
  return f;
}

std::vector<std::size_t> flag_type(const PlainFlag& f) {
  std::vector<std::size_t> type;
  std::size_t prev = 0;
  for (const auto& s : f.steps) {
    type.push_back(s.rows() - prev);
    prev = s.rows();
  }
  return type;
}

std::size_t min_step_index(const PlainFlag& f, const QVec& v) {
  for (std::size_t i = 0; i < f.steps.size(); ++i)
    if (subspace_contains(f.steps[i], v)) return i;
  fail(Err::Internal, "FlagChain", "full space step missing from flag");
}

bool basis_adapted(const QMat& basis, const PlainFlag& f) {
  for (const auto& s : f.steps) {
    std::size_t inside = 0;
    for (std::size_t j = 0; j < basis.cols(); ++j)
      if (subspace_contains(s, basis.col(j))) ++inside;
    if (inside != s.rows()) return false;
  }
  return true;
}

namespace {

QMat map_subspace(const QMat& g, const QMat& space) {
  // Rows span the subspace; images of the rows span the image.
  return rowspace_rref(space.mul(g.transpose()));
}

}  // namespace

PlainFlag apply_matrix(const QMat& g, const PlainFlag& f) {
  if (g.rows() != f.rank || g.cols() != f.rank)
    fail(Err::Input, "RankMismatch", "matrix size does not match flag rank");
  if (g.det() == 0) fail(Err::Input, "SingularFrame", "flag transport needs an invertible matrix");
  PlainFlag out;
  out.rank = f.rank;
  for (const auto& s : f.steps) out.steps.push_back(map_subspace(g, s));
  return out;
}

WeightedFlag apply_matrix(const QMat& g, const WeightedFlag& wf) {
  WeightedFlag out;
  out.rank = wf.rank;
  out.weights = wf.weights;
  PlainFlag mapped = apply_matrix(g, strip_weights(wf));
  out.steps = std::move(mapped.steps);
  return out;
}

std::optional<QMat> common_splitting(const std::vector<PlainFlag>& flags) {
  if (flags.empty()) fail(Err::Input, "InvalidFlag", "need at least one flag");
  std::size_t r = flags[0].rank;
  for (const auto& f : flags)
    if (f.rank != r) fail(Err::Input, "RankMismatch", "flags have different ranks");

  std::size_t m = flags.size();
  std::vector<std::size_t> lens(m);
  for (std::size_t j = 0; j < m; ++j) lens[j] = flags[j].steps.size();

  QMat zero_space(0, r);
  std::map<std::vector<std::size_t>, QMat> V;
  std::vector<QVec> chosen;

  std::vector<std::size_t> a(m, 0);
  while (true) {
    QMat v = flags[0].steps[a[0]];
    for (std::size_t j = 1; j < m; ++j) v = subspace_intersection(v, flags[j].steps[a[j]]);
    V[a] = v;

    QMat t = zero_space;
    for (std::size_t j = 0; j < m; ++j) {
      if (a[j] == 0) continue;
      --a[j];
      t = subspace_sum(t, V.at(a));
      ++a[j];
    }

    // Extend t to v; the new rows are this multi-index's graded piece.
    QMat cur = t;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      QVec row = v.row(i);
      if (!subspace_contains(cur, row)) {
        chosen.push_back(row);
        cur = subspace_sum(cur, rowspace_rref(QMat::from_rows({row}, r)));
      }
    }

    // Odometer, last coordinate fastest.
    std::size_t j = m;
    while (j > 0) {
      --j;
      if (++a[j] < lens[j]) break;
      a[j] = 0;
      if (j == 0) goto done;
    }
  }
done:
  if (chosen.size() != r) return std::nullopt;
  QMat basis = QMat::from_cols(chosen, r);
  if (!basis.inverse()) fail(Err::Internal, "SplittingBasis", "graded pieces not independent");
  for (const auto& f : flags)
    if (!basis_adapted(basis, f)) fail(Err::Internal, "SplittingBasis", "basis not adapted");
  return basis;
}

KlyachkoFiltration make_filtration(std::size_t rank,
                                   const std::vector<std::pair<Int, QMat>>& jumps) {
  KlyachkoFiltration f;
  f.rank = rank;
  std::vector<QMat> steps;
  for (const auto& [idx, sub] : jumps) {
    f.jumps.emplace_back(idx, rowspace_rref(sub));
    steps.push_back(f.jumps.back().second);
  }
  check_chain(rank, steps);
  for (std::size_t i = 0; i + 1 < f.jumps.size(); ++i)
    if (!(f.jumps[i].first > f.jumps[i + 1].first))
      fail(Err::Input, "InvalidFiltration", "jump indices must strictly decrease");
  return f;
}

QMat filtration_at(const KlyachkoFiltration& f, const Int& i) {
  QMat result(0, f.rank);
  for (const auto& [idx, sub] : f.jumps)
    if (idx >= i) result = sub;  // jumps are increasing, keep the largest
  return result;
}

WeightedFlag filtration_to_flag(const KlyachkoFiltration& f) {
  WeightedFlag wf;
  wf.rank = f.rank;
  for (const auto& [idx, sub] : f.jumps) {
    wf.steps.push_back(sub);
    wf.weights.emplace_back(idx);
  }
  return wf;
}

KlyachkoFiltration flag_to_filtration(const WeightedFlag& wf) {
  KlyachkoFiltration f;
  f.rank = wf.rank;
  for (std::size_t i = 0; i < wf.steps.size(); ++i) {
    if (!is_integer(wf.weights[i]))
      fail(Err::Input, "NonIntegralWeight", "filtration indices must be integers");
    f.jumps.emplace_back(wf.weights[i].get_num(), wf.steps[i]);
  }
  return f;
}

}  // namespace tpb

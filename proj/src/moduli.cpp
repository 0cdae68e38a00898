#include "moduli.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "weyl.hpp"

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

// One weight per flag step, decreasing: the distinct values of the ray's
// dominant weight vector. Throws TypeMismatch when the flag's dimension
// jumps disagree with the weight multiplicities.
std::vector<Int> step_weights_for_ray(const Fan& fan, const PsiData& psi, const Candidate& cand,
                                      std::size_t ray) {
  ZVec dom = psi_ray_weights(fan, psi, ray);
  ParabolicType type = parabolic_type(dom);
  std::vector<std::size_t> ftype = flag_type(cand.flags[ray]);
  if (ftype != type)
    fail(Err::Input, "TypeMismatch",
         "flag at ray " + std::to_string(ray) + " has dimension jumps " + index_set(ftype) +
             ", the ray weights demand " + index_set(type));
  std::vector<Int> out;
  out.reserve(type.size());
  std::size_t pos = 0;
  for (std::size_t run : type) {
    out.push_back(dom[pos]);
    pos += run;
  }
  return out;
}

ConeReport check_cone_impl(const Fan& fan, const Candidate& cand,
                           const std::vector<std::vector<Int>>& stepw,
                           std::vector<std::size_t> rays_sorted) {
  ConeReport rep;
  rep.cone = std::move(rays_sorted);

  if (rep.cone.empty()) {
    // The zero face carries no flags; any basis is adapted to nothing.
    ConeWitness wit;
    wit.basis = QMat::identity(cand.rank);
    rep.witness = std::move(wit);
    return rep;
  }

  std::vector<PlainFlag> flags;
  flags.reserve(rep.cone.size());
  for (std::size_t rho : rep.cone) flags.push_back(cand.flags[rho]);

  auto basis = common_splitting(flags);
  if (!basis) {
    rep.failure = "NoCommonSplitting";
    return rep;
  }

  const std::size_t r = cand.rank;
  const std::size_t m = rep.cone.size();
  ConeWitness wit;
  wit.basis = *basis;
  for (std::size_t t = 0; t < m; ++t) {
    ZVec g(r);
    for (std::size_t i = 0; i < r; ++i)
      g[i] = stepw[rep.cone[t]][min_step_index(flags[t], basis->col(i))];
    wit.gammas.push_back(std::move(g));
  }
  rep.witness = std::move(wit);

  Cone cone = fan.make_cone(rep.cone);
  if (!is_simplicial(cone)) {
    const std::size_t n = fan.lattice_rank();
    QMat raymat(n, m);
    for (std::size_t t = 0; t < m; ++t) {
      QVec col = to_qvec(fan.rays()[rep.cone[t]]);
      for (std::size_t i = 0; i < n; ++i) raymat.at(i, t) = col[i];
    }
    for (const QVec& rel : kernel_basis(raymat)) {
      QVec resid(r, Rat(0));
      for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < r; ++i)
          resid[i] += rel[t] * Rat(rep.witness->gammas[t][i]);
      if (vec_is_zero(resid)) continue;
      rep.kernel_failures.push_back(rel);
      rep.residuals.push_back(std::move(resid));
    }
    if (!rep.kernel_failures.empty()) rep.failure = "UnbalancedWeights";
  }
  return rep;
}

std::vector<std::vector<Int>> all_step_weights(const Fan& fan, const PsiData& psi,
                                               const Candidate& cand) {
  std::vector<std::vector<Int>> stepw(fan.rays().size());
  for (std::size_t rho = 0; rho < fan.rays().size(); ++rho)
    stepw[rho] = step_weights_for_ray(fan, psi, cand, rho);
  return stepw;
}

void require_candidate_shape(const Fan& fan, const PsiData& psi, const Candidate& cand) {
  if (cand.rank != psi.rank)
    fail(Err::Input, "RankMismatch", "candidate rank " + std::to_string(cand.rank) +
                                         " does not match class data rank " +
                                         std::to_string(psi.rank));
  if (cand.flags.size() != fan.rays().size())
    fail(Err::Input, "RayCountMismatch",
         "candidate has " + std::to_string(cand.flags.size()) + " flags, fan has " +
             std::to_string(fan.rays().size()) + " rays");
}

}  // namespace

Candidate make_candidate(const Fan& fan, std::size_t rank, std::vector<PlainFlag> flags) {
  if (rank == 0) fail(Err::Input, "RankMismatch", "rank must be positive");
  if (flags.size() != fan.rays().size())
    fail(Err::Input, "RayCountMismatch", "expected " + std::to_string(fan.rays().size()) +
                                             " flags, got " + std::to_string(flags.size()));
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i].rank != rank)
      fail(Err::Input, "RankMismatch",
           "flag at ray " + std::to_string(i) + " lives in the wrong space");
  return Candidate{rank, std::move(flags)};
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Accepted:
      return "ACCEPTED";
    case Status::Rejected:
      return "REJECTED";
    default:
      return "INDETERMINATE";
  }
}

ConeReport check_cone(const Fan& fan, const PsiData& psi, const Candidate& cand,
                      const std::vector<std::size_t>& ray_indices) {
  require_candidate_shape(fan, psi, cand);
  std::vector<std::size_t> sorted = ray_indices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<Int>> stepw(fan.rays().size());
  for (std::size_t rho : sorted) {
    if (rho >= fan.rays().size())
      fail(Err::Input, "BadRayIndex", "ray index " + std::to_string(rho) + " out of range");
    stepw[rho] = step_weights_for_ray(fan, psi, cand, rho);
  }
  return check_cone_impl(fan, cand, stepw, std::move(sorted));
}

Verdict check_membership(const Fan& fan, const PsiData& psi, const Candidate& cand,
                         std::size_t parallel) {
  require_candidate_shape(fan, psi, cand);
  const std::vector<std::vector<Int>> stepw = all_step_weights(fan, psi, cand);

  const std::size_t nc = fan.maximal_cones().size();
  std::vector<ConeReport> reports(nc);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      reports[i] = check_cone_impl(fan, cand, stepw, fan.maximal_cones()[i].rays);
  };
  if (parallel <= 1 || nc <= 1) {
    work(0, nc);
  } else {
    const std::size_t chunk = (nc + parallel - 1) / parallel;
    std::vector<std::future<void>> jobs;
    for (std::size_t lo = 0; lo < nc; lo += chunk)
      jobs.push_back(std::async(std::launch::async, work, lo, std::min(lo + chunk, nc)));
    for (auto& j : jobs) j.get();
  }

  Verdict v;
  v.cones = std::move(reports);
  bool rejected = false, unbalanced = false;
  for (const ConeReport& rep : v.cones) {
    rejected = rejected || rep.failure == "NoCommonSplitting";
    unbalanced = unbalanced || rep.failure == "UnbalancedWeights";
  }
  v.status =
      rejected ? Status::Rejected : (unbalanced ? Status::Indeterminate : Status::Accepted);
  return v;
}

PLMap reconstruct_plmap(const Fan& fan, const PsiData& psi, const Candidate& cand,
                        const Verdict& verdict) {
  require_candidate_shape(fan, psi, cand);
  if (verdict.status != Status::Accepted)
    fail(Err::Input, "ReconstructionInconsistent",
         std::string("verdict is ") + status_name(verdict.status) + ", not ACCEPTED");
  const std::size_t nc = fan.maximal_cones().size();
  if (verdict.cones.size() != nc)
    fail(Err::Input, "ReconstructionInconsistent", "verdict does not match the fan");

  const std::size_t r = psi.rank;
  const std::size_t n = fan.lattice_rank();
  std::vector<Chart> charts;
  charts.reserve(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    const ConeReport& rep = verdict.cones[i];
    if (rep.cone != fan.maximal_cones()[i].rays || !rep.witness)
      fail(Err::Input, "ReconstructionInconsistent",
           "verdict cone " + index_set(rep.cone) + " carries no usable witness");
    const std::size_t m = rep.cone.size();
    if (rep.witness->gammas.size() != m)
      fail(Err::Input, "ReconstructionInconsistent",
           "witness of cone " + index_set(rep.cone) + " is malformed");

    QMat rayT(m, n);  // transposed ray matrix: one ray per row
    QMat gammaT(m, r);
    for (std::size_t t = 0; t < m; ++t) {
      QVec ray = to_qvec(fan.rays()[rep.cone[t]]);
      for (std::size_t j = 0; j < n; ++j) rayT.at(t, j) = ray[j];
      if (rep.witness->gammas[t].size() != r)
        fail(Err::Input, "ReconstructionInconsistent",
             "witness of cone " + index_set(rep.cone) + " is malformed");
      for (std::size_t k = 0; k < r; ++k) gammaT.at(t, k) = Rat(rep.witness->gammas[t][k]);
    }
    auto wt = solve_columns(rayT, gammaT);
    if (!wt)
      fail(Err::Input, "ReconstructionInconsistent",
           "no weight matrix realizes the witness weights on cone " + index_set(rep.cone));
    charts.push_back(Chart{rep.cone, rep.witness->basis, wt->transpose()});
  }

  PLMap plm = make_plmap(fan, r, std::move(charts));
  if (!validate(fan, plm).empty())
    fail(Err::Input, "ReconstructionInconsistent", "reconstructed map fails validation");
  for (std::size_t k = 1; k <= r; ++k) {
    if (chern_weil(fan, plm, elem_sym(r, k)) == psi.classes[k - 1]) continue;
    fail(Err::Input, "ReconstructionInconsistent",
         "reconstructed map does not reproduce class " + std::to_string(k));
  }
  return plm;
}

std::vector<Candidate> census(const Fan& fan, const PsiData& psi, std::size_t limit,
                              std::size_t parallel) {
  const std::size_t r = psi.rank;
  const std::size_t nrays = fan.rays().size();

  // Per ray, every coordinate flag of the demanded type.
  std::vector<std::vector<PlainFlag>> options(nrays);
  for (std::size_t rho = 0; rho < nrays; ++rho) {
    ZVec dom = psi_ray_weights(fan, psi, rho);
    ParabolicType type = parabolic_type(dom);
    for (const auto& partition : fixed_points(type)) {
      std::vector<QMat> steps;
      std::vector<std::size_t> acc;
      for (std::size_t b = 0; b + 1 < partition.size(); ++b) {
        acc.insert(acc.end(), partition[b].begin(), partition[b].end());
        std::sort(acc.begin(), acc.end());
        QMat step(acc.size(), r);
        for (std::size_t row = 0; row < acc.size(); ++row) step.at(row, acc[row]) = 1;
        steps.push_back(step);
      }
      options[rho].push_back(make_plain_flag(r, steps));
    }
  }

  Int total = 1;
  for (const auto& opts : options) total *= static_cast<unsigned long>(opts.size());
  if (total > Int(static_cast<unsigned long>(limit)))
    fail(Err::Input, "CensusLimitExceeded",
         "census has " + total.get_str() + " tuples, limit is " + std::to_string(limit));
  const std::size_t count = total.get_ui();
  if (count == 0) return {};

  auto tuple_at = [&](std::size_t index) {
    std::vector<PlainFlag> flags(nrays);
    for (std::size_t rho = nrays; rho-- > 0;) {
      flags[rho] = options[rho][index % options[rho].size()];
      index /= options[rho].size();
    }
    return Candidate{r, std::move(flags)};
  };

  auto work = [&](std::size_t lo, std::size_t hi) {
    std::vector<Candidate> local;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      Candidate cand = tuple_at(idx);
      if (check_membership(fan, psi, cand, 1).status == Status::Accepted)
        local.push_back(std::move(cand));
    }
    return local;
  };

  std::vector<Candidate> out;
  if (parallel <= 1 || count <= 1) {
    out = work(0, count);
  } else {
    const std::size_t chunk = (count + parallel - 1) / parallel;
    std::vector<std::future<std::vector<Candidate>>> jobs;
    for (std::size_t lo = 0; lo < count; lo += chunk)
      jobs.push_back(std::async(std::launch::async, work, lo, std::min(lo + chunk, count)));
    for (auto& j : jobs) {
      std::vector<Candidate> part = j.get();
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  return out;
}

Candidate act(const QMat& g, const Candidate& cand) {
  Candidate out;
  out.rank = cand.rank;
  out.flags.reserve(cand.flags.size());
  for (const PlainFlag& f : cand.flags) out.flags.push_back(apply_matrix(g, f));
  return out;
}

}  // namespace tpb

#include "fan.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace tpb {

bool is_simplicial(const Cone& c) { return c.rays.size() == c.dim; }

namespace {

std::string ray_list(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << "}";
  return os.str();
}

// Feasibility of u.r = 0 on `zero`, u.r >= 1 on `pos`, u.r <= -1 on `neg`.
bool separation_feasible(const std::vector<QVec>& zero, const std::vector<QVec>& pos,
                         const std::vector<QVec>& neg, std::size_t n) {
  std::vector<LinIneq> cons;
  for (const auto& r : zero) {
    cons.push_back({r, Rat(0)});
    cons.push_back({vec_scale(Rat(-1), r), Rat(0)});
  }
  for (const auto& r : pos) cons.push_back({r, Rat(1)});
  for (const auto& r : neg) cons.push_back({vec_scale(Rat(-1), r), Rat(1)});
  return fm_point(cons, n).has_value();
}

}  // namespace

Cone Fan::make_cone(std::vector<std::size_t> ray_indices) const {
  std::sort(ray_indices.begin(), ray_indices.end());
  Cone c;
  c.rays = std::move(ray_indices);
  std::vector<ZVec> gens;
  for (std::size_t i : c.rays) gens.push_back(rays_[i]);
  c.sat_basis = saturated_lattice_basis(gens, n_);
  c.dim = c.sat_basis.size();
  return c;
}

Fan Fan::build(std::size_t lattice_rank, std::vector<ZVec> rays,
               std::vector<std::vector<std::size_t>> maximal_cones) {
  Fan fan;
  fan.n_ = lattice_rank;
  if (lattice_rank == 0) fail(Err::Input, "BadLatticeRank", "lattice rank must be positive");

  for (std::size_t i = 0; i < rays.size(); ++i) {
    const ZVec& r = rays[i];
    if (r.size() != lattice_rank)
      fail(Err::Input, "RankMismatch", "ray " + std::to_string(i) + " has wrong dimension");
    bool zero = true;
    for (const auto& x : r)
      if (x != 0) zero = false;
    if (zero || primitive_vector(r) != r)
      fail(Err::Invalid, "NonPrimitiveRay", "ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays[j] == r)
        fail(Err::Invalid, "DuplicateRay",
             "rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  fan.rays_ = std::move(rays);

  std::vector<bool> used(fan.rays_.size(), false);
  for (auto& cone : maximal_cones) {
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      fail(Err::Input, "BadConeIndex", "cone " + ray_list(cone) + " repeats a ray");
    for (std::size_t i : cone) {
      if (i >= fan.rays_.size())
        fail(Err::Input, "BadConeIndex", "cone references missing ray " + std::to_string(i));
      used[i] = true;
    }
    if (cone.empty()) fail(Err::Input, "BadConeIndex", "maximal cone must have rays");
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      fail(Err::Invalid, "UnusedRay", "ray " + std::to_string(i) + " not in any maximal cone");

  auto qrays = [&](const std::vector<std::size_t>& idx) {
    std::vector<QVec> out;
    for (std::size_t i : idx) out.push_back(to_qvec(fan.rays_[i]));
    return out;
  };

  for (const auto& cone : maximal_cones) {
    std::vector<QVec> gens = qrays(cone);
    // A nonzero nonnegative combination summing to zero exposes a line.
    std::vector<LinIneq> cons;
    std::size_t m = gens.size();
    for (std::size_t d = 0; d < lattice_rank; ++d) {
      QVec row(m);
      for (std::size_t i = 0; i < m; ++i) row[i] = gens[i][d];
      cons.push_back({row, Rat(0)});
      cons.push_back({vec_scale(Rat(-1), row), Rat(0)});
    }
    for (std::size_t i = 0; i < m; ++i) {
      QVec e(m, Rat(0));
      e[i] = 1;
      cons.push_back({e, Rat(0)});
    }
    cons.push_back({QVec(m, Rat(1)), Rat(1)});
    if (fm_point(cons, m))
      fail(Err::Invalid, "NotStronglyConvex", "cone " + ray_list(cone) + " contains a line");

    for (std::size_t i = 0; i < m; ++i) {
      std::vector<QVec> others;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) others.push_back(gens[j]);
      if (cone_member(gens[i], others))
        fail(Err::Invalid, "NotAFan",
             "ray " + std::to_string(cone[i]) + " of cone " + ray_list(cone) +
                 " is not an extremal generator");
    }
  }

  for (std::size_t i = 0; i < maximal_cones.size(); ++i) {
    for (std::size_t j = 0; j < maximal_cones.size(); ++j) {
      if (i == j) continue;
      bool contained = true;
      std::vector<QVec> other = qrays(maximal_cones[j]);
      for (std::size_t ri : maximal_cones[i])
        if (!cone_member(to_qvec(fan.rays_[ri]), other)) contained = false;
      if (contained)
        fail(Err::Invalid, "NotMaximalCone",
             "cone " + ray_list(maximal_cones[i]) + " lies inside " +
                 ray_list(maximal_cones[j]));
    }
  }

  // Common-face axiom, pairwise, via a separating functional.
  for (std::size_t i = 0; i < maximal_cones.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal_cones.size(); ++j) {
      std::vector<QVec> ci = qrays(maximal_cones[i]), cj = qrays(maximal_cones[j]);
      std::set<std::size_t> common;
      for (std::size_t t = 0; t < maximal_cones[i].size(); ++t)
        if (cone_member(ci[t], cj)) common.insert(maximal_cones[i][t]);
      for (std::size_t t = 0; t < maximal_cones[j].size(); ++t)
        if (cone_member(cj[t], ci)) common.insert(maximal_cones[j][t]);
      std::vector<QVec> zero, pos, neg;
      for (std::size_t t = 0; t < maximal_cones[i].size(); ++t)
        (common.count(maximal_cones[i][t]) ? zero : pos).push_back(ci[t]);
      for (std::size_t t = 0; t < maximal_cones[j].size(); ++t)
        (common.count(maximal_cones[j][t]) ? zero : neg).push_back(cj[t]);
      if (!separation_feasible(zero, pos, neg, lattice_rank))
        fail(Err::Invalid, "NotAFan",
             "cones " + ray_list(maximal_cones[i]) + " and " + ray_list(maximal_cones[j]) +
                 " do not meet in a common face");
      fan.shared_[{i, j}] = std::vector<std::size_t>(common.begin(), common.end());
    }
  }

  for (const auto& cone : maximal_cones) fan.max_cones_.push_back(fan.make_cone(cone));

  // Face enumeration: subsets S with a functional vanishing on S and
  // positive on the rest of the cone.
  for (const auto& cone : fan.max_cones_) {
    std::vector<std::vector<std::size_t>> faces;
    std::size_t m = cone.rays.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      std::vector<QVec> zero, pos;
      std::vector<std::size_t> sub;
      for (std::size_t t = 0; t < m; ++t) {
        if (mask & (std::size_t(1) << t)) {
          sub.push_back(cone.rays[t]);
          zero.push_back(to_qvec(fan.rays_[cone.rays[t]]));
        } else {
          pos.push_back(to_qvec(fan.rays_[cone.rays[t]]));
        }
      }
      if (separation_feasible(zero, pos, {}, lattice_rank)) faces.push_back(sub);
    }
    fan.faces_.push_back(std::move(faces));
  }

  return fan;
}

const std::vector<std::size_t>& Fan::intersection_face(std::size_t i, std::size_t j) const {
  if (i == j) return max_cones_[i].rays;
  if (i > j) std::swap(i, j);
  return shared_.at({i, j});
}

std::map<std::vector<std::size_t>, std::vector<std::size_t>> Fan::facets_shared() const {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < max_cones_.size(); ++i) {
    for (const auto& face : faces_[i]) {
      std::vector<ZVec> gens;
      for (std::size_t t : face) gens.push_back(rays_[t]);
      if (saturated_lattice_basis(gens, n_).size() + 1 != n_) continue;
      out[face].push_back(i);
    }
  }
  return out;
}

bool Fan::is_complete() const {
  if (max_cones_.empty()) return false;
  for (const auto& c : max_cones_)
    if (c.dim != n_) return false;
  auto facets = facets_shared();
  for (const auto& [face, incident] : facets)
    if (incident.size() != 2) return false;
  // Facet-connectivity of the dual graph.
  std::vector<std::vector<std::size_t>> adj(max_cones_.size());
  for (const auto& [face, incident] : facets) {
    adj[incident[0]].push_back(incident[1]);
    adj[incident[1]].push_back(incident[0]);
  }
  std::vector<bool> seen(max_cones_.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    std::size_t i = q.front();
    q.pop();
    for (std::size_t j : adj[i])
      if (!seen[j]) {
        seen[j] = true;
        q.push(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool Fan::is_simplicial() const {
  return std::all_of(max_cones_.begin(), max_cones_.end(),
                     [](const Cone& c) { return tpb::is_simplicial(c); });
}

std::optional<Cone> Fan::locate(const QVec& v) const {
  if (v.size() != n_) fail(Err::Input, "RankMismatch", "point has wrong dimension");
  for (std::size_t i = 0; i < max_cones_.size(); ++i) {
    std::vector<QVec> gens;
    for (std::size_t t : max_cones_[i].rays) gens.push_back(to_qvec(rays_[t]));
    if (!cone_member(v, gens)) continue;
    const std::vector<std::size_t>* best = nullptr;
    std::size_t best_dim = n_ + 1;
    for (const auto& face : faces_[i]) {
      std::vector<QVec> fgens;
      for (std::size_t t : face) fgens.push_back(to_qvec(rays_[t]));
      if (!cone_member(v, fgens)) continue;
      Cone fc = make_cone(face);
      if (fc.dim < best_dim) {
        best_dim = fc.dim;
        best = &face;
      }
    }
    return make_cone(*best);
  }
  return std::nullopt;
}

}  // namespace tpb

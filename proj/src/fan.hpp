#pragma once

#include <map>
#include <optional>
#include <vector>

#include "error.hpp"
#include "exactlin.hpp"
#include "rational.hpp"

namespace tpb {

struct Cone {
  std::vector<std::size_t> rays;   // sorted fan ray indices
  std::size_t dim = 0;             // rank of the ray matrix
  std::vector<ZVec> sat_basis;     // Z-basis of N restricted to span(cone)

  bool operator==(const Cone&) const = default;
};

bool is_simplicial(const Cone& c);

// Rational polyhedral fan. Construction validates everything: primitive
// distinct rays, strong convexity, extremality of listed generators,
// maximality of listed cones, the pairwise common-face axiom, and that
// every stored ray is used. Immutable afterwards.
class Fan {
 public:
  static Fan build(std::size_t lattice_rank, std::vector<ZVec> rays,
                   std::vector<std::vector<std::size_t>> maximal_cones);

  std::size_t lattice_rank() const { return n_; }
  const std::vector<ZVec>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return max_cones_; }

  // Faces of maximal cone i as sorted ray-index sets, the zero face and
  // the cone itself included.
  const std::vector<std::vector<std::size_t>>& faces_of(std::size_t i) const {
    return faces_[i];
  }

  // Rays of the common face of two maximal cones.
  const std::vector<std::size_t>& intersection_face(std::size_t i, std::size_t j) const;

  // Every (n-1)-dimensional face with the maximal cones containing it.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets_shared() const;

  // Pure n-dimensional, facets paired, and facet-connected.
  bool is_complete() const;

  bool is_simplicial() const;

  // Minimal cone of the fan containing v, or nothing if v is outside the
  // support.
  std::optional<Cone> locate(const QVec& v) const;

  // Cone record (dim, saturated basis) for a set of fan ray indices.
  Cone make_cone(std::vector<std::size_t> ray_indices) const;

 private:
  std::size_t n_ = 0;
  std::vector<ZVec> rays_;
  std::vector<Cone> max_cones_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> shared_;
};

}  // namespace tpb

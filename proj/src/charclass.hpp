#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fan.hpp"
#include "plmap.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace tpb {

// Piecewise polynomial on a fan: one polynomial in the ambient lattice
// coordinates per maximal cone, agreeing on shared faces.
struct PiecewisePoly {
  std::size_t nvars = 0;        // ambient lattice rank
  std::vector<Poly> per_cone;   // aligned with fan.maximal_cones()

  bool operator==(const PiecewisePoly&) const = default;
};

// Validating constructor: pieces are keyed by maximal cone rays and get
// reordered to the fan's cone order; continuity across every shared face
// is required.
PiecewisePoly make_piecewise(const Fan& fan,
                             std::vector<std::pair<std::vector<std::size_t>, Poly>> pieces);

// Pointwise arithmetic (same fan alignment assumed).
PiecewisePoly pp_add(const PiecewisePoly& a, const PiecewisePoly& b);
PiecewisePoly pp_mul(const PiecewisePoly& a, const PiecewisePoly& b);
PiecewisePoly pp_scale(const Rat& c, const PiecewisePoly& a);

// Value at a point of the support; agrees across charts by continuity.
Rat pp_eval(const Fan& fan, const PiecewisePoly& pp, const QVec& v);

// Characteristic class of the map: substitute the weight rows of each
// chart into a symmetric polynomial q in rank variables. Frames never
// enter, so the result only depends on the map, not its presentation.
PiecewisePoly chern_weil(const Fan& fan, const PLMap& plm, const Poly& q);

// Full collection of generator classes: classes[k] plays the role of the
// degree k+1 elementary symmetric generator.
struct PsiData {
  std::size_t rank = 0;
  std::vector<PiecewisePoly> classes;

  bool operator==(const PsiData&) const = default;
};

PsiData make_psi(const Fan& fan, std::size_t rank, std::vector<PiecewisePoly> classes);

// One message per cone polynomial whose total degree exceeds its generator
// degree. Informational: such data never arises from a map.
std::vector<std::string> psi_degree_warnings(const Fan& fan, const PsiData& psi);

// The weights a compatible map would need along a ray: the class values at
// the ray generator are read as elementary symmetric values and the monic
// polynomial with those coefficients is split into integer roots, returned
// in decreasing order. Non-integral values or irrational splits reject the
// input.
ZVec psi_ray_weights(const Fan& fan, const PsiData& psi, std::size_t ray);

}  // namespace tpb

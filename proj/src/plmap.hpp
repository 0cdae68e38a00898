#pragma once

#include <string>
#include <vector>

#include "building.hpp"
#include "error.hpp"
#include "fan.hpp"
#include "rational.hpp"

namespace tpb {

// One chart of a piecewise linear map: on the named maximal cone the map
// sends v to the weighted flag built from `frame` with weights wmat * v.
struct Chart {
  std::vector<std::size_t> cone;  // sorted ray indices of a maximal cone
  QMat frame;                     // r x r, invertible
  QMat wmat;                      // r x n, rational

  bool operator==(const Chart&) const = default;
};

struct PLMap {
  std::size_t rank = 0;
  std::vector<Chart> charts;  // aligned with fan.maximal_cones()

  bool operator==(const PLMap&) const = default;
};

// Structural checks only (one chart per maximal cone, shapes, invertible
// frames); charts are reordered to the fan's cone order. Semantic checks
// live in validate().
PLMap make_plmap(const Fan& fan, std::size_t rank, std::vector<Chart> charts);

struct Violation {
  std::string kind;  // "IntegralityViolation" | "FaceAgreementViolation"
  std::string detail;
  std::vector<std::size_t> cone_a;
  std::vector<std::size_t> cone_b;  // empty for single-cone violations
};

// Empty iff the charts define one well-defined map into the building that
// sends lattice points of every cone to integer weight vectors. Face
// agreement is decided exactly: on each shared face the weight rows are
// grouped by their restriction, groups are matched across the two charts,
// and on every full-dimensional sign cell of the difference arrangement
// the cumulative frame spans are compared group by group.
std::vector<Violation> validate(const Fan& fan, const PLMap& plm);

// Value at a point of the support. Charts of different cones containing v
// agree whenever validate() passed.
WeightedFlag evaluate(const Fan& fan, const PLMap& plm, const QVec& v);

}  // namespace tpb

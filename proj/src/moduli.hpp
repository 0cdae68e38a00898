#pragma once

#include <optional>
#include <string>
#include <vector>

#include "building.hpp"
#include "charclass.hpp"
#include "error.hpp"
#include "fan.hpp"
#include "plmap.hpp"
#include "rational.hpp"

namespace tpb {

// Tuple of flags, one per fan ray. The dimension jumps of each flag must
// match the weight multiplicities of its ray (checked against class data
// by check_membership, not here).
struct Candidate {
  std::size_t rank = 0;
  std::vector<PlainFlag> flags;

  bool operator==(const Candidate&) const = default;
};

Candidate make_candidate(const Fan& fan, std::size_t rank, std::vector<PlainFlag> flags);

enum class Status { Accepted, Rejected, Indeterminate };

const char* status_name(Status s);  // ACCEPTED | REJECTED | INDETERMINATE

// Splitting basis of one cone together with the weight vector each ray
// assigns to the basis columns.
struct ConeWitness {
  QMat basis;
  std::vector<ZVec> gammas;  // aligned with the cone's ray list

  bool operator==(const ConeWitness&) const = default;
};

struct ConeReport {
  std::vector<std::size_t> cone;       // ray indices
  std::string failure;                 // "", "NoCommonSplitting", "UnbalancedWeights"
  std::optional<ConeWitness> witness;  // present unless no splitting exists
  std::vector<QVec> kernel_failures;   // ray relations with nonzero residual
  std::vector<QVec> residuals;         // the residuals, aligned

  bool operator==(const ConeReport&) const = default;
};

struct Verdict {
  Status status = Status::Rejected;
  std::vector<ConeReport> cones;  // fan cone order

  bool operator==(const Verdict&) const = default;
};

// Compatibility of one cone (any set of fan rays, maximal or not): a common
// splitting of the ray flags must exist, and for a non-simplicial cone the
// weight vectors must satisfy every linear relation among the rays.
ConeReport check_cone(const Fan& fan, const PsiData& psi, const Candidate& cand,
                      const std::vector<std::size_t>& ray_indices);

// Full membership test over the maximal cones. No splitting somewhere is a
// certified rejection; an unbalanced splitting is only indeterminate, since
// a different splitting might balance. parallel > 1 distributes the cones
// over that many threads; the verdict does not depend on the schedule.
Verdict check_membership(const Fan& fan, const PsiData& psi, const Candidate& cand,
                         std::size_t parallel = 1);

// Map behind an accepted candidate: per cone, the witness basis becomes the
// frame and the weight matrix is solved from the gammas on the ray
// coordinates. Validates and checks that the generator classes come back.
PLMap reconstruct_plmap(const Fan& fan, const PsiData& psi, const Candidate& cand,
                        const Verdict& verdict);

// All accepted tuples of coordinate flags, in odometer order over the per
// ray flag lists (last ray fastest). Errors when the tuple count exceeds
// the limit.
std::vector<Candidate> census(const Fan& fan, const PsiData& psi, std::size_t limit,
                              std::size_t parallel = 1);

// g applied to every flag.
Candidate act(const QMat& g, const Candidate& cand);

}  // namespace tpb

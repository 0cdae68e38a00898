#pragma once

#include <optional>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tpb {

// Flag of subspaces F_1 < F_2 < ... < F_k = Q^r. Each step is a reduced
// row echelon basis matrix, so equality of flags is equality of matrices.
struct PlainFlag {
  std::size_t rank = 0;
  std::vector<QMat> steps;  // strictly increasing, last one spans Q^r

  bool operator==(const PlainFlag&) const = default;
};

// Point of the extended building of GL(r): a flag with strictly
// decreasing rational weights attached to its steps.
struct WeightedFlag {
  std::size_t rank = 0;
  std::vector<QMat> steps;
  QVec weights;  // weights[i] belongs to steps[i]; strictly decreasing

  bool operator==(const WeightedFlag&) const = default;
};

// Validating constructors. Step matrices are canonicalized to reduced row
// echelon form; the chain must be strictly increasing. For make_plain_flag
// the full space is appended when the last given step is proper.
PlainFlag make_plain_flag(std::size_t rank, const std::vector<QMat>& proper_steps);
WeightedFlag make_weighted_flag(std::size_t rank, const std::vector<QMat>& steps,
                                const QVec& weights);

// Flag of spans of frame columns grouped by weight, largest weight first.
// Columns with equal weight share a step. Frame must be invertible.
WeightedFlag weighted_flag_from_frame(const QMat& frame, const QVec& weights);

bool wf_equal(const WeightedFlag& a, const WeightedFlag& b);

PlainFlag strip_weights(const WeightedFlag& wf);

// Dimension jumps (dim F_1, dim F_2 - dim F_1, ...): the parabolic type of
// the flag's stabilizer.
std::vector<std::size_t> flag_type(const PlainFlag& f);

// Smallest step index whose subspace contains v.
std::size_t min_step_index(const PlainFlag& f, const QVec& v);

// True iff every step of f is spanned by a subset of the basis columns.
bool basis_adapted(const QMat& basis, const PlainFlag& f);

// Image of a flag under an invertible matrix: every step F becomes g.F.
PlainFlag apply_matrix(const QMat& g, const PlainFlag& f);
WeightedFlag apply_matrix(const QMat& g, const WeightedFlag& wf);

// A basis of Q^r simultaneously adapted to every flag, or nothing when no
// such basis exists. Existence is decided by the multigraded dimension
// count: with V_a = the intersection of the steps picked by multi-index a
// and T_a = the sum of the V at immediate predecessors of a, a splitting
// exists iff sum over a of (dim V_a - dim T_a) equals r. The witness is
// assembled in lexicographic multi-index order from echelon rows.
std::optional<QMat> common_splitting(const std::vector<PlainFlag>& flags);

// Decreasing integer-indexed filtration of Q^r with finitely many jumps,
// stored as (index, subspace) pairs with strictly decreasing indices and
// strictly increasing subspaces; the last subspace is Q^r. The filtration
// value at i is the largest stored subspace whose index is >= i.
struct KlyachkoFiltration {
  std::size_t rank = 0;
  std::vector<std::pair<Int, QMat>> jumps;

  bool operator==(const KlyachkoFiltration&) const = default;
};

KlyachkoFiltration make_filtration(std::size_t rank,
                                   const std::vector<std::pair<Int, QMat>>& jumps);

// F(i): subspace at integer index i.
QMat filtration_at(const KlyachkoFiltration& f, const Int& i);

// Jump subspaces become flag steps, jump indices become weights. Inverse
// requires integer weights. Round trip is the identity.
WeightedFlag filtration_to_flag(const KlyachkoFiltration& f);
KlyachkoFiltration flag_to_filtration(const WeightedFlag& wf);

}  // namespace tpb

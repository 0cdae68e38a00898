#pragma once

#include <cstddef>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tpb {

// Composition of r: block sizes of equal-weight groups, left to right.
using ParabolicType = std::vector<std::size_t>;

// Sorts v weakly decreasing. Returns (d, perm) with d[perm[i]] = v[i];
// ties keep their original relative order, so perm is the identity on
// already-sorted input.
std::pair<ZVec, std::vector<std::size_t>> dominant_representative(const ZVec& v);

// Run lengths of equal entries. Input must be weakly decreasing.
ParabolicType parabolic_type(const ZVec& dominant);

// All ordered set partitions of {0..r-1} into blocks of the given sizes,
// in lexicographic order (block 1 subset first, then block 2, ...).
// These index the coordinate flags fixed by the diagonal torus.
std::vector<std::vector<std::vector<std::size_t>>> fixed_points(const ParabolicType& type);

// r! / (m_1! ... m_k!)
Int fixed_point_count(const ParabolicType& type);

}  // namespace tpb

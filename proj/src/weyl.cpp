#include "weyl.hpp"

#include <algorithm>
#include <numeric>

namespace tpb {

std::pair<ZVec, std::vector<std::size_t>> dominant_representative(const ZVec& v) {
  std::size_t r = v.size();
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  ZVec d(r);
  std::vector<std::size_t> perm(r);
  for (std::size_t j = 0; j < r; ++j) {
    d[j] = v[order[j]];
    perm[order[j]] = j;
  }
  return {d, perm};
}

ParabolicType parabolic_type(const ZVec& dominant) {
  for (std::size_t i = 0; i + 1 < dominant.size(); ++i)
    if (dominant[i] < dominant[i + 1])
      fail(Err::Input, "NotDominant", "weight vector is not weakly decreasing");
  ParabolicType type;
  std::size_t i = 0;
  while (i < dominant.size()) {
    std::size_t j = i;
    while (j < dominant.size() && dominant[j] == dominant[i]) ++j;
    type.push_back(j - i);
    i = j;
  }
  return type;
}

namespace {

void enumerate_partitions(const ParabolicType& type, std::size_t block,
                          std::vector<std::size_t>& pool,
                          std::vector<std::vector<std::size_t>>& current,
                          std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (block == type.size()) {
    out.push_back(current);
    return;
  }
  std::size_t m = type[block];
  // Choose an m-subset of pool (kept sorted) in lexicographic order.
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<std::size_t> chosen, rest;
    for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
      if (k < m && idx[k] == i) {
        chosen.push_back(pool[i]);
        ++k;
      } else {
        rest.push_back(pool[i]);
      }
    }
    current.push_back(chosen);
    std::vector<std::size_t> saved = pool;
    pool = rest;
    enumerate_partitions(type, block + 1, pool, current, out);
    pool = saved;
    current.pop_back();
    // Next m-subset in lex order.
    std::size_t k = m;
    while (k > 0 && idx[k - 1] == pool.size() - m + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < m; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

std::vector<std::vector<std::vector<std::size_t>>> fixed_points(const ParabolicType& type) {
  std::size_t r = 0;
  for (std::size_t m : type) {
    if (m == 0) fail(Err::Input, "BadParabolicType", "composition parts must be positive");
    r += m;
  }
  std::vector<std::size_t> pool(r);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> current;
  if (type.empty()) {
    if (r == 0) out.push_back({});
    return out;
  }
  enumerate_partitions(type, 0, pool, current, out);
  return out;
}

Int fixed_point_count(const ParabolicType& type) {
  std::size_t r = 0;
  for (std::size_t m : type) r += m;
  Int num = 1;
  for (std::size_t i = 2; i <= r; ++i) num *= Int(static_cast<unsigned long>(i));
  for (std::size_t m : type)
    for (std::size_t i = 2; i <= m; ++i) num /= Int(static_cast<unsigned long>(i));
  return num;
}

}  // namespace tpb

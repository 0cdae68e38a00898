#include "poly.hpp"

#include <algorithm>
#include <numeric>

namespace tpb {

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) fail(Err::Internal, "BadVariable", "variable index out of range");
  Poly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rat(1));
  return p;
}

std::size_t Poly::total_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<std::size_t>(std::accumulate(m.begin(), m.end(), 0u)));
  return d;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (m.size() != nvars_) fail(Err::Internal, "BadMonomial", "exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::add(const Poly& o) const {
  if (nvars_ != o.nvars_) fail(Err::Internal, "ArityMismatch", "variable counts differ");
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::sub(const Poly& o) const { return add(o.scale(Rat(-1))); }

Poly Poly::mul(const Poly& o) const {
  if (nvars_ != o.nvars_) fail(Err::Internal, "ArityMismatch", "variable counts differ");
  Poly r(nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Mono m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

Poly Poly::scale(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(nvars_, Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r.mul(*this);
  return r;
}

Rat Poly::eval(const QVec& x) const {
  if (x.size() != nvars_) fail(Err::Internal, "ArityMismatch", "evaluation point length mismatch");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < m[i]; ++e) term *= x[i];
    }
    total += term;
  }
  return total;
}

Poly compose_linear(const Poly& p, const QMat& m) {
  if (p.nvars() != m.rows()) fail(Err::Internal, "ArityMismatch", "substitution matrix mismatch");
  std::size_t out_vars = m.cols();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly li(out_vars);
    for (std::size_t j = 0; j < out_vars; ++j) {
      Mono mono(out_vars, 0);
      mono[j] = 1;
      li.add_term(mono, m.at(i, j));
    }
    images.push_back(li);
  }
  Poly result(out_vars);
  for (const auto& [mono, c] : p.terms()) {
    Poly term = Poly::constant(out_vars, c);
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] > 0) term = term.mul(images[i].pow(mono[i]));
    result = result.add(term);
  }
  return result;
}

Poly apply_var_permutation(const Poly& p, const std::vector<std::size_t>& perm) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Mono pm(p.nvars(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) pm[perm[i]] = m[i];
    r.add_term(pm, c);
  }
  return r;
}

bool is_symmetric(const Poly& p) {
  std::size_t n = p.nvars();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[i], swap[i + 1]);
    if (!(apply_var_permutation(p, swap) == p)) return false;
  }
  return true;
}

Poly elem_sym(std::size_t r, std::size_t k) {
  if (k > r) fail(Err::Internal, "BadGenerator", "elementary symmetric index exceeds rank");
  Poly p(r);
  if (k == 0) return Poly::constant(r, Rat(1));
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mono m(r, 0);
    for (std::size_t i : idx) m[i] = 1;
    p.add_term(m, Rat(1));
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == r - k + (t - 1)) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return p;
}

}  // namespace tpb

#include "setpoly/set_polynomial.hpp"

#include <algorithm>
#include <string>

#include "setpoly/errors.hpp"

namespace setpoly {

std::vector<std::size_t> index_list(TermIndex alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; alpha != 0; ++i, alpha >>= 1) {
    if (alpha & 1u) out.push_back(i + 1);
  }
  return out;
}

TermIndex index_from_list(const std::vector<std::size_t>& idx, std::size_t D) {
  TermIndex alpha = 0;
  std::size_t prev = 0;
  for (std::size_t i : idx) {
    if (i < 1 || i > D) throw DimensionMismatch("term index " + std::to_string(i) + " outside 1.." + std::to_string(D));
    if (i <= prev) throw DimensionMismatch("term indices must be strictly increasing");
    prev = i;
    alpha |= TermIndex{1} << (i - 1);
  }
  return alpha;
}

SetPolynomial::SetPolynomial(std::size_t D) : D_(D) {
  if (D == 0 || D > kMaxDim) throw DimensionMismatch("dimension must lie in 1.." + std::to_string(kMaxDim));
}

SetPolynomial::SetPolynomial(std::size_t D,
                             std::initializer_list<std::pair<std::vector<std::size_t>, FinSet>> terms)
    : SetPolynomial(D) {
  for (const auto& [idx, c] : terms) merge_coeff(index_from_list(idx, D), c);
}

SetPolynomial SetPolynomial::constant(const FinSet& c) { return constant(c.arity(), c); }

SetPolynomial SetPolynomial::constant(std::size_t D, const FinSet& c) {
  SetPolynomial P(D);
  P.set_coeff(0, c);
  return P;
}

SetPolynomial SetPolynomial::full_power(std::size_t D) {
  SetPolynomial P(D);
  P.set_coeff(full_index(D), FinSet::unit());
  return P;
}

void SetPolynomial::check_index(TermIndex alpha) const {
  if ((alpha & ~full_index(D_)) != 0) throw DimensionMismatch("term index outside 1..D");
}

FinSet SetPolynomial::coeff(TermIndex alpha) const {
  auto it = coeffs_.find(alpha);
  if (it != coeffs_.end()) return it->second;
  return FinSet(D_ - index_size(alpha));
}

void SetPolynomial::set_coeff(TermIndex alpha, FinSet value) {
  check_index(alpha);
  if (value.empty()) {
    coeffs_.erase(alpha);
    return;
  }
  if (value.arity() != D_ - index_size(alpha)) {
    throw ArityMismatch("coefficient arity " + std::to_string(value.arity()) + " but expected " +
                        std::to_string(D_ - index_size(alpha)));
  }
  coeffs_[alpha] = std::move(value);
}

void SetPolynomial::merge_coeff(TermIndex alpha, const FinSet& value) {
  if (value.empty()) return;
  auto it = coeffs_.find(alpha);
  if (it == coeffs_.end()) {
    set_coeff(alpha, value);
  } else {
    it->second = set_union(it->second, value);
  }
}

std::strong_ordering operator<=>(const SetPolynomial& a, const SetPolynomial& b) {
  if (auto c = a.D_ <=> b.D_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
      [](const auto& x, const auto& y) {
        if (auto c = x.first <=> y.first; c != 0) return c;
        return x.second <=> y.second;
      });
}

namespace {

void require_same_dim(const SetPolynomial& P, const SetPolynomial& Q) {
  if (P.dim() != Q.dim()) {
    throw DimensionMismatch("dimensions " + std::to_string(P.dim()) + " and " + std::to_string(Q.dim()));
  }
}

// Emits, for every row of `coef` and every assignment of `pool` symbols to
// the `free` positions, the tuple restricted to `keep`. Rows of `coef` fill
// the `fixed` positions in increasing order.
void expand_rows(std::size_t D, TermIndex fixed, const FinSet& coef, TermIndex free,
                 const std::vector<Symbol>& pool, TermIndex keep, std::vector<Symbol>& out) {
  const auto fixed_pos = index_list(fixed);
  const auto free_pos = index_list(free);
  const auto keep_pos = index_list(keep);
  const std::size_t k = free_pos.size();
  if (k > 0 && pool.empty()) return;
  std::vector<std::size_t> digits(k, 0);
  Tuple s(D, 0);
  for (auto row : coef) {
    for (std::size_t j = 0; j < fixed_pos.size(); ++j) s[fixed_pos[j] - 1] = row[j];
    std::fill(digits.begin(), digits.end(), 0);
    for (;;) {
      for (std::size_t j = 0; j < k; ++j) s[free_pos[j] - 1] = pool[digits[j]];
      for (std::size_t p : keep_pos) out.push_back(s[p - 1]);
      std::size_t j = k;
      while (j > 0 && ++digits[j - 1] == pool.size()) digits[--j] = 0;
      if (j == 0) break;
    }
  }
}

}  // namespace

FinSet evaluate(const SetPolynomial& P, const FinSet& n) {
  if (n.arity() != 1 && !n.empty()) throw ArityMismatch("evaluate: argument must be a set of symbols");
  const std::vector<Symbol>& pool = n.flat();
  std::vector<Symbol> out;
  const TermIndex all = full_index(P.dim());
  for (const auto& [alpha, coef] : P.coeffs()) expand_rows(P.dim(), all & ~alpha, coef, alpha, pool, all, out);
  return FinSet::from_flat(P.dim(), std::move(out));
}

SetPolynomial add(const SetPolynomial& P, const SetPolynomial& Q) {
  require_same_dim(P, Q);
  SetPolynomial R = P;
  for (const auto& [alpha, c] : Q.coeffs()) R.merge_coeff(alpha, c);
  return R;
}

bool dominates(const SetPolynomial& Q, const SetPolynomial& P) {
  require_same_dim(P, Q);
  for (const auto& [alpha, c] : Q.coeffs()) {
    auto it = P.coeffs().find(alpha);
    if (it == P.coeffs().end() || !c.is_subset_of(it->second)) return false;
  }
  return true;
}

SetPolynomial subtract(const SetPolynomial& P, const SetPolynomial& Q) {
  if (!dominates(Q, P)) throw NotDominatedError("subtract: subtrahend is not dominated");
  SetPolynomial R = P;
  for (const auto& [alpha, c] : Q.coeffs()) R.set_coeff(alpha, set_minus(P.coeffs().at(alpha), c));
  return R;
}

SetPolynomial shift(const SetPolynomial& P, const FinSet& m) {
  if (m.arity() != 1 && !m.empty()) throw ArityMismatch("shift: argument must be a set of symbols");
  const std::size_t D = P.dim();
  SetPolynomial R(D);
  const std::vector<Symbol>& pool = m.flat();
  const TermIndex full = full_index(D);
  for (const auto& [alpha, coef] : P.coeffs()) {
    // β ranges over subsets of α; positions α∖β are filled from m and join
    // the coefficient of R_β.
    for (TermIndex beta = alpha;; beta = (beta - 1) & alpha) {
      const TermIndex from_m = alpha & ~beta;
      if (from_m == 0) {
        R.merge_coeff(beta, coef);
      } else if (!pool.empty()) {
        std::vector<Symbol> rows;
        expand_rows(D, full & ~alpha, coef, from_m, pool, full & ~beta, rows);
        R.merge_coeff(beta, FinSet::from_flat(D - index_size(beta), std::move(rows)));
      }
      if (beta == 0) break;
    }
  }
  return R;
}

FinSet poly_support(const SetPolynomial& P) {
  std::vector<Symbol> all;
  for (const auto& [alpha, c] : P.coeffs()) all.insert(all.end(), c.flat().begin(), c.flat().end());
  return FinSet::from_flat(1, std::move(all));
}

std::size_t degree(const SetPolynomial& P) {
  std::size_t d = 0;
  for (const auto& [alpha, c] : P.coeffs()) d = std::max(d, index_size(alpha));
  return d;
}

SetPolynomial term_of_degree(const SetPolynomial& P, std::size_t level) {
  SetPolynomial R(P.dim());
  for (const auto& [alpha, c] : P.coeffs()) {
    if (index_size(alpha) == level) R.set_coeff(alpha, c);
  }
  return R;
}

SetPolynomial leading_term(const SetPolynomial& P) { return term_of_degree(P, degree(P)); }

FinSet constant_term(const SetPolynomial& P) { return P.coeff(0); }

bool equivalent(const SetPolynomial& P, const SetPolynomial& Q) {
  require_same_dim(P, Q);
  return degree(P) == degree(Q) && leading_term(P) == leading_term(Q);
}

SetPolynomial embed(const SetPolynomial& P, Symbol r) {
  if (P.dim() + 1 > kMaxDim) throw DimensionMismatch("embed: dimension limit reached");
  SetPolynomial R(P.dim() + 1);
  const FinSet pad = FinSet::symbols({r});
  for (const auto& [alpha, c] : P.coeffs()) R.set_coeff(alpha, cartesian(c, pad));
  return R;
}

}  // namespace setpoly

#pragma once

// Slow, direct implementations used to cross-check the library.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "setpoly/setpoly.hpp"

namespace setpoly::testing {

/// P(n) by membership: t ∈ P(n) iff for some α, t's α-positions lie in n and
/// its remaining positions, read in order, form a row of P_α.
inline FinSet naive_evaluate(const SetPolynomial& P, const FinSet& n) {
  const std::size_t D = P.dim();
  std::vector<Symbol> universe = set_union(poly_support(P), n).symbol_list();
  std::vector<Tuple> hits;
  if (universe.empty()) return P.coeff(0);
  std::vector<std::size_t> digits(D, 0);
  Tuple t(D);
  for (;;) {
    for (std::size_t i = 0; i < D; ++i) t[i] = universe[digits[i]];
    bool member = false;
    for (const auto& [alpha, c] : P.coeffs()) {
      Tuple rest;
      bool ok = true;
      for (std::size_t i = 0; i < D && ok; ++i) {
        if (alpha >> i & 1u) {
          ok = n.contains(TupleView(&t[i], 1));
        } else {
          rest.push_back(t[i]);
        }
      }
      if (ok && c.contains(rest)) {
        member = true;
        break;
      }
    }
    if (member) hits.push_back(t);
    std::size_t j = D;
    while (j > 0 && ++digits[j - 1] == universe.size()) digits[--j] = 0;
    if (j == 0) break;
  }
  return FinSet(D, hits);
}

/// Möbius inversion: φ(a) = Σ_{b ⊆ a} (-1)^{|a ∖ b|} P(b), for |a| ≤ d.
inline std::map<SubsetMask, IntVec> mobius_phi(const LatticeMap& P, std::size_t max_size) {
  std::map<SubsetMask, IntVec> out;
  const SubsetMask top = SubsetMask{1} << P.points();
  for (SubsetMask a = 0; a < top; ++a) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(a));
    if (size > max_size) continue;
    IntVec acc = zero_vec(P.width());
    for (SubsetMask b = a;; b = (b - 1) & a) {
      const bool odd = (size - static_cast<std::size_t>(__builtin_popcount(b))) % 2 == 1;
      if (odd) {
        sub_into(acc, P.at(b));
      } else {
        add_into(acc, P.at(b));
      }
      if (b == 0) break;
    }
    out[a] = acc;
  }
  return out;
}

/// True when some r-coloring of {1..N} has no monochromatic x, x + k².
inline bool naive_square_free_exists(std::size_t N, int r) {
  std::vector<int> c(N, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < N; ++i) total *= static_cast<std::uint64_t>(r);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = 0; i < N; ++i) {
      c[i] = static_cast<int>(x % static_cast<std::uint64_t>(r));
      x /= static_cast<std::uint64_t>(r);
    }
    bool clean = true;
    for (std::size_t a = 1; a <= N && clean; ++a) {
      for (std::size_t k = 1; a + k * k <= N; ++k) {
        if (c[a - 1] == c[a + k * k - 1]) {
          clean = false;
          break;
        }
      }
    }
    if (clean) return true;
  }
  return false;
}

/// True when every r-coloring of {0..q-1}^N has a monochromatic combinatorial line.
inline bool naive_hj_forced(std::size_t q, int r, std::size_t N) {
  std::size_t words = 1;
  for (std::size_t i = 0; i < N; ++i) words *= q;
  // Lines as lists of word indices; letter q stands for the variable.
  std::vector<std::vector<std::size_t>> lines;
  std::size_t templates = 1;
  for (std::size_t i = 0; i < N; ++i) templates *= q + 1;
  for (std::size_t code = 0; code < templates; ++code) {
    std::vector<std::size_t> letters(N);
    std::size_t x = code;
    bool has_var = false;
    for (std::size_t i = 0; i < N; ++i) {
      letters[i] = x % (q + 1);
      x /= q + 1;
      has_var = has_var || letters[i] == q;
    }
    if (!has_var) continue;
    std::vector<std::size_t> line;
    for (std::size_t s = 0; s < q; ++s) {
      std::size_t idx = 0;
      for (std::size_t i = N; i-- > 0;) idx = idx * q + (letters[i] == q ? s : letters[i]);
      line.push_back(idx);
    }
    lines.push_back(line);
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < words; ++i) total *= static_cast<std::uint64_t>(r);
  std::vector<int> c(words);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = 0; i < words; ++i) {
      c[i] = static_cast<int>(x % static_cast<std::uint64_t>(r));
      x /= static_cast<std::uint64_t>(r);
    }
    bool found = false;
    for (const auto& line : lines) {
      bool mono = true;
      for (auto w : line) mono = mono && c[w] == c[line[0]];
      if (mono) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// p(Σ_j y_{1,j}, ...) multiplied out factor by factor.
inline NcPolynomial naive_substitution(const CommPolynomial& p, const FinSet& gamma) {
  NcPolynomial total(p.width());
  for (const auto& mono : p.monomials()) {
    NcPolynomial prod = NcPolynomial::term(mono.coeff, {});
    for (std::size_t m = 0; m < mono.exps.size(); ++m) {
      NcPolynomial sum(p.width());
      for (auto j : gamma.symbol_list()) {
        sum = sum + NcPolynomial::term(IntVec(p.width(), 1), {YVar{static_cast<std::uint32_t>(m + 1), j}});
      }
      for (std::uint32_t e = 0; e < mono.exps[m]; ++e) prod = prod * sum;
    }
    total = total + prod;
  }
  return total;
}

}  // namespace setpoly::testing

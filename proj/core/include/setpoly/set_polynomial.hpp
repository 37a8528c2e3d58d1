#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "setpoly/finite_sets.hpp"

namespace setpoly {

/// α ⊆ {1..D} as a bitmask: bit i-1 set iff i ∈ α. D is limited to 31.
using TermIndex = std::uint32_t;

inline constexpr std::size_t kMaxDim = 31;

inline TermIndex full_index(std::size_t D) { return D == 0 ? 0u : (TermIndex{1} << D) - 1u; }
inline std::size_t index_size(TermIndex alpha) { return static_cast<std::size_t>(__builtin_popcount(alpha)); }

/// α as ascending 1-based indices.
std::vector<std::size_t> index_list(TermIndex alpha);
TermIndex index_from_list(const std::vector<std::size_t>& idx, std::size_t D);

/// A set-polynomial of dimension D: a coefficient P_α ∈ F(S^{D-|α|}) for
/// every α ⊆ {1..D}. Only nonempty coefficients are stored.
class SetPolynomial {
 public:
  explicit SetPolynomial(std::size_t D = 1);

  /// Terms given as (indices of α, coefficient).
  SetPolynomial(std::size_t D, std::initializer_list<std::pair<std::vector<std::size_t>, FinSet>> terms);

  /// The constant set-polynomial n ↦ c, with D = arity of c.
  static SetPolynomial constant(const FinSet& c);
  static SetPolynomial constant(std::size_t D, const FinSet& c);

  /// n^D.
  static SetPolynomial full_power(std::size_t D);

  std::size_t dim() const noexcept { return D_; }
  const std::map<TermIndex, FinSet>& coeffs() const noexcept { return coeffs_; }

  /// P_α (empty of the right arity if absent).
  FinSet coeff(TermIndex alpha) const;

  /// Replaces P_α; an empty value removes it.
  void set_coeff(TermIndex alpha, FinSet value);

  /// P_α ∪= value.
  void merge_coeff(TermIndex alpha, const FinSet& value);

  bool is_empty() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const SetPolynomial& a, const SetPolynomial& b) {
    return a.D_ == b.D_ && a.coeffs_ == b.coeffs_;
  }
  friend std::strong_ordering operator<=>(const SetPolynomial& a, const SetPolynomial& b);

 private:
  void check_index(TermIndex alpha) const;

  std::size_t D_;
  std::map<TermIndex, FinSet> coeffs_;
};

/// P(n).
FinSet evaluate(const SetPolynomial& P, const FinSet& n);

/// Coefficientwise union. Throws DimensionMismatch.
SetPolynomial add(const SetPolynomial& P, const SetPolynomial& Q);

/// Q ≤ P, i.e. Q_α ⊆ P_α for all α.
bool dominates(const SetPolynomial& Q, const SetPolynomial& P);

/// P − Q for Q ≤ P. Throws NotDominatedError.
SetPolynomial subtract(const SetPolynomial& P, const SetPolynomial& Q);

/// R with R(n) = P(n ∪ m) for every n.
SetPolynomial shift(const SetPolynomial& P, const FinSet& m);

/// Union of the supports of the coefficients.
FinSet poly_support(const SetPolynomial& P);

/// Largest |α| with P_α nonempty; 0 for the empty polynomial.
std::size_t degree(const SetPolynomial& P);

/// The terms with |α| = level.
SetPolynomial term_of_degree(const SetPolynomial& P, std::size_t level);
SetPolynomial leading_term(const SetPolynomial& P);
FinSet constant_term(const SetPolynomial& P);

/// Same degree and same leading term.
bool equivalent(const SetPolynomial& P, const SetPolynomial& Q);

/// The embedding S^D → S^{D+1}, s ↦ s × {r}, applied to coefficients.
SetPolynomial embed(const SetPolynomial& P, Symbol r);

}  // namespace setpoly

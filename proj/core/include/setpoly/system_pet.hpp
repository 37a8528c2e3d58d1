#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "setpoly/finite_sets.hpp"
#include "setpoly/set_polynomial.hpp"

namespace setpoly {

/// A finite set of set-polynomials sharing a dimension. Members are kept
/// sorted and deduplicated.
class System {
 public:
  explicit System(std::size_t D = 1) : D_(D) {}
  System(std::size_t D, std::vector<SetPolynomial> polys);

  std::size_t dim() const noexcept { return D_; }
  const std::vector<SetPolynomial>& polys() const noexcept { return polys_; }
  std::size_t size() const noexcept { return polys_.size(); }
  bool empty() const noexcept { return polys_.empty(); }

  void insert(const SetPolynomial& P);

  auto begin() const noexcept { return polys_.begin(); }
  auto end() const noexcept { return polys_.end(); }

  friend bool operator==(const System&, const System&) = default;

 private:
  std::size_t D_;
  std::vector<SetPolynomial> polys_;
};

/// supp(A), the union of member supports.
FinSet system_support(const System& A);

/// ∪_{P∈A} P(n).
FinSet evaluate_union(const System& A, const FinSet& n);

struct WeightVector {
  std::vector<std::size_t> w;  // w[d-1] counts degree-d classes
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

WeightVector weight_vector(const System& A);

/// Strict PET order: w1 < w2. Throws LengthMismatch.
bool precedes(const WeightVector& w1, const WeightVector& w2);

/// Output of the marker normalization A → A′.
struct NormalizationRecord {
  System original;              // as given
  System source;                // after the optional S^D → S^{D+1} embedding
  std::optional<Symbol> pad;    // the padding symbol r when an embedding happened
  /// terms[d][i] is R_{d,i} (only degree-d coefficients); terms[d][0] is empty.
  /// Index d runs 1..D-1; terms[0] is unused.
  std::vector<std::vector<SetPolynomial>> terms;
  /// markers[d][i] is p_{d,i}, a tuple of D-d fresh symbols.
  std::vector<std::vector<Tuple>> markers;
  /// normalized[j] is P′ for source.polys()[j].
  std::vector<SetPolynomial> normalized;
  System prime;                 // A′

  std::size_t dim() const noexcept { return source.dim(); }
};

/// Builds A′. Members reaching degree D trigger an embedding into D+1
/// (with a fresh pad symbol) unless auto_embed is false, in which case
/// DegreeTooHigh is thrown. Throws ConstantTermError on a nonempty constant term.
NormalizationRecord normalize_terms(const System& A, SymbolAllocator& alloc, bool auto_embed = true);

/// The marker polynomial n{p_1} + n^2{p_2} + ... + n^d{p_d}.
SetPolynomial marker_polynomial(std::size_t D, const std::vector<Tuple>& markers);

/// ψ: expands marker points into the term they stand for.
FinSet psi_map(const NormalizationRecord& rec, const FinSet& a);

struct MinimalAdjunction {
  System system;      // A″
  SetPolynomial Q;
};

/// Q is a member of minimal degree among the nonempty members of A′ (ties by
/// canonical JSON order); returns A″ = {P′ + Q}. Throws EmptySystem.
MinimalAdjunction adjoin_minimal(const System& Aprime);

/// ψ′ of the deletion rule: removes (s_1..s_d, q_d) from b whenever some
/// (s_1..s_d, p) with p a degree-d marker of A′ different from q_d lies in b.
/// Throws MalformedQ if Q is not of marker form.
FinSet psi_prime_map(const System& Aprime, const SetPolynomial& Q, const FinSet& b);

/// Splits a marker-form polynomial into its markers q_1..q_e.
/// Throws MalformedQ otherwise.
std::vector<Tuple> marker_form(const SetPolynomial& Q);

/// {shift(P,m) − (Q + P(m)) : P ∈ A, m ⊆ M}. Throws NotDominatedError,
/// TooLarge when |M| > 20.
System derived_system(const System& A, const SetPolynomial& Q, const FinSet& M);

}  // namespace setpoly

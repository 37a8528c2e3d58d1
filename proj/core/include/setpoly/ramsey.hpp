#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "setpoly/coloring.hpp"
#include "setpoly/finite_sets.hpp"
#include "setpoly/int_vec.hpp"
#include "setpoly/nc_polynomial.hpp"
#include "setpoly/recurrence.hpp"

namespace setpoly {

// ---- finite sums ----------------------------------------------------------

struct FiniteSum {
  FinSet gamma{1};  // 1-based indices
  IntVec sum;
};

/// All 2^L - 1 sums over nonempty γ ⊆ {1..L}, γ in binary-counter order.
/// Throws EmptySetError for L = 0 and TooLarge past L = 24.
std::vector<FiniteSum> finite_sums(const std::vector<IntVec>& gen);
std::vector<FiniteSum> finite_sums(const std::vector<std::int64_t>& gen);

// ---- commutative semigroups and homomorphisms ------------------------------

/// Free commutative monoid over labeled generators: multiplicities.
struct FreeMonoid {
  std::map<std::string, std::uint64_t> counts;
  friend bool operator==(const FreeMonoid&, const FreeMonoid&) = default;
};

/// Formal sums of pure tensors u ⊗ v in (ℕ,·) ⊗ (ℕ,+), with multiplicities.
struct TensorSum {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> terms;
  friend bool operator==(const TensorSum&, const TensorSum&) = default;
};

/// (ℕ,·): the semigroup operation is multiplication.
struct Multiplicative {
  std::uint64_t value = 1;
  friend bool operator==(const Multiplicative&, const Multiplicative&) = default;
};

/// (𝓕(V), ∪) restricted to disjoint unions.
using SemigroupValue = std::variant<std::int64_t, IntVec, FreeMonoid, NcPolynomial, TensorSum, Multiplicative, FinSet>;

/// The semigroup operation. Throws ArityMismatch for mixed kinds and
/// OverlapError for overlapping sets; TooLarge on overflow.
SemigroupValue combine(const SemigroupValue& a, const SemigroupValue& b);

struct Homomorphism {
  std::string name;
  std::function<SemigroupValue(const SemigroupValue&)> map;
};

Homomorphism identity_hom();
/// y_{m,j} ↦ g[{m,j}] from width-1 formal polynomials into ℤ. Throws
/// NotFound for an unassigned variable.
Homomorphism evaluation_hom(std::map<YVar, std::int64_t> g);
/// u ⊗ v ↦ u^v, into (ℕ,·).
Homomorphism tensor_hom();
/// a ↦ Σ_t w_t |a ∩ track_t| from sets of tuples into ℤ (the reducer feed).
Homomorphism reducer_hom(std::vector<std::int64_t> weights);

using FamilyOfRecurrence = std::vector<std::vector<SemigroupValue>>;

/// {hom(R_w)}. Checks hom(x + y) = hom(x) + hom(y) on every pair of family
/// elements whose sum is defined; NotHomomorphic otherwise.
FamilyOfRecurrence pushforward(const Homomorphism& hom, const FamilyOfRecurrence& fam);

/// {{p_t(Σ_{j∈γ} y_{1,j}, ...) : t} : ∅ ≠ γ ⊆ {1..N}} in binary-counter order of γ.
FamilyOfRecurrence formal_family(const std::vector<CommPolynomial>& ps, std::size_t N);

/// The PHJ witness (γ, a) pushed into ℤ by the reducer: h = feed(a) and
/// h + w_t |γ|^d, each recolored by chi.
struct ChromaticTransfer {
  std::int64_t h = 0;
  std::int64_t difference = 0;  // |γ|^d
  std::vector<std::int64_t> terms;  // h, then the images of a ∪ γ^d × {t}
  std::vector<int> colors;
  bool monochromatic() const;
  bool arithmetic() const;  // terms[t] = h + t · difference
};
ChromaticTransfer chromatic_transfer(const ColoringOracle& reducer, const PhjResult& w, std::size_t d, std::size_t q);

// ---- integer searches -----------------------------------------------------

/// A coloring of {1..N} (colors 1..r) without monochromatic x, x + k², or nullopt.
std::optional<std::vector<int>> square_difference_free_coloring(std::size_t N, int r);

struct SquareDiffResult {
  std::size_t N_min = 0;
  std::vector<int> extremal;  // a square-difference-free coloring of {1..N_min - 1}
};

/// Throws CapTooSmall when some coloring of {1..cap} avoids the pattern.
SquareDiffResult square_difference_min_N(int r, std::size_t cap);

struct ConfigResult {
  std::int64_t base = 0;
  FinSet gamma{1};
  std::vector<std::int64_t> config;  // base first
  std::vector<int> colors;
};

/// {a, a + n_{1,γ} k_{1,γ}, ..., a + n_{q,γ} k_{q,γ}} with a ∈ 1..cap and
/// n_{i,γ} = Σ_{j∈γ} n_{i,j}. All generator lists share one length L.
/// Throws BudgetExhausted.
ConfigResult product_sum_search(const std::vector<std::vector<std::int64_t>>& n_gens,
                                const std::vector<std::vector<std::int64_t>>& k_gens, const IntColoring& chi,
                                std::int64_t cap);

/// {b, b π_{1,γ}^{σ_{1,γ}}, ...} with π_γ = Π_{j∈γ} π_j and σ_γ = Σ_{j∈γ} σ_j.
/// Candidates that overflow are skipped. Throws BudgetExhausted.
ConfigResult multiplicative_search(const std::vector<std::vector<std::int64_t>>& sigma_gens,
                                   const std::vector<std::vector<std::int64_t>>& pi_gens, const IntColoring& chi,
                                   std::int64_t cap);

nlohmann::json to_json(const ConfigResult& r);

}  // namespace setpoly

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "setpoly/coloring.hpp"
#include "setpoly/errors.hpp"
#include "setpoly/finite_sets.hpp"
#include "setpoly/system_pet.hpp"

namespace setpoly {

/// Limits for the exhaustive searches. The candidate cap replaces a wall
/// clock so that results do not depend on machine speed.
struct SearchBudget {
  std::size_t max_window = 6;
  std::size_t max_a = 3;
  std::uint64_t max_candidates = 2'000'000;
};

struct RecurrenceRequest {
  System A;
  FinSet H{1};
  SearchBudget budget;
  /// Searched prefixes come from this window when given, otherwise from the
  /// symbols just above max(H ∪ supp(A)).
  std::optional<FinSet> window;
};

struct Witness {
  FinSet N{1};
  FinSet n{1};
  FinSet a{1};
  int base_color = 0;
  std::vector<int> config_colors;  // oracle(a ∪ P(n)), one per member in system order
};

/// Searches a fixed window: n ⊆ N nonempty by size then lexicographically,
/// a ⊆ ∪P(N) ∖ ∪P(n) by size (≤ max_a) then lexicographically. Each tested
/// (n, a) consumes one candidate; BudgetExhausted when none are left.
struct WindowHit {
  FinSet n{1};
  FinSet a{1};
};
std::optional<WindowHit> search_window(const System& A, const FinSet& N, const ColorView& view, std::size_t max_a,
                                       std::uint64_t& candidates_left);

/// Windows of growing size 1..max_window. Throws BudgetExhausted, which
/// only means the budget ran out.
Witness brute_force_witness(const RecurrenceRequest& req, const ColoringOracle& oracle);

/// Colors x by the vector (ω(c ∪ b ∪ x))_{b ∈ probes}: the shifted coloring
/// T^c ω observed on a family of probe sets.
class ProbeColoring final : public ColorView {
 public:
  ProbeColoring(const ColoringOracle& base, FinSet shift, std::vector<FinSet> probes)
      : base_(base), shift_(std::move(shift)), probes_(std::move(probes)) {}
  bool same_color(const FinSet& x, const FinSet& y) const override;
  std::size_t probe_count() const noexcept { return probes_.size(); }

 private:
  const ColoringOracle& base_;
  FinSet shift_;
  std::vector<FinSet> probes_;
};

struct SubRequest {
  System A;             // the derived system A_i
  FinSet H{1};          // H_i
  FinSet window{1};     // N_i, already fresh
  const ColorView* view = nullptr;
  std::size_t stage = 0;
};

/// Returns (n, a) with n ⊆ window nonempty and a ⊆ ∪R(window); throws
/// BudgetExhausted when it cannot.
using SubOracle = std::function<WindowHit(const SubRequest&)>;

SubOracle brute_force_sub(SearchBudget budget);

struct FocusingStage {
  FinSet H{1};
  FinSet N{1};
  System A;
  FinSet shift{1};      // Q(N_k) ∪ ... ∪ Q(N_i) ∪ a_k ∪ ... ∪ a_{i+1}
  std::size_t probes = 0;
  bool solved = false;
  FinSet n{1};
  FinSet a{1};
  FinSet x{1};          // the set whose shift gives x_i
  int color = 0;        // ω(x)
};

struct FocusingTrace {
  std::size_t k = 0;
  std::vector<FocusingStage> stages;
  std::optional<std::size_t> pair_i;
  std::optional<std::size_t> pair_j;
};

class FocusingFailure : public SubOracleFailure {
 public:
  FocusingFailure(const std::string& what, FocusingTrace partial)
      : SubOracleFailure(what), trace_(std::move(partial)) {}
  const FocusingTrace& trace() const noexcept { return trace_; }

 private:
  FocusingTrace trace_;
};

struct FocusingOptions {
  std::size_t k = 2;
  std::size_t stage_window = 1;  // |N_i|
  std::size_t max_probe_bits = 16;  // probes are all subsets of a set of at most this size
  FinSet H{1};
};

struct FocusingResult {
  Witness witness;
  FocusingTrace trace;
};

/// Color focusing over sub-oracles. Q must be nonempty and dominated by
/// every member of A; members must have empty constant terms.
FocusingResult focusing_composer(const System& A, const SetPolynomial& Q, const ColoringOracle& oracle,
                                 const SubOracle& sub, const FocusingOptions& opt, SymbolAllocator& alloc);

/// Disjointness facts (i)-(v) on a complete trace; returns the failed items.
std::vector<std::string> check_focusing_ledger(const System& A, const SetPolynomial& Q, const FocusingTrace& trace);

/// ω(x_j ∪ P(n_j ∪ ... ∪ n_{i+1})) = ω(x_i) for every i < j and P ∈ A.
bool check_focusing_chain(const System& A, const ColoringOracle& oracle, const FocusingTrace& trace);

nlohmann::json to_json(const FocusingTrace& trace);

// ---- grid and scenario searches ------------------------------------------

/// {∅} ∪ {n^d × {i} : i = 1..q}, dimension d + 1.
System phj_system(std::size_t d, std::size_t q);

struct PhjResult {
  FinSet gamma{1};
  FinSet a{1};
  std::vector<int> colors;  // a, then a ∪ γ^d × {i}
};

/// Grid {1..N_bound}^d × {1..q}. Throws BudgetExhausted.
PhjResult phj_search(std::size_t N_bound, std::size_t d, std::size_t q, const ColoringOracle& oracle,
                     const SearchBudget& budget);

/// Least N ≤ max_N such that every r-coloring of the grid subsets has a PHJ
/// configuration, by hypergraph-coloring search. nullopt when the node
/// budget runs out before a decision.
std::optional<std::size_t> phj_min_bound(std::size_t d, std::size_t q, int r, std::size_t max_N,
                                         std::uint64_t node_budget);

/// {n × n}, dimension 2.
System square_system();

/// n ⊆ {1..W} nonempty and a with a ∩ n² = ∅, ω(a ∪ n²) = ω(a).
WindowHit single_square_search(std::size_t W, const ColoringOracle& oracle, const SearchBudget& budget);

/// A variable word over {0..q-1} ∪ {t}; t is written as -1.
struct CombinatorialLine {
  std::vector<int> variable_word;
  std::vector<std::vector<int>> words;  // w(0), ..., w(q-1)
};

/// Colors of q^N words, indexed by base-q value with the first letter most significant.
using WordColoring = std::function<int(const std::vector<int>&)>;

/// First monochromatic line in canonical order. Throws NotFound.
CombinatorialLine hj_line_search(std::size_t q, std::size_t N, const WordColoring& color);

/// Least N ≤ max_N such that every r-coloring of {0..q-1}^N has a
/// monochromatic line, by enumerating all colorings. Throws TooLarge past
/// 2^24 colorings and CapTooSmall when no N ≤ max_N works.
std::size_t hj_number(std::size_t q, int r, std::size_t max_N);

/// The map b ↦ ∪_k Sym(p_{d_k}, σ(k)) with d_k = #(b ∩ ({1..q} × {k})).
/// b holds pairs (track, k); sets[l-1] = p_l; sigma[k-1] = σ(k); p_0 = ∅.
FinSet hj_phi(const FinSet& b, const std::vector<FinSet>& sets, const std::vector<Symbol>& sigma);

/// The same map on a word: letter l at position k contributes Sym(p_l, σ(k)).
FinSet word_configuration(const std::vector<int>& word, const std::vector<FinSet>& sets,
                          const std::vector<Symbol>& sigma);

// ---- certificates ---------------------------------------------------------

struct SpaceSpec {
  enum class Kind { Abstract, Grid } kind = Kind::Abstract;
  std::size_t D = 1;
  FinSet H{1};
  std::size_t N_bound = 0, d = 0, q = 0;  // grid form
};

struct WitnessCertificate {
  SpaceSpec space;
  ColoringOracle oracle;
  System system;
  FinSet N{1};
  FinSet n{1};
  FinSet a{1};
  int base_color = 0;
  std::vector<int> config_colors;
};

WitnessCertificate make_certificate(const SpaceSpec& space, const ColoringOracle& oracle, const System& A,
                                    const Witness& w);
nlohmann::json to_json(const WitnessCertificate& cert);
/// Throws MalformedCertificate.
WitnessCertificate certificate_from_json(const nlohmann::json& j);

/// Re-checks every claim of the certificate against its oracle.
bool verify_certificate(const WitnessCertificate& cert);

/// Witness colors for (n, a) under the oracle, members in system order.
Witness observe(const System& A, const FinSet& N, const FinSet& n, const FinSet& a, const ColoringOracle& oracle);

}  // namespace setpoly

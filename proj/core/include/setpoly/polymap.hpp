#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "setpoly/coloring.hpp"
#include "setpoly/finite_sets.hpp"
#include "setpoly/int_vec.hpp"

namespace setpoly {

/// Subsets of a window are bitmasks; bit k is the k-th window symbol in
/// increasing order.
using SubsetMask = std::uint32_t;

/// φ on every subset of the window with at most d elements.
struct PhiTable {
  std::size_t d = 0;
  FinSet window{1};
  std::size_t width = 1;
  std::map<SubsetMask, IntVec> values;

  /// Every entry zero, on the full domain.
  static PhiTable zero(std::size_t d, FinSet window, std::size_t width);
  const IntVec& at(SubsetMask a) const;  // OutOfWindow off the domain
  SubsetMask mask_of(const FinSet& a) const;  // OutOfWindow

  nlohmann::json to_json() const;
  static PhiTable from_json(const nlohmann::json& j);  // ParseError
  friend bool operator==(const PhiTable&, const PhiTable&) = default;
};

/// A total map 𝓕(window) → ℤ^width stored on the whole subset lattice.
class LatticeMap {
 public:
  LatticeMap(FinSet window, std::size_t width);
  static LatticeMap from_function(FinSet window, std::size_t width, const std::function<IntVec(const FinSet&)>& f);

  const FinSet& window() const noexcept { return window_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t points() const noexcept { return window_.size(); }
  const IntVec& at(SubsetMask n) const { return values_[n]; }
  IntVec& at(SubsetMask n) { return values_[n]; }
  IntVec operator()(const FinSet& n) const;  // OutOfWindow
  SubsetMask mask_of(const FinSet& n) const;
  FinSet subset(SubsetMask n) const;

  nlohmann::json to_json() const;
  static LatticeMap from_json(const nlohmann::json& j);  // ParseError
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

 private:
  FinSet window_;
  std::size_t width_;
  std::vector<IntVec> values_;
};

/// Σ_{a ⊆ n, |a| ≤ d} φ(a). Throws OutOfWindow.
IntVec eval_from_phi(const PhiTable& phi, const FinSet& n);
LatticeMap lattice_from_phi(const PhiTable& phi);

/// n ↦ P(n ∪ m) - P(n) on 𝓕(window ∖ m). Throws OutOfWindow unless m ⊆ window.
LatticeMap difference_op(const LatticeMap& P, const FinSet& m);

/// Every (d+1)-fold difference over pairwise disjoint nonempty m_i vanishes
/// at every n disjoint from them. Exhaustive; TooLarge past 5·10^7 cases.
bool degree_bound_check(const LatticeMap& P, std::size_t d);

/// φ with P = Σ_{a ⊆ n, |a| ≤ d} φ(a), by recursion on the least element of
/// each a under `order` (default: increasing symbols). Throws NotPolynomial.
PhiTable recover_phi(const LatticeMap& P, std::size_t d, const std::optional<std::vector<Symbol>>& order = std::nullopt);

/// {a ⊆ n : |a| ≤ d}, by size then lexicographically.
std::vector<FinSet> universal_poly(const FinSet& n, std::size_t d);

/// The additive extension φ̂ over a family of pairwise distinct subsets.
IntVec phi_hat(const PhiTable& phi, const std::vector<FinSet>& family);

/// {s_1 < ... < s_k} ↦ (s_1, ..., s_k, s_k, ..., s_k) of length d.
/// Throws EmptySetError and TooLarge.
Tuple embed_subsets(const FinSet& a, std::size_t d);

struct GroupConfig {
  std::int64_t h = 0;
  FinSet gamma{1};
  std::vector<std::int64_t> values;  // h + P(γ × c), c ⊆ F in binary-counter order
  std::vector<int> colors;
};

/// h with |h| ≤ max_h (tried 0, 1, -1, 2, ...) and nonempty γ ⊆ window by
/// size then lexicographically, making {h + P(γ × c) : c ⊆ F} monochromatic.
/// P takes sets of pairs (s, f). Throws BudgetExhausted.
GroupConfig group_config_demo(const std::function<std::int64_t(const FinSet&)>& P, const FinSet& window,
                              const FinSet& F, const IntColoring& chi, std::int64_t max_h);

/// P(a) = Σ_i p_i(Σ_{l ∈ a_i} g_l) for a ⊆ {1..L} × {1..k}, the map built from
/// k integer polynomial maps and generators g_1..g_L.
std::function<std::int64_t(const FinSet&)> sum_of_maps(std::vector<std::function<std::int64_t(std::int64_t)>> p,
                                                       std::vector<std::int64_t> g);

}  // namespace setpoly

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "setpoly/finite_sets.hpp"
#include "setpoly/system_pet.hpp"

namespace setpoly {

/// A coloring of the integers, {.., -1, 0, 1, ..} → {1..r}.
class IntColoring {
 public:
  enum class Kind { Table, Residue, DigitSumParity, OmegaParity, Constant };

  /// colors[x - offset] for x in range; OutOfWindow elsewhere.
  static IntColoring table(std::vector<int> colors, std::int64_t offset = 0);
  /// 1 + (x mod m), nonnegative residue.
  static IntColoring residue(int m);
  static IntColoring parity() { return residue(2); }
  /// 1 + (sum of decimal digits of |x| mod 2).
  static IntColoring digit_sum_parity();
  /// 1 + (number of prime factors of x with multiplicity mod 2), x ≥ 1.
  static IntColoring omega_parity();
  static IntColoring constant();

  /// "parity", "mod:M", "digitsum", "omega", "const", or a JSON file path.
  static IntColoring from_spec(std::string_view spec);

  int operator()(std::int64_t x) const;
  int colors() const noexcept { return r_; }
  Kind kind() const noexcept { return kind_; }

  nlohmann::json to_json() const;
  static IntColoring from_json(const nlohmann::json& j, std::string_view where = "$");

  friend bool operator==(const IntColoring&, const IntColoring&) = default;

 private:
  Kind kind_ = Kind::Constant;
  int r_ = 1;
  int modulus_ = 1;
  std::int64_t offset_ = 0;
  std::vector<int> table_;
};

/// Anything that can decide whether two finite sets get the same color.
class ColorView {
 public:
  virtual ~ColorView() = default;
  virtual bool same_color(const FinSet& x, const FinSet& y) const = 0;
};

/// A total deterministic r-coloring of F(V). Read-only after construction
/// and safe to call from several threads.
class ColoringOracle final : public ColorView {
 public:
  enum class Kind { Table, Reducer, Seeded };

  /// Explicit table over all subsets of `universe` (at most 24 points);
  /// colors[mask] where bit k stands for the k-th point in canonical order.
  static ColoringOracle table(FinSet universe, std::vector<std::uint8_t> colors, int r);

  /// chi(Σ_i w_i |a ∩ track_i|), where track i holds the points whose last
  /// coordinate is i. With q = 1 every point is on the single track.
  static ColoringOracle reducer(IntColoring chi, std::vector<std::int64_t> weights);
  static ColoringOracle reducer(IntColoring chi, std::size_t q);  // weights 1..q

  /// Hash of the canonical serialization, reduced mod r.
  static ColoringOracle seeded(int r, std::uint64_t seed);

  /// "table:FILE.json", "reducer:q=2;weights=1,2;chi=SPEC", "seeded:r=2;seed=42".
  static ColoringOracle from_spec(std::string_view spec);

  int color(const FinSet& a) const;
  int operator()(const FinSet& a) const { return color(a); }
  bool same_color(const FinSet& x, const FinSet& y) const override { return color(x) == color(y); }

  int colors() const noexcept { return r_; }
  Kind kind() const noexcept { return kind_; }

  /// The reducer's integer feed, Σ_i w_i |a ∩ track_i|.
  std::int64_t reducer_value(const FinSet& a) const;
  const IntColoring& chi() const noexcept { return chi_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  const FinSet& universe() const noexcept { return universe_; }
  std::uint64_t seed() const noexcept { return seed_; }

  nlohmann::json to_json() const;
  static ColoringOracle from_json(const nlohmann::json& j, std::string_view where = "$");

 private:
  Kind kind_ = Kind::Seeded;
  int r_ = 1;
  std::uint64_t seed_ = 0;
  IntColoring chi_;
  std::vector<std::int64_t> weights_;
  FinSet universe_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
};

/// A coloring ω of the subsets of a finite window, seen as a point of the
/// shift space. Subsets are bitmasks over the window's canonical order.
class ShiftPoint {
 public:
  ShiftPoint(FinSet window, std::vector<std::uint8_t> values);

  /// Materializes the oracle on every subset of the window (≤ 24 points).
  static ShiftPoint from_oracle(const ColoringOracle& oracle, FinSet window);

  const FinSet& window() const noexcept { return window_; }
  int at(std::uint32_t mask) const { return values_[mask]; }
  int at(const FinSet& b) const;
  std::uint32_t mask_of(const FinSet& b) const;  // OutOfWindow if b ⊄ window
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }

  friend bool operator==(const ShiftPoint&, const ShiftPoint&) = default;

 private:
  FinSet window_;
  std::vector<std::uint8_t> values_;
};

/// T^a ω: b ↦ ω(a ∪ b). Throws OutOfWindow.
ShiftPoint shift_act(const ShiftPoint& omega, const FinSet& a);

/// 0 if the colorings differ at ∅; otherwise 1 + the largest w such that
/// they agree on every subset of the first w window points. Identical
/// colorings give |window| + 1. Throws WindowMismatch.
std::size_t agreement_radius(const ShiftPoint& omega1, const ShiftPoint& omega2);

/// For every P ∈ A: a ∩ P(n) = ∅ and oracle(a ∪ P(n)) = oracle(a).
bool bridge_check(const System& A, const FinSet& n, const FinSet& a, const ColoringOracle& oracle);

}  // namespace setpoly

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "setpoly/finite_sets.hpp"
#include "setpoly/int_vec.hpp"

namespace setpoly {

/// The formal variable y_{m,j}.
struct YVar {
  std::uint32_t m = 1;
  std::uint32_t j = 1;
  friend auto operator<=>(const YVar&, const YVar&) = default;
};

using YWord = std::vector<YVar>;

/// Formal polynomial in noncommuting y_{m,j} with coefficients in ℤ^width.
/// Like terms (identical variable sequences) are merged; zero terms dropped.
class NcPolynomial {
 public:
  explicit NcPolynomial(std::size_t width = 1) : width_(width) {}
  static NcPolynomial term(IntVec coeff, YWord word);

  std::size_t width() const noexcept { return width_; }
  const std::map<YWord, IntVec>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const YWord& word, const IntVec& coeff);

  friend NcPolynomial operator+(const NcPolynomial& a, const NcPolynomial& b);
  /// Concatenation of words; coefficients multiply componentwise.
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;
  friend std::strong_ordering operator<=>(const NcPolynomial& a, const NcPolynomial& b);

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::size_t width_;
  std::map<YWord, IntVec> terms_;
};

/// c · x_1^{d_1} ... x_n^{d_n}; exps[m-1] = d_m.
struct Monomial {
  IntVec coeff;
  std::vector<std::uint32_t> exps;
  std::size_t degree() const;
};

/// A polynomial over commuting x_1..x_n with ℤ^width coefficients and no
/// constant term.
class CommPolynomial {
 public:
  CommPolynomial(std::size_t vars, std::size_t width) : vars_(vars), width_(width) {}

  /// "x^2", "3x1^2*x2 - x2", "2*x1*x2 + x1". Variables are x (= x1) or xK.
  /// Throws ParseError.
  static CommPolynomial parse(std::string_view text, std::size_t width = 1);

  void add(Monomial m);
  std::size_t vars() const noexcept { return vars_; }
  std::size_t width() const noexcept { return width_; }
  const std::vector<Monomial>& monomials() const noexcept { return monos_; }
  std::size_t degree() const;
  std::string to_string() const;

 private:
  std::size_t vars_;
  std::size_t width_;
  std::vector<Monomial> monos_;  // sorted by exponent vector, no zero coefficients
};

/// p(Σ_{j∈γ} y_{1,j}, ..., Σ_{j∈γ} y_{n,j}) expanded formally, the factors of
/// each monomial taken in the order x_1 ... x_1 x_2 ... x_n.
NcPolynomial substitute_sums(const CommPolynomial& p, const FinSet& gamma);

/// Φ_{v,η} for a point v = (j_1..j_d). Zero unless j_e = ... = j_d where e is
/// the total degree of η. Throws DegreeOverflow when e is 0 or exceeds d.
NcPolynomial phi_point(TupleView v, const Monomial& eta, std::size_t width);

/// Φ_{a,p} = Σ_{v∈a} Σ_η Φ_{v,η}, a ⊆ {1..N}^d.
NcPolynomial phi_set(const FinSet& a, const CommPolynomial& p, std::size_t d);

/// φ(a_1..a_q) = Σ_t Φ_{a_t,p_t} with a ⊆ {1..N}^d × {1..q} (last
/// coordinate the track). Throws DegreeOverflow and OutOfWindow.
NcPolynomial phi_mapping(const FinSet& a, const std::vector<CommPolynomial>& ps, std::size_t N, std::size_t d);

}  // namespace setpoly

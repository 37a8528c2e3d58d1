#include "setpoly/nc_polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "setpoly/errors.hpp"

namespace setpoly {

NcPolynomial NcPolynomial::term(IntVec coeff, YWord word) {
  NcPolynomial p(coeff.size());
  p.add_term(word, coeff);
  return p;
}

void NcPolynomial::add_term(const YWord& word, const IntVec& coeff) {
  if (coeff.size() != width_) throw ArityMismatch("NcPolynomial: coefficient of the wrong width");
  if (setpoly::is_zero(coeff)) return;
  auto [it, fresh] = terms_.try_emplace(word, coeff);
  if (!fresh) {
    add_into(it->second, coeff);
    if (setpoly::is_zero(it->second)) terms_.erase(it);
  }
}

NcPolynomial operator+(const NcPolynomial& a, const NcPolynomial& b) {
  if (a.width_ != b.width_) throw ArityMismatch("NcPolynomial: adding different widths");
  NcPolynomial out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  if (a.width_ != b.width_) throw ArityMismatch("NcPolynomial: multiplying different widths");
  NcPolynomial out(a.width_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      YWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      IntVec c(ca.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = ca[i] * cb[i];
      out.add_term(w, c);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const NcPolynomial& a, const NcPolynomial& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  return a.terms_ <=> b.terms_;
}

namespace {

std::string coeff_string(const IntVec& c) {
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

std::string NcPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    const bool unit = c.size() == 1 && c[0] == 1;
    if (!unit || w.empty()) s += coeff_string(c);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i || !unit) s += "*";
      s += "y" + std::to_string(w[i].m) + "_" + std::to_string(w[i].j);
    }
  }
  return s;
}

nlohmann::json NcPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : terms_) {
    nlohmann::json word = nlohmann::json::array();
    for (auto v : w) word.push_back({v.m, v.j});
    terms.push_back({{"coeff", c}, {"word", std::move(word)}});
  }
  return {{"width", width_}, {"terms", std::move(terms)}};
}

std::size_t Monomial::degree() const {
  std::size_t e = 0;
  for (auto x : exps) e += x;
  return e;
}

void CommPolynomial::add(Monomial m) {
  if (m.coeff.size() != width_) throw ArityMismatch("CommPolynomial: coefficient of the wrong width");
  if (m.exps.size() > vars_) {
    vars_ = m.exps.size();
    for (auto& x : monos_) x.exps.resize(vars_, 0);
  }
  m.exps.resize(vars_, 0);
  if (m.degree() == 0) throw DegreeOverflow("CommPolynomial: constant terms are not allowed");
  auto it = std::lower_bound(monos_.begin(), monos_.end(), m,
                             [](const Monomial& a, const Monomial& b) { return a.exps < b.exps; });
  if (it != monos_.end() && it->exps == m.exps) {
    add_into(it->coeff, m.coeff);
    if (is_zero(it->coeff)) monos_.erase(it);
  } else if (!is_zero(m.coeff)) {
    monos_.insert(it, std::move(m));
  }
}

std::size_t CommPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& m : monos_) d = std::max(d, m.degree());
  return d;
}

std::string CommPolynomial::to_string() const {
  if (monos_.empty()) return "0";
  std::string s;
  for (const auto& m : monos_) {
    if (!s.empty()) s += " + ";
    s += coeff_string(m.coeff);
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
      if (m.exps[v] == 0) continue;
      s += "*x" + std::to_string(v + 1);
      if (m.exps[v] > 1) s += "^" + std::to_string(m.exps[v]);
    }
  }
  return s;
}

namespace {

struct PolyParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial at offset " + std::to_string(pos) + ": " + what);
  }
  bool digit() const { return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); }
  std::uint64_t number() {
    if (!digit()) fail("expected a number");
    std::uint64_t v = 0;
    while (digit()) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
      if (v > (1ull << 40)) fail("number too large");
    }
    return v;
  }

  Monomial term(std::int64_t sign, std::size_t width) {
    skip();
    std::int64_t c = 1;
    bool have_coeff = false;
    if (digit()) {
      c = static_cast<std::int64_t>(number());
      have_coeff = true;
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip();
      }
    }
    std::vector<std::uint32_t> exps;
    bool any = false;
    while (pos < s.size() && s[pos] == 'x') {
      ++pos;
      std::size_t var = 1;
      if (digit()) var = number();
      if (var == 0 || var > 64) fail("variable index out of range");
      skip();
      std::uint64_t e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip();
        e = number();
        skip();
      }
      if (exps.size() < var) exps.resize(var, 0);
      exps[var - 1] += static_cast<std::uint32_t>(e);
      any = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip();
        if (pos >= s.size() || s[pos] != 'x') fail("expected a variable after '*'");
      } else {
        break;
      }
    }
    if (!any) fail(have_coeff ? "constant terms are not allowed" : "expected a term");
    return Monomial{IntVec(width, sign * c), std::move(exps)};
  }
};

}  // namespace

CommPolynomial CommPolynomial::parse(std::string_view text, std::size_t width) {
  PolyParser p{text};
  CommPolynomial out(0, width);
  p.skip();
  std::int64_t sign = 1;
  if (p.pos < text.size() && (text[p.pos] == '-' || text[p.pos] == '+')) {
    sign = text[p.pos] == '-' ? -1 : 1;
    ++p.pos;
  }
  while (true) {
    Monomial m = p.term(sign, width);
    try {
      out.add(std::move(m));
    } catch (const DegreeOverflow& e) {
      p.fail(e.what());
    }
    p.skip();
    if (p.pos == text.size()) break;
    if (text[p.pos] == '+' || text[p.pos] == '-') {
      sign = text[p.pos] == '-' ? -1 : 1;
      ++p.pos;
    } else {
      p.fail(std::string("unexpected character '") + text[p.pos] + "'");
    }
  }
  if (out.monomials().empty()) throw ParseError("polynomial: all terms cancel");
  return out;
}

NcPolynomial substitute_sums(const CommPolynomial& p, const FinSet& gamma) {
  const std::size_t w = p.width();
  NcPolynomial out(w);
  const auto js = gamma.empty() ? std::vector<Symbol>{} : gamma.symbol_list();
  for (const auto& eta : p.monomials()) {
    NcPolynomial prod = NcPolynomial::term(IntVec(w, 1), {});
    for (std::size_t m = 0; m < eta.exps.size(); ++m) {
      NcPolynomial sum(w);
      for (auto j : js) sum.add_term({YVar{static_cast<std::uint32_t>(m + 1), j}}, IntVec(w, 1));
      for (std::uint32_t e = 0; e < eta.exps[m]; ++e) prod = prod * sum;
    }
    out = out + prod * NcPolynomial::term(eta.coeff, {});
  }
  return out;
}

NcPolynomial phi_point(TupleView v, const Monomial& eta, std::size_t width) {
  const std::size_t d = v.size();
  const std::size_t e = eta.degree();
  if (e == 0 || e > d) throw DegreeOverflow("phi: monomial degree " + std::to_string(e) + " outside 1.." + std::to_string(d));
  for (std::size_t k = e; k < d; ++k) {
    if (v[k] != v[e - 1]) return NcPolynomial(width);
  }
  YWord word;
  std::size_t k = 0;
  for (std::size_t m = 0; m < eta.exps.size(); ++m) {
    for (std::uint32_t r = 0; r < eta.exps[m]; ++r) word.push_back(YVar{static_cast<std::uint32_t>(m + 1), v[k++]});
  }
  return NcPolynomial::term(eta.coeff, std::move(word));
}

NcPolynomial phi_set(const FinSet& a, const CommPolynomial& p, std::size_t d) {
  if (p.degree() > d) throw DegreeOverflow("phi: polynomial degree exceeds d");
  NcPolynomial out(p.width());
  if (a.empty()) return out;
  if (a.arity() != d) throw ArityMismatch("phi: points must have d coordinates");
  for (auto v : a) {
    for (const auto& eta : p.monomials()) out = out + phi_point(v, eta, p.width());
  }
  return out;
}

NcPolynomial phi_mapping(const FinSet& a, const std::vector<CommPolynomial>& ps, std::size_t N, std::size_t d) {
  if (ps.empty()) throw LengthMismatch("phi_mapping: no polynomials");
  const std::size_t w = ps.front().width();
  for (const auto& p : ps) {
    if (p.width() != w) throw ArityMismatch("phi_mapping: polynomials of different widths");
    if (p.degree() > d) throw DegreeOverflow("phi_mapping: polynomial degree exceeds d");
  }
  NcPolynomial out(w);
  if (a.empty()) return out;
  if (a.arity() != d + 1) throw ArityMismatch("phi_mapping: points must be (j_1..j_d, t)");
  for (auto v : a) {
    for (std::size_t k = 0; k < d; ++k) {
      if (v[k] < 1 || v[k] > N) throw OutOfWindow("phi_mapping: coordinate outside 1..N");
    }
    const Symbol t = v[d];
    if (t < 1 || t > ps.size()) throw OutOfWindow("phi_mapping: track outside 1..q");
    for (const auto& eta : ps[t - 1].monomials()) out = out + phi_point(v.subspan(0, d), eta, w);
  }
  return out;
}

}  // namespace setpoly

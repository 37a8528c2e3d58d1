#include "setpoly/polymap.hpp"

#include <algorithm>
#include <numeric>

#include "setpoly/errors.hpp"
#include "setpoly/json_io.hpp"

namespace setpoly {

namespace {

constexpr std::size_t kMaxWindow = 20;

SubsetMask mask_in(const FinSet& window, const FinSet& a) {
  if (a.empty()) return 0;
  if (a.arity() != 1) throw ArityMismatch("expected a set of symbols");
  SubsetMask m = 0;
  for (auto t : a) {
    const std::size_t k = window.index_of(t);
    if (k == window.size()) throw OutOfWindow("symbol " + std::to_string(t[0]) + " outside the window");
    m |= SubsetMask{1} << k;
  }
  return m;
}

FinSet subset_of(const std::vector<Symbol>& syms, SubsetMask m) {
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < syms.size(); ++k) {
    if (m & (SubsetMask{1} << k)) out.push_back(syms[k]);
  }
  return FinSet::from_flat(1, std::move(out));
}

std::string mask_key(const std::vector<Symbol>& syms, SubsetMask m) {
  std::string s = "[";
  bool first = true;
  for (std::size_t k = 0; k < syms.size(); ++k) {
    if (!(m & (SubsetMask{1} << k))) continue;
    if (!first) s += ",";
    s += std::to_string(syms[k]);
    first = false;
  }
  return s + "]";
}

std::vector<Symbol> window_symbols(const FinSet& w) { return w.empty() ? std::vector<Symbol>{} : w.symbol_list(); }

IntVec value_from_json(const nlohmann::json& v, std::size_t& width, const std::string& where) {
  using namespace json_detail;
  const auto& arr = get_array(v, where);
  if (width == 0) width = arr.size();
  if (arr.size() != width || width == 0) throw ParseError(where + ": group element of the wrong width");
  IntVec out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_int(arr[i], join_path(where, i)));
  return out;
}

/// Parses {"[..]": value} keyed by canonical symbol lists into masks.
std::map<SubsetMask, IntVec> values_from_json(const nlohmann::json& j, const FinSet& window, std::size_t& width,
                                              const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const auto syms = window_symbols(window);
  std::map<SubsetMask, IntVec> out;
  for (const auto& [key, v] : j.items()) {
    const std::string kpath = json_detail::join_path(where, key);
    const FinSet a = symbols_from_json(parse_json(key), kpath);
    SubsetMask m;
    try {
      m = mask_in(window, a);
    } catch (const OutOfWindow& e) {
      throw ParseError(kpath + ": " + e.what());
    }
    if (mask_key(syms, m) != key) throw ParseError(kpath + ": key not in canonical form");
    out[m] = value_from_json(v, width, kpath);
  }
  return out;
}

FinSet window_from_json(const nlohmann::json& j, const std::string& where) {
  FinSet w = symbols_from_json(j, where);
  if (w.size() > kMaxWindow) throw ParseError(where + ": window larger than " + std::to_string(kMaxWindow));
  if (json_detail::get_array(j, where).size() != w.size()) throw ParseError(where + ": repeated symbol");
  return w;
}

}  // namespace

PhiTable PhiTable::zero(std::size_t d, FinSet window, std::size_t width) {
  if (window.size() > kMaxWindow) throw TooLarge("PhiTable: window larger than 20");
  PhiTable t{d, std::move(window), width, {}};
  for (SubsetMask m = 0; m < (SubsetMask{1} << t.window.size()); ++m) {
    if (static_cast<std::size_t>(__builtin_popcount(m)) <= d) t.values[m] = zero_vec(width);
  }
  return t;
}

const IntVec& PhiTable::at(SubsetMask a) const {
  auto it = values.find(a);
  if (it == values.end()) throw OutOfWindow("PhiTable: subset outside the domain");
  return it->second;
}

SubsetMask PhiTable::mask_of(const FinSet& a) const { return mask_in(window, a); }

nlohmann::json PhiTable::to_json() const {
  const auto syms = window_symbols(window);
  nlohmann::json vals = nlohmann::json::object();
  for (const auto& [m, v] : values) vals[mask_key(syms, m)] = v;
  return {{"d", d}, {"window", symbols_to_json(window)}, {"values", std::move(vals)}};
}

PhiTable PhiTable::from_json(const nlohmann::json& j) {
  using namespace json_detail;
  expect_object(j, "$", {"d", "window", "values"});
  PhiTable t;
  t.d = get_uint(j["d"], "$.d");
  t.window = window_from_json(j["window"], "$.window");
  std::size_t width = 0;
  t.values = values_from_json(j["values"], t.window, width, "$.values");
  t.width = width;
  for (SubsetMask m = 0; m < (SubsetMask{1} << t.window.size()); ++m) {
    const bool in_domain = static_cast<std::size_t>(__builtin_popcount(m)) <= t.d;
    if (in_domain != (t.values.count(m) == 1)) {
      throw ParseError("$.values: " + std::string(in_domain ? "missing " : "unexpected ") +
                       mask_key(window_symbols(t.window), m));
    }
  }
  return t;
}

LatticeMap::LatticeMap(FinSet window, std::size_t width) : window_(std::move(window)), width_(width) {
  if (window_.size() > kMaxWindow) throw TooLarge("LatticeMap: window larger than 20");
  values_.assign(std::size_t{1} << window_.size(), zero_vec(width_));
}

LatticeMap LatticeMap::from_function(FinSet window, std::size_t width, const std::function<IntVec(const FinSet&)>& f) {
  LatticeMap P(std::move(window), width);
  const auto syms = window_symbols(P.window_);
  for (SubsetMask m = 0; m < P.values_.size(); ++m) {
    P.values_[m] = f(subset_of(syms, m));
    if (P.values_[m].size() != width) throw ArityMismatch("LatticeMap: value of the wrong width");
  }
  return P;
}

IntVec LatticeMap::operator()(const FinSet& n) const { return values_[mask_of(n)]; }
SubsetMask LatticeMap::mask_of(const FinSet& n) const { return mask_in(window_, n); }
FinSet LatticeMap::subset(SubsetMask n) const { return subset_of(window_symbols(window_), n); }

nlohmann::json LatticeMap::to_json() const {
  const auto syms = window_symbols(window_);
  nlohmann::json vals = nlohmann::json::object();
  for (SubsetMask m = 0; m < values_.size(); ++m) vals[mask_key(syms, m)] = values_[m];
  return {{"window", symbols_to_json(window_)}, {"values", std::move(vals)}};
}

LatticeMap LatticeMap::from_json(const nlohmann::json& j) {
  using namespace json_detail;
  expect_object(j, "$", {"window", "values"});
  FinSet w = window_from_json(j["window"], "$.window");
  std::size_t width = 0;
  auto vals = values_from_json(j["values"], w, width, "$.values");
  if (vals.size() != (std::size_t{1} << w.size())) throw ParseError("$.values: the map must be given on every subset");
  LatticeMap P(std::move(w), width);
  for (auto& [m, v] : vals) P.values_[m] = std::move(v);
  return P;
}

IntVec eval_from_phi(const PhiTable& phi, const FinSet& n) {
  const SubsetMask nm = phi.mask_of(n);
  IntVec acc = zero_vec(phi.width);
  // Subsets of n with at most d elements.
  for (SubsetMask a = nm;; a = (a - 1) & nm) {
    if (static_cast<std::size_t>(__builtin_popcount(a)) <= phi.d) add_into(acc, phi.at(a));
    if (a == 0) break;
  }
  return acc;
}

LatticeMap lattice_from_phi(const PhiTable& phi) {
  LatticeMap P(phi.window, phi.width);
  for (SubsetMask n = 0; n < (SubsetMask{1} << phi.window.size()); ++n) {
    IntVec acc = zero_vec(phi.width);
    for (SubsetMask a = n;; a = (a - 1) & n) {
      if (static_cast<std::size_t>(__builtin_popcount(a)) <= phi.d) add_into(acc, phi.at(a));
      if (a == 0) break;
    }
    P.at(n) = std::move(acc);
  }
  return P;
}

LatticeMap difference_op(const LatticeMap& P, const FinSet& m) {
  const SubsetMask mm = P.mask_of(m);
  const auto syms = window_symbols(P.window());
  std::vector<Symbol> rest;
  std::vector<SubsetMask> bit;  // position in the old window of each remaining symbol
  for (std::size_t k = 0; k < syms.size(); ++k) {
    if (!(mm & (SubsetMask{1} << k))) {
      rest.push_back(syms[k]);
      bit.push_back(SubsetMask{1} << k);
    }
  }
  LatticeMap out(FinSet::from_flat(1, rest), P.width());
  for (SubsetMask n = 0; n < (SubsetMask{1} << rest.size()); ++n) {
    SubsetMask old = 0;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (n & (SubsetMask{1} << k)) old |= bit[k];
    }
    out.at(n) = sub_vec(P.at(old | mm), P.at(old));
  }
  return out;
}

bool degree_bound_check(const LatticeMap& P, std::size_t d) {
  const std::size_t W = P.points();
  const std::size_t chains = d + 1;
  if (chains > W) return true;  // no d+1 disjoint nonempty subsets
  const std::size_t labels = chains + 2;  // 0: unused, 1: n, 2..: m_i
  double total = 1;
  for (std::size_t k = 0; k < W; ++k) total *= static_cast<double>(labels);
  if (total > 5e7) throw TooLarge("degree_bound_check: too many cases for an exhaustive check");

  std::vector<std::size_t> lab(W, 0);
  std::vector<SubsetMask> ms(chains);
  IntVec acc(P.width());
  while (true) {
    SubsetMask n = 0;
    std::fill(ms.begin(), ms.end(), 0);
    for (std::size_t k = 0; k < W; ++k) {
      if (lab[k] == 1) n |= SubsetMask{1} << k;
      if (lab[k] >= 2) ms[lab[k] - 2] |= SubsetMask{1} << k;
    }
    if (std::all_of(ms.begin(), ms.end(), [](SubsetMask x) { return x != 0; })) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::uint32_t S = 0; S < (1u << chains); ++S) {
        SubsetMask u = n;
        for (std::size_t i = 0; i < chains; ++i) {
          if (S & (1u << i)) u |= ms[i];
        }
        const bool neg = ((chains - static_cast<std::size_t>(__builtin_popcount(S))) & 1) != 0;
        if (neg) {
          sub_into(acc, P.at(u));
        } else {
          add_into(acc, P.at(u));
        }
      }
      if (!is_zero(acc)) return false;
    }
    std::size_t k = 0;
    while (k < W && ++lab[k] == labels) lab[k++] = 0;
    if (k == W) break;
  }
  return true;
}

namespace {

/// φ for a map on the subsets of `syms` (values indexed by mask over syms),
/// `rank[k]` the position of syms[k] in the chosen order.
std::vector<std::optional<IntVec>> recover_rec(const std::vector<IntVec>& P, const std::vector<Symbol>& syms,
                                               const std::vector<std::size_t>& rank, std::size_t d) {
  const std::size_t W = syms.size();
  std::vector<std::optional<IntVec>> phi(std::size_t{1} << W);
  phi[0] = P[0];
  if (d == 0 || W == 0) return phi;
  for (std::size_t s = 0; s < W; ++s) {
    // D_s P on the window without s.
    std::vector<Symbol> rs;
    std::vector<std::size_t> rr;
    std::vector<SubsetMask> bit;
    for (std::size_t k = 0; k < W; ++k) {
      if (k == s) continue;
      rs.push_back(syms[k]);
      rr.push_back(rank[k]);
      bit.push_back(SubsetMask{1} << k);
    }
    std::vector<IntVec> DP(std::size_t{1} << rs.size());
    auto expand = [&](SubsetMask n) {
      SubsetMask old = 0;
      for (std::size_t k = 0; k < rs.size(); ++k) {
        if (n & (SubsetMask{1} << k)) old |= bit[k];
      }
      return old;
    };
    for (SubsetMask n = 0; n < DP.size(); ++n) {
      const SubsetMask old = expand(n);
      DP[n] = sub_vec(P[old | (SubsetMask{1} << s)], P[old]);
    }
    const auto phi_s = recover_rec(DP, rs, rr, d - 1);
    // φ(a) = φ_s(a ∖ {s}) for the a whose least element is s.
    for (SubsetMask b = 0; b < DP.size(); ++b) {
      if (!phi_s[b]) continue;
      bool s_least = true;
      for (std::size_t k = 0; k < rs.size(); ++k) {
        if ((b & (SubsetMask{1} << k)) && rr[k] < rank[s]) s_least = false;
      }
      if (s_least) phi[expand(b) | (SubsetMask{1} << s)] = phi_s[b];
    }
  }
  return phi;
}

}  // namespace

PhiTable recover_phi(const LatticeMap& P, std::size_t d, const std::optional<std::vector<Symbol>>& order) {
  if (!degree_bound_check(P, d)) throw NotPolynomial("recover_phi: the map is not polynomial of degree <= " + std::to_string(d));
  const auto syms = window_symbols(P.window());
  std::vector<std::size_t> rank(syms.size());
  std::iota(rank.begin(), rank.end(), 0);
  if (order) {
    if (order->size() != syms.size()) throw OutOfWindow("recover_phi: the order must list every window symbol once");
    for (std::size_t k = 0; k < syms.size(); ++k) {
      auto it = std::find(order->begin(), order->end(), syms[k]);
      if (it == order->end()) throw OutOfWindow("recover_phi: the order must list every window symbol once");
      rank[k] = static_cast<std::size_t>(it - order->begin());
    }
  }
  std::vector<IntVec> vals(std::size_t{1} << syms.size());
  for (SubsetMask m = 0; m < vals.size(); ++m) vals[m] = P.at(m);
  const auto phi = recover_rec(vals, syms, rank, d);
  PhiTable t{d, P.window(), P.width(), {}};
  for (SubsetMask m = 0; m < phi.size(); ++m) {
    if (static_cast<std::size_t>(__builtin_popcount(m)) <= d) t.values[m] = phi[m] ? *phi[m] : zero_vec(P.width());
  }
  return t;
}

std::vector<FinSet> universal_poly(const FinSet& n, std::size_t d) {
  const auto syms = window_symbols(n);
  std::vector<FinSet> out;
  for (std::size_t s = 0; s <= std::min(d, syms.size()); ++s) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Symbol> pick;
      for (auto i : idx) pick.push_back(syms[i]);
      out.push_back(FinSet::from_flat(1, std::move(pick)));
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == syms.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

IntVec phi_hat(const PhiTable& phi, const std::vector<FinSet>& family) {
  std::vector<SubsetMask> seen;
  IntVec acc = zero_vec(phi.width);
  for (const auto& a : family) {
    const SubsetMask m = phi.mask_of(a);
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) throw OverlapError("phi_hat: repeated member");
    seen.push_back(m);
    add_into(acc, phi.at(m));
  }
  return acc;
}

Tuple embed_subsets(const FinSet& a, std::size_t d) {
  if (a.empty()) throw EmptySetError("embed_subsets: empty set");
  if (a.size() > d) throw TooLarge("embed_subsets: more than d elements");
  Tuple t = a.symbol_list();
  t.resize(d, t.back());
  return t;
}

GroupConfig group_config_demo(const std::function<std::int64_t(const FinSet&)>& P, const FinSet& window,
                              const FinSet& F, const IntColoring& chi, std::int64_t max_h) {
  if (P(FinSet(2)) != 0) throw ConstantTermError("group_config_demo: P(empty) must be 0");
  const auto syms = window_symbols(window);
  const auto fs = window_symbols(F);
  if (fs.size() > 16) throw TooLarge("group_config_demo: F larger than 16");
  for (const auto& gamma : universal_poly(window, syms.size())) {
    if (gamma.empty()) continue;
    std::vector<std::int64_t> images;
    for (SubsetMask c = 0; c < (SubsetMask{1} << fs.size()); ++c) {
      images.push_back(P(cartesian(gamma, subset_of(fs, c))));
    }
    for (std::int64_t step = 0; step <= 2 * max_h; ++step) {
      const std::int64_t h = step % 2 == 0 ? step / 2 : -(step + 1) / 2;
      GroupConfig g{h, gamma, {}, {}};
      bool mono = true;
      for (auto v : images) {
        g.values.push_back(h + v);
        g.colors.push_back(chi(h + v));
        if (g.colors.back() != g.colors.front()) {
          mono = false;
          break;
        }
      }
      if (mono) return g;
    }
  }
  throw BudgetExhausted("group_config_demo: no configuration with |h| <= " + std::to_string(max_h));
}

std::function<std::int64_t(const FinSet&)> sum_of_maps(std::vector<std::function<std::int64_t(std::int64_t)>> p,
                                                       std::vector<std::int64_t> g) {
  return [p = std::move(p), g = std::move(g)](const FinSet& a) {
    std::vector<std::int64_t> sums(p.size(), 0);
    for (auto t : a) {
      if (t.size() != 2 || t[0] < 1 || t[0] > g.size() || t[1] < 1 || t[1] > p.size()) {
        throw OutOfWindow("sum_of_maps: point outside {1..L} x {1..k}");
      }
      sums[t[1] - 1] += g[t[0] - 1];
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) total += p[i](sums[i]);
    return total;
  };
}

}  // namespace setpoly

#include "setpoly/ramsey.hpp"

#include <algorithm>
#include <numeric>

#include "setpoly/errors.hpp"
#include "setpoly/json_io.hpp"

namespace setpoly {

std::vector<FiniteSum> finite_sums(const std::vector<IntVec>& gen) {
  if (gen.empty()) throw EmptySetError("finite_sums: empty generator");
  if (gen.size() > 24) throw TooLarge("finite_sums: more than 24 generators");
  const std::size_t w = gen.front().size();
  std::vector<FiniteSum> out;
  out.reserve((std::size_t{1} << gen.size()) - 1);
  for (std::uint32_t mask = 1; mask < (1u << gen.size()); ++mask) {
    std::vector<Symbol> idx;
    IntVec s(w, 0);
    for (std::size_t j = 0; j < gen.size(); ++j) {
      if (mask & (1u << j)) {
        idx.push_back(static_cast<Symbol>(j + 1));
        add_into(s, gen[j]);
      }
    }
    out.push_back(FiniteSum{FinSet::from_flat(1, std::move(idx)), std::move(s)});
  }
  return out;
}

std::vector<FiniteSum> finite_sums(const std::vector<std::int64_t>& gen) {
  std::vector<IntVec> v;
  for (auto x : gen) v.push_back({x});
  return finite_sums(v);
}

SemigroupValue combine(const SemigroupValue& a, const SemigroupValue& b) {
  if (a.index() != b.index()) throw ArityMismatch("combine: values of different semigroups");
  return std::visit(
      [&](const auto& x) -> SemigroupValue {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, std::int64_t>) {
          auto s = checked_add(x, y);
          if (!s) throw TooLarge("combine: integer overflow");
          return *s;
        } else if constexpr (std::is_same_v<T, IntVec>) {
          return add_vec(x, y);
        } else if constexpr (std::is_same_v<T, FreeMonoid>) {
          FreeMonoid out = x;
          for (const auto& [k, c] : y.counts) out.counts[k] += c;
          return out;
        } else if constexpr (std::is_same_v<T, NcPolynomial>) {
          return x + y;
        } else if constexpr (std::is_same_v<T, TensorSum>) {
          TensorSum out = x;
          for (const auto& [k, c] : y.terms) out.terms[k] += c;
          return out;
        } else if constexpr (std::is_same_v<T, Multiplicative>) {
          std::uint64_t r;
          if (__builtin_mul_overflow(x.value, y.value, &r)) throw TooLarge("combine: product overflow");
          return Multiplicative{r};
        } else {
          return disjoint_union(x, y);
        }
      },
      a);
}

Homomorphism identity_hom() {
  return {"identity", [](const SemigroupValue& v) { return v; }};
}

Homomorphism evaluation_hom(std::map<YVar, std::int64_t> g) {
  return {"evaluation", [g = std::move(g)](const SemigroupValue& v) -> SemigroupValue {
            const auto* p = std::get_if<NcPolynomial>(&v);
            if (p == nullptr || p->width() != 1) throw ArityMismatch("evaluation: expects a width-1 formal polynomial");
            std::int64_t total = 0;
            for (const auto& [word, c] : p->terms()) {
              std::optional<std::int64_t> t = c[0];
              for (auto y : word) {
                auto it = g.find(y);
                if (it == g.end()) {
                  throw NotFound("evaluation: no value for y" + std::to_string(y.m) + "_" + std::to_string(y.j));
                }
                t = checked_mul(*t, it->second);
                if (!t) throw TooLarge("evaluation: overflow");
              }
              auto s = checked_add(total, *t);
              if (!s) throw TooLarge("evaluation: overflow");
              total = *s;
            }
            return total;
          }};
}

Homomorphism tensor_hom() {
  return {"tensor", [](const SemigroupValue& v) -> SemigroupValue {
            const auto* t = std::get_if<TensorSum>(&v);
            if (t == nullptr) throw ArityMismatch("tensor: expects a tensor sum");
            std::uint64_t acc = 1;
            for (const auto& [uv, mult] : t->terms) {
              for (std::uint64_t rep = 0; rep < uv.second * mult; ++rep) {
                if (__builtin_mul_overflow(acc, uv.first, &acc)) throw TooLarge("tensor: overflow");
              }
            }
            return Multiplicative{acc};
          }};
}

Homomorphism reducer_hom(std::vector<std::int64_t> weights) {
  if (weights.empty()) throw LengthMismatch("reducer_hom: no weights");
  return {"reducer", [w = std::move(weights)](const SemigroupValue& v) -> SemigroupValue {
            const auto* a = std::get_if<FinSet>(&v);
            if (a == nullptr) throw ArityMismatch("reducer: expects a set of tuples");
            std::int64_t total = 0;
            for (auto t : *a) {
              if (w.size() == 1) {
                total += w[0];
                continue;
              }
              const Symbol track = t.empty() ? 0 : t.back();
              if (track < 1 || track > w.size()) throw OutOfWindow("reducer: point off every track");
              total += w[track - 1];
            }
            return total;
          }};
}

FamilyOfRecurrence pushforward(const Homomorphism& hom, const FamilyOfRecurrence& fam) {
  std::vector<const SemigroupValue*> sample;
  FamilyOfRecurrence out;
  for (const auto& R : fam) {
    if (R.empty()) throw EmptySetError("pushforward: empty member of the family");
    std::vector<SemigroupValue> img;
    for (const auto& x : R) {
      img.push_back(hom.map(x));
      if (sample.size() < 32) sample.push_back(&x);
    }
    out.push_back(std::move(img));
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i; j < sample.size(); ++j) {
      SemigroupValue sum;
      try {
        sum = combine(*sample[i], *sample[j]);
      } catch (const OverlapError&) {
        continue;
      }
      if (!(hom.map(sum) == combine(hom.map(*sample[i]), hom.map(*sample[j])))) {
        throw NotHomomorphic(hom.name + ": does not respect addition");
      }
    }
  }
  return out;
}

FamilyOfRecurrence formal_family(const std::vector<CommPolynomial>& ps, std::size_t N) {
  if (N == 0 || N > 16) throw TooLarge("formal_family: N must be in 1..16");
  FamilyOfRecurrence fam;
  for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
    std::vector<Symbol> js;
    for (std::size_t j = 0; j < N; ++j) {
      if (mask & (1u << j)) js.push_back(static_cast<Symbol>(j + 1));
    }
    const FinSet gamma = FinSet::from_flat(1, std::move(js));
    std::vector<SemigroupValue> R;
    for (const auto& p : ps) R.push_back(substitute_sums(p, gamma));
    fam.push_back(std::move(R));
  }
  return fam;
}

bool ChromaticTransfer::monochromatic() const {
  return std::all_of(colors.begin(), colors.end(), [&](int c) { return c == colors.front(); });
}

bool ChromaticTransfer::arithmetic() const {
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (terms[t] != h + static_cast<std::int64_t>(t) * difference) return false;
  }
  return true;
}

ChromaticTransfer chromatic_transfer(const ColoringOracle& reducer, const PhjResult& w, std::size_t d, std::size_t q) {
  if (reducer.kind() != ColoringOracle::Kind::Reducer) throw ArityMismatch("chromatic_transfer: needs a reducer oracle");
  ChromaticTransfer out;
  out.difference = 1;
  for (std::size_t e = 0; e < d; ++e) out.difference *= static_cast<std::int64_t>(w.gamma.size());
  out.h = reducer.reducer_value(w.a);
  out.terms.push_back(out.h);
  const FinSet cube = power(w.gamma, d);
  for (std::size_t t = 1; t <= q; ++t) {
    out.terms.push_back(
        reducer.reducer_value(set_union(w.a, cartesian(cube, FinSet::symbols({static_cast<Symbol>(t)})))));
  }
  for (auto x : out.terms) out.colors.push_back(reducer.chi()(x));
  return out;
}

// ---- square differences ---------------------------------------------------

std::optional<std::vector<int>> square_difference_free_coloring(std::size_t N, int r) {
  if (r < 1) throw DimensionMismatch("square_difference_free_coloring: r must be positive");
  if (N == 0) return std::vector<int>{};
  std::vector<std::size_t> squares;
  for (std::size_t k = 1; k * k < N; ++k) squares.push_back(k * k);
  // blocked[x][c]: how many earlier cells at a square distance hold color c.
  std::vector<std::vector<int>> blocked(N + 1, std::vector<int>(static_cast<std::size_t>(r), 0));
  std::vector<int> color(N + 1, -1);
  std::vector<int> used(N + 2, 0);

  auto place = [&](std::size_t x, int c, int delta) {
    for (auto s : squares) {
      if (x + s > N) break;
      blocked[x + s][static_cast<std::size_t>(c)] += delta;
    }
  };
  // A later cell with every color blocked cannot be completed.
  auto dead_end = [&](std::size_t x) {
    for (auto s : squares) {
      if (x + s > N) break;
      const auto& b = blocked[x + s];
      if (std::all_of(b.begin(), b.end(), [](int k) { return k > 0; })) return true;
    }
    return false;
  };

  std::size_t x = 1;
  while (true) {
    if (x == N + 1) {
      std::vector<int> out;
      for (std::size_t i = 1; i <= N; ++i) out.push_back(color[i] + 1);
      return out;
    }
    if (color[x] >= 0) place(x, color[x], -1);
    const int limit = std::min(r, used[x] + 1);
    int c = color[x] + 1;
    for (; c < limit; ++c) {
      if (blocked[x][static_cast<std::size_t>(c)] > 0) continue;
      place(x, c, +1);
      if (!dead_end(x)) break;
      place(x, c, -1);
    }
    if (c < limit) {
      color[x] = c;
      used[x + 1] = std::max(used[x], c + 1);
      ++x;
      continue;
    }
    color[x] = -1;
    if (x == 1) return std::nullopt;
    --x;
  }
}

SquareDiffResult square_difference_min_N(int r, std::size_t cap) {
  if (r < 1) throw DimensionMismatch("square_difference_min_N: r must be positive");
  std::vector<int> last;
  for (std::size_t N = 1; N <= cap; ++N) {
    auto c = square_difference_free_coloring(N, r);
    if (!c) return SquareDiffResult{N, last};
    last = std::move(*c);
  }
  throw CapTooSmall("square_difference_min_N: a coloring of {1.." + std::to_string(cap) + "} avoids the pattern");
}

// ---- configuration searches -----------------------------------------------

namespace {

/// Nonempty subsets of {1..L} by size, then lexicographically.
std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t L) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 1; s <= L; ++s) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      out.push_back(idx);
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == L - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::size_t common_length(const std::vector<std::vector<std::int64_t>>& a,
                          const std::vector<std::vector<std::int64_t>>& b) {
  if (a.empty() || a.size() != b.size()) throw LengthMismatch("generator families must be nonempty and of equal count");
  const std::size_t L = a.front().size();
  for (const auto* fam : {&a, &b}) {
    for (const auto& g : *fam) {
      if (g.size() != L) throw LengthMismatch("generator lists of different lengths");
    }
  }
  if (L == 0) throw EmptySetError("empty generator list");
  if (L > 20) throw TooLarge("more than 20 generators");
  return L;
}

FinSet gamma_set(const std::vector<std::size_t>& idx) {
  std::vector<Symbol> s;
  for (auto i : idx) s.push_back(static_cast<Symbol>(i + 1));
  return FinSet::from_flat(1, std::move(s));
}

/// Searches base ∈ 1..cap (outer) and γ (inner) for a monochromatic config.
ConfigResult config_search(std::size_t q, std::size_t L, const IntColoring& chi, std::int64_t cap,
                           const std::function<std::optional<std::int64_t>(std::int64_t, std::size_t,
                                                                           const std::vector<std::size_t>&)>& term) {
  const auto gammas = subsets_by_size(L);
  for (std::int64_t base = 1; base <= cap; ++base) {
    const int c0 = chi(base);
    for (const auto& g : gammas) {
      ConfigResult res{base, {}, {base}, {c0}};
      bool ok = true;
      for (std::size_t i = 0; i < q && ok; ++i) {
        auto v = term(base, i, g);
        if (!v) {
          ok = false;
          break;
        }
        const int c = chi(*v);
        ok = c == c0;
        res.config.push_back(*v);
        res.colors.push_back(c);
      }
      if (ok) {
        res.gamma = gamma_set(g);
        return res;
      }
    }
  }
  throw BudgetExhausted("no monochromatic configuration with base <= " + std::to_string(cap));
}

}  // namespace

ConfigResult product_sum_search(const std::vector<std::vector<std::int64_t>>& n_gens,
                                const std::vector<std::vector<std::int64_t>>& k_gens, const IntColoring& chi,
                                std::int64_t cap) {
  const std::size_t L = common_length(n_gens, k_gens);
  return config_search(n_gens.size(), L, chi, cap,
                       [&](std::int64_t a, std::size_t i, const std::vector<std::size_t>& g) -> std::optional<std::int64_t> {
                         std::int64_t n = 0, k = 0;
                         for (auto j : g) {
                           n += n_gens[i][j];
                           k += k_gens[i][j];
                         }
                         auto prod = checked_mul(n, k);
                         if (!prod) return std::nullopt;
                         return checked_add(a, *prod);
                       });
}

ConfigResult multiplicative_search(const std::vector<std::vector<std::int64_t>>& sigma_gens,
                                   const std::vector<std::vector<std::int64_t>>& pi_gens, const IntColoring& chi,
                                   std::int64_t cap) {
  const std::size_t L = common_length(sigma_gens, pi_gens);
  for (const auto& g : pi_gens) {
    for (auto x : g) {
      if (x < 1) throw DimensionMismatch("multiplicative_search: pi generators must be positive");
    }
  }
  for (const auto& g : sigma_gens) {
    for (auto x : g) {
      if (x < 0) throw DimensionMismatch("multiplicative_search: sigma generators must be nonnegative");
    }
  }
  return config_search(sigma_gens.size(), L, chi, cap,
                       [&](std::int64_t b, std::size_t i, const std::vector<std::size_t>& g) -> std::optional<std::int64_t> {
                         std::int64_t pi = 1, sigma = 0;
                         for (auto j : g) {
                           auto p = checked_mul(pi, pi_gens[i][j]);
                           if (!p) return std::nullopt;
                           pi = *p;
                           sigma += sigma_gens[i][j];
                         }
                         auto pw = checked_pow(pi, static_cast<std::uint64_t>(sigma));
                         if (!pw) return std::nullopt;
                         return checked_mul(b, *pw);
                       });
}

nlohmann::json to_json(const ConfigResult& r) {
  return {{"base", r.base}, {"gamma", symbols_to_json(r.gamma)}, {"config", r.config}, {"colors", r.colors}};
}

}  // namespace setpoly

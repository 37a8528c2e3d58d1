#include "setpoly/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "setpoly/json_io.hpp"

namespace setpoly {

namespace {

/// Steps `idx` (strictly increasing, values < n) to the next combination of
/// the same size in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

FinSet pick_symbols(const std::vector<Symbol>& from, const std::vector<std::size_t>& idx) {
  std::vector<Symbol> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(from[i]);
  return FinSet::from_flat(1, std::move(out));
}

FinSet pick_points(const FinSet& pool, const std::vector<std::size_t>& idx) {
  std::vector<Symbol> out;
  out.reserve(idx.size() * pool.arity());
  for (auto i : idx) {
    auto t = pool[i];
    out.insert(out.end(), t.begin(), t.end());
  }
  return FinSet::from_flat(pool.arity(), std::move(out));
}

FinSet interval(Symbol first, std::size_t count) {
  std::vector<Symbol> s(count);
  std::iota(s.begin(), s.end(), first);
  return FinSet::from_flat(1, std::move(s));
}

Symbol max_symbol(const FinSet& s) {
  return s.empty() ? 0 : s.symbol_list().back();
}

std::vector<FinSet> all_subsets(const FinSet& u) {
  std::vector<FinSet> out;
  const std::size_t m = u.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
    }
    FinSet b = pick_points(u, idx);
    if (b.empty()) b = FinSet(u.arity());
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::optional<WindowHit> search_window(const System& A, const FinSet& N, const ColorView& view, std::size_t max_a,
                                       std::uint64_t& candidates_left) {
  const std::size_t D = A.dim();
  if (N.empty()) return std::nullopt;
  const auto syms = N.symbol_list();
  const FinSet whole = evaluate_union(A, N);
  for (std::size_t s = 1; s <= syms.size(); ++s) {
    std::vector<std::size_t> ni(s);
    std::iota(ni.begin(), ni.end(), 0);
    do {
      const FinSet n = pick_symbols(syms, ni);
      std::vector<FinSet> images;
      FinSet used(D);
      for (const auto& P : A) {
        images.push_back(evaluate(P, n));
        used = set_union(used, images.back());
      }
      const FinSet pool = set_minus(whole, used);
      const std::size_t top = std::min(max_a, pool.size());
      for (std::size_t t = 0; t <= top; ++t) {
        std::vector<std::size_t> ai(t);
        std::iota(ai.begin(), ai.end(), 0);
        do {
          if (candidates_left == 0) throw BudgetExhausted("search budget exhausted");
          --candidates_left;
          FinSet a = t == 0 ? FinSet(D) : pick_points(pool, ai);
          bool ok = true;
          for (const auto& img : images) {
            if (!view.same_color(set_union(a, img), a)) {
              ok = false;
              break;
            }
          }
          if (ok) return WindowHit{n, std::move(a)};
        } while (t > 0 && next_combination(ai, pool.size()));
      }
    } while (next_combination(ni, syms.size()));
  }
  return std::nullopt;
}

Witness observe(const System& A, const FinSet& N, const FinSet& n, const FinSet& a, const ColoringOracle& oracle) {
  Witness w{N, n, a, oracle(a), {}};
  for (const auto& P : A) w.config_colors.push_back(oracle(set_union(a, evaluate(P, n))));
  return w;
}

Witness brute_force_witness(const RecurrenceRequest& req, const ColoringOracle& oracle) {
  for (const auto& P : req.A) {
    if (!constant_term(P).empty()) throw ConstantTermError("brute_force_witness: member with a nonempty constant term");
  }
  std::uint64_t left = req.budget.max_candidates;
  std::vector<Symbol> base;
  if (req.window) {
    base = req.window->empty() ? std::vector<Symbol>{} : req.window->symbol_list();
  } else {
    const Symbol start = std::max(max_symbol(req.H), max_symbol(system_support(req.A))) + 1;
    base = interval(start, req.budget.max_window).symbol_list();
  }
  const std::size_t top = std::min(req.budget.max_window, base.size());
  for (std::size_t W = 1; W <= top; ++W) {
    const FinSet N = FinSet::from_flat(1, std::vector<Symbol>(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(W)));
    if (auto hit = search_window(req.A, N, oracle, req.budget.max_a, left)) {
      return observe(req.A, N, hit->n, hit->a, oracle);
    }
  }
  throw BudgetExhausted("no witness within window " + std::to_string(top));
}

bool ProbeColoring::same_color(const FinSet& x, const FinSet& y) const {
  if (x == y) return true;
  const FinSet cx = set_union(shift_, x);
  const FinSet cy = set_union(shift_, y);
  for (const auto& b : probes_) {
    if (base_(set_union(cx, b)) != base_(set_union(cy, b))) return false;
  }
  return true;
}

SubOracle brute_force_sub(SearchBudget budget) {
  return [budget](const SubRequest& req) -> WindowHit {
    std::uint64_t left = budget.max_candidates;
    auto hit = search_window(req.A, req.window, *req.view, budget.max_a, left);
    if (!hit) throw BudgetExhausted("stage " + std::to_string(req.stage) + ": no witness in the stage window");
    return *hit;
  };
}

FocusingResult focusing_composer(const System& A, const SetPolynomial& Q, const ColoringOracle& oracle,
                                 const SubOracle& sub, const FocusingOptions& opt, SymbolAllocator& alloc) {
  const std::size_t D = A.dim();
  if (Q.dim() != D) throw DimensionMismatch("focusing_composer: Q and A differ in dimension");
  if (Q.is_empty()) throw MalformedQ("focusing_composer: Q is empty");
  for (const auto& P : A) {
    if (!constant_term(P).empty()) throw ConstantTermError("focusing_composer: member with a nonempty constant term");
    if (!dominates(Q, P)) throw NotDominatedError("focusing_composer: Q is not below every member");
  }
  if (opt.stage_window == 0) throw CapTooSmall("focusing_composer: empty stage window");

  const std::size_t k = opt.k;
  FocusingTrace trace;
  trace.k = k;
  trace.stages.resize(k + 1);

  FinSet H = set_union(set_union(opt.H, system_support(A)), poly_support(Q));
  alloc.reserve(H);
  FinSet M(1);
  for (std::size_t i = 0; i <= k; ++i) {
    auto& st = trace.stages[i];
    st.H = H;
    st.N = alloc.mint_set(opt.stage_window);
    st.A = derived_system(A, Q, M);
    M = set_union(M, st.N);
    H = set_union(H, st.N);
  }

  std::vector<FinSet> qN(k + 1);
  for (std::size_t i = 0; i <= k; ++i) qN[i] = evaluate(Q, trace.stages[i].N);

  // Backward: stage i sees ω shifted by what the later stages fixed.
  FinSet tail(D);  // Q(N_k) ∪ ... ∪ Q(N_{i+1}) ∪ a_k ∪ ... ∪ a_{i+1}
  FinSet earlier(1);
  for (std::size_t i = k + 1; i-- > 0;) {
    auto& st = trace.stages[i];
    st.shift = set_union(tail, qN[i]);
    FinSet before(1);
    for (std::size_t l = 0; l < i; ++l) before = set_union(before, trace.stages[l].N);
    const FinSet U = before.empty() ? FinSet(D) : evaluate_union(A, before);
    if (U.size() > opt.max_probe_bits) {
      throw FocusingFailure("stage " + std::to_string(i) + ": probe family over " +
                                std::to_string(opt.max_probe_bits) + " points",
                            trace);
    }
    ProbeColoring view(oracle, st.shift, all_subsets(U));
    st.probes = view.probe_count();
    WindowHit hit;
    try {
      hit = sub(SubRequest{st.A, st.H, st.N, &view, i});
    } catch (const BudgetExhausted& e) {
      throw FocusingFailure(e.what(), trace);
    }
    if (hit.n.empty() || !hit.n.is_subset_of(st.N) || !hit.a.is_subset_of(evaluate_union(st.A, st.N))) {
      throw FocusingFailure("stage " + std::to_string(i) + ": sub-oracle answer outside its window", trace);
    }
    st.n = hit.n;
    st.a = hit.a.empty() ? FinSet(D) : hit.a;
    st.solved = true;
    tail = set_union(st.shift, st.a);
  }

  FinSet all_a(D), all_qN(D);
  for (std::size_t l = 0; l <= k; ++l) {
    all_a = set_union(all_a, trace.stages[l].a);
    all_qN = set_union(all_qN, qN[l]);
  }
  const FinSet base = set_union(all_a, all_qN);
  FinSet removed(D);
  for (std::size_t i = 0; i <= k; ++i) {
    auto& st = trace.stages[i];
    removed = set_union(removed, evaluate(Q, st.n));
    st.x = set_minus(base, removed);
    st.color = oracle(st.x);
  }

  for (std::size_t j = 1; j <= k && !trace.pair_j; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (trace.stages[i].color == trace.stages[j].color) {
        trace.pair_i = i;
        trace.pair_j = j;
        break;
      }
    }
  }
  if (!trace.pair_j) throw FocusingFailure("no repeated color among the stages; k is below the color count", trace);

  const std::size_t pi = *trace.pair_i, pj = *trace.pair_j;
  FinSet n(1), N(1);
  for (std::size_t l = pi + 1; l <= pj; ++l) n = set_union(n, trace.stages[l].n);
  for (const auto& st : trace.stages) N = set_union(N, st.N);
  const FinSet a = trace.stages[pj].x;
  if (!bridge_check(A, n, a, oracle)) throw FocusingFailure("composed witness failed verification", trace);
  return FocusingResult{observe(A, N, n, a, oracle), std::move(trace)};
}

std::vector<std::string> check_focusing_ledger(const System& A, const SetPolynomial& Q, const FocusingTrace& trace) {
  std::vector<std::string> bad;
  const auto& st = trace.stages;
  const std::size_t K = st.size();
  std::vector<FinSet> qN, qn;
  for (const auto& s : st) {
    qN.push_back(evaluate(Q, s.N));
    qn.push_back(evaluate(Q, s.n));
  }
  for (std::size_t i = 0; i < K; ++i) {
    if (st[i].a.intersects(qN[i])) bad.push_back("(ii) a_" + std::to_string(i) + " meets Q(N_" + std::to_string(i) + ")");
    for (std::size_t j = 0; j < K; ++j) {
      if (i == j) continue;
      if (i < j && qN[i].intersects(qN[j])) {
        bad.push_back("(i) Q(N_" + std::to_string(i) + ") meets Q(N_" + std::to_string(j) + ")");
      }
      if (st[i].a.intersects(qN[j])) {
        bad.push_back("(iii) a_" + std::to_string(i) + " meets Q(N_" + std::to_string(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < K; ++i) {
    FinSet n(1);
    for (std::size_t j = i + 1; j < K; ++j) {
      n = set_union(n, st[j].n);
      for (const auto& P : A) {
        const FinSet img = evaluate(P, n);
        for (std::size_t l = 0; l < K; ++l) {
          const std::string tag = " for i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", l=" + std::to_string(l);
          if (img.intersects(set_minus(qN[l], qn[l]))) bad.push_back("(iv) P(n) meets Q(N_l) - Q(n_l)" + tag);
          if (img.intersects(st[l].a)) bad.push_back("(v) P(n) meets a_l" + tag);
        }
      }
    }
  }
  return bad;
}

bool check_focusing_chain(const System& A, const ColoringOracle& oracle, const FocusingTrace& trace) {
  const auto& st = trace.stages;
  for (std::size_t i = 0; i < st.size(); ++i) {
    FinSet n(1);
    for (std::size_t j = i + 1; j < st.size(); ++j) {
      n = set_union(n, st[j].n);
      for (const auto& P : A) {
        if (oracle(set_union(st[j].x, evaluate(P, n))) != oracle(st[i].x)) return false;
      }
    }
  }
  return true;
}

nlohmann::json to_json(const FocusingTrace& trace) {
  nlohmann::json stages = nlohmann::json::array();
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const auto& s = trace.stages[i];
    nlohmann::json js{{"stage", i},
                      {"N", symbols_to_json(s.N)},
                      {"system", to_json(s.A)},
                      {"shift", to_json(s.shift)},
                      {"probes", s.probes},
                      {"solved", s.solved}};
    if (s.solved) {
      js["n"] = symbols_to_json(s.n);
      js["a"] = to_json(s.a);
      js["x"] = to_json(s.x);
      js["color"] = s.color;
    }
    stages.push_back(std::move(js));
  }
  nlohmann::json j{{"k", trace.k}, {"stages", std::move(stages)}};
  j["pair"] = trace.pair_j ? nlohmann::json::array({*trace.pair_i, *trace.pair_j}) : nlohmann::json(nullptr);
  return j;
}

// ---- grid and scenario searches ------------------------------------------

System phj_system(std::size_t d, std::size_t q) {
  if (d == 0 || q == 0) throw DimensionMismatch("phj_system: d and q must be positive");
  const std::size_t D = d + 1;
  System A(D);
  A.insert(SetPolynomial(D));
  for (std::size_t i = 1; i <= q; ++i) {
    SetPolynomial P(D);
    P.set_coeff(full_index(d), FinSet::symbols({static_cast<Symbol>(i)}));
    A.insert(P);
  }
  return A;
}

PhjResult phj_search(std::size_t N_bound, std::size_t d, std::size_t q, const ColoringOracle& oracle,
                     const SearchBudget& budget) {
  const System A = phj_system(d, q);
  std::uint64_t left = budget.max_candidates;
  auto hit = search_window(A, interval(1, N_bound), oracle, budget.max_a, left);
  if (!hit) throw BudgetExhausted("no configuration with |a| <= " + std::to_string(budget.max_a));
  PhjResult out{hit->n, hit->a, {oracle(hit->a)}};
  const FinSet cube = power(hit->n, d);
  for (std::size_t i = 1; i <= q; ++i) {
    out.colors.push_back(oracle(set_union(hit->a, cartesian(cube, FinSet::symbols({static_cast<Symbol>(i)})))));
  }
  return out;
}

namespace {

/// Backtracking r-coloring of a uniform hypergraph; edges are checked once
/// their largest vertex is colored. Returns true/false, or nullopt when the
/// node budget runs out.
std::optional<bool> hypergraph_colorable(std::size_t vertices, const std::vector<std::vector<std::uint32_t>>& edges,
                                         int r, std::uint64_t& budget) {
  std::vector<std::vector<std::size_t>> closing(vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    closing[*std::max_element(edges[e].begin(), edges[e].end())].push_back(e);
  }
  std::vector<int> color(vertices, -1);
  std::vector<int> used(vertices + 1, 0);  // colors in use among vertices < v
  std::size_t v = 0;
  while (true) {
    if (v == vertices) return true;
    if (budget == 0) return std::nullopt;
    --budget;
    // Symmetry: vertex v may open at most one new color.
    const int limit = std::min(r, used[v] + 1);
    bool placed = false;
    for (int c = color[v] + 1; c < limit; ++c) {
      color[v] = c;
      bool ok = true;
      for (auto e : closing[v]) {
        const auto& ed = edges[e];
        if (std::all_of(ed.begin(), ed.end(), [&](std::uint32_t u) { return color[u] == c; })) {
          ok = false;
          break;
        }
      }
      if (ok) {
        placed = true;
        break;
      }
    }
    if (placed) {
      used[v + 1] = std::max(used[v], color[v] + 1);
      ++v;
      continue;
    }
    color[v] = -1;
    if (v == 0) return false;
    --v;
  }
}

}  // namespace

std::optional<std::size_t> phj_min_bound(std::size_t d, std::size_t q, int r, std::size_t max_N,
                                         std::uint64_t node_budget) {
  if (d == 0 || q == 0 || r < 1) throw DimensionMismatch("phj_min_bound: d, q and r must be positive");
  for (std::size_t N = 1; N <= max_N; ++N) {
    std::size_t cells = q;
    for (std::size_t e = 0; e < d; ++e) cells *= N;
    if (cells > 12) throw TooLarge("phj_min_bound: more than 2^12 grid subsets");
    // Cell (x_1..x_d, i) gets bit ((x_1..x_d) in base N) * q + (i - 1).
    const std::size_t pts = cells / q;
    std::vector<std::vector<std::uint32_t>> edges;
    for (std::uint32_t gamma = 1; gamma < (1u << N); ++gamma) {
      std::vector<std::uint32_t> track(q, 0);
      for (std::size_t p = 0; p < pts; ++p) {
        std::size_t rest = p;
        bool inside = true;
        for (std::size_t e = 0; e < d; ++e) {
          if (!(gamma & (1u << (rest % N)))) inside = false;
          rest /= N;
        }
        if (!inside) continue;
        for (std::size_t i = 0; i < q; ++i) track[i] |= 1u << (p * q + i);
      }
      std::uint32_t all = 0;
      for (auto t : track) all |= t;
      const std::uint32_t free = ((1u << cells) - 1) & ~all;
      for (std::uint32_t a = free;; a = (a - 1) & free) {
        std::vector<std::uint32_t> edge{a};
        for (auto t : track) edge.push_back(a | t);
        edges.push_back(std::move(edge));
        if (a == 0) break;
      }
    }
    auto res = hypergraph_colorable(std::size_t{1} << cells, edges, r, node_budget);
    if (!res) return std::nullopt;
    if (!*res) return N;
  }
  throw CapTooSmall("phj_min_bound: every N <= " + std::to_string(max_N) + " has a configuration-free coloring");
}

System square_system() {
  SetPolynomial P(2);
  P.set_coeff(full_index(2), FinSet::unit());
  return System(2, {P});
}

WindowHit single_square_search(std::size_t W, const ColoringOracle& oracle, const SearchBudget& budget) {
  std::uint64_t left = budget.max_candidates;
  auto hit = search_window(square_system(), interval(1, W), oracle, budget.max_a, left);
  if (!hit) throw BudgetExhausted("no square configuration with |a| <= " + std::to_string(budget.max_a));
  return *hit;
}

CombinatorialLine hj_line_search(std::size_t q, std::size_t N, const WordColoring& color) {
  if (q == 0 || N == 0) throw NotFound("hj_line_search: empty word space");
  std::vector<int> w(N, 0);  // digits over {0..q}, q standing for t
  while (true) {
    // Increment, first letter most significant.
    std::size_t pos = N;
    while (pos > 0 && w[pos - 1] == static_cast<int>(q)) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
    if (std::find(w.begin(), w.end(), static_cast<int>(q)) == w.end()) continue;
    CombinatorialLine line;
    line.variable_word = w;
    for (auto& x : line.variable_word) {
      if (x == static_cast<int>(q)) x = -1;
    }
    int c0 = 0;
    bool mono = true;
    for (std::size_t l = 0; l < q && mono; ++l) {
      std::vector<int> word = line.variable_word;
      for (auto& x : word) {
        if (x == -1) x = static_cast<int>(l);
      }
      const int c = color(word);
      if (l == 0) c0 = c;
      mono = c == c0;
      line.words.push_back(std::move(word));
    }
    if (mono) return line;
  }
  throw NotFound("no monochromatic combinatorial line");
}

std::size_t hj_number(std::size_t q, int r, std::size_t max_N) {
  if (q == 0 || r < 1) throw DimensionMismatch("hj_number: q and r must be positive");
  for (std::size_t N = 1; N <= max_N; ++N) {
    std::size_t words = 1;
    for (std::size_t e = 0; e < N; ++e) words *= q;
    const double total = std::pow(static_cast<double>(r), static_cast<double>(words));
    if (total > double(1 << 24)) throw TooLarge("hj_number: more than 2^24 colorings");
    const auto count = static_cast<std::uint64_t>(total);
    bool every = true;
    for (std::uint64_t code = 0; code < count && every; ++code) {
      std::vector<int> table(words);
      std::uint64_t c = code;
      for (auto& x : table) {
        x = static_cast<int>(c % static_cast<std::uint64_t>(r));
        c /= static_cast<std::uint64_t>(r);
      }
      auto lookup = [&](const std::vector<int>& word) {
        std::size_t idx = 0;
        for (int x : word) idx = idx * q + static_cast<std::size_t>(x);
        return table[idx];
      };
      try {
        hj_line_search(q, N, lookup);
      } catch (const NotFound&) {
        every = false;
      }
    }
    if (every) return N;
  }
  throw CapTooSmall("hj_number: no N <= " + std::to_string(max_N) + " forces a line");
}

namespace {

void add_sym(std::vector<Symbol>& out, const FinSet& p, Symbol s) {
  for (auto x : p) {
    out.insert(out.end(), {x[0], s});
    out.insert(out.end(), {s, x[0]});
  }
}

}  // namespace

FinSet hj_phi(const FinSet& b, const std::vector<FinSet>& sets, const std::vector<Symbol>& sigma) {
  if (!b.empty() && b.arity() != 2) throw ArityMismatch("hj_phi: b must hold pairs (track, k)");
  std::vector<std::size_t> count(sigma.size(), 0);
  for (auto t : b) {
    if (t[0] < 1 || t[0] > sets.size()) throw OutOfWindow("hj_phi: track out of range");
    if (t[1] < 1 || t[1] > sigma.size()) throw OutOfWindow("hj_phi: position past the end of sigma");
    ++count[t[1] - 1];
  }
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (count[k] > 0) add_sym(out, sets[count[k] - 1], sigma[k]);
  }
  return FinSet::from_flat(2, std::move(out));
}

FinSet word_configuration(const std::vector<int>& word, const std::vector<FinSet>& sets,
                          const std::vector<Symbol>& sigma) {
  if (word.size() > sigma.size()) throw OutOfWindow("word_configuration: word longer than sigma");
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 0 || static_cast<std::size_t>(word[k]) > sets.size()) throw OutOfWindow("word_configuration: bad letter");
    if (word[k] > 0) add_sym(out, sets[static_cast<std::size_t>(word[k]) - 1], sigma[k]);
  }
  return FinSet::from_flat(2, std::move(out));
}

// ---- certificates ---------------------------------------------------------

WitnessCertificate make_certificate(const SpaceSpec& space, const ColoringOracle& oracle, const System& A,
                                    const Witness& w) {
  return WitnessCertificate{space, oracle, A, w.N, w.n, w.a, w.base_color, w.config_colors};
}

nlohmann::json to_json(const WitnessCertificate& cert) {
  nlohmann::json space;
  if (cert.space.kind == SpaceSpec::Kind::Grid) {
    space = {{"kind", "grid"}, {"N", cert.space.N_bound}, {"d", cert.space.d}, {"q", cert.space.q}};
  } else {
    space = {{"kind", "abstract"}, {"D", cert.space.D}, {"H", symbols_to_json(cert.space.H)}};
  }
  return nlohmann::json{{"space", std::move(space)},
                        {"oracle", cert.oracle.to_json()},
                        {"system", to_json(cert.system)},
                        {"N", symbols_to_json(cert.N)},
                        {"n", symbols_to_json(cert.n)},
                        {"a", to_json(cert.a)},
                        {"colors", {{"base", cert.base_color}, {"configs", cert.config_colors}}}};
}

WitnessCertificate certificate_from_json(const nlohmann::json& j) {
  using namespace json_detail;
  try {
    expect_object(j, "$", {"space", "oracle", "system", "N", "n", "a", "colors"});
    WitnessCertificate c;
    const auto& sp = field(j, "space", "$");
    if (!sp.is_object()) throw ParseError("$.space: expected an object");
    const std::string kind = get_string(field(sp, "kind", "$.space"), "$.space.kind");
    if (kind == "grid") {
      expect_object(sp, "$.space", {"kind", "N", "d", "q"});
      c.space.kind = SpaceSpec::Kind::Grid;
      c.space.N_bound = get_uint(sp["N"], "$.space.N");
      c.space.d = get_uint(sp["d"], "$.space.d");
      c.space.q = get_uint(sp["q"], "$.space.q");
      c.space.D = c.space.d + 1;
    } else if (kind == "abstract") {
      expect_object(sp, "$.space", {"kind", "D", "H"});
      c.space.D = get_uint(sp["D"], "$.space.D");
      c.space.H = symbols_from_json(sp["H"], "$.space.H");
    } else {
      throw ParseError("$.space.kind: unknown space kind \"" + kind + "\"");
    }
    c.oracle = ColoringOracle::from_json(j["oracle"], "$.oracle");
    c.system = system_from_json(j["system"], "$.system");
    c.N = symbols_from_json(j["N"], "$.N");
    c.n = symbols_from_json(j["n"], "$.n");
    c.a = finset_from_json(j["a"], "$.a");
    const auto& col = j["colors"];
    expect_object(col, "$.colors", {"base", "configs"});
    c.base_color = static_cast<int>(get_int(col["base"], "$.colors.base"));
    const auto& cfg = get_array(col["configs"], "$.colors.configs");
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      c.config_colors.push_back(static_cast<int>(get_int(cfg[i], join_path("$.colors.configs", i))));
    }
    return c;
  } catch (const ParseError& e) {
    throw MalformedCertificate(e.what());
  } catch (const Error& e) {
    throw MalformedCertificate(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw MalformedCertificate(e.what());
  }
}

bool verify_certificate(const WitnessCertificate& c) {
  const System& A = c.system;
  if (c.space.kind == SpaceSpec::Kind::Grid) {
    if (c.space.d == 0 || c.space.q == 0 || !(A == phj_system(c.space.d, c.space.q))) return false;
    if (!c.N.is_subset_of(interval(1, c.space.N_bound))) return false;
  } else {
    if (A.dim() != c.space.D || c.N.intersects(c.space.H)) return false;
  }
  for (const auto& P : A) {
    if (!constant_term(P).empty()) return false;
  }
  if (c.n.empty() || !c.n.is_subset_of(c.N)) return false;
  if (!c.a.empty() && (c.a.arity() != A.dim() || !c.a.is_subset_of(evaluate_union(A, c.N)))) return false;
  if (c.config_colors.size() != A.size()) return false;
  const FinSet a = c.a.empty() ? FinSet(A.dim()) : c.a;
  try {
    if (c.oracle(a) != c.base_color) return false;
    std::size_t i = 0;
    for (const auto& P : A) {
      const FinSet img = evaluate(P, c.n);
      if (img.intersects(a)) return false;
      const int got = c.oracle(set_union(a, img));
      if (got != c.config_colors[i] || got != c.base_color) return false;
      ++i;
    }
  } catch (const OutOfWindow&) {
    return false;
  }
  return true;
}

}  // namespace setpoly

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "setpoly/setpoly.hpp"

namespace setpoly::cli {

namespace {

using Json = nlohmann::json;

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(what + ": \"" + item + "\" is not an integer");
    }
  }
  return out;
}

FinSet parse_symbols(const std::string& text, const std::string& what) {
  std::vector<Symbol> s;
  for (auto x : parse_ints(text, what)) {
    if (x < 0 || x > static_cast<std::int64_t>(std::numeric_limits<Symbol>::max())) {
      throw ParseError(what + ": symbol out of range");
    }
    s.push_back(static_cast<Symbol>(x));
  }
  return FinSet::from_flat(1, std::move(s));
}

/// "1,1,1;2,2,2": one generator list per track.
std::vector<std::vector<std::int64_t>> parse_tracks(const std::string& text, std::size_t q, std::size_t L,
                                                    std::int64_t fill, const std::string& what) {
  if (text.empty()) return std::vector<std::vector<std::int64_t>>(q, std::vector<std::int64_t>(L, fill));
  std::vector<std::vector<std::int64_t>> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) out.push_back(parse_ints(part, what));
  if (out.size() == 1 && q > 1) out.resize(q, out.front());
  if (out.size() != q) throw ParseError(what + ": expected " + std::to_string(q) + " generator lists");
  return out;
}

void emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

/// Coefficientwise intersection of every member: the largest Q below all of them.
SetPolynomial common_lower_bound(const System& A) {
  if (A.empty()) throw EmptySystem("empty system");
  SetPolynomial Q = *A.begin();
  for (const auto& P : A) {
    SetPolynomial next(A.dim());
    for (const auto& [alpha, c] : Q.coeffs()) {
      FinSet meet = set_intersection(c, P.coeff(alpha));
      if (!meet.empty()) next.set_coeff(alpha, std::move(meet));
    }
    Q = std::move(next);
  }
  return Q;
}

struct Options {
  // shared
  std::string out;
  std::string system_path, poly_path, oracle_spec, n_list, H_list, window_list, Q_path, trace_path, cert_path;
  int colors = 0;
  std::size_t max_window = 6, max_a = 3, k = 0, stage_window = 1, max_probe_bits = 16;
  std::uint64_t max_candidates = 2'000'000;
  bool composer = false, no_embed = false;
  // ramsey
  std::size_t cap = 60, q = 1, L = 6, N = 3, d = 1, max_n = 4, hj_q = 2, phi_d = 0;
  std::int64_t int_cap = 1000;
  std::string chi = "parity", n_gens, k_gens, sigma_gens, pi_gens, p_text = "x^2", gamma_list = "1,2";
  // polymap
  std::string group = "Z", map_path;
  std::size_t window_size = 5, map_d = 2;
  std::uint64_t seed = 7;
};

std::size_t group_width(const std::string& g) {
  if (g == "Z") return 1;
  if (g.size() > 1 && g[0] == 'Z') {
    auto w = parse_ints(g.substr(1), "--group");
    if (w.size() == 1 && w[0] >= 1 && w[0] <= 16) return static_cast<std::size_t>(w[0]);
  }
  throw ParseError("--group must be Z or Zm with 1 <= m <= 16");
}

int cmd_eval(const Options& o) {
  const SetPolynomial P = poly_from_json(load_json_file(o.poly_path));
  emit(to_json(evaluate(P, parse_symbols(o.n_list, "--n"))), o.out);
  return kOk;
}

int cmd_weight(const Options& o) {
  const System A = system_from_json(load_json_file(o.system_path));
  emit(Json{{"D", A.dim()}, {"weight", weight_vector(A).w}}, o.out);
  return kOk;
}

int cmd_normalize(const Options& o) {
  const System A = system_from_json(load_json_file(o.system_path));
  SymbolAllocator alloc;
  emit(to_json(normalize_terms(A, alloc, !o.no_embed)), o.out);
  return kOk;
}

int cmd_search(const Options& o) {
  const System A = system_from_json(load_json_file(o.system_path));
  const ColoringOracle oracle = ColoringOracle::from_spec(o.oracle_spec);
  if (o.colors != 0 && o.colors != oracle.colors()) {
    throw ParseError("--colors " + std::to_string(o.colors) + " disagrees with the oracle's " +
                     std::to_string(oracle.colors()) + " colors");
  }
  const FinSet H = parse_symbols(o.H_list, "--H");
  SearchBudget budget{o.max_window, o.max_a, o.max_candidates};
  SpaceSpec space{SpaceSpec::Kind::Abstract, A.dim(), H, 0, 0, 0};

  if (!o.composer && o.trace_path.empty()) {
    RecurrenceRequest req{A, H, budget, std::nullopt};
    if (!o.window_list.empty()) req.window = parse_symbols(o.window_list, "--window");
    const Witness w = brute_force_witness(req, oracle);
    emit(to_json(make_certificate(space, oracle, A, w)), o.out);
    return kOk;
  }

  const SetPolynomial Q = o.Q_path.empty() ? common_lower_bound(A) : poly_from_json(load_json_file(o.Q_path));
  if (Q.is_empty()) throw ParseError("the members share no common lower bound; pass --Q");
  FocusingOptions fo{o.k == 0 ? static_cast<std::size_t>(oracle.colors()) : o.k, o.stage_window, o.max_probe_bits, H};
  SymbolAllocator alloc;
  try {
    auto res = focusing_composer(A, Q, oracle, brute_force_sub(budget), fo, alloc);
    if (!o.trace_path.empty()) emit(to_json(res.trace), o.trace_path);
    emit(to_json(make_certificate(space, oracle, A, res.witness)), o.out);
  } catch (const FocusingFailure& e) {
    if (!o.trace_path.empty()) emit(to_json(e.trace()), o.trace_path);
    throw;
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  Json j;
  try {
    j = load_json_file(o.cert_path);
  } catch (const ParseError& e) {
    throw MalformedCertificate(e.what());
  }
  const bool ok = verify_certificate(certificate_from_json(j));
  emit(Json{{"valid", ok}}, o.out);
  return ok ? kOk : kRejected;
}

int cmd_square_diff(const Options& o) {
  const auto res = square_difference_min_N(o.colors == 0 ? 2 : o.colors, o.cap);
  emit(Json{{"colors", o.colors == 0 ? 2 : o.colors}, {"N_min", res.N_min}, {"extremal", res.extremal}}, o.out);
  return kOk;
}

int cmd_prop015(const Options& o) {
  const IntColoring chi = IntColoring::from_spec(o.chi);
  const auto n = parse_tracks(o.n_gens, o.q, o.L, 1, "--n-gens");
  const auto k = parse_tracks(o.k_gens, o.q, o.L, 1, "--k-gens");
  emit(to_json(product_sum_search(n, k, chi, o.int_cap)), o.out);
  return kOk;
}

int cmd_prop016(const Options& o) {
  const IntColoring chi = IntColoring::from_spec(o.chi);
  const auto sigma = parse_tracks(o.sigma_gens, o.q, o.L, 1, "--sigma-gens");
  const auto pi = parse_tracks(o.pi_gens, o.q, o.L, 2, "--pi-gens");
  emit(to_json(multiplicative_search(sigma, pi, chi, o.int_cap)), o.out);
  return kOk;
}

int cmd_phi_demo(const Options& o) {
  const CommPolynomial p = CommPolynomial::parse(o.p_text);
  const FinSet gamma = parse_symbols(o.gamma_list, "--gamma");
  if (gamma.empty()) throw ParseError("--gamma must be nonempty");
  const std::size_t d = o.phi_d == 0 ? p.degree() : o.phi_d;
  const NcPolynomial phi = phi_set(power(gamma, d), p, d);
  const NcPolynomial sub = substitute_sums(p, gamma);
  emit(Json{{"p", p.to_string()},
            {"gamma", symbols_to_json(gamma)},
            {"d", d},
            {"phi", phi.to_string()},
            {"substitution", sub.to_string()},
            {"equal", phi == sub}},
       o.out);
  return phi == sub ? kOk : kRejected;
}

int cmd_hj(const Options& o) {
  const int r = o.colors == 0 ? 2 : o.colors;
  emit(Json{{"q", o.hj_q}, {"colors", r}, {"hj_number", hj_number(o.hj_q, r, o.max_n)}}, o.out);
  return kOk;
}

int cmd_phj(const Options& o) {
  const ColoringOracle oracle = ColoringOracle::from_spec(o.oracle_spec);
  SearchBudget budget{o.max_window, o.max_a, o.max_candidates};
  const PhjResult res = phj_search(o.N, o.d, o.q, oracle, budget);
  const System A = phj_system(o.d, o.q);
  SpaceSpec space{SpaceSpec::Kind::Grid, o.d + 1, FinSet(1), o.N, o.d, o.q};
  std::vector<Symbol> all(o.N);
  std::iota(all.begin(), all.end(), Symbol{1});
  const Witness w = observe(A, FinSet::from_flat(1, all), res.gamma, res.a, oracle);
  emit(to_json(make_certificate(space, oracle, A, w)), o.out);
  return kOk;
}

int cmd_roundtrip(const Options& o) {
  const std::size_t width = group_width(o.group);
  if (o.window_size > 12) throw ParseError("--window must be at most 12");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::int64_t> val(-9, 9);
  std::vector<Symbol> syms(o.window_size);
  std::iota(syms.begin(), syms.end(), Symbol{1});
  PhiTable phi = PhiTable::zero(o.map_d, FinSet::from_flat(1, syms), width);
  for (auto& [m, v] : phi.values) {
    for (auto& x : v) x = val(rng);
  }
  const LatticeMap P = lattice_from_phi(phi);
  const PhiTable back = recover_phi(P, o.map_d);
  const bool same = lattice_from_phi(back) == P;
  emit(Json{{"d", o.map_d},
            {"group", o.group},
            {"seed", o.seed},
            {"table", phi.to_json()},
            {"recovered", back.to_json()},
            {"tables_equal", back == phi},
            {"reproduces", same}},
       o.out);
  return same ? kOk : kRejected;
}

int cmd_degree(const Options& o) {
  const LatticeMap P = LatticeMap::from_json(load_json_file(o.map_path));
  emit(Json{{"d", o.map_d}, {"degree_at_most_d", degree_bound_check(P, o.map_d)}}, o.out);
  return kOk;
}

int cmd_recover(const Options& o) {
  const LatticeMap P = LatticeMap::from_json(load_json_file(o.map_path));
  emit(recover_phi(P, o.map_d).to_json(), o.out);
  return kOk;
}

using Handler = int (*)(const Options&);

struct Registered {
  CLI::App* app;
  Handler handler;
};

void add_engine(CLI::App& app, Options& o, std::vector<Registered>& reg) {
  auto* ev = app.add_subcommand("eval", "Evaluate a set-polynomial at n");
  ev->add_option("--poly", o.poly_path, "SetPolynomial JSON file")->required();
  ev->add_option("--n", o.n_list, "Comma-separated symbols")->required();
  reg.push_back({ev, cmd_eval});

  auto* wt = app.add_subcommand("weight", "Weight vector of a system");
  wt->add_option("--system", o.system_path, "System JSON file")->required();
  reg.push_back({wt, cmd_weight});

  auto* nm = app.add_subcommand("normalize", "Term normalization record of a system");
  nm->add_option("--system", o.system_path, "System JSON file")->required();
  nm->add_flag("--no-embed", o.no_embed, "Fail instead of embedding when a member reaches degree D");
  reg.push_back({nm, cmd_normalize});

  auto* se = app.add_subcommand("search", "Find a recurrence witness and print its certificate");
  se->add_option("--system", o.system_path, "System JSON file")->required();
  se->add_option("--oracle", o.oracle_spec, "table:FILE | reducer:q=..;weights=..;chi=.. | seeded:r=..;seed=..")
      ->required();
  se->add_option("--colors", o.colors, "Expected number of colors");
  se->add_option("--H", o.H_list, "Reserved symbols");
  se->add_option("--window", o.window_list, "Explicit search window");
  se->add_option("--max-window", o.max_window, "Largest window size");
  se->add_option("--max-a", o.max_a, "Largest |a| tried");
  se->add_option("--max-candidates", o.max_candidates, "Candidate budget");
  se->add_flag("--composer", o.composer, "Use color focusing over brute-force stages");
  se->add_option("--Q", o.Q_path, "SetPolynomial below every member (default: their meet)");
  se->add_option("--k", o.k, "Number of focusing stages minus one (default: colors)");
  se->add_option("--stage-window", o.stage_window, "Symbols per stage window");
  se->add_option("--max-probe-bits", o.max_probe_bits, "Largest probe universe");
  se->add_option("--trace", o.trace_path, "Write the focusing trace here (implies --composer)");
  se->add_option("--out", o.out, "Output file");
  reg.push_back({se, cmd_search});

  auto* ve = app.add_subcommand("verify", "Re-check a certificate; exit 3 when it fails");
  ve->add_option("certificate", o.cert_path, "Certificate JSON file")->required();
  reg.push_back({ve, cmd_verify});
}

void add_ramsey(CLI::App& app, Options& o, std::vector<Registered>& reg) {
  auto* sq = app.add_subcommand("square-diff", "Least N forcing monochromatic x, x + k^2");
  sq->add_option("--colors", o.colors, "Number of colors (default 2)");
  sq->add_option("--cap", o.cap, "Largest N tried");
  sq->add_option("--out", o.out, "Output file");
  reg.push_back({sq, cmd_square_diff});

  auto* p15 = app.add_subcommand("prop015", "Monochromatic {a, a + n_gamma k_gamma, ...}");
  p15->add_option("--q", o.q, "Number of tracks");
  p15->add_option("--L", o.L, "Generator length (when lists are not given)");
  p15->add_option("--chi", o.chi, "Integer coloring: parity | mod:M | digitsum | omega | const | FILE");
  p15->add_option("--cap", o.int_cap, "Largest a tried");
  p15->add_option("--n-gens", o.n_gens, "Generator lists n, ';' between tracks");
  p15->add_option("--k-gens", o.k_gens, "Generator lists k, ';' between tracks");
  p15->add_option("--out", o.out, "Output file");
  reg.push_back({p15, cmd_prop015});

  auto* p16 = app.add_subcommand("prop016", "Monochromatic {b, b pi_gamma^sigma_gamma, ...}");
  p16->add_option("--q", o.q, "Number of tracks");
  p16->add_option("--L", o.L, "Generator length (when lists are not given)");
  p16->add_option("--chi", o.chi, "Integer coloring");
  p16->add_option("--cap", o.int_cap, "Largest b tried");
  p16->add_option("--sigma-gens", o.sigma_gens, "Exponent generators (default 1)");
  p16->add_option("--pi-gens", o.pi_gens, "Base generators (default 2)");
  p16->add_option("--out", o.out, "Output file");
  reg.push_back({p16, cmd_prop016});

  auto* pd = app.add_subcommand("phi-demo", "Compare Phi over gamma^d with the formal substitution");
  pd->add_option("--p", o.p_text, "Polynomial in x1..xn, e.g. \"x^2\" or \"x1*x2 + 3x2\"");
  pd->add_option("--gamma", o.gamma_list, "Nonempty index set");
  pd->add_option("--d", o.phi_d, "Degree bound (default: degree of p)");
  pd->add_option("--out", o.out, "Output file");
  reg.push_back({pd, cmd_phi_demo});

  auto* hj = app.add_subcommand("hj", "Hales-Jewett number by exhaustive enumeration");
  hj->add_option("--q", o.hj_q, "Alphabet size");
  hj->add_option("--colors", o.colors, "Number of colors (default 2)");
  hj->add_option("--max-n", o.max_n, "Largest word length tried");
  hj->add_option("--out", o.out, "Output file");
  reg.push_back({hj, cmd_hj});

  auto* phj = app.add_subcommand("phj", "Grid witness {a, a u gamma^d x {i}} and its certificate");
  phj->add_option("--oracle", o.oracle_spec, "Oracle spec")->required();
  phj->add_option("--N", o.N, "Grid side");
  phj->add_option("--d", o.d, "Degree");
  phj->add_option("--q", o.q, "Number of tracks");
  phj->add_option("--max-a", o.max_a, "Largest |a| tried");
  phj->add_option("--max-candidates", o.max_candidates, "Candidate budget");
  phj->add_option("--out", o.out, "Output file");
  reg.push_back({phj, cmd_phj});
}

void add_polymap(CLI::App& app, Options& o, std::vector<Registered>& reg) {
  auto* rt = app.add_subcommand("roundtrip", "Random phi table, evaluate, recover, compare");
  rt->add_option("--d", o.map_d, "Degree");
  rt->add_option("--window", o.window_size, "Window size");
  rt->add_option("--group", o.group, "Z or Zm");
  rt->add_option("--seed", o.seed, "Random seed");
  rt->add_option("--out", o.out, "Output file");
  reg.push_back({rt, cmd_roundtrip});

  auto* dg = app.add_subcommand("degree", "Check that a lattice map has degree at most d");
  dg->add_option("--map", o.map_path, "LatticeMap JSON file")->required();
  dg->add_option("--d", o.map_d, "Degree bound");
  dg->add_option("--out", o.out, "Output file");
  reg.push_back({dg, cmd_degree});

  auto* rc = app.add_subcommand("recover", "Recover the phi table of a lattice map");
  rc->add_option("--map", o.map_path, "LatticeMap JSON file")->required();
  rc->add_option("--d", o.map_d, "Degree bound");
  rc->add_option("--out", o.out, "Output file");
  reg.push_back({rc, cmd_recover});
}

}  // namespace

int run(const std::string& root, const std::vector<std::string>& args) {
  Options o;
  std::vector<Registered> reg;
  CLI::App app{"Set-polynomial recurrence toolkit", root};
  app.require_subcommand(1);
  if (root == "ramsey") {
    add_ramsey(app, o, reg);
  } else if (root == "polymap") {
    add_polymap(app, o, reg);
  } else {
    add_engine(app, o, reg);
    if (root == "sp") {
      auto* r = app.add_subcommand("ramsey", "Integer and formal-polynomial applications");
      r->require_subcommand(1);
      add_ramsey(*r, o, reg);
      auto* p = app.add_subcommand("polymap", "Polynomial maps on finite subsets");
      p->require_subcommand(1);
      add_polymap(*p, o, reg);
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& r : reg) {
      if (r.app->parsed()) return r.handler(o);
    }
    std::cerr << root << ": no command given\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const CapTooSmall& e) {
    std::cerr << "cap too small: " << e.what() << "\n";
    return kBudget;
  } catch (const SubOracleFailure& e) {
    std::cerr << "composer failed: " << e.what() << "\n";
    return kBudget;
  } catch (const MalformedCertificate& e) {
    std::cerr << "certificate rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int main_entry(const std::string& root, int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(root, args);
}

}  // namespace setpoly::cli

#include "setpoly/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

#include "setpoly/errors.hpp"
#include "setpoly/json_io.hpp"

namespace setpoly {

using namespace json_detail;

// ---- IntColoring ----------------------------------------------------------

IntColoring IntColoring::table(std::vector<int> colors, std::int64_t offset) {
  if (colors.empty()) throw ParseError("integer coloring table is empty");
  IntColoring c;
  c.kind_ = Kind::Table;
  c.offset_ = offset;
  int r = 1;
  for (int v : colors) {
    if (v < 1) throw ParseError("integer coloring table holds a color below 1");
    r = std::max(r, v);
  }
  c.r_ = r;
  c.table_ = std::move(colors);
  return c;
}

IntColoring IntColoring::residue(int m) {
  if (m < 1) throw ParseError("residue coloring needs a positive modulus");
  IntColoring c;
  c.kind_ = Kind::Residue;
  c.modulus_ = m;
  c.r_ = m;
  return c;
}

IntColoring IntColoring::digit_sum_parity() {
  IntColoring c;
  c.kind_ = Kind::DigitSumParity;
  c.r_ = 2;
  return c;
}

IntColoring IntColoring::omega_parity() {
  IntColoring c;
  c.kind_ = Kind::OmegaParity;
  c.r_ = 2;
  return c;
}

IntColoring IntColoring::constant() { return IntColoring{}; }

int IntColoring::operator()(std::int64_t x) const {
  switch (kind_) {
    case Kind::Constant:
      return 1;
    case Kind::Residue: {
      std::int64_t m = modulus_;
      return static_cast<int>(((x % m) + m) % m) + 1;
    }
    case Kind::DigitSumParity: {
      std::uint64_t u = x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
      int s = 0;
      for (; u; u /= 10) s += static_cast<int>(u % 10);
      return 1 + (s & 1);
    }
    case Kind::OmegaParity: {
      if (x < 1) throw OutOfWindow("omega coloring is defined on positive integers only");
      int count = 0;
      std::int64_t v = x;
      for (std::int64_t p = 2; p * p <= v; ++p) {
        while (v % p == 0) {
          v /= p;
          ++count;
        }
      }
      if (v > 1) ++count;
      return 1 + (count & 1);
    }
    case Kind::Table: {
      std::int64_t i = x - offset_;
      if (i < 0 || i >= static_cast<std::int64_t>(table_.size())) {
        throw OutOfWindow("integer " + std::to_string(x) + " outside the coloring table");
      }
      return table_[static_cast<std::size_t>(i)];
    }
  }
  return 1;
}

nlohmann::json IntColoring::to_json() const {
  switch (kind_) {
    case Kind::Constant: return Json{{"kind", "constant"}};
    case Kind::Residue: return Json{{"kind", "residue"}, {"m", modulus_}};
    case Kind::DigitSumParity: return Json{{"kind", "digit_sum_parity"}};
    case Kind::OmegaParity: return Json{{"kind", "omega_parity"}};
    case Kind::Table: return Json{{"kind", "table"}, {"offset", offset_}, {"colors", table_}};
  }
  return Json();
}

IntColoring IntColoring::from_json(const nlohmann::json& j, std::string_view where) {
  if (j.is_array()) {
    std::vector<int> colors;
    for (std::size_t i = 0; i < j.size(); ++i) colors.push_back(static_cast<int>(get_int(j[i], join_path(where, i))));
    return table(std::move(colors));
  }
  if (!j.is_object()) throw ParseError(std::string(where) + ": expected an integer coloring");
  const std::string kind = get_string(field(j, "kind", where), join_path(where, "kind"));
  if (kind == "constant") {
    expect_object(j, where, {"kind"});
    return constant();
  }
  if (kind == "residue") {
    expect_object(j, where, {"kind", "m"});
    return residue(static_cast<int>(get_int(j["m"], join_path(where, "m"))));
  }
  if (kind == "digit_sum_parity") {
    expect_object(j, where, {"kind"});
    return digit_sum_parity();
  }
  if (kind == "omega_parity") {
    expect_object(j, where, {"kind"});
    return omega_parity();
  }
  if (kind == "table") {
    expect_object(j, where, {"kind", "colors"}, {"offset"});
    std::int64_t offset = j.contains("offset") ? get_int(j["offset"], join_path(where, "offset")) : 0;
    const Json& arr = get_array(j["colors"], join_path(where, "colors"));
    std::vector<int> colors;
    for (std::size_t i = 0; i < arr.size(); ++i) colors.push_back(static_cast<int>(get_int(arr[i], join_path(where, i))));
    return table(std::move(colors), offset);
  }
  throw ParseError(join_path(where, "kind") + ": unknown integer coloring \"" + kind + "\"");
}

namespace {

long parse_long(std::string_view s, std::string_view what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " \"" + std::string(s) + "\"");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t k = s.find(sep, start);
    out.push_back(s.substr(start, k - start));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

}  // namespace

IntColoring IntColoring::from_spec(std::string_view spec) {
  if (spec == "parity") return parity();
  if (spec == "digitsum") return digit_sum_parity();
  if (spec == "omega") return omega_parity();
  if (spec == "const" || spec == "constant") return constant();
  if (spec.substr(0, 4) == "mod:") return residue(static_cast<int>(parse_long(spec.substr(4), "modulus")));
  return from_json(load_json_file(std::string(spec)));
}

// ---- ColoringOracle -------------------------------------------------------

ColoringOracle ColoringOracle::table(FinSet universe, std::vector<std::uint8_t> colors, int r) {
  if (universe.size() > 24) throw TooLarge("table oracles are limited to 24 points");
  if (colors.size() != (std::size_t{1} << universe.size())) {
    throw ParseError("table oracle needs 2^|universe| colors");
  }
  for (auto c : colors) {
    if (c < 1 || c > r) throw ParseError("table oracle color outside 1..r");
  }
  ColoringOracle o;
  o.kind_ = Kind::Table;
  o.r_ = r;
  o.universe_ = std::move(universe);
  o.table_ = std::make_shared<const std::vector<std::uint8_t>>(std::move(colors));
  return o;
}

ColoringOracle ColoringOracle::reducer(IntColoring chi, std::vector<std::int64_t> weights) {
  if (weights.empty()) throw ParseError("reducer oracle needs at least one track weight");
  ColoringOracle o;
  o.kind_ = Kind::Reducer;
  o.r_ = chi.colors();
  o.chi_ = std::move(chi);
  o.weights_ = std::move(weights);
  return o;
}

ColoringOracle ColoringOracle::reducer(IntColoring chi, std::size_t q) {
  std::vector<std::int64_t> w(q);
  for (std::size_t i = 0; i < q; ++i) w[i] = static_cast<std::int64_t>(i + 1);
  return reducer(std::move(chi), std::move(w));
}

ColoringOracle ColoringOracle::seeded(int r, std::uint64_t seed) {
  if (r < 1) throw ParseError("seeded oracle needs r >= 1");
  ColoringOracle o;
  o.kind_ = Kind::Seeded;
  o.r_ = r;
  o.seed_ = seed;
  return o;
}

std::int64_t ColoringOracle::reducer_value(const FinSet& a) const {
  if (a.empty()) return 0;
  if (weights_.size() == 1) return weights_[0] * static_cast<std::int64_t>(a.size());
  std::int64_t total = 0;
  for (auto s : a) {
    const Symbol track = s.empty() ? 0 : s.back();
    if (track < 1 || track > weights_.size()) {
      throw OutOfWindow("point on track " + std::to_string(track) + " outside 1.." + std::to_string(weights_.size()));
    }
    total += weights_[track - 1];
  }
  return total;
}

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

int ColoringOracle::color(const FinSet& a) const {
  switch (kind_) {
    case Kind::Seeded: {
      // ∅ is the same set whatever arity a caller happened to tag it with.
      const std::string text = a.empty() ? std::string("{\"elems\":[]}") : canonical_string(a);
      std::uint64_t h = fnv1a(text, 0xcbf29ce484222325ull ^ splitmix(seed_));
      return static_cast<int>(splitmix(h) % static_cast<std::uint64_t>(r_)) + 1;
    }
    case Kind::Reducer:
      return chi_(reducer_value(a));
    case Kind::Table: {
      std::uint32_t mask = 0;
      if (!a.empty()) {
        if (a.arity() != universe_.arity()) throw OutOfWindow("set outside the table oracle's universe");
        for (auto s : a) {
          std::size_t k = universe_.index_of(s);
          if (k == universe_.size()) throw OutOfWindow("set outside the table oracle's universe");
          mask |= std::uint32_t{1} << k;
        }
      }
      return (*table_)[mask];
    }
  }
  return 1;
}

nlohmann::json ColoringOracle::to_json() const {
  switch (kind_) {
    case Kind::Seeded:
      return Json{{"kind", "seeded"}, {"r", r_}, {"seed", seed_}};
    case Kind::Reducer:
      return Json{{"kind", "reducer"}, {"weights", weights_}, {"chi", chi_.to_json()}};
    case Kind::Table:
      return Json{{"kind", "table"}, {"r", r_}, {"universe", setpoly::to_json(universe_)}, {"colors", *table_}};
  }
  return Json();
}

ColoringOracle ColoringOracle::from_json(const nlohmann::json& j, std::string_view where) {
  if (!j.is_object()) throw ParseError(std::string(where) + ": expected an oracle object");
  const std::string kind = get_string(field(j, "kind", where), join_path(where, "kind"));
  if (kind == "seeded") {
    expect_object(j, where, {"kind", "r", "seed"});
    return seeded(static_cast<int>(get_uint(j["r"], join_path(where, "r"))), get_uint(j["seed"], join_path(where, "seed")));
  }
  if (kind == "reducer") {
    expect_object(j, where, {"kind", "weights", "chi"});
    const auto wpath = join_path(where, "weights");
    const Json& arr = get_array(j["weights"], wpath);
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < arr.size(); ++i) w.push_back(get_int(arr[i], join_path(wpath, i)));
    return reducer(IntColoring::from_json(j["chi"], join_path(where, "chi")), std::move(w));
  }
  if (kind == "table") {
    expect_object(j, where, {"kind", "r", "universe", "colors"});
    const auto cpath = join_path(where, "colors");
    const Json& arr = get_array(j["colors"], cpath);
    std::vector<std::uint8_t> colors;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto v = get_uint(arr[i], join_path(cpath, i));
      if (v > 255) throw ParseError(join_path(cpath, i) + ": color too large");
      colors.push_back(static_cast<std::uint8_t>(v));
    }
    try {
      return table(finset_from_json(j["universe"], join_path(where, "universe")), std::move(colors),
                   static_cast<int>(get_uint(j["r"], join_path(where, "r"))));
    } catch (const TooLarge& e) {
      throw ParseError(std::string(where) + ": " + e.what());
    }
  }
  throw ParseError(join_path(where, "kind") + ": unknown oracle kind \"" + kind + "\"");
}

ColoringOracle ColoringOracle::from_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("oracle spec needs a kind prefix: \"" + std::string(spec) + "\"");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (kind == "table") return from_json(load_json_file(std::string(rest)));

  std::map<std::string, std::string, std::less<>> kv;
  for (auto part : split(rest, ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw ParseError("oracle spec entry without '=': \"" + std::string(part) + "\"");
    kv.emplace(std::string(part.substr(0, eq)), std::string(part.substr(eq + 1)));
  }
  auto take = [&](const char* key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(std::string("oracle spec is missing ") + key);
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto done = [&] {
    if (!kv.empty()) throw ParseError("unknown oracle spec entry \"" + kv.begin()->first + "\"");
  };

  if (kind == "seeded") {
    int r = static_cast<int>(parse_long(take("r"), "r"));
    auto seed = static_cast<std::uint64_t>(parse_long(take("seed"), "seed"));
    done();
    return seeded(r, seed);
  }
  if (kind == "reducer") {
    std::size_t q = static_cast<std::size_t>(parse_long(take("q"), "q"));
    std::vector<std::int64_t> weights;
    if (kv.count("weights")) {
      const std::string list = take("weights");
      for (auto w : split(list, ',')) weights.push_back(parse_long(w, "weight"));
      if (weights.size() != q) throw ParseError("reducer spec: q and the number of weights differ");
    } else {
      for (std::size_t i = 1; i <= q; ++i) weights.push_back(static_cast<std::int64_t>(i));
    }
    IntColoring chi = IntColoring::from_spec(take("chi"));
    done();
    return reducer(std::move(chi), std::move(weights));
  }
  throw ParseError("unknown oracle kind \"" + std::string(kind) + "\"");
}

// ---- shift space ----------------------------------------------------------

ShiftPoint::ShiftPoint(FinSet window, std::vector<std::uint8_t> values)
    : window_(std::move(window)), values_(std::move(values)) {
  if (window_.size() > 24) throw TooLarge("shift-space windows are limited to 24 points");
  if (values_.size() != (std::size_t{1} << window_.size())) throw WindowMismatch("coloring size does not match window");
}

ShiftPoint ShiftPoint::from_oracle(const ColoringOracle& oracle, FinSet window) {
  if (window.size() > 24) throw TooLarge("shift-space windows are limited to 24 points");
  const std::size_t w = window.size();
  std::vector<std::uint8_t> values(std::size_t{1} << w);
  std::vector<Symbol> buf;
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    buf.clear();
    for (std::size_t k = 0; k < w; ++k) {
      if (mask & (std::size_t{1} << k)) {
        auto t = window[k];
        buf.insert(buf.end(), t.begin(), t.end());
      }
    }
    values[mask] = static_cast<std::uint8_t>(oracle.color(FinSet::from_flat(window.arity(), buf)));
  }
  return ShiftPoint(std::move(window), std::move(values));
}

std::uint32_t ShiftPoint::mask_of(const FinSet& b) const {
  std::uint32_t mask = 0;
  for (auto s : b) {
    std::size_t k = window_.index_of(s);
    if (k == window_.size()) throw OutOfWindow("set leaves the shift-space window");
    mask |= std::uint32_t{1} << k;
  }
  return mask;
}

int ShiftPoint::at(const FinSet& b) const { return values_[mask_of(b)]; }

ShiftPoint shift_act(const ShiftPoint& omega, const FinSet& a) {
  const std::uint32_t am = omega.mask_of(a);
  std::vector<std::uint8_t> out(omega.values().size());
  for (std::uint32_t b = 0; b < out.size(); ++b) out[b] = omega.values()[am | b];
  return ShiftPoint(omega.window(), std::move(out));
}

std::size_t agreement_radius(const ShiftPoint& omega1, const ShiftPoint& omega2) {
  if (!(omega1.window() == omega2.window())) throw WindowMismatch("colorings live on different windows");
  if (omega1.values()[0] != omega2.values()[0]) return 0;
  const std::size_t w = omega1.window().size();
  // Subsets of the first k points are exactly masks below 2^k.
  std::size_t agreed = 0;
  for (std::size_t k = 1; k <= w; ++k) {
    bool ok = true;
    for (std::size_t m = std::size_t{1} << (k - 1); m < (std::size_t{1} << k); ++m) {
      if (omega1.values()[m] != omega2.values()[m]) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    agreed = k;
  }
  return agreed + 1;
}

bool bridge_check(const System& A, const FinSet& n, const FinSet& a, const ColoringOracle& oracle) {
  const int base = oracle.color(a);
  for (const auto& P : A) {
    const FinSet Pn = evaluate(P, n);
    if (a.intersects(Pn)) return false;
    if (oracle.color(set_union(a, Pn)) != base) return false;
  }
  return true;
}

}  // namespace setpoly

#include "setpoly/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "setpoly/errors.hpp"

namespace setpoly {

namespace json_detail {

std::string join_path(std::string_view where, std::string_view key) {
  return std::string(where) + "." + std::string(key);
}

std::string join_path(std::string_view where, std::size_t index) {
  return std::string(where) + "[" + std::to_string(index) + "]";
}

void expect_object(const Json& j, std::string_view where, std::initializer_list<std::string_view> keys,
                   std::initializer_list<std::string_view> optional) {
  if (!j.is_object()) throw ParseError(std::string(where) + ": expected an object");
  for (auto k : keys) {
    if (!j.contains(std::string(k))) throw ParseError(std::string(where) + ": missing field \"" + std::string(k) + "\"");
  }
  for (const auto& [k, v] : j.items()) {
    bool known = std::find(keys.begin(), keys.end(), k) != keys.end() ||
                 std::find(optional.begin(), optional.end(), k) != optional.end();
    if (!known) throw ParseError(std::string(where) + ": unknown field \"" + k + "\"");
  }
}

const Json& field(const Json& j, std::string_view key, std::string_view where) {
  auto it = j.find(std::string(key));
  if (it == j.end()) throw ParseError(std::string(where) + ": missing field \"" + std::string(key) + "\"");
  return *it;
}

std::int64_t get_int(const Json& j, std::string_view where) {
  if (!j.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t get_uint(const Json& j, std::string_view where) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ParseError(std::string(where) + ": expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::string get_string(const Json& j, std::string_view where) {
  if (!j.is_string()) throw ParseError(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

const Json& get_array(const Json& j, std::string_view where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
  return j;
}

}  // namespace json_detail

using namespace json_detail;

namespace {

Symbol get_symbol(const Json& j, std::string_view where) {
  auto v = get_uint(j, where);
  if (v > std::numeric_limits<Symbol>::max()) throw ParseError(std::string(where) + ": symbol out of range");
  return static_cast<Symbol>(v);
}

}  // namespace

Json to_json(const FinSet& a) {
  Json elems = Json::array();
  if (a.arity() == 0) {
    if (!a.empty()) elems.push_back(Json::array());
  } else {
    for (auto t : a) elems.push_back(Json(std::vector<Symbol>(t.begin(), t.end())));
  }
  return Json{{"arity", a.arity()}, {"elems", std::move(elems)}};
}

FinSet finset_from_json(const Json& j, std::string_view where) {
  expect_object(j, where, {"arity", "elems"});
  const std::size_t d = get_uint(field(j, "arity", where), join_path(where, "arity"));
  const auto epath = join_path(where, "elems");
  const Json& elems = get_array(field(j, "elems", where), epath);
  std::vector<Symbol> flat;
  flat.reserve(elems.size() * d);
  std::size_t rows = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto tpath = join_path(epath, i);
    const Json& t = get_array(elems[i], tpath);
    if (t.size() != d) throw ParseError(tpath + ": tuple length " + std::to_string(t.size()) + " but arity " + std::to_string(d));
    for (std::size_t k = 0; k < t.size(); ++k) flat.push_back(get_symbol(t[k], join_path(tpath, k)));
    ++rows;
  }
  if (d == 0) {
    if (rows > 1) throw ParseError(epath + ": arity-0 set lists the empty tuple more than once");
    return rows == 1 ? FinSet::unit() : FinSet(0);
  }
  return FinSet::from_flat(d, std::move(flat));
}

Json symbols_to_json(const FinSet& a) {
  if (a.empty()) return Json::array();
  return Json(a.symbol_list());
}

FinSet symbols_from_json(const Json& j, std::string_view where) {
  const Json& arr = get_array(j, where);
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_symbol(arr[i], join_path(where, i)));
  return FinSet::from_flat(1, std::move(out));
}

std::string index_key(TermIndex alpha) {
  std::string s = "[";
  bool first = true;
  for (auto i : index_list(alpha)) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

TermIndex index_from_key(std::string_view key, std::size_t D, std::string_view where) {
  Json parsed;
  try {
    parsed = Json::parse(key);
  } catch (const Json::exception&) {
    throw ParseError(std::string(where) + ": malformed term key \"" + std::string(key) + "\"");
  }
  if (!parsed.is_array()) throw ParseError(std::string(where) + ": term key must be a list");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < parsed.size(); ++i) idx.push_back(get_uint(parsed[i], where));
  try {
    TermIndex alpha = index_from_list(idx, D);
    if (index_key(alpha) != key) throw ParseError(std::string(where) + ": term key not in canonical form");
    return alpha;
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string(where) + ": " + e.what());
  }
}

Json to_json(const SetPolynomial& P) {
  Json coeffs = Json::object();
  for (const auto& [alpha, c] : P.coeffs()) coeffs[index_key(alpha)] = to_json(c);
  return Json{{"D", P.dim()}, {"coeffs", std::move(coeffs)}};
}

SetPolynomial poly_from_json(const Json& j, std::string_view where) {
  expect_object(j, where, {"D", "coeffs"});
  const std::size_t D = get_uint(field(j, "D", where), join_path(where, "D"));
  if (D == 0 || D > kMaxDim) throw ParseError(join_path(where, "D") + ": dimension out of range");
  const auto cpath = join_path(where, "coeffs");
  const Json& coeffs = field(j, "coeffs", where);
  if (!coeffs.is_object()) throw ParseError(cpath + ": expected an object");
  SetPolynomial P(D);
  for (const auto& [key, value] : coeffs.items()) {
    const auto kpath = join_path(cpath, key);
    TermIndex alpha = index_from_key(key, D, kpath);
    FinSet c = finset_from_json(value, kpath);
    if (c.arity() != D - index_size(alpha)) {
      throw ParseError(kpath + ": coefficient arity must be " + std::to_string(D - index_size(alpha)));
    }
    P.set_coeff(alpha, std::move(c));
  }
  return P;
}

Json to_json(const System& A) {
  Json polys = Json::array();
  for (const auto& P : A) polys.push_back(to_json(P));
  return Json{{"D", A.dim()}, {"polys", std::move(polys)}};
}

System system_from_json(const Json& j, std::string_view where) {
  expect_object(j, where, {"D", "polys"});
  const std::size_t D = get_uint(field(j, "D", where), join_path(where, "D"));
  if (D == 0 || D > kMaxDim) throw ParseError(join_path(where, "D") + ": dimension out of range");
  const auto ppath = join_path(where, "polys");
  const Json& arr = get_array(field(j, "polys", where), ppath);
  std::vector<SetPolynomial> polys;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    SetPolynomial P = poly_from_json(arr[i], join_path(ppath, i));
    if (P.dim() != D) throw ParseError(join_path(ppath, i) + ": member dimension differs from the system's");
    polys.push_back(std::move(P));
  }
  return System(D, std::move(polys));
}

Json to_json(const NormalizationRecord& rec) {
  Json markers = Json::array();
  for (std::size_t d = 1; d < rec.markers.size(); ++d) {
    for (std::size_t i = 0; i < rec.markers[d].size(); ++i) {
      markers.push_back(Json{{"degree", d},
                             {"index", i + 1},
                             {"marker", rec.markers[d][i]},
                             {"term", to_json(rec.terms[d][i])}});
    }
  }
  Json j{{"original", to_json(rec.original)},
         {"source", to_json(rec.source)},
         {"markers", std::move(markers)},
         {"prime", to_json(rec.prime)}};
  j["pad"] = rec.pad ? Json(*rec.pad) : Json(nullptr);
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string canonical_string(const FinSet& a) {
  std::string s = "{\"arity\":" + std::to_string(a.arity()) + ",\"elems\":[";
  if (a.arity() == 0) {
    if (!a.empty()) s += "[]";
  } else {
    char buf[16];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += ',';
      s += '[';
      auto t = a[i];
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ',';
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, t[k]);
        (void)ec;
        s.append(buf, p);
      }
      s += ']';
    }
  }
  return s + "]}";
}

}  // namespace setpoly

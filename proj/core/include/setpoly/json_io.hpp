#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "setpoly/finite_sets.hpp"
#include "setpoly/set_polynomial.hpp"
#include "setpoly/system_pet.hpp"

namespace setpoly {

using Json = nlohmann::json;

// All parsers are strict: unknown or missing keys and wrong types throw
// ParseError naming the offending path.

Json to_json(const FinSet& a);
FinSet finset_from_json(const Json& j, std::string_view where = "$");

Json to_json(const SetPolynomial& P);
SetPolynomial poly_from_json(const Json& j, std::string_view where = "$");

Json to_json(const System& A);
System system_from_json(const Json& j, std::string_view where = "$");

Json to_json(const NormalizationRecord& rec);

Json symbols_to_json(const FinSet& a);  // [s1, s2, ...]
FinSet symbols_from_json(const Json& j, std::string_view where = "$");

/// "[1,3]" style key for a term index.
std::string index_key(TermIndex alpha);
TermIndex index_from_key(std::string_view key, std::size_t D, std::string_view where = "$");

/// Parses text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text);
Json load_json_file(const std::filesystem::path& path);

/// Same bytes as to_json(a).dump(), built without a json tree.
std::string canonical_string(const FinSet& a);

/// Helpers shared by the strict readers of other modules.
namespace json_detail {
void expect_object(const Json& j, std::string_view where, std::initializer_list<std::string_view> keys,
                   std::initializer_list<std::string_view> optional = {});
const Json& field(const Json& j, std::string_view key, std::string_view where);
std::int64_t get_int(const Json& j, std::string_view where);
std::uint64_t get_uint(const Json& j, std::string_view where);
std::string get_string(const Json& j, std::string_view where);
const Json& get_array(const Json& j, std::string_view where);
std::string join_path(std::string_view where, std::string_view key);
std::string join_path(std::string_view where, std::size_t index);
}  // namespace json_detail

}  // namespace setpoly

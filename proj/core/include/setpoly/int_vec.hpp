#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setpoly/errors.hpp"

namespace setpoly {

/// An element of ℤ^m; m = 1 stands for ℤ.
using IntVec = std::vector<std::int64_t>;

inline IntVec zero_vec(std::size_t width) { return IntVec(width, 0); }

inline bool is_zero(const IntVec& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

inline void add_into(IntVec& acc, const IntVec& v) {
  if (acc.size() != v.size()) throw ArityMismatch("vectors of different widths");
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
}

inline void sub_into(IntVec& acc, const IntVec& v) {
  if (acc.size() != v.size()) throw ArityMismatch("vectors of different widths");
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] -= v[i];
}

inline IntVec add_vec(IntVec a, const IntVec& b) {
  add_into(a, b);
  return a;
}

inline IntVec sub_vec(IntVec a, const IntVec& b) {
  sub_into(a, b);
  return a;
}

inline std::optional<std::int64_t> checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::int64_t> checked_pow(std::int64_t base, std::uint64_t e) {
  std::int64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

}  // namespace setpoly

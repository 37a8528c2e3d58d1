#include "setpoly/finite_sets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "setpoly/errors.hpp"

namespace setpoly {

std::strong_ordering compare_tuples(TupleView a, TupleView b) noexcept {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

FinSet::FinSet(std::size_t arity, const std::vector<Tuple>& tuples) : arity_(arity) {
  flat_.reserve(tuples.size() * arity);
  for (const auto& t : tuples) {
    if (t.size() != arity) {
      throw ArityMismatch("tuple of length " + std::to_string(t.size()) +
                          " in a set of arity " + std::to_string(arity));
    }
    flat_.insert(flat_.end(), t.begin(), t.end());
  }
  size_ = tuples.size();
  canonicalize();
}

FinSet FinSet::from_flat(std::size_t arity, std::vector<Symbol> flat) {
  FinSet s(arity);
  if (arity == 0) {
    // Nothing to distinguish rows by; a nonempty buffer is meaningless here.
    return s;
  }
  if (flat.size() % arity != 0) {
    throw ArityMismatch("flat buffer length is not a multiple of the arity");
  }
  s.size_ = flat.size() / arity;
  s.flat_ = std::move(flat);
  s.canonicalize();
  return s;
}

FinSet FinSet::symbols(std::initializer_list<Symbol> syms) {
  return from_flat(1, std::vector<Symbol>(syms));
}

FinSet FinSet::symbols(std::span<const Symbol> syms) {
  return from_flat(1, std::vector<Symbol>(syms.begin(), syms.end()));
}

FinSet FinSet::of(std::initializer_list<std::initializer_list<Symbol>> tuples) {
  if (tuples.size() == 0) return FinSet(1);
  std::size_t arity = tuples.begin()->size();
  std::vector<Tuple> rows;
  rows.reserve(tuples.size());
  for (const auto& t : tuples) rows.emplace_back(t);
  if (arity == 0) return unit();
  return FinSet(arity, rows);
}

FinSet FinSet::singleton(TupleView t) {
  if (t.empty()) return unit();
  FinSet s(t.size());
  s.flat_.assign(t.begin(), t.end());
  s.size_ = 1;
  return s;
}

void FinSet::canonicalize() {
  if (arity_ == 0) {
    flat_.clear();
    size_ = size_ > 0 ? 1 : 0;
    return;
  }
  if (arity_ == 1) {
    std::sort(flat_.begin(), flat_.end());
    flat_.erase(std::unique(flat_.begin(), flat_.end()), flat_.end());
    size_ = flat_.size();
    return;
  }
  std::vector<std::size_t> order(size_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto row = [&](std::size_t i) { return TupleView(flat_.data() + i * arity_, arity_); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return compare_tuples(row(x), row(y)) < 0; });
  std::vector<Symbol> out;
  out.reserve(flat_.size());
  std::size_t count = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && compare_tuples(row(order[k]), row(order[k - 1])) == 0) continue;
    auto r = row(order[k]);
    out.insert(out.end(), r.begin(), r.end());
    ++count;
  }
  flat_ = std::move(out);
  size_ = count;
}

std::vector<Symbol> FinSet::symbol_list() const {
  if (arity_ != 1) throw ArityMismatch("symbol_list needs a set of arity 1");
  return flat_;
}

std::size_t FinSet::index_of(TupleView t) const {
  if (t.size() != arity_) return size_;
  if (arity_ == 0) return size_ == 1 ? 0 : size_;
  std::size_t lo = 0, hi = size_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto c = compare_tuples((*this)[mid], t);
    if (c == 0) return mid;
    if (c < 0) lo = mid + 1; else hi = mid;
  }
  return size_;
}

bool FinSet::contains(TupleView t) const { return index_of(t) != size_; }

bool FinSet::is_subset_of(const FinSet& other) const {
  if (empty()) return true;
  if (arity_ != other.arity_) return false;
  if (arity_ == 0) return other.size_ == 1;
  std::size_t j = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    while (j < other.size_ && compare_tuples(other[j], (*this)[i]) < 0) ++j;
    if (j == other.size_ || compare_tuples(other[j], (*this)[i]) != 0) return false;
    ++j;
  }
  return true;
}

bool FinSet::intersects(const FinSet& other) const {
  if (arity_ != other.arity_ || empty() || other.empty()) return false;
  if (arity_ == 0) return true;
  std::size_t i = 0, j = 0;
  while (i < size_ && j < other.size_) {
    auto c = compare_tuples((*this)[i], other[j]);
    if (c == 0) return true;
    if (c < 0) ++i; else ++j;
  }
  return false;
}

std::strong_ordering operator<=>(const FinSet& a, const FinSet& b) noexcept {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.flat_.begin(), a.flat_.end(),
                                                      b.flat_.begin(), b.flat_.end());
      c != 0) {
    return c;
  }
  return a.size_ <=> b.size_;
}

namespace {

// Arity of a binary set operation; an empty operand adopts the other's arity.
std::size_t common_arity(const FinSet& a, const FinSet& b, const char* op) {
  if (a.arity() == b.arity()) return a.arity();
  if (a.empty()) return b.arity();
  if (b.empty()) return a.arity();
  throw ArityMismatch(std::string(op) + ": arities " + std::to_string(a.arity()) + " and " +
                      std::to_string(b.arity()));
}

enum class Keep { Union, Intersection, Minus };

FinSet merge(const FinSet& a, const FinSet& b, Keep keep, const char* op) {
  const std::size_t d = common_arity(a, b, op);
  if (d == 0) {
    bool x = !a.empty(), y = !b.empty();
    bool r = keep == Keep::Union ? (x || y) : keep == Keep::Intersection ? (x && y) : (x && !y);
    return r ? FinSet::unit() : FinSet(0);
  }
  std::vector<Symbol> out;
  std::size_t i = 0, j = 0;
  auto push = [&](TupleView t) { out.insert(out.end(), t.begin(), t.end()); };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      if (keep != Keep::Intersection) push(a[i]);
      ++i;
      continue;
    }
    if (i == a.size()) {
      if (keep == Keep::Union) push(b[j]);
      ++j;
      continue;
    }
    auto c = compare_tuples(a[i], b[j]);
    if (c < 0) {
      if (keep != Keep::Intersection) push(a[i]);
      ++i;
    } else if (c > 0) {
      if (keep == Keep::Union) push(b[j]);
      ++j;
    } else {
      if (keep != Keep::Minus) push(a[i]);
      ++i;
      ++j;
    }
  }
  // Already sorted and unique; from_flat re-sorts cheaply on sorted input.
  return FinSet::from_flat(d, std::move(out));
}

}  // namespace

FinSet set_union(const FinSet& a, const FinSet& b) { return merge(a, b, Keep::Union, "union"); }

FinSet set_intersection(const FinSet& a, const FinSet& b) {
  return merge(a, b, Keep::Intersection, "intersection");
}

FinSet set_minus(const FinSet& a, const FinSet& b) { return merge(a, b, Keep::Minus, "minus"); }

FinSet disjoint_union(const FinSet& a, const FinSet& b) {
  common_arity(a, b, "disjoint_union");
  if (a.intersects(b)) throw OverlapError("disjoint_union: operands intersect");
  return set_union(a, b);
}

FinSet difference(const FinSet& a, const FinSet& b) {
  common_arity(a, b, "difference");
  if (!b.is_subset_of(a)) throw NotContainedError("difference: subtrahend is not contained");
  return set_minus(a, b);
}

FinSet cartesian(const FinSet& a, const FinSet& b) {
  const std::size_t d = a.arity() + b.arity();
  if (a.empty() || b.empty()) return FinSet(d);
  if (d == 0) return FinSet::unit();
  std::vector<Symbol> out;
  out.reserve(a.size() * b.size() * d);
  for (auto x : a) {
    for (auto y : b) {
      out.insert(out.end(), x.begin(), x.end());
      out.insert(out.end(), y.begin(), y.end());
    }
  }
  return FinSet::from_flat(d, std::move(out));
}

FinSet power(const FinSet& m, std::size_t d) {
  if (m.arity() != 1) throw ArityMismatch("power: base must have arity 1");
  FinSet acc = FinSet::unit();
  for (std::size_t i = 0; i < d; ++i) acc = cartesian(acc, m);
  return acc;
}

FinSet support(const FinSet& a) {
  if (a.arity() == 0) return FinSet(1);
  return FinSet::from_flat(1, a.flat());
}

void SymbolAllocator::reserve(Symbol s) {
  if (s >= next_) next_ = s + 1;
}

void SymbolAllocator::reserve(const FinSet& a) {
  for (Symbol s : a.flat()) reserve(s);
}

Symbol SymbolAllocator::mint() { return next_++; }

FinSet SymbolAllocator::mint_set(std::size_t k) {
  std::vector<Symbol> out(k);
  for (auto& s : out) s = mint();
  return FinSet::from_flat(1, std::move(out));
}

Tuple SymbolAllocator::mint_tuple(std::size_t k) {
  Tuple t(k);
  for (auto& s : t) s = mint();
  return t;
}

}  // namespace setpoly

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace setpoly {

/// A ground symbol. The infinite ground set S is modeled as the naturals;
/// only the order of symbols carries meaning.
using Symbol = std::uint32_t;

/// An owned d-tuple of ground symbols.
using Tuple = std::vector<Symbol>;

/// A borrowed view of a tuple stored inside a FinSet.
using TupleView = std::span<const Symbol>;

/// A finite set of d-tuples over the ground set, i.e. an element of F(S^d).
///
/// Tuples are kept in a flat buffer, lexicographically sorted and
/// deduplicated, so equality, ordering and serialization are structural.
/// Arity 0 is allowed: the only values are the empty set and {()}, the
/// latter playing the role of S^0 = {empty tuple}.
class FinSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = TupleView;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = TupleView;

    const_iterator() = default;
    const_iterator(const FinSet* set, std::size_t index) : set_(set), index_(index) {}

    TupleView operator*() const { return (*set_)[index_]; }
    TupleView operator[](difference_type n) const { return (*set_)[index_ + n]; }
    const_iterator& operator++() { ++index_; return *this; }
    const_iterator operator++(int) { auto t = *this; ++index_; return t; }
    const_iterator& operator--() { --index_; return *this; }
    const_iterator operator--(int) { auto t = *this; --index_; return t; }
    const_iterator& operator+=(difference_type n) { index_ += n; return *this; }
    const_iterator& operator-=(difference_type n) { index_ -= n; return *this; }
    friend const_iterator operator+(const_iterator it, difference_type n) { return it += n; }
    friend const_iterator operator+(difference_type n, const_iterator it) { return it += n; }
    friend const_iterator operator-(const_iterator it, difference_type n) { return it -= n; }
    friend difference_type operator-(const const_iterator& a, const const_iterator& b) {
      return static_cast<difference_type>(a.index_) - static_cast<difference_type>(b.index_);
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.index_ == b.index_; }
    friend auto operator<=>(const const_iterator& a, const const_iterator& b) { return a.index_ <=> b.index_; }

   private:
    const FinSet* set_ = nullptr;
    std::size_t index_ = 0;
  };

  /// The empty set of arity 1.
  FinSet() = default;

  /// The empty set of the given arity.
  explicit FinSet(std::size_t arity) : arity_(arity) {}

  /// Builds a set from arbitrary tuples; all must have length `arity`.
  FinSet(std::size_t arity, const std::vector<Tuple>& tuples);

  /// Builds a set from a row-major buffer of tuples (unsorted, duplicates allowed).
  static FinSet from_flat(std::size_t arity, std::vector<Symbol> flat);

  /// {s1, s2, ...} as a set of 1-tuples.
  static FinSet symbols(std::initializer_list<Symbol> syms);
  static FinSet symbols(std::span<const Symbol> syms);

  /// Tuples written inline; arity is taken from the first tuple.
  static FinSet of(std::initializer_list<std::initializer_list<Symbol>> tuples);

  /// {()} : the arity-0 set containing the empty tuple.
  static FinSet unit() {
    FinSet s(0);
    s.size_ = 1;
    return s;
  }

  /// {t} for a single tuple.
  static FinSet singleton(TupleView t);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  TupleView operator[](std::size_t i) const noexcept {
    return TupleView(flat_.data() + i * arity_, arity_);
  }
  const_iterator begin() const noexcept { return {this, 0}; }
  const_iterator end() const noexcept { return {this, size_}; }

  /// Row-major storage; size() * arity() symbols.
  const std::vector<Symbol>& flat() const noexcept { return flat_; }

  /// For arity-1 sets: the members as plain symbols, ascending.
  std::vector<Symbol> symbol_list() const;

  bool contains(TupleView t) const;
  bool is_subset_of(const FinSet& other) const;
  bool intersects(const FinSet& other) const;

  /// Position of `t` in canonical order, or size() if absent.
  std::size_t index_of(TupleView t) const;

  friend bool operator==(const FinSet& a, const FinSet& b) noexcept {
    return a.arity_ == b.arity_ && a.size_ == b.size_ && a.flat_ == b.flat_;
  }
  friend std::strong_ordering operator<=>(const FinSet& a, const FinSet& b) noexcept;

 private:
  void canonicalize();

  std::size_t arity_ = 1;
  std::size_t size_ = 0;
  std::vector<Symbol> flat_;
};

/// Lexicographic comparison of two tuples.
std::strong_ordering compare_tuples(TupleView a, TupleView b) noexcept;

/// a ∪ b without a disjointness requirement (the "+" of coefficients).
FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersection(const FinSet& a, const FinSet& b);
/// a ∖ b with no containment requirement.
FinSet set_minus(const FinSet& a, const FinSet& b);

/// a + b for disjoint a, b. Throws OverlapError otherwise.
FinSet disjoint_union(const FinSet& a, const FinSet& b);

/// a − b for b ⊆ a. Throws NotContainedError otherwise.
FinSet difference(const FinSet& a, const FinSet& b);

/// a × b: concatenation of every tuple of a with every tuple of b.
FinSet cartesian(const FinSet& a, const FinSet& b);

/// m^d, the d-fold cartesian power of a set of symbols; m^0 = {()}.
FinSet power(const FinSet& m, std::size_t d);

/// supp(a): every symbol occurring in some coordinate of some tuple.
FinSet support(const FinSet& a);

/// Mints ground symbols strictly above everything reserved or minted so far.
class SymbolAllocator {
 public:
  SymbolAllocator() = default;
  explicit SymbolAllocator(Symbol first_free) : next_(first_free) {}

  void reserve(Symbol s);
  void reserve(const FinSet& a);  // reserves supp(a)

  Symbol mint();
  /// k fresh symbols as an arity-1 set, ascending.
  FinSet mint_set(std::size_t k);
  /// A fresh tuple of k distinct symbols.
  Tuple mint_tuple(std::size_t k);

  Symbol next_id() const noexcept { return next_; }

 private:
  Symbol next_ = 1;
};

}  // namespace setpoly

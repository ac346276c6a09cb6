#ifndef ZEROSUM_BITLINALG_HPP
#define ZEROSUM_BITLINALG_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zerosum/gf2n.hpp"

namespace zerosum {

/// Dense matrix over F_2 with at most 64 columns; column j is bit j of a row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, unsigned cols);
  static BitMatrix from_rows(unsigned cols, std::vector<Word> rows);
  static BitMatrix identity(unsigned n);

  std::size_t rows() const noexcept { return data_.size(); }
  unsigned cols() const noexcept { return cols_; }
  Word row(std::size_t i) const { return data_[i]; }
  const std::vector<Word>& row_data() const noexcept { return data_; }

  bool get(std::size_t i, unsigned j) const { return (data_[i] >> j) & 1; }
  void set(std::size_t i, unsigned j, bool v);

  /// m * x, one output bit per row. Requires rows() <= 64.
  Word apply(Word x) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  unsigned cols_ = 0;
  std::vector<Word> data_;
};

struct Reduction {
  BitMatrix rref;    // reduced row-echelon form, zero rows dropped
  unsigned rank = 0;
  BitMatrix kernel;  // one basis vector of {x : m x = 0} per row
};

/// Reduced row-echelon form, rank and kernel basis. Pivot of a row = its
/// lowest set column; pivots strictly increase down the rows.
Reduction reduce(const BitMatrix& m);

/// Some x with m x = rhs (free variables set to 0), or nullopt.
/// Throws DimensionMismatch if rhs.size() != m.rows().
std::optional<Word> solve_linear(const BitMatrix& m, const std::vector<bool>& rhs);

/// Row-reduce `vectors` in place to RREF (lowest-bit pivots, increasing);
/// drops zero rows. Returns the rank.
std::size_t rref_in_place(std::vector<Word>& vectors);

/// Top-bit echelon basis kept fully reduced: no basis vector has a bit set
/// at another vector's leading position. Supports membership, coset
/// reduction and smallest-element queries.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::span<const Word> vectors);

  /// Adds v to the span; returns false if v was already in it.
  bool insert(Word v);
  Word reduce(Word v) const noexcept;
  bool contains(Word v) const noexcept { return reduce(v) == 0; }
  std::size_t dim() const noexcept { return count_; }
  /// Smallest element (by integer encoding) outside the span of an
  /// `bits`-dimensional ambient space, if any.
  std::optional<Word> min_outside(unsigned bits) const noexcept;
  /// Smallest nonzero element of the span.
  std::optional<Word> min_nonzero() const noexcept;
  std::vector<Word> vectors() const;

 private:
  Word by_lead_[64] = {};  // by_lead_[p] has leading bit p, or is 0
  Word pivot_mask_ = 0;
  std::size_t count_ = 0;
};

/// Smallest element of `outer` \ `inner`; requires inner to be a subspace of outer.
std::optional<Word> min_in_difference(std::span<const Word> outer, std::span<const Word> inner);

/// Canonical F_2-subspace of F_{2^n}: RREF basis, so equal subspaces compare equal.
struct Subspace {
  FieldSpec ambient;
  std::vector<Elem> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  bool contains(Elem v) const;
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// RREF span of vs. Throws SpecMismatch for elements outside F_{2^n}.
Subspace subspace_from_vectors(const FieldSpec& spec, std::span<const Elem> vs);
Subspace subspace_from_vectors(std::span<const FieldElement> vs);

/// Gaussian binomial [n choose k]_2 (exact for n <= 64 while it fits).
std::uint64_t gaussian_binomial(unsigned n, unsigned k);

/// Every k-dimensional subspace of F_{2^n} exactly once, walking pivot
/// patterns in lexicographic order and the free entries of each pattern
/// as a binary counter.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const FieldSpec& spec, unsigned k);

  /// Moves to the next subspace; false once the stream is exhausted.
  bool advance();
  /// Current RREF basis, valid after advance() returned true.
  std::span<const Elem> basis() const noexcept { return rows_; }
  Subspace current() const { return {spec_, rows_}; }

 private:
  bool load_pattern();
  void fill_rows();

  FieldSpec spec_;
  unsigned k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<unsigned> pivots_;
  std::vector<std::pair<unsigned, unsigned>> free_slots_;  // (row, column)
  std::uint64_t counter_ = 0;
  std::uint64_t counter_end_ = 0;
  std::vector<Elem> rows_;
};

inline constexpr std::uint64_t kDefaultElementCap = std::uint64_t{1} << 26;

/// Calls fn on all 2^k elements of s in Gray-code order, starting at 0.
/// Throws BudgetExceeded if 2^k > cap.
void for_each_element(const Subspace& s, const std::function<void(Elem)>& fn,
                      std::uint64_t cap = kDefaultElementCap);
std::vector<Elem> subspace_elements(const Subspace& s, std::uint64_t cap = kDefaultElementCap);

/// n x n matrix of an F_2-linear map on F_{2^n}: column j is f(X^j).
template <class Fn>
BitMatrix matrix_of_linear_map(unsigned n, Fn&& f) {
  BitMatrix m(n, n);
  for (unsigned j = 0; j < n; ++j) {
    const Elem y = f(Elem{1} << j);
    for (unsigned i = 0; i < n; ++i)
      if (y >> i & 1) m.set(i, j, true);
  }
  return m;
}

/// Template variant of for_each_element for hot loops.
template <class Fn>
void visit_span(std::span<const Elem> basis, Fn&& fn) {
  Elem x = 0;
  fn(x);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    x ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    fn(x);
  }
}

}  // namespace zerosum

#endif

#include "zerosum/bitlinalg.hpp"

#include <algorithm>
#include <bit>

#include "zerosum/error.hpp"

namespace zerosum {

namespace {

Word col_mask(unsigned cols) { return cols >= 64 ? ~Word{0} : (Word{1} << cols) - 1; }

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, unsigned cols) : cols_(cols), data_(rows, 0) {
  if (cols > 64) throw Error(Errc::DimensionMismatch, "more than 64 columns");
}

BitMatrix BitMatrix::from_rows(unsigned cols, std::vector<Word> rows) {
  BitMatrix m(0, cols);
  for (Word r : rows)
    if ((r & ~col_mask(cols)) != 0) throw Error(Errc::DimensionMismatch, "row has bits beyond cols");
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::identity(unsigned n) {
  BitMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.data_[i] = Word{1} << i;
  return m;
}

void BitMatrix::set(std::size_t i, unsigned j, bool v) {
  if (v) data_[i] |= Word{1} << j;
  else data_[i] &= ~(Word{1} << j);
}

Word BitMatrix::apply(Word x) const {
  if (rows() > 64) throw Error(Errc::DimensionMismatch, "apply needs at most 64 rows");
  Word out = 0;
  for (std::size_t i = 0; i < rows(); ++i)
    out |= static_cast<Word>(std::popcount(data_[i] & x) & 1) << i;
  return out;
}

std::size_t rref_in_place(std::vector<Word>& v) {
  std::size_t rank = 0;
  for (unsigned col = 0; col < 64 && rank < v.size(); ++col) {
    const Word bit = Word{1} << col;
    auto it = std::find_if(v.begin() + static_cast<std::ptrdiff_t>(rank), v.end(),
                           [bit](Word r) { return (r & bit) != 0; });
    if (it == v.end()) continue;
    std::iter_swap(v.begin() + static_cast<std::ptrdiff_t>(rank), it);
    const Word pivot_row = v[rank];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != rank && (v[i] & bit)) v[i] ^= pivot_row;
    ++rank;
  }
  v.resize(rank);
  return rank;
}

Reduction reduce(const BitMatrix& m) {
  std::vector<Word> rows = m.row_data();
  const std::size_t rank = rref_in_place(rows);

  std::vector<unsigned> pivots;
  Word pivot_mask = 0;
  for (Word r : rows) {
    const auto p = static_cast<unsigned>(std::countr_zero(r));
    pivots.push_back(p);
    pivot_mask |= Word{1} << p;
  }
  std::vector<Word> kernel;
  for (unsigned f = 0; f < m.cols(); ++f) {
    if (pivot_mask >> f & 1) continue;
    Word x = Word{1} << f;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] >> f & 1) x |= Word{1} << pivots[i];
    kernel.push_back(x);
  }
  return {BitMatrix::from_rows(m.cols(), rows), static_cast<unsigned>(rank),
          BitMatrix::from_rows(m.cols(), std::move(kernel))};
}

std::optional<Word> solve_linear(const BitMatrix& m, const std::vector<bool>& rhs) {
  if (rhs.size() != m.rows()) throw Error(Errc::DimensionMismatch, "rhs length differs from rows");
  std::vector<Word> rows = m.row_data();
  std::vector<bool> b = rhs;
  std::size_t rank = 0;
  std::vector<unsigned> pivots;
  for (unsigned col = 0; col < m.cols() && rank < rows.size(); ++col) {
    const Word bit = Word{1} << col;
    std::size_t sel = rank;
    while (sel < rows.size() && !(rows[sel] & bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    std::vector<bool>::swap(b[rank], b[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i] & bit)) {
        rows[i] ^= rows[rank];
        b[i] = b[i] != b[rank];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (b[i]) return std::nullopt;
  Word x = 0;
  for (std::size_t i = 0; i < rank; ++i)
    if (b[i]) x |= Word{1} << pivots[i];
  return x;
}

EchelonBasis::EchelonBasis(std::span<const Word> vectors) {
  for (Word v : vectors) insert(v);
}

Word EchelonBasis::reduce(Word v) const noexcept {
  // basis vectors are zero at each other's leads, so each lead of v is
  // cleared by exactly one xor; the result is the smallest coset member
  Word r = v;
  for (Word piv = pivot_mask_; piv != 0; piv &= piv - 1) {
    const int p = std::countr_zero(piv);
    if (v >> p & 1) r ^= by_lead_[p];
  }
  return r;
}

bool EchelonBasis::insert(Word v) {
  v = reduce(v);
  if (v == 0) return false;
  const int lead = 63 - std::countl_zero(v);
  for (Word piv = pivot_mask_; piv != 0; piv &= piv - 1) {
    const int p = std::countr_zero(piv);
    if (by_lead_[p] >> lead & 1) by_lead_[p] ^= v;
  }
  by_lead_[lead] = v;
  pivot_mask_ |= Word{1} << lead;
  ++count_;
  return true;
}

std::optional<Word> EchelonBasis::min_outside(unsigned bits) const noexcept {
  for (unsigned p = 0; p < bits && p < 64; ++p)
    if (by_lead_[p] == 0) return Word{1} << p;
  return std::nullopt;
}

std::optional<Word> EchelonBasis::min_nonzero() const noexcept {
  for (unsigned p = 0; p < 64; ++p)
    if (by_lead_[p] != 0) return by_lead_[p];
  return std::nullopt;
}

std::vector<Word> EchelonBasis::vectors() const {
  std::vector<Word> out;
  for (Word v : by_lead_)
    if (v != 0) out.push_back(v);
  return out;
}

std::optional<Word> min_in_difference(std::span<const Word> outer, std::span<const Word> inner) {
  const EchelonBasis w(inner);
  EchelonBasis projected;
  for (Word v : outer) projected.insert(w.reduce(v));
  return projected.min_nonzero();
}

bool Subspace::contains(Elem v) const {
  for (Elem b : basis)
    if (v >> std::countr_zero(b) & 1) v ^= b;
  return v == 0;
}

Subspace subspace_from_vectors(const FieldSpec& spec, std::span<const Elem> vs) {
  const Field field(spec);
  std::vector<Elem> rows;
  for (Elem v : vs) {
    if (!field.contains(v)) throw Error(Errc::SpecMismatch, "vector outside F_{2^n}");
    if (v != 0) rows.push_back(v);
  }
  rref_in_place(rows);
  return {spec, std::move(rows)};
}

Subspace subspace_from_vectors(std::span<const FieldElement> vs) {
  if (vs.empty()) throw Error(Errc::SpecMismatch, "empty list carries no field");
  std::vector<Elem> bits;
  for (const auto& v : vs) {
    if (!(v.field() == vs.front().field())) throw Error(Errc::SpecMismatch, "mixed fields");
    bits.push_back(v.bits());
  }
  return subspace_from_vectors(vs.front().field().spec(), bits);
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  // [n k] = [n-1 k-1] + 2^k [n-1 k]
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m)
    for (unsigned j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + (std::uint64_t{1} << j) * row[j];
  return row[k];
}

SubspaceEnumerator::SubspaceEnumerator(const FieldSpec& spec, unsigned k) : spec_(spec), k_(k) {
  if (spec.n < kMinDegree || spec.n > kMaxDegree)
    throw Error(Errc::DegreeOutOfRange, "degree outside [2, 64]");
}

bool SubspaceEnumerator::load_pattern() {
  free_slots_.clear();
  Word pivot_mask = 0;
  for (unsigned p : pivots_) pivot_mask |= Word{1} << p;
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned c = pivots_[i] + 1; c < spec_.n; ++c)
      if (!(pivot_mask >> c & 1)) free_slots_.emplace_back(i, c);
  if (free_slots_.size() >= 63) throw Error(Errc::BudgetExceeded, "echelon pattern too large to enumerate");
  counter_ = 0;
  counter_end_ = std::uint64_t{1} << free_slots_.size();
  return true;
}

void SubspaceEnumerator::fill_rows() {
  rows_.assign(k_, 0);
  for (unsigned i = 0; i < k_; ++i) rows_[i] = Elem{1} << pivots_[i];
  for (std::size_t b = 0; b < free_slots_.size(); ++b)
    if (counter_ >> b & 1) rows_[free_slots_[b].first] |= Elem{1} << free_slots_[b].second;
}

bool SubspaceEnumerator::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (k_ > spec_.n) {
      done_ = true;
      return false;
    }
    pivots_.resize(k_);
    for (unsigned i = 0; i < k_; ++i) pivots_[i] = i;
    load_pattern();
    fill_rows();
    return true;
  }
  if (++counter_ < counter_end_) {
    fill_rows();
    return true;
  }
  // next k-combination of {0..n-1}
  int i = static_cast<int>(k_) - 1;
  while (i >= 0 && pivots_[static_cast<unsigned>(i)] == spec_.n - k_ + static_cast<unsigned>(i)) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  ++pivots_[static_cast<unsigned>(i)];
  for (unsigned j = static_cast<unsigned>(i) + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  load_pattern();
  fill_rows();
  return true;
}

void for_each_element(const Subspace& s, const std::function<void(Elem)>& fn, std::uint64_t cap) {
  if (s.dim() >= 64 || (std::uint64_t{1} << s.dim()) > cap)
    throw Error(Errc::BudgetExceeded, "2^" + std::to_string(s.dim()) + " elements exceed the iteration cap");
  visit_span(s.basis, fn);
}

std::vector<Elem> subspace_elements(const Subspace& s, std::uint64_t cap) {
  std::vector<Elem> out;
  for_each_element(s, [&out](Elem x) { out.push_back(x); }, cap);
  return out;
}

}  // namespace zerosum

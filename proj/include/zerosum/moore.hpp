#ifndef ZEROSUM_MOORE_HPP
#define ZEROSUM_MOORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zerosum/bitlinalg.hpp"
#include "zerosum/gf2n.hpp"

namespace zerosum {

/// Determinant of a k x k row-major matrix over the field (Gaussian elimination).
Elem determinant(const Field& field, std::vector<Elem> m, std::size_t k);

/// Moore determinant: entry (i, j) = v_j^(2^i), 0 <= i < k.
/// Vanishes exactly on F_2-dependent tuples. Throws EmptyTuple for k = 0.
Elem delta(const Field& field, std::span<const Elem> vs);

/// Moore-type determinant with row exponents {2^0..2^k} minus 2^i.
/// delta_i(vs, k) == delta(vs). Throws EmptyTuple, IndexOutOfRange (i > k).
Elem delta_i(const Field& field, std::span<const Elem> vs, unsigned i);

struct MooreEval {
  Elem delta = 0;
  Elem delta1 = 0;
  std::size_t k = 0;

  bool independent() const noexcept { return delta != 0; }
  bool zero_sum() const noexcept { return delta != 0 && delta1 == 0; }
};

MooreEval moore_eval(const Field& field, std::span<const Elem> vs);

/// F_k(vs) = delta_1(vs) / delta(vs); zero iff span(vs) is a zero-sum
/// subspace. Throws DependentBasis when delta(vs) = 0.
Elem eval_fk(const Field& field, std::span<const Elem> vs);

/// Moore criterion on the canonical basis. Throws ZeroDimension for k = 0.
bool is_zero_sum(const Field& field, const Subspace& s);

/// Sum of 1/u over the nonzero elements, by enumeration.
/// Throws BudgetExceeded past the cap.
Elem direct_inverse_sum(const Field& field, const Subspace& s, std::uint64_t cap = kDefaultElementCap);

/// Sum of field.inv over the given values (zeros contribute 0); batched
/// inversion, one field inversion per block.
Elem sum_of_inverses(const Field& field, std::span<const Elem> values);

/// Coefficients of the 2-polynomial X -> delta_1(u_1..u_m, X): entry e
/// multiplies X^(2^e). Entry 1 is always zero and entry 0 equals
/// delta(us)^4. Throws DependentPrefix when the us are dependent,
/// EmptyTuple when m = 0.
std::vector<Elem> delta1_linearized(const Field& field, std::span<const Elem> us);

/// Evaluates sum_e coeffs[e] * x^(2^e).
Elem eval_linearized(const Field& field, std::span<const Elem> coeffs, Elem x);

/// Matrix over F_2 of x -> delta_1(u_1..u_m, x); its kernel contains span(us).
BitMatrix linearized_delta1_map(const Field& field, std::span<const Elem> us);

}  // namespace zerosum

#endif

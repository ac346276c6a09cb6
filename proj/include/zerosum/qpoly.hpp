#ifndef ZEROSUM_QPOLY_HPP
#define ZEROSUM_QPOLY_HPP

#include <span>
#include <vector>

#include "zerosum/gf2n.hpp"

namespace zerosum {

// Polynomials sum_i c_i X^(Q^i) with Q = 2^l, as coefficient vectors. They
// act as F_{2^l}-linear maps of F_{2^n}; composition makes them a skew ring.

Elem qpoly_eval(const Field& field, unsigned l, std::span<const Elem> coeffs, Elem x);

/// (a o b)(X) = a(b(X)).
std::vector<Elem> qpoly_compose(const Field& field, unsigned l, std::span<const Elem> a,
                                std::span<const Elem> b);

/// Monic subspace polynomial prod_{w in W} (X + w) of W = F_{2^l}-span of
/// gens. Throws DependentInput if gens are F_{2^l}-dependent.
std::vector<Elem> subspace_qpoly(const Field& field, unsigned l, std::span<const Elem> gens);

/// For monic a with a | X^(Q^m) - X (m = n / l), the monic b with
/// a o b = X^(Q^m) - X. ker b has Q^(m - deg a) elements and Im b = ker a.
/// Throws PreconditionViolated if the division is not exact.
std::vector<Elem> qpoly_cofactor(const Field& field, unsigned l, std::span<const Elem> a);

}  // namespace zerosum

#endif

#ifndef ZEROSUM_SUBFIELD_HPP
#define ZEROSUM_SUBFIELD_HPP

#include "zerosum/bitlinalg.hpp"
#include "zerosum/gf2n.hpp"

namespace zerosum {

/// The subfield F_{2^l} of F_{2^n} as an F_2-subspace: the kernel of
/// x -> x^(2^l) + x. Throws NotADivisor unless l >= 1 and l | n.
Subspace subfield_subspace(const Field& field, unsigned l);

}  // namespace zerosum

#endif

#include "zerosum/subfield.hpp"

#include "zerosum/error.hpp"

namespace zerosum {

Subspace subfield_subspace(const Field& field, unsigned l) {
  const unsigned n = field.degree();
  if (l == 0 || n % l != 0)
    throw Error(Errc::NotADivisor, std::to_string(l) + " does not divide " + std::to_string(n));
  const BitMatrix m = matrix_of_linear_map(n, [&](Elem x) { return field.frob(x, l) ^ x; });
  const Reduction red = reduce(m);
  return subspace_from_vectors(field.spec(), red.kernel.row_data());
}

}  // namespace zerosum

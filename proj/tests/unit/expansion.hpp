// Test-side evaluation of the expansion of F_{k,l} in its first variable:
//   F_{k,l}(x_1, rest) = sum_{i=0..K} C_i x_1^(2^i) + delta(rest)^2,
//   C_i = F_{k-1,l}(rest) * delta_i(rest) / delta(rest),  K = |rest|,
// where rest = (x_2, .., x_k, u_1, .., u_l).
#ifndef ZEROSUM_TEST_EXPANSION_HPP
#define ZEROSUM_TEST_EXPANSION_HPP

#include <vector>

#include "zerosum/moore.hpp"

namespace expansion {

using zerosum::Elem;

inline Elem f_value(const zerosum::Field& f, const std::vector<Elem>& xs) {
  return f.mul(zerosum::delta_i(f, xs, 1), f.inv(zerosum::delta(f, xs)));
}

inline Elem expanded(const zerosum::Field& f, Elem x1, const std::vector<Elem>& rest) {
  const Elem d = zerosum::delta(f, rest);
  const Elem inv_d = f.inv(d);
  const Elem fk = f_value(f, rest);
  Elem acc = f.sqr(d);
  Elem pw = x1;
  for (unsigned i = 0; i <= rest.size(); ++i) {
    const Elem c = f.mul(fk, f.mul(zerosum::delta_i(f, rest, i), inv_d));
    acc ^= f.mul(c, pw);
    pw = f.sqr(pw);
  }
  return acc;
}

}  // namespace expansion

#endif

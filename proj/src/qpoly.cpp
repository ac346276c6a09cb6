#include "zerosum/qpoly.hpp"

#include "zerosum/error.hpp"

namespace zerosum {

Elem qpoly_eval(const Field& field, unsigned l, std::span<const Elem> coeffs, Elem x) {
  Elem acc = 0;
  for (Elem c : coeffs) {
    acc ^= field.mul(c, x);
    x = field.frob(x, l);
  }
  return acc;
}

std::vector<Elem> qpoly_compose(const Field& field, unsigned l, std::span<const Elem> a,
                                std::span<const Elem> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> out(a.size() + b.size() - 1, 0);
  for (std::size_t j = 0; j < b.size(); ++j) {
    Elem bj = b[j];  // b_j^(Q^i) as i advances
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i + j] ^= field.mul(a[i], bj);
      bj = field.frob(bj, l);
    }
  }
  return out;
}

std::vector<Elem> subspace_qpoly(const Field& field, unsigned l, std::span<const Elem> gens) {
  // P_{W + gF} = L o P_W with L(Y) = Y^Q + P_W(g)^(Q-1) Y
  std::vector<Elem> p{1};
  const std::uint64_t q_minus_1 = (std::uint64_t{1} << l) - 1;
  for (Elem g : gens) {
    const Elem y = qpoly_eval(field, l, p, g);
    if (y == 0) throw Error(Errc::DependentInput, "generators are F_{2^l}-dependent");
    const std::vector<Elem> step{field.pow(y, q_minus_1), 1};
    p = qpoly_compose(field, l, step, p);
  }
  return p;
}

std::vector<Elem> qpoly_cofactor(const Field& field, unsigned l, std::span<const Elem> a) {
  const unsigned n = field.degree();
  if (l == 0 || n % l != 0) throw Error(Errc::NotADivisor, "l must divide n");
  const std::size_t m = n / l;
  if (a.empty() || a.back() != 1 || a.size() - 1 > m)
    throw Error(Errc::PreconditionViolated, "cofactor needs a monic divisor of degree <= n/l");
  const std::size_t da = a.size() - 1;
  const std::size_t t = m - da;
  std::vector<Elem> target(m + 1, 0);
  target[0] ^= 1;
  target[m] ^= 1;

  // Match coefficients of X^(Q^k) from the top: for k = da + j the only
  // unknown term is a_da * b_j^(Q^da) = b_j^(Q^da); invert it with Q^t.
  std::vector<Elem> b(t + 1, 0);
  b[t] = 1;
  for (std::size_t j = t; j-- > 0;) {
    const std::size_t k = da + j;
    Elem acc = target[k];
    for (std::size_t i = 0; i < da; ++i) {
      const std::size_t jj = k - i;
      if (jj <= t) acc ^= field.mul(a[i], field.frob(b[jj], l * i));
    }
    b[j] = field.frob(acc, l * t);
  }
  if (qpoly_compose(field, l, a, b) != target)
    throw Error(Errc::PreconditionViolated, "polynomial does not divide X^(Q^m) - X");
  return b;
}

}  // namespace zerosum

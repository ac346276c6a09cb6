#include "zerosum/moore.hpp"

#include <utility>

#include "zerosum/error.hpp"

namespace zerosum {

namespace {

// Solves a * x = b in place (a is k x k row-major); returns det(a). The
// solution is only meaningful when the determinant is nonzero.
Elem eliminate(const Field& f, std::vector<Elem>& a, std::vector<Elem>* b, std::size_t k) {
  Elem det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p * k + c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      for (std::size_t j = c; j < k; ++j) std::swap(a[p * k + j], a[c * k + j]);
      if (b) std::swap((*b)[p], (*b)[c]);
    }
    const Elem pivot = a[c * k + c];
    det = f.mul(det, pivot);
    const Elem pinv = f.inv(pivot);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r * k + c] == 0) continue;
      if (!b && r < c) continue;  // determinant only needs the rows below
      const Elem factor = f.mul(a[r * k + c], pinv);
      for (std::size_t j = c; j < k; ++j) a[r * k + j] ^= f.mul(factor, a[c * k + j]);
      if (b) (*b)[r] ^= f.mul(factor, (*b)[c]);
    }
  }
  if (b)
    for (std::size_t r = 0; r < k; ++r) (*b)[r] = f.mul((*b)[r], f.inv(a[r * k + r]));
  return det;
}

// powers[j * (top + 1) + e] = vs[j]^(2^e) for 0 <= e <= top
std::vector<Elem> frobenius_table(const Field& f, std::span<const Elem> vs, unsigned top) {
  std::vector<Elem> out(vs.size() * (top + 1));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    Elem x = vs[j];
    for (unsigned e = 0; e <= top; ++e) {
      out[j * (top + 1) + e] = x;
      x = f.sqr(x);
    }
  }
  return out;
}

Elem moore_type(const Field& f, std::span<const Elem> vs, unsigned skip) {
  const std::size_t k = vs.size();
  const auto top = static_cast<unsigned>(k);
  const std::vector<Elem> pw = frobenius_table(f, vs, top);
  std::vector<Elem> m(k * k);
  std::size_t row = 0;
  for (unsigned e = 0; e <= top; ++e) {
    if (e == skip) continue;
    for (std::size_t j = 0; j < k; ++j) m[row * k + j] = pw[j * (top + 1) + e];
    ++row;
  }
  return determinant(f, std::move(m), k);
}

void check_elements(const Field& f, std::span<const Elem> vs) {
  for (Elem v : vs)
    if (!f.contains(v)) throw Error(Errc::SpecMismatch, "element outside F_{2^n}");
}

}  // namespace

Elem determinant(const Field& field, std::vector<Elem> m, std::size_t k) {
  if (m.size() != k * k) throw Error(Errc::DimensionMismatch, "matrix is not k x k");
  return eliminate(field, m, nullptr, k);
}

Elem delta(const Field& field, std::span<const Elem> vs) {
  if (vs.empty()) throw Error(Errc::EmptyTuple, "delta of an empty tuple");
  check_elements(field, vs);
  return moore_type(field, vs, static_cast<unsigned>(vs.size()));
}

Elem delta_i(const Field& field, std::span<const Elem> vs, unsigned i) {
  if (vs.empty()) throw Error(Errc::EmptyTuple, "delta_i of an empty tuple");
  if (i > vs.size()) throw Error(Errc::IndexOutOfRange, "skipped row " + std::to_string(i) + " > k");
  check_elements(field, vs);
  return moore_type(field, vs, i);
}

MooreEval moore_eval(const Field& field, std::span<const Elem> vs) {
  return {delta(field, vs), delta_i(field, vs, 1), vs.size()};
}

Elem eval_fk(const Field& field, std::span<const Elem> vs) {
  const MooreEval ev = moore_eval(field, vs);
  if (ev.delta == 0) throw Error(Errc::DependentBasis, "F_k needs an independent tuple");
  return field.mul(ev.delta1, field.inv(ev.delta));
}

bool is_zero_sum(const Field& field, const Subspace& s) {
  if (!(field.spec() == s.ambient)) throw Error(Errc::SpecMismatch, "subspace of another field");
  if (s.dim() == 0) throw Error(Errc::ZeroDimension, "zero subspace");
  return delta_i(field, s.basis, 1) == 0;
}

Elem sum_of_inverses(const Field& field, std::span<const Elem> values) {
  constexpr std::size_t kBlock = 256;
  Elem prefix[kBlock];
  Elem nonzero[kBlock];
  Elem total = 0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t m = 0;
    Elem acc = 1;
    for (; i < values.size() && m < kBlock; ++i) {
      if (values[i] == 0) continue;
      nonzero[m] = values[i];
      acc = field.mul(acc, values[i]);
      prefix[m++] = acc;
    }
    if (m == 0) continue;
    Elem inv_acc = field.inv(acc);  // 1 / (v_0 ... v_{m-1})
    for (std::size_t j = m; j-- > 1;) {
      total ^= field.mul(inv_acc, prefix[j - 1]);
      inv_acc = field.mul(inv_acc, nonzero[j]);
    }
    total ^= inv_acc;
  }
  return total;
}

Elem direct_inverse_sum(const Field& field, const Subspace& s, std::uint64_t cap) {
  if (!(field.spec() == s.ambient)) throw Error(Errc::SpecMismatch, "subspace of another field");
  if (s.dim() >= 64 || (std::uint64_t{1} << s.dim()) > cap)
    throw Error(Errc::BudgetExceeded, "2^" + std::to_string(s.dim()) + " elements exceed the iteration cap");
  std::vector<Elem> chunk;
  chunk.reserve(4096);
  Elem total = 0;
  visit_span(s.basis, [&](Elem x) {
    chunk.push_back(x);
    if (chunk.size() == 4096) {
      total ^= sum_of_inverses(field, chunk);
      chunk.clear();
    }
  });
  return total ^ sum_of_inverses(field, chunk);
}

std::vector<Elem> delta1_linearized(const Field& field, std::span<const Elem> us) {
  if (us.empty()) throw Error(Errc::EmptyTuple, "empty prefix");
  check_elements(field, us);
  const std::size_t m = us.size();
  const auto top = static_cast<unsigned>(m + 1);
  const std::vector<Elem> pw = frobenius_table(field, us, top);
  // Cofactors c_e along the X column are the left kernel of the (m+1) x m
  // matrix with rows u_j^(2^e), e in {0, 2, .., m+1}. Fix c_0 = 1, solve,
  // then rescale by the true cofactor delta(us)^4.
  std::vector<Elem> a(m * m);
  std::vector<Elem> b(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t r = 0; r < m; ++r) a[j * m + r] = pw[j * (top + 1) + r + 2];
    b[j] = pw[j * (top + 1)];
  }
  const Elem det = eliminate(field, a, &b, m);
  if (det == 0) throw Error(Errc::DependentPrefix, "prefix is F_2-dependent");
  std::vector<Elem> coeffs(m + 2, 0);
  coeffs[0] = det;
  for (std::size_t r = 0; r < m; ++r) coeffs[r + 2] = field.mul(b[r], det);
  return coeffs;
}

Elem eval_linearized(const Field& field, std::span<const Elem> coeffs, Elem x) {
  Elem acc = 0;
  for (Elem c : coeffs) {
    if (c != 0) acc ^= field.mul(c, x);
    x = field.sqr(x);
  }
  return acc;
}

BitMatrix linearized_delta1_map(const Field& field, std::span<const Elem> us) {
  const std::vector<Elem> coeffs = delta1_linearized(field, us);
  return matrix_of_linear_map(field.degree(), [&](Elem x) { return eval_linearized(field, coeffs, x); });
}

}  // namespace zerosum

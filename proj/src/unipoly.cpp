#include "zerosum/unipoly.hpp"

#include <algorithm>

#include "zerosum/error.hpp"
#include "zerosum/rng.hpp"

namespace zerosum {

Poly::Poly(const Field& field, std::vector<Elem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (!field_.contains(c)) throw Error(Errc::SpecMismatch, "coefficient outside F_{2^n}");
  trim();
}

Poly Poly::monomial(const Field& field, Elem c, std::size_t d) {
  std::vector<Elem> cs(d + 1, 0);
  cs[d] = c;
  return Poly(field, std::move(cs));
}

void Poly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem Poly::eval(Elem x) const noexcept {
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.mul(acc, x) ^ *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Elem li = field_.inv(lead());
  std::vector<Elem> cs(coeffs_);
  for (Elem& c : cs) c = field_.mul(c, li);
  return Poly(field_, std::move(cs));
}

Poly operator+(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::SpecMismatch, "polynomials over different fields");
  std::vector<Elem> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] ^= a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] ^= b.coeffs_[i];
  return Poly(a.field_, std::move(cs));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::SpecMismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Elem> cs(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] ^= a.field_.mul(a.coeffs_[i], b.coeffs_[j]);
  }
  return Poly(a.field_, std::move(cs));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw Error(Errc::SpecMismatch, "polynomials over different fields");
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> r = a.coeffs();
  const std::vector<Elem>& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Elem> q(r.size() - db, 0);
  const Elem li = f.inv(d.back());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Elem c = f.mul(r[i], li);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] ^= f.mul(c, d[j]);
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

Poly square_mod(const Poly& p, const Poly& m) {
  const Field& f = p.field();
  std::vector<Elem> cs(p.coeffs().empty() ? 0 : 2 * p.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) cs[2 * i] = f.sqr(p.coeffs()[i]);
  return poly_divmod(Poly(f, std::move(cs)), m).second;
}

void split_linear_product(const Poly& r, SplitMix64& rng, std::vector<Elem>& roots) {
  if (r.degree() <= 0) return;
  if (r.degree() == 1) {
    const Poly m = r.monic();
    roots.push_back(m.coeff(0));
    return;
  }
  const Field& f = r.field();
  for (;;) {
    const Elem a = rng.next() & f.mask();
    if (a == 0) continue;
    Poly y = poly_divmod(Poly(f, {0, a}), r).second;
    Poly acc = y;
    for (unsigned i = 1; i < f.degree(); ++i) {
      y = square_mod(y, r);
      acc = acc + y;
    }
    if (acc.is_zero()) continue;
    const Poly d = poly_gcd(r, acc);
    if (d.degree() <= 0 || d.degree() == r.degree()) continue;
    split_linear_product(d, rng, roots);
    split_linear_product(poly_divmod(r, d).first, rng, roots);
    return;
  }
}

}  // namespace

std::vector<Elem> find_roots(const Poly& g, std::uint64_t seed, std::size_t degree_cap) {
  if (g.is_zero()) throw Error(Errc::ZeroPoly, "every element is a root of the zero polynomial");
  if (static_cast<std::size_t>(g.degree()) > degree_cap)
    throw Error(Errc::DegreeCapExceeded, "degree " + std::to_string(g.degree()) + " exceeds cap");
  if (g.degree() == 0) return {};
  const Field& f = g.field();
  const Poly m = g.monic();
  const Poly x(f, {0, 1});
  Poly h = poly_divmod(x, m).second;
  for (unsigned i = 0; i < f.degree(); ++i) h = square_mod(h, m);
  const Poly linear_part = poly_gcd(m, h + x);

  std::vector<Elem> roots;
  SplitMix64 rng(seed);
  split_linear_product(linear_part, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace zerosum

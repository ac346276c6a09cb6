#ifndef ZEROSUM_UNIPOLY_HPP
#define ZEROSUM_UNIPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "zerosum/gf2n.hpp"

namespace zerosum {

/// Univariate polynomial over F_{2^n}; coeffs[i] multiplies W^i, trailing
/// zeros trimmed (the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(const Field& field) : field_(field) {}
  Poly(const Field& field, std::vector<Elem> coeffs);

  static Poly constant(const Field& field, Elem c) { return Poly(field, {c}); }
  /// c * W^d
  static Poly monomial(const Field& field, Elem c, std::size_t d);

  const Field& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  /// Horner evaluation.
  Elem eval(Elem x) const noexcept;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() noexcept;

  Field field_;
  std::vector<Elem> coeffs_;
};

/// a = q * b + r with deg r < deg b. Throws DivisionByZeroPoly, SpecMismatch.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd. Throws BothZero when a = b = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

inline constexpr std::size_t kDefaultRootDegreeCap = 4096;

/// Distinct roots of g in F_{2^n}, sorted by encoding. Isolates the
/// product of linear factors as gcd(g, W^(2^n) + W), then splits it with
/// trace polynomials Tr(a W) for seeded random a. Throws ZeroPoly,
/// DegreeCapExceeded.
std::vector<Elem> find_roots(const Poly& g, std::uint64_t seed = 0,
                             std::size_t degree_cap = kDefaultRootDegreeCap);

}  // namespace zerosum

#endif

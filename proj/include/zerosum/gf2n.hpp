#ifndef ZEROSUM_GF2N_HPP
#define ZEROSUM_GF2N_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace zerosum {

using Word = std::uint64_t;
using Elem = std::uint64_t;  // bit i = coefficient of X^i in the polynomial basis
using Wide = unsigned __int128;

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 64;

/// Model of F_{2^n}: modulus = X^n + tail, tail holds the lower coefficients.
struct FieldSpec {
  unsigned n = 0;
  Word tail = 0;

  Wide modulus() const noexcept { return (Wide{1} << n) | tail; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Carry-less 64x64 -> 128 bit product (PCLMULQDQ when the CPU has it).
Wide clmul(Word a, Word b) noexcept;

class Field {
 public:
  /// Throws DegreeOutOfRange for n outside [2, 64], SpecMismatch when the
  /// modulus lacks its constant term. Irreducibility is not re-checked here.
  explicit Field(const FieldSpec& spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned degree() const noexcept { return spec_.n; }
  Elem mask() const noexcept { return mask_; }
  bool contains(Elem a) const noexcept { return (a & ~mask_) == 0; }

  Elem add(Elem a, Elem b) const noexcept { return a ^ b; }
  Elem mul(Elem a, Elem b) const noexcept { return reduce(clmul(a, b)); }
  Elem sqr(Elem a) const noexcept { return reduce(clmul(a, a)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse, with inv(0) = 0.
  Elem inv(Elem a) const noexcept;
  /// a^(2^j); j is taken modulo n.
  Elem frob(Elem a, std::uint64_t j) const noexcept;
  /// Absolute trace Tr(a) = a + a^2 + ... + a^(2^(n-1)), an element of {0, 1}.
  Elem trace(Elem a) const noexcept;

  Elem reduce(Wide p) const noexcept {
    for (Word hi; (hi = static_cast<Word>(p >> spec_.n)) != 0;)
      p = (p & mask_) ^ clmul(hi, spec_.tail);
    return static_cast<Elem>(p);
  }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.spec_ == b.spec_; }

 private:
  FieldSpec spec_;
  Elem mask_;
};

/// Rabin's test over F_2: X^(2^n) = X mod f and gcd(X^(2^(n/p)) - X, f) = 1.
bool is_irreducible(const FieldSpec& spec);

/// Lexicographically smallest irreducible of degree n (smallest integer encoding).
FieldSpec find_irreducible(unsigned n);

/// Field over find_irreducible(n).
Field standard_field(unsigned n);

/// Value type tying an element to its field; mixing fields throws SpecMismatch.
class FieldElement {
 public:
  FieldElement(const Field& field, Elem bits);

  const Field& field() const noexcept { return field_; }
  Elem bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }

 private:
  Field field_;
  Elem bits_;
};

FieldElement inverse(const FieldElement& a);
FieldElement frobenius(const FieldElement& a, std::uint64_t j);

/// Lowercase hex, no leading zeros ("0" for zero).
std::string to_hex(Wide v);
std::optional<Wide> parse_hex(std::string_view s);
std::string modulus_hex(const FieldSpec& spec);

}  // namespace zerosum

#endif

#include "zerosum/gf2n.hpp"

#include <immintrin.h>

#include <array>
#include <bit>

#include "zerosum/error.hpp"

namespace zerosum {

namespace {

Wide clmul_portable(Word a, Word b) noexcept {
  std::array<Wide, 16> table{};
  for (unsigned i = 1; i < 16; ++i)
    table[i] = (i & 1 ? Wide{a} : 0) ^ (table[i >> 1] << 1);
  Wide r = 0;
  for (int shift = 60; shift >= 0; shift -= 4)
    r = (r << 4) ^ table[(b >> shift) & 0xf];
  return r;
}

__attribute__((target("pclmul,sse4.1"))) Wide clmul_hw(Word a, Word b) noexcept {
  const __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                         _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
  const auto lo = static_cast<Word>(_mm_cvtsi128_si64(p));
  const auto hi = static_cast<Word>(_mm_extract_epi64(p, 1));
  return (Wide{hi} << 64) | lo;
}

const bool kHaveClmul = __builtin_cpu_supports("pclmul");

unsigned wide_degree(Wide v) noexcept {
  const auto hi = static_cast<Word>(v >> 64);
  if (hi != 0) return 127u - static_cast<unsigned>(std::countl_zero(hi));
  return 63u - static_cast<unsigned>(std::countl_zero(static_cast<Word>(v)));
}

// Polynomials over F_2 of degree <= 64, held in 128 bits.
Wide poly_mod(Wide a, Wide m) {
  const unsigned dm = wide_degree(m);
  while (a != 0 && wide_degree(a) >= dm) a ^= m << (wide_degree(a) - dm);
  return a;
}

Wide poly_gcd(Wide a, Wide b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

Wide clmul(Word a, Word b) noexcept { return kHaveClmul ? clmul_hw(a, b) : clmul_portable(a, b); }

Field::Field(const FieldSpec& spec) : spec_(spec) {
  if (spec.n < kMinDegree || spec.n > kMaxDegree)
    throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(spec.n) + " outside [2, 64]");
  if ((spec.tail & 1) == 0) throw Error(Errc::SpecMismatch, "modulus has no constant term");
  mask_ = spec.n == 64 ? ~Elem{0} : (Elem{1} << spec.n) - 1;
  if ((spec.tail & ~mask_) != 0) throw Error(Errc::SpecMismatch, "modulus tail exceeds degree");
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = sqr(a);
    e >>= 1;
  }
  return r;
}

Elem Field::inv(Elem a) const noexcept {
  // a^(2^n - 2) = prod_{i=1}^{n-1} a^(2^i)
  Elem r = 1;
  Elem t = a;
  for (unsigned i = 1; i < spec_.n; ++i) {
    t = sqr(t);
    r = mul(r, t);
  }
  return r;
}

Elem Field::frob(Elem a, std::uint64_t j) const noexcept {
  for (j %= spec_.n; j != 0; --j) a = sqr(a);
  return a;
}

Elem Field::trace(Elem a) const noexcept {
  Elem t = a;
  Elem acc = a;
  for (unsigned i = 1; i < spec_.n; ++i) {
    t = sqr(t);
    acc ^= t;
  }
  return acc;
}

bool is_irreducible(const FieldSpec& spec) {
  if (spec.n < kMinDegree || spec.n > kMaxDegree || (spec.tail & 1) == 0) return false;
  const Field ring(spec);  // arithmetic modulo spec.modulus(), a field only if irreducible
  const unsigned n = spec.n;
  const Elem x = 2;

  auto x_pow_2_pow = [&](unsigned d) {
    Elem t = x;
    for (unsigned i = 0; i < d; ++i) t = ring.sqr(t);
    return t;
  };
  if (x_pow_2_pow(n) != x) return false;
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (unsigned q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
    if (!prime) continue;
    const Wide h = Wide{x_pow_2_pow(n / p) ^ x};
    const Wide g = poly_gcd(spec.modulus(), h);
    if (g != 1) return false;
  }
  return true;
}

FieldSpec find_irreducible(unsigned n) {
  if (n < kMinDegree || n > kMaxDegree)
    throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(n) + " outside [2, 64]");
  const Word limit = n == 64 ? ~Word{0} : (Word{1} << n) - 1;
  for (Word tail = 1;; tail += 2) {
    FieldSpec spec{n, tail};
    if (is_irreducible(spec)) return spec;
    if (tail >= limit - 1) break;
  }
  throw Error(Errc::DegreeOutOfRange, "no irreducible found");  // unreachable for n >= 2
}

Field standard_field(unsigned n) { return Field(find_irreducible(n)); }

FieldElement::FieldElement(const Field& field, Elem bits) : field_(field), bits_(bits) {
  if (!field.contains(bits)) throw Error(Errc::SpecMismatch, "element has bits beyond degree");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::SpecMismatch, "add across fields");
  return FieldElement(a.field_, a.bits_ ^ b.bits_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::SpecMismatch, "mul across fields");
  return FieldElement(a.field_, a.field_.mul(a.bits_, b.bits_));
}

FieldElement inverse(const FieldElement& a) { return FieldElement(a.field(), a.field().inv(a.bits())); }

FieldElement frobenius(const FieldElement& a, std::uint64_t j) {
  return FieldElement(a.field(), a.field().frob(a.bits(), j));
}

std::string to_hex(Wide v) {
  if (v == 0) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  while (v != 0) {
    out.push_back(kDigits[static_cast<unsigned>(v & 0xf)]);
    v >>= 4;
  }
  return {out.rbegin(), out.rend()};
}

std::optional<Wide> parse_hex(std::string_view s) {
  if (s.empty() || s.size() > 32) return std::nullopt;
  if (s.size() > 1 && s.front() == '0') return std::nullopt;  // canonical form only
  Wide v = 0;
  for (char c : s) {
    unsigned d;
    if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
    else return std::nullopt;
    v = (v << 4) | d;
  }
  return v;
}

std::string modulus_hex(const FieldSpec& spec) { return to_hex(spec.modulus()); }

}  // namespace zerosum

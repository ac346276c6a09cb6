#include "doctest.h"
#include "oracles.hpp"
#include "zerosum/error.hpp"
#include "zerosum/gf2n.hpp"
#include "zerosum/moore.hpp"
#include "zerosum/rng.hpp"
#include "zerosum/subfield.hpp"

using namespace zerosum;

TEST_CASE("smallest irreducible moduli") {
  CHECK(find_irreducible(2).modulus() == 0b111);
  CHECK(find_irreducible(4).modulus() == 0b10011);
  CHECK(find_irreducible(5).modulus() == 0b100101);
  CHECK(find_irreducible(8).modulus() == 0x11b);
}

TEST_CASE("find_irreducible agrees with a trial-division scan") {
  for (unsigned n = 2; n <= 16; ++n) {
    std::uint64_t want = 0;
    for (std::uint64_t p = (1ull << n) | 1; p >> (n + 1) == 0; p += 2)
      if (oracle::irreducible_trial(p)) {
        want = p;
        break;
      }
    CAPTURE(n);
    CHECK(static_cast<std::uint64_t>(find_irreducible(n).modulus()) == want);
  }
}

TEST_CASE("irreducibility test matches trial division on all degree 9 polynomials") {
  for (std::uint64_t p = (1ull << 9) | 1; p >> 10 == 0; p += 2) {
    FieldSpec s{9, p & 0x1ff};
    CHECK(is_irreducible(s) == oracle::irreducible_trial(p));
  }
}

TEST_CASE("large degrees produce moduli that pass the irreducibility test") {
  for (unsigned n : {31u, 49u, 63u, 64u}) {
    const FieldSpec s = find_irreducible(n);
    CHECK(s.n == n);
    CHECK((s.tail & 1) == 1);
    CHECK(is_irreducible(s));
    CHECK(find_irreducible(n) == s);
  }
}

TEST_CASE("degree range") {
  CHECK_THROWS_AS(find_irreducible(1), Error);
  CHECK_THROWS_AS(find_irreducible(65), Error);
  try {
    find_irreducible(0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeOutOfRange);
  }
}

TEST_CASE("F16 arithmetic by hand") {
  const Field f = standard_field(4);
  CHECK(f.add(0x3, 0x5) == 0x6);
  CHECK(f.mul(0x2, 0x9) == 0x1);
  CHECK(f.inv(0x2) == 0x9);
  CHECK(f.inv(0) == 0);
  CHECK(f.inv(1) == 1);
  CHECK(f.frob(0x2, 1) == 0x4);
  for (Elem a = 0; a < 16; ++a) {
    CHECK(f.add(a, a) == 0);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.mul(a, 0) == 0);
    CHECK(f.frob(a, 0) == a);
    CHECK(f.frob(a, 4) == a);
  }
}

TEST_CASE("multiplication matches the bit-serial oracle") {
  for (unsigned n : {2u, 3u, 7u, 8u, 13u, 32u, 49u, 63u, 64u}) {
    const Field f = standard_field(n);
    SplitMix64 rng(n);
    for (int i = 0; i < 300; ++i) {
      const Elem a = rng.next() & f.mask();
      const Elem b = rng.next() & f.mask();
      CAPTURE(n);
      CHECK(f.mul(a, b) == oracle::mul(a, b, n, f.spec().tail));
      CHECK(f.sqr(a) == oracle::mul(a, a, n, f.spec().tail));
    }
  }
}

TEST_CASE("inverse matches exhaustive search for small fields") {
  for (unsigned n = 2; n <= 8; ++n) {
    const Field f = standard_field(n);
    for (Elem a = 0; a >> n == 0; ++a) CHECK(f.inv(a) == oracle::inv_search(a, n, f.spec().tail));
  }
}

TEST_CASE("field axioms on random elements") {
  for (unsigned n : {5u, 16u, 49u, 64u}) {
    const Field f = standard_field(n);
    SplitMix64 rng(100 + n);
    for (int i = 0; i < 200; ++i) {
      const Elem a = rng.next() & f.mask();
      const Elem b = rng.next() & f.mask();
      const Elem c = rng.next() & f.mask();
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.inv(f.inv(a)) == a);
      CHECK(f.frob(a ^ b, 1) == (f.frob(a, 1) ^ f.frob(b, 1)));
      CHECK(f.frob(a, 1) == f.mul(a, a));
      CHECK(f.frob(a, n) == a);
      CHECK(f.frob(f.frob(a, 3), 5) == f.frob(a, 8));
      CHECK(f.pow(a, 5) == f.mul(f.mul(f.mul(a, a), f.mul(a, a)), a));
      CHECK(f.trace(a) <= 1);
    }
  }
}

TEST_CASE("FieldElement value type") {
  const Field f16 = standard_field(4);
  const Field f32 = standard_field(5);
  const FieldElement a(f16, 0x2);
  const FieldElement b(f16, 0x9);
  CHECK((a * b).bits() == 1);
  CHECK((a + a).is_zero());
  CHECK(inverse(a) == b);
  CHECK(frobenius(a, 1).bits() == 0x4);
  CHECK_THROWS_AS(a + FieldElement(f32, 1), Error);
  CHECK_THROWS_AS(a * FieldElement(f32, 1), Error);
  CHECK_THROWS_AS(FieldElement(f16, 0x10), Error);
}

TEST_CASE("subfields as subspaces") {
  const Field f16 = standard_field(4);
  CHECK(subfield_subspace(f16, 1).basis == std::vector<Elem>{1});
  CHECK(subfield_subspace(f16, 2).basis == std::vector<Elem>{0x1, 0x6});
  CHECK(subfield_subspace(f16, 4).dim() == 4);
  CHECK_THROWS_AS(subfield_subspace(f16, 3), Error);

  for (unsigned n : {6u, 8u, 12u, 49u}) {
    const Field f = standard_field(n);
    for (unsigned l = 1; l <= n; ++l) {
      if (n % l) continue;
      const Subspace s = subfield_subspace(f, l);
      CHECK(s.dim() == l);
      for (Elem a : s.basis)
        for (Elem b : s.basis) CHECK(s.contains(f.mul(a, b)));
      if (l >= 2 && l <= 20) CHECK(direct_inverse_sum(f, s) == 0);
    }
  }
}

TEST_CASE("hex encoding") {
  CHECK(to_hex(0) == "0");
  CHECK(to_hex(0x11b) == "11b");
  CHECK(modulus_hex(find_irreducible(4)) == "13");
  CHECK(parse_hex("11b") == Wide{0x11b});
  CHECK(parse_hex("0") == Wide{0});
  CHECK_FALSE(parse_hex("011b").has_value());
  CHECK_FALSE(parse_hex("11B").has_value());
  CHECK_FALSE(parse_hex("").has_value());
  CHECK_FALSE(parse_hex("0x1").has_value());
  const Wide big = (Wide{1} << 64) | 0x1b;
  CHECK(parse_hex(to_hex(big)) == big);
}

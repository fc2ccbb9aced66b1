// Copyright 2026 The primq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "primq/bitpoly.hpp"
#include "primq/errors.hpp"
#include "primq/rng.hpp"

using primq::BitPoly;

TEST_SUITE("bitpoly") {

TEST_CASE("hex round trip") {
  CHECK(BitPoly::from_hex("0x3B").to_hex() == "0x3b");
  CHECK(BitPoly::from_hex("3b") == BitPoly(0x3b));
  CHECK(BitPoly::from_hex("0x0").is_zero());
  CHECK(BitPoly().to_hex() == "0x0");
  CHECK(BitPoly(1).to_hex() == "0x1");
  CHECK(BitPoly::from_hex("0x3B").to_string() == "x^5 + x^4 + x^3 + x + 1");
  const std::string wide = "0x1000000000000000000000000000000c5";
  CHECK(BitPoly::from_hex(wide).to_hex() == "0x1000000000000000000000000000000c5");
  CHECK(BitPoly::from_hex(wide).degree() == 128);
  CHECK_THROWS_AS(BitPoly::from_hex("0xZZ"), primq::InvalidInput);
  CHECK_THROWS_AS(BitPoly::from_hex(""), primq::InvalidInput);
}

TEST_CASE("degree, coefficients and weight") {
  BitPoly p;
  CHECK(p.degree() == BitPoly::kZeroDegree);
  p.set_coeff(70, true);
  p.set_coeff(0, true);
  CHECK(p.degree() == 70);
  CHECK(p.weight() == 2);
  CHECK(p.coeff(70));
  CHECK_FALSE(p.coeff(69));
  p.set_coeff(70, false);
  CHECK(p == BitPoly(1));
  CHECK(BitPoly::monomial(64).degree() == 64);
  CHECK_THROWS_AS(BitPoly::monomial(64).to_u64(), primq::UnsupportedSize);
}

TEST_CASE("carry-less product against shift-and-xor") {
  primq::CounterRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() >> 32, b = rng() >> 32;
    std::uint64_t expect = 0;
    for (int k = 0; k < 32; ++k)
      if (b >> k & 1) expect ^= a << k;
    CHECK((BitPoly(a) * BitPoly(b)).to_u64() == expect);
  }
  const auto [lo, hi] = primq::clmul64(~0ull, ~0ull);
  // (x^64 - 1)^2 / (x - 1)^2 pattern: alternating bits.
  CHECK(lo == 0x5555555555555555ull);
  CHECK(hi == 0x5555555555555555ull);
}

TEST_CASE("division identity on multiword operands") {
  primq::CounterRng rng(12);
  for (int i = 0; i < 300; ++i) {
    BitPoly a(rng()), b(rng() >> (rng() % 60));
    a = a * BitPoly(rng()) + BitPoly(rng());
    if (b.is_zero()) b = BitPoly(3);
    const auto [q, r] = BitPoly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(a % b == r);
    CHECK(a / b == q);
  }
  CHECK_THROWS_AS(BitPoly::divmod(BitPoly(5), BitPoly()), primq::DomainError);
}

TEST_CASE("gcd recovers a common factor") {
  const BitPoly f(0x13), g(0x19), h(0x7);
  CHECK(BitPoly::gcd(f * h, g * h) == h);
  CHECK(BitPoly::gcd(f, g) == BitPoly(1));
  CHECK(BitPoly::gcd(BitPoly(), g) == g);
}

TEST_CASE("modular products and powers against the oracle") {
  const std::uint64_t m = 0x11b;
  for (std::uint64_t a = 0; a < 256; a += 7)
    for (std::uint64_t b = 0; b < 256; b += 5)
      CHECK(BitPoly::mulmod(BitPoly(a), BitPoly(b), BitPoly(m)).to_u64() == oracle::gf2_mulmod(a, b, m));
  std::uint64_t acc = 1;
  for (unsigned e = 0; e < 60; ++e) {
    CHECK(BitPoly::powmod(BitPoly(0x3), e, BitPoly(m)).to_u64() == acc);
    acc = oracle::gf2_mulmod(acc, 0x3, m);
  }
  // x^(2^100) mod x^7 + x + 1 equals x^(2^(100 mod 7)) since the field has 2^7 elements.
  const BitPoly m7(0x83);
  CHECK(BitPoly::powmod(BitPoly(2), primq::BigUint(1) << 100, m7) == BitPoly::powmod(BitPoly(2), 4, m7));
}

}  // TEST_SUITE

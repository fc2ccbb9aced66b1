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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primq/bigint.hpp"

namespace primq {

/// Polynomial over GF(2), coefficients packed little-endian into 64-bit words
/// (bit i is the coefficient of x^i). The hex encoding reads the same way:
/// x^5+x^4+x^3+x+1 <-> 0x3B.
class BitPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  BitPoly() = default;
  explicit BitPoly(std::uint64_t bits);

  static BitPoly monomial(std::size_t k);
  /// Accepts an optional 0x prefix; throws InvalidInput on anything else.
  static BitPoly from_hex(std::string_view text);

  std::string to_hex() const;
  std::string to_string() const;  // "x^4 + x + 1"

  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);
  /// Number of nonzero coefficients.
  std::size_t weight() const;
  /// Throws UnsupportedSize when degree >= 64.
  std::uint64_t to_u64() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  BitPoly& operator+=(const BitPoly& rhs);
  friend BitPoly operator+(BitPoly lhs, const BitPoly& rhs) { return lhs += rhs; }
  friend BitPoly operator-(BitPoly lhs, const BitPoly& rhs) { return lhs += rhs; }
  friend BitPoly operator*(const BitPoly& lhs, const BitPoly& rhs);
  friend BitPoly operator%(const BitPoly& lhs, const BitPoly& rhs);
  friend BitPoly operator/(const BitPoly& lhs, const BitPoly& rhs);
  BitPoly operator<<(std::size_t shift) const;

  friend bool operator==(const BitPoly&, const BitPoly&) = default;

  /// Quotient and remainder; throws DomainError on division by zero.
  static std::pair<BitPoly, BitPoly> divmod(const BitPoly& a, const BitPoly& b);
  static BitPoly gcd(BitPoly a, BitPoly b);
  static BitPoly mulmod(const BitPoly& a, const BitPoly& b, const BitPoly& m);
  static BitPoly powmod(const BitPoly& a, const BigUint& e, const BitPoly& m);

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const BitPoly& p);

/// 64x64 -> 128 bit carry-less product, returned as (low, high).
std::pair<std::uint64_t, std::uint64_t> clmul64(std::uint64_t a, std::uint64_t b);

}  // namespace primq

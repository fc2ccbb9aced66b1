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

#include "primq/bitpoly.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "primq/errors.hpp"

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#endif

namespace primq {

std::uint64_t to_u64(const BigUint& v) {
  if (!fits_u64(v)) throw UnsupportedSize("integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::pair<std::uint64_t, std::uint64_t> clmul64(std::uint64_t a, std::uint64_t b) {
#if defined(__PCLMUL__)
  const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
  const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
  const __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
  return {static_cast<std::uint64_t>(_mm_cvtsi128_si64(r)),
          static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)))};
#else
  std::uint64_t lo = 0, hi = 0;
  while (b) {
    const int i = std::countr_zero(b);
    lo ^= a << i;
    if (i) hi ^= a >> (64 - i);
    b &= b - 1;
  }
  return {lo, hi};
#endif
}

BitPoly::BitPoly(std::uint64_t bits) {
  if (bits) words_.push_back(bits);
}

BitPoly BitPoly::monomial(std::size_t k) {
  BitPoly p;
  p.set_coeff(k, true);
  return p;
}

BitPoly BitPoly::from_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty()) throw InvalidInput("empty hex polynomial");
  BitPoly p;
  std::size_t bit = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, bit += 4) {
    const char c = *it;
    unsigned v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw InvalidInput("invalid hex digit '" + std::string(1, c) + "' in polynomial");
    for (unsigned j = 0; j < 4; ++j)
      if (v >> j & 1) p.set_coeff(bit + j, true);
  }
  return p;
}

std::string BitPoly::to_hex() const {
  if (is_zero()) return "0x0";
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  const int d = degree();
  for (int nib = d / 4; nib >= 0; --nib) {
    unsigned v = 0;
    for (unsigned j = 0; j < 4; ++j) v |= unsigned(coeff(4 * nib + j)) << j;
    out.push_back(digits[v]);
  }
  return "0x" + out;
}

std::string BitPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) os << "1";
    else if (i == 1) os << "x";
    else os << "x^" << i;
  }
  return os.str();
}

int BitPoly::degree() const {
  if (words_.empty()) return kZeroDegree;
  return static_cast<int>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
}

bool BitPoly::coeff(std::size_t i) const {
  const std::size_t w = i / 64;
  return w < words_.size() && (words_[w] >> (i % 64) & 1);
}

void BitPoly::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
  trim();
}

std::size_t BitPoly::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::uint64_t BitPoly::to_u64() const {
  if (words_.size() > 1) throw UnsupportedSize("polynomial degree exceeds 63");
  return words_.empty() ? 0 : words_[0];
}

void BitPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BitPoly& BitPoly::operator+=(const BitPoly& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

BitPoly operator*(const BitPoly& lhs, const BitPoly& rhs) {
  BitPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.words_.assign(lhs.words_.size() + rhs.words_.size(), 0);
  for (std::size_t i = 0; i < lhs.words_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.words_.size(); ++j) {
      const auto [lo, hi] = clmul64(lhs.words_[i], rhs.words_[j]);
      out.words_[i + j] ^= lo;
      out.words_[i + j + 1] ^= hi;
    }
  }
  out.trim();
  return out;
}

BitPoly BitPoly::operator<<(std::size_t shift) const {
  if (is_zero()) return {};
  BitPoly out;
  const std::size_t ws = shift / 64, bs = shift % 64;
  out.words_.assign(words_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + ws] ^= words_[i] << bs;
    if (bs) out.words_[i + ws + 1] ^= words_[i] >> (64 - bs);
  }
  out.trim();
  return out;
}

std::pair<BitPoly, BitPoly> BitPoly::divmod(const BitPoly& a, const BitPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  BitPoly q, r = a;
  const int db = b.degree();
  while (r.degree() >= db) {
    const int shift = r.degree() - db;
    q.set_coeff(shift, true);
    r += b << shift;
  }
  return {q, r};
}

BitPoly operator%(const BitPoly& lhs, const BitPoly& rhs) { return BitPoly::divmod(lhs, rhs).second; }

BitPoly operator/(const BitPoly& lhs, const BitPoly& rhs) { return BitPoly::divmod(lhs, rhs).first; }

BitPoly BitPoly::gcd(BitPoly a, BitPoly b) {
  while (!b.is_zero()) {
    BitPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BitPoly BitPoly::mulmod(const BitPoly& a, const BitPoly& b, const BitPoly& m) { return (a * b) % m; }

BitPoly BitPoly::powmod(const BitPoly& a, const BigUint& e, const BitPoly& m) {
  if (e < 0) throw InvalidInput("negative exponent");
  BitPoly result = BitPoly(1) % m;
  BitPoly base = a % m;
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (boost::multiprecision::bit_test(e, i)) result = mulmod(result, base, m);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const BitPoly& p) { return os << p.to_hex(); }

}  // namespace primq

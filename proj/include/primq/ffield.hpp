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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "primq/bigint.hpp"
#include "primq/bitpoly.hpp"
#include "primq/numstats.hpp"

namespace primq {

/// Dense polynomial whose coefficients are base-field element codes,
/// little-endian, without trailing zeros.
struct BasePoly {
  std::vector<std::uint64_t> coeffs;

  BasePoly() = default;
  explicit BasePoly(std::vector<std::uint64_t> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  std::uint64_t operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  std::uint64_t lead() const { return coeffs.back(); }

  static BasePoly from_bitpoly(const BitPoly& p);
  /// Requires every coefficient to be 0 or 1.
  BitPoly to_bitpoly() const;

  friend bool operator==(const BasePoly&, const BasePoly&) = default;
};

/// Packs coefficient k into bits [k*bits_per_coeff, (k+1)*bits_per_coeff) and
/// prints the result in hex; with one bit per coefficient this is the
/// BitPoly encoding.
std::string to_hex(const BasePoly& p, unsigned bits_per_coeff);

/// GF(q) with q = p^m. An element is encoded by the integer whose base-p
/// digits are its coefficients over GF(p) modulo the degree-m base modulus.
class BaseField {
 public:
  /// Throws InvalidInput when p is not a prime below 2^16 or the supplied
  /// modulus is not a monic irreducible of degree m. Without a modulus the
  /// lexicographically least monic irreducible is used.
  explicit BaseField(std::uint32_t p, unsigned m = 1, std::optional<BasePoly> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  /// Degree-m modulus over GF(p); X for a prime field.
  const BasePoly& modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const { return sub(0, a); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  BasePoly poly_add(const BasePoly& a, const BasePoly& b) const;
  BasePoly poly_sub(const BasePoly& a, const BasePoly& b) const;
  BasePoly poly_scale(std::uint64_t c, const BasePoly& a) const;
  BasePoly poly_mul(const BasePoly& a, const BasePoly& b) const;
  std::pair<BasePoly, BasePoly> poly_divmod(const BasePoly& a, const BasePoly& b) const;
  BasePoly poly_mod(const BasePoly& a, const BasePoly& b) const { return poly_divmod(a, b).second; }
  BasePoly poly_monic(const BasePoly& a) const;
  /// Monic gcd (zero when both inputs are zero).
  BasePoly poly_gcd(BasePoly a, BasePoly b) const;
  BasePoly poly_powmod(const BasePoly& a, const BigUint& e, const BasePoly& m) const;

  /// Rabin's test: X^{q^n} = X mod f and gcd(X^{q^{n/t}} - X, f) = 1 for
  /// every prime t | n. Throws InvalidInput for degree < 1.
  bool is_irreducible(const BasePoly& f) const;
  /// Monic irreducible of the given degree with the smallest code sum c_i q^i.
  BasePoly least_irreducible(unsigned degree) const;

  bool same_field(const BaseField& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  std::uint64_t mul_digits(std::uint64_t a, std::uint64_t b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  BasePoly modulus_;
  std::vector<std::uint8_t> mul_table_;  // q <= 256 and m > 1 only
};

struct FieldSpec {
  std::uint32_t p = 2;
  unsigned m = 1;
  unsigned n = 1;
  std::optional<BasePoly> base_modulus;  // over GF(p), degree m
  std::optional<BasePoly> modulus;       // over GF(q), degree n
  bool factorize = true;                 // precompute the factorization of q^n - 1
};

/// The extension GF(q^n) = GF(q)[x]/(f). Elements are encoded as the integer
/// sum c_k q^k of their coefficient codes; in characteristic two this is the
/// plain bit packing that also labels qubit basis states. Immutable.
class FieldCtx {
 public:
  explicit FieldCtx(const FieldSpec& spec);

  static std::shared_ptr<const FieldCtx> make(const FieldSpec& spec);
  /// GF(2)[x]/(modulus); the modulus must be irreducible.
  static std::shared_ptr<const FieldCtx> binary(const BitPoly& modulus, bool factorize = true);

  const BaseField& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  unsigned m() const { return base_.m(); }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return base_.q(); }
  /// q^n.
  const BigUint& size() const { return size_; }
  /// q^n - 1, the order of the multiplicative group.
  const BigUint& N() const { return group_order_; }
  /// Bits needed to hold any element code.
  unsigned code_bits() const { return code_bits_; }
  bool is_binary() const { return p() == 2 && m() == 1; }
  bool characteristic_two() const { return p() == 2; }

  const BasePoly& modulus() const { return modulus_; }
  /// Binary contexts only.
  BitPoly modulus_bits() const { return modulus_.to_bitpoly(); }
  /// x^{q^k} mod f for k = 0..n-1.
  const std::vector<std::uint64_t>& frobenius_powers() const { return frobenius_powers_; }
  /// x^{qk} mod f for k = 0..n-1: the images of the monomial basis under a -> a^q.
  const std::vector<std::uint64_t>& frobenius_basis() const { return frobenius_basis_; }
  const std::optional<Factorization>& factorization_of_N() const { return factorization_; }

  bool same_field(const FieldCtx& other) const;
  bool valid_code(std::uint64_t c) const { return BigUint(c) < size_; }

  std::vector<std::uint64_t> decode(std::uint64_t code) const;
  std::uint64_t encode(const std::vector<std::uint64_t>& coeffs) const;

  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }
  /// Code of the class of x.
  std::uint64_t x() const { return x_code_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const { return sub(0, a); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  /// Multiplication by a base-field scalar.
  std::uint64_t scale(std::uint64_t c, std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, const BigUint& e) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// a -> a^q as the linear map sum_k s_k x^{qk}.
  std::uint64_t frobenius(std::uint64_t a) const;

 private:
  std::uint64_t mul_binary(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const;

  BaseField base_;
  unsigned n_;
  BasePoly modulus_;
  BigUint size_;
  BigUint group_order_;
  unsigned code_bits_;
  std::uint64_t x_code_;
  std::vector<std::uint64_t> frobenius_powers_;
  std::vector<std::uint64_t> frobenius_basis_;
  std::optional<Factorization> factorization_;
  u128 binary_modulus_ = 0;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Element of a FieldCtx. Cheap to copy; shares the context.
class FFElem {
 public:
  /// Throws InvalidInput when code is not below q^n.
  FFElem(FieldPtr ctx, std::uint64_t code);

  static FFElem zero(FieldPtr ctx) { return {std::move(ctx), 0}; }
  static FFElem one(FieldPtr ctx) { return {std::move(ctx), 1}; }
  static FFElem x(FieldPtr ctx);
  static FFElem from_bitpoly(FieldPtr ctx, const BitPoly& p);

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldPtr& ctx_ptr() const { return ctx_; }
  std::uint64_t code() const { return code_; }
  std::vector<std::uint64_t> coefficients() const { return ctx_->decode(code_); }
  /// Binary contexts: the reduced polynomial of degree < n.
  BitPoly as_bitpoly() const { return BitPoly(code_); }
  std::string to_hex() const;

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend bool operator==(const FFElem& a, const FFElem& b);

 private:
  FieldPtr ctx_;
  std::uint64_t code_;
};

/// Throws ContextError when a and b live in different fields.
FFElem elem_mul(const FFElem& a, const FFElem& b);
FFElem elem_pow(const FFElem& a, const BigUint& e);

/// Exact multiplicative order. Throws DomainError for zero and
/// DependencyError when the context carries no factorization of q^n - 1.
BigUint element_order(const FFElem& a);

/// a^q.
FFElem frobenius(const FFElem& a);
/// a, a^q, ..., a^{q^{k-1}} up to the first repetition.
std::vector<FFElem> frobenius_orbit(const FFElem& a);
/// True iff the n conjugates a^{q^k} are pairwise distinct.
bool conjugates_distinct(const FFElem& a);
/// a != 0 and a^{N/d} != 1 for every prime d | N.
bool classical_primitive_elem_test(const FFElem& a);

/// Monic minimal polynomial over GF(q): the product of (X - c) over the
/// Frobenius orbit. minimal_polynomial(0) is X by convention.
BasePoly minimal_polynomial(const FFElem& a);

/// Irreducibility over GF(2); throws InvalidInput for degree < 1.
bool irreducible_test(const BitPoly& poly);
bool irreducible_test(const BaseField& base, const BasePoly& poly);

/// Irreducible and x has order q^n - 1.
bool classical_primitive_poly_test(const BitPoly& poly);
bool classical_primitive_poly_test(const BitPoly& poly, const Factorization& two_n_minus_1);
bool classical_primitive_poly_test(const BaseField& base, const BasePoly& poly);

/// phi(q^n - 1) / n.
BigUint count_primitive_polys(unsigned n, std::uint64_t q = 2);
/// Every degree-n irreducible over GF(2), increasing by encoding (n <= 24).
std::vector<BitPoly> irreducible_polys(unsigned n);
/// Every degree-n primitive polynomial over GF(2), by exhaustive test (n <= 16).
std::vector<BitPoly> primitive_polys_exhaustive(unsigned n);

}  // namespace primq

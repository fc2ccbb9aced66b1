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

#include "primq/ffield.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "primq/errors.hpp"

namespace primq {

namespace {

u128 reduce_binary(std::uint64_t lo, std::uint64_t hi, u128 modulus, unsigned n) {
  u128 prod = (static_cast<u128>(hi) << 64) | lo;
  for (int i = 2 * static_cast<int>(n) - 2; i >= static_cast<int>(n); --i)
    if ((prod >> i) & 1) prod ^= modulus << (i - static_cast<int>(n));
  return prod;
}

// Arithmetic modulo a GF(2) polynomial of degree 1..64 held in a u128.
struct Gf2Mod {
  u128 modulus;
  unsigned n;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const auto [lo, hi] = clmul64(a, b);
    return static_cast<std::uint64_t>(reduce_binary(lo, hi, modulus, n));
  }
  std::uint64_t x() const { return n == 1 ? static_cast<std::uint64_t>(modulus & 1) : 2; }
};

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned t = 2; t * t <= n; ++t) {
    if (n % t) continue;
    out.push_back(t);
    while (n % t == 0) n /= t;
  }
  if (n > 1) out.push_back(n);
  return out;
}

BigUint big_pow(std::uint64_t base, unsigned e) {
  BigUint r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

void require_same(const FFElem& a, const FFElem& b) {
  if (&a.ctx() != &b.ctx() && !a.ctx().same_field(b.ctx()))
    throw ContextError("field elements belong to different contexts");
}

}  // namespace

// ---------------------------------------------------------------------------
// BasePoly

BasePoly::BasePoly(std::vector<std::uint64_t> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BasePoly BasePoly::from_bitpoly(const BitPoly& p) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(p.degree() + 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i);
  return BasePoly(std::move(c));
}

BitPoly BasePoly::to_bitpoly() const {
  BitPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] > 1) throw InvalidInput("polynomial has coefficients outside GF(2)");
    p.set_coeff(i, coeffs[i] == 1);
  }
  return p;
}

std::string to_hex(const BasePoly& p, unsigned bits_per_coeff) {
  BitPoly packed;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k)
    for (unsigned b = 0; b < bits_per_coeff; ++b)
      if (p.coeffs[k] >> b & 1) packed.set_coeff(k * bits_per_coeff + b, true);
  return packed.to_hex();
}

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(std::uint32_t p, unsigned m, std::optional<BasePoly> modulus) : p_(p), m_(m) {
  if (p >= (1u << 16) || !is_prime(p)) throw InvalidInput("base characteristic must be a prime below 2^16");
  if (m < 1) throw InvalidInput("base extension degree must be >= 1");
  const BigUint q = big_pow(p, m);
  if (q > BigUint(UINT32_MAX)) throw UnsupportedSize("base field GF(p^m) must have fewer than 2^32 elements");
  q_ = static_cast<std::uint64_t>(q);
  if (m == 1) {
    if (modulus && !(modulus->degree() == 1 && modulus->lead() == 1))
      throw InvalidInput("prime field modulus must be monic of degree 1");
    modulus_ = BasePoly({0, 1});
    return;
  }
  const BaseField prime(p);
  if (modulus) {
    if (modulus->degree() != static_cast<int>(m) || modulus->lead() != 1)
      throw InvalidInput("base modulus must be monic of degree m");
    for (auto c : modulus->coeffs)
      if (c >= p) throw InvalidInput("base modulus coefficient out of range");
    if (!prime.is_irreducible(*modulus)) throw InvalidInput("base modulus is reducible");
    modulus_ = *modulus;
  } else {
    modulus_ = prime.least_irreducible(m);
  }
  if (q_ <= 256) {
    mul_table_.resize(q_ * q_);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b) mul_table_[a * q_ + b] = static_cast<std::uint8_t>(mul_digits(a, b));
  }
}

std::uint64_t BaseField::add(std::uint64_t a, std::uint64_t b) const {
  if (m_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i, scale *= p_) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint64_t BaseField::sub(std::uint64_t a, std::uint64_t b) const {
  if (m_ == 1) return (a + p_ - b) % p_;
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i, scale *= p_) {
    out += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint64_t BaseField::mul_digits(std::uint64_t a, std::uint64_t b) const {
  std::vector<std::uint64_t> da(m_), db(m_), prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    for (unsigned j = 0; j <= m_; ++j) prod[i - m_ + j] = (prod[i - m_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  std::uint64_t out = 0;
  for (unsigned i = m_; i-- > 0;) out = out * p_ + prod[i];
  return out;
}

std::uint64_t BaseField::mul(std::uint64_t a, std::uint64_t b) const {
  if (m_ == 1) return a * b % p_;
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_digits(a, b);
}

std::uint64_t BaseField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t BaseField::inv(std::uint64_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return pow(a, q_ - 2);
}

BasePoly BaseField::poly_add(const BasePoly& a, const BasePoly& b) const {
  std::vector<std::uint64_t> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add(a[i], b[i]);
  return BasePoly(std::move(c));
}

BasePoly BaseField::poly_sub(const BasePoly& a, const BasePoly& b) const {
  std::vector<std::uint64_t> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub(a[i], b[i]);
  return BasePoly(std::move(c));
}

BasePoly BaseField::poly_scale(std::uint64_t s, const BasePoly& a) const {
  std::vector<std::uint64_t> c(a.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mul(s, a.coeffs[i]);
  return BasePoly(std::move(c));
}

BasePoly BaseField::poly_mul(const BasePoly& a, const BasePoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (!a.coeffs[i]) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = add(c[i + j], mul(a.coeffs[i], b.coeffs[j]));
  }
  return BasePoly(std::move(c));
}

std::pair<BasePoly, BasePoly> BaseField::poly_divmod(const BasePoly& a, const BasePoly& b) const {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {BasePoly{}, a};
  std::vector<std::uint64_t> rem = a.coeffs;
  std::vector<std::uint64_t> quot(a.coeffs.size() - b.coeffs.size() + 1, 0);
  const std::uint64_t lead_inv = inv(b.lead());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const std::uint64_t c = mul(rem[i], lead_inv);
    if (!c) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = sub(rem[i - db + j], mul(c, b.coeffs[j]));
  }
  rem.resize(db);
  return {BasePoly(std::move(quot)), BasePoly(std::move(rem))};
}

BasePoly BaseField::poly_monic(const BasePoly& a) const {
  if (a.is_zero()) return a;
  return poly_scale(inv(a.lead()), a);
}

BasePoly BaseField::poly_gcd(BasePoly a, BasePoly b) const {
  while (!b.is_zero()) {
    BasePoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

BasePoly BaseField::poly_powmod(const BasePoly& a, const BigUint& e, const BasePoly& m) const {
  BasePoly result = poly_mod(BasePoly({1}), m);
  const BasePoly base = poly_mod(a, m);
  if (e == 0) return result;
  for (std::size_t i = boost::multiprecision::msb(e) + 1; i-- > 0;) {
    result = poly_mod(poly_mul(result, result), m);
    if (boost::multiprecision::bit_test(e, i)) result = poly_mod(poly_mul(result, base), m);
  }
  return result;
}

bool BaseField::is_irreducible(const BasePoly& f_in) const {
  const int n = f_in.degree();
  if (n < 1) throw InvalidInput("irreducibility test needs degree >= 1");
  const BasePoly f = poly_monic(f_in);
  const BasePoly X = poly_mod(BasePoly({0, 1}), f);
  const auto primes = prime_divisors(static_cast<unsigned>(n));
  std::vector<BasePoly> at(static_cast<std::size_t>(n) + 1);
  BasePoly h = X;
  for (int i = 1; i <= n; ++i) {
    h = poly_powmod(h, BigUint(q_), f);
    at[i] = h;
  }
  if (at[n] != X) return false;
  for (unsigned t : primes) {
    const BasePoly g = poly_gcd(poly_sub(at[n / t], X), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

BasePoly BaseField::least_irreducible(unsigned degree) const {
  if (degree < 1) throw InvalidInput("degree must be >= 1");
  const BigUint count = big_pow(q_, degree);
  if (count > BigUint(UINT64_MAX)) throw UnsupportedSize("irreducible search space too large");
  const auto limit = static_cast<std::uint64_t>(count);
  for (std::uint64_t t = 0; t < limit; ++t) {
    std::vector<std::uint64_t> c(degree + 1);
    std::uint64_t v = t;
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = v % q_;
      v /= q_;
    }
    c[degree] = 1;
    BasePoly f(std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(const FieldSpec& spec) : base_(spec.p, spec.m, spec.base_modulus), n_(spec.n) {
  if (n_ < 1) throw InvalidInput("extension degree must be >= 1");
  size_ = big_pow(base_.q(), n_);
  if (size_ > (BigUint(1) << 64)) throw UnsupportedSize("fields with more than 2^64 elements are not supported");
  group_order_ = size_ - 1;
  if (base_.p() == 2) {
    code_bits_ = base_.m() * n_;
  } else {
    code_bits_ = static_cast<unsigned>(boost::multiprecision::msb(group_order_)) + 1;
  }

  if (spec.modulus) {
    if (spec.modulus->degree() != static_cast<int>(n_)) throw InvalidInput("modulus degree must equal n");
    for (auto c : spec.modulus->coeffs)
      if (c >= base_.q()) throw InvalidInput("modulus coefficient out of range");
    modulus_ = base_.poly_monic(*spec.modulus);
    if (!base_.is_irreducible(modulus_)) throw InvalidInput("modulus is reducible");
  } else {
    modulus_ = base_.least_irreducible(n_);
  }

  if (is_binary()) {
    for (std::size_t i = 0; i < modulus_.coeffs.size(); ++i)
      if (modulus_.coeffs[i]) binary_modulus_ |= static_cast<u128>(1) << i;
  }
  x_code_ = n_ == 1 ? base_.neg(modulus_[0]) : base_.q();

  frobenius_powers_.push_back(x_code_);
  for (unsigned k = 1; k < n_; ++k) frobenius_powers_.push_back(pow(frobenius_powers_.back(), BigUint(base_.q())));
  const std::uint64_t xq = pow(x_code_, BigUint(base_.q()));
  frobenius_basis_.push_back(1);
  for (unsigned k = 1; k < n_; ++k) frobenius_basis_.push_back(mul(frobenius_basis_.back(), xq));

  if (spec.factorize) {
    if (group_order_ == 1) factorization_ = Factorization{1, {}};
    else factorization_ = factorize(group_order_);
  }
}

std::shared_ptr<const FieldCtx> FieldCtx::make(const FieldSpec& spec) { return std::make_shared<const FieldCtx>(spec); }

std::shared_ptr<const FieldCtx> FieldCtx::binary(const BitPoly& modulus, bool factorize) {
  FieldSpec spec;
  spec.n = static_cast<unsigned>(std::max(modulus.degree(), 0));
  spec.modulus = BasePoly::from_bitpoly(modulus);
  spec.factorize = factorize;
  if (modulus.degree() < 1) throw InvalidInput("modulus degree must be >= 1");
  return make(spec);
}

bool FieldCtx::same_field(const FieldCtx& other) const {
  return this == &other || (n_ == other.n_ && base_.same_field(other.base_) && modulus_ == other.modulus_);
}

std::vector<std::uint64_t> FieldCtx::decode(std::uint64_t code) const {
  std::vector<std::uint64_t> c(n_);
  const std::uint64_t q = base_.q();
  if (characteristic_two()) {
    const unsigned m = base_.m();
    for (unsigned k = 0; k < n_; ++k) c[k] = m * k >= 64 ? 0 : (code >> (m * k)) & (q - 1);
  } else {
    for (unsigned k = 0; k < n_; ++k) {
      c[k] = code % q;
      code /= q;
    }
  }
  return c;
}

std::uint64_t FieldCtx::encode(const std::vector<std::uint64_t>& coeffs) const {
  std::uint64_t out = 0;
  if (characteristic_two()) {
    for (std::size_t k = 0; k < coeffs.size() && k < n_; ++k) out |= coeffs[k] << (base_.m() * k);
  } else {
    for (std::size_t k = std::min<std::size_t>(coeffs.size(), n_); k-- > 0;) out = out * base_.q() + coeffs[k];
  }
  return out;
}

std::uint64_t FieldCtx::add(std::uint64_t a, std::uint64_t b) const {
  if (characteristic_two()) return a ^ b;
  const std::uint64_t p = base_.p();
  std::uint64_t out = 0, scale = 1;
  while (a || b) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint64_t FieldCtx::sub(std::uint64_t a, std::uint64_t b) const {
  if (characteristic_two()) return a ^ b;
  const std::uint64_t p = base_.p();
  std::uint64_t out = 0, scale = 1;
  while (a || b) {
    out += ((a % p + p - b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint64_t FieldCtx::mul_binary(std::uint64_t a, std::uint64_t b) const {
  const auto [lo, hi] = clmul64(a, b);
  return static_cast<std::uint64_t>(reduce_binary(lo, hi, binary_modulus_, n_));
}

std::uint64_t FieldCtx::mul_generic(std::uint64_t a, std::uint64_t b) const {
  const auto da = decode(a), db = decode(b);
  std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(da[i], db[j]));
  }
  for (unsigned i = 2 * n_ - 2; i >= n_; --i) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i - n_ + j] = base_.sub(prod[i - n_ + j], base_.mul(c, modulus_[j]));
  }
  prod.resize(n_);
  return encode(prod);
}

std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const {
  if (is_binary()) return mul_binary(a, b);
  return mul_generic(a, b);
}

std::uint64_t FieldCtx::scale(std::uint64_t c, std::uint64_t a) const {
  auto d = decode(a);
  for (auto& v : d) v = base_.mul(c, v);
  return encode(d);
}

std::uint64_t FieldCtx::pow(std::uint64_t a, const BigUint& e) const {
  if (e < 0) throw InvalidInput("negative exponent");
  std::uint64_t r = 1;
  if (e == 0) return r;
  for (std::size_t i = boost::multiprecision::msb(e) + 1; i-- > 0;) {
    r = mul(r, r);
    if (boost::multiprecision::bit_test(e, i)) r = mul(r, a);
  }
  return r;
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return pow(a, group_order_ - 1);
}

std::uint64_t FieldCtx::frobenius(std::uint64_t a) const {
  std::uint64_t out = 0;
  if (is_binary()) {
    for (unsigned k = 0; a; ++k, a >>= 1)
      if (a & 1) out ^= frobenius_basis_[k];
    return out;
  }
  const auto d = decode(a);
  for (unsigned k = 0; k < n_; ++k)
    if (d[k]) out = add(out, scale(d[k], frobenius_basis_[k]));
  return out;
}

// ---------------------------------------------------------------------------
// FFElem

FFElem::FFElem(FieldPtr ctx, std::uint64_t code) : ctx_(std::move(ctx)), code_(code) {
  if (!ctx_) throw InvalidInput("null field context");
  if (!ctx_->valid_code(code_)) throw InvalidInput("element code out of range for this field");
}

FFElem FFElem::x(FieldPtr ctx) {
  const auto c = ctx->x();
  return {std::move(ctx), c};
}

FFElem FFElem::from_bitpoly(FieldPtr ctx, const BitPoly& p) {
  if (!ctx->is_binary()) throw ContextError("bit polynomials only embed into GF(2^n) contexts");
  const BitPoly r = p % ctx->modulus_bits();
  return {std::move(ctx), r.to_u64()};
}

std::string FFElem::to_hex() const { return BitPoly(code_).to_hex(); }

FFElem operator+(const FFElem& a, const FFElem& b) {
  require_same(a, b);
  return {a.ctx_, a.ctx_->add(a.code_, b.code_)};
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  require_same(a, b);
  return {a.ctx_, a.ctx_->sub(a.code_, b.code_)};
}

FFElem operator*(const FFElem& a, const FFElem& b) {
  require_same(a, b);
  return {a.ctx_, a.ctx_->mul(a.code_, b.code_)};
}

bool operator==(const FFElem& a, const FFElem& b) { return a.code_ == b.code_ && a.ctx().same_field(b.ctx()); }

// ---------------------------------------------------------------------------
// Oracles

FFElem elem_mul(const FFElem& a, const FFElem& b) { return a * b; }

FFElem elem_pow(const FFElem& a, const BigUint& e) { return {a.ctx_ptr(), a.ctx().pow(a.code(), e)}; }

BigUint element_order(const FFElem& a) {
  if (a.is_zero()) throw DomainError("zero has no multiplicative order");
  const auto& fac = a.ctx().factorization_of_N();
  if (!fac) throw DependencyError("element_order needs the factorization of q^n - 1");
  BigUint r = a.ctx().N();
  for (const auto& [p, k] : fac->factors) {
    for (unsigned i = 0; i < k; ++i) {
      if (a.ctx().pow(a.code(), BigUint(r / p)) != 1) break;
      r /= p;
    }
  }
  return r;
}

FFElem frobenius(const FFElem& a) { return {a.ctx_ptr(), a.ctx().frobenius(a.code())}; }

std::vector<FFElem> frobenius_orbit(const FFElem& a) {
  std::vector<FFElem> orbit{a};
  for (FFElem c = frobenius(a); c.code() != a.code(); c = frobenius(c)) orbit.push_back(c);
  return orbit;
}

bool conjugates_distinct(const FFElem& a) { return frobenius_orbit(a).size() == a.ctx().n(); }

bool classical_primitive_elem_test(const FFElem& a) {
  if (a.is_zero()) return false;
  const auto& fac = a.ctx().factorization_of_N();
  if (!fac) throw DependencyError("primitivity test needs the factorization of q^n - 1");
  for (auto d : fac->primes())
    if (a.ctx().pow(a.code(), BigUint(a.ctx().N() / d)) == 1) return false;
  return true;
}

BasePoly minimal_polynomial(const FFElem& a) {
  if (a.is_zero()) return BasePoly({0, 1});
  const FieldCtx& F = a.ctx();
  std::vector<std::uint64_t> poly{1};  // extension-field codes, little-endian
  for (const auto& c : frobenius_orbit(a)) {
    const std::uint64_t neg_c = F.neg(c.code());
    std::vector<std::uint64_t> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], poly[i]);
      next[i] = F.add(next[i], F.mul(poly[i], neg_c));
    }
    poly = std::move(next);
  }
  for (auto c : poly)
    if (c >= F.q()) throw std::logic_error("minimal polynomial coefficient outside the base field");
  return BasePoly(std::move(poly));
}

bool irreducible_test(const BitPoly& poly) {
  const int n = poly.degree();
  if (n < 1) throw InvalidInput("irreducibility test needs degree >= 1");
  const auto primes = prime_divisors(static_cast<unsigned>(n));
  if (n <= 64) {
    Gf2Mod F{0, static_cast<unsigned>(n)};
    for (int i = 0; i <= n; ++i)
      if (poly.coeff(i)) F.modulus |= static_cast<u128>(1) << i;
    std::vector<std::uint64_t> at(n + 1);
    std::uint64_t h = F.x();
    for (int i = 1; i <= n; ++i) at[i] = h = F.mul(h, h);
    if (at[n] != F.x()) return false;
    for (unsigned t : primes)
      if (BitPoly::gcd(BitPoly(at[n / t] ^ F.x()), poly).degree() != 0) return false;
    return true;
  }
  const BitPoly X = BitPoly::monomial(1) % poly;
  std::vector<BitPoly> at(n + 1);
  BitPoly h = X;
  for (int i = 1; i <= n; ++i) at[i] = h = BitPoly::mulmod(h, h, poly);
  if (at[n] != X) return false;
  for (unsigned t : primes)
    if (BitPoly::gcd(at[n / t] + X, poly).degree() != 0) return false;
  return true;
}

bool irreducible_test(const BaseField& base, const BasePoly& poly) { return base.is_irreducible(poly); }

bool classical_primitive_poly_test(const BitPoly& poly, const Factorization& two_n_minus_1) {
  if (!irreducible_test(poly)) return false;
  const int n = poly.degree();
  if (n > 64) throw UnsupportedSize("degree above 64");
  FieldSpec spec;
  spec.n = static_cast<unsigned>(n);
  spec.modulus = BasePoly::from_bitpoly(poly);
  spec.factorize = false;
  const FieldCtx F(spec);
  if (two_n_minus_1.value != F.N()) throw InvalidInput("factorization does not match 2^n - 1");
  if (F.x() == 0) return false;
  for (auto d : two_n_minus_1.primes())
    if (F.pow(F.x(), BigUint(F.N() / d)) == 1) return false;
  return true;
}

bool classical_primitive_poly_test(const BitPoly& poly) {
  const int n = poly.degree();
  if (n < 1) throw InvalidInput("primitivity test needs degree >= 1");
  if (n > 64) throw UnsupportedSize("degree above 64");
  const BigUint N = (BigUint(1) << n) - 1;
  return classical_primitive_poly_test(poly, N == 1 ? Factorization{1, {}} : factorize(N));
}

bool classical_primitive_poly_test(const BaseField& base, const BasePoly& poly) {
  if (poly.degree() < 1) throw InvalidInput("primitivity test needs degree >= 1");
  const BasePoly f = base.poly_monic(poly);
  if (!base.is_irreducible(f)) return false;
  FieldSpec spec;
  spec.p = base.p();
  spec.m = base.m();
  spec.n = static_cast<unsigned>(f.degree());
  spec.base_modulus = base.m() > 1 ? std::optional<BasePoly>(base.modulus()) : std::nullopt;
  spec.modulus = f;
  const auto F = FieldCtx::make(spec);
  if (F->x() == 0) return false;
  return classical_primitive_elem_test(FFElem::x(F));
}

BigUint count_primitive_polys(unsigned n, std::uint64_t q) {
  if (n < 1) throw InvalidInput("degree must be >= 1");
  if (q < 2) throw InvalidInput("q must be >= 2");
  const BigUint N = big_pow(q, n) - 1;
  if (N == 1) return 1;
  return euler_phi(factorize(N)) / n;
}

std::vector<BitPoly> irreducible_polys(unsigned n) {
  if (n < 1 || n > 24) throw InvalidInput("enumeration supports 1 <= n <= 24");
  std::vector<BitPoly> out;
  for (std::uint64_t low = 0; low < (std::uint64_t{1} << n); ++low) {
    BitPoly p((std::uint64_t{1} << n) | low);
    if (irreducible_test(p)) out.push_back(p);
  }
  return out;
}

std::vector<BitPoly> primitive_polys_exhaustive(unsigned n) {
  if (n < 1 || n > 16) throw InvalidInput("exhaustive mode supports 1 <= n <= 16");
  const BigUint N = (BigUint(1) << n) - 1;
  const Factorization fac = N == 1 ? Factorization{1, {}} : factorize(N);
  std::vector<BitPoly> out;
  for (const auto& p : irreducible_polys(n))
    if (classical_primitive_poly_test(p, fac)) out.push_back(p);
  return out;
}

}  // namespace primq

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
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "primq/bigint.hpp"

namespace primq {

using u128 = unsigned __int128;

std::string to_string(u128 v);

struct PrimePower {
  std::uint64_t prime;
  unsigned multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete prime factorization; primes strictly increasing.
struct Factorization {
  BigUint value;
  std::vector<PrimePower> factors;

  std::vector<std::uint64_t> primes() const;
  /// Product of prime^multiplicity; equals value for a well-formed instance.
  BigUint product() const;
  std::string to_string() const;  // "3^2 * 7"
};

/// gcd of all entries; throws InvalidInput on an empty list or when all are zero.
std::uint64_t int_gcd(std::span<const std::uint64_t> values);
inline std::uint64_t int_gcd(std::initializer_list<std::uint64_t> values) {
  return int_gcd(std::span<const std::uint64_t>(values.begin(), values.size()));
}

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Trial division followed by Brent's variant of Pollard rho.
Factorization factorize(std::uint64_t n);
/// Accepts 2 <= n <= 2^64; larger values raise UnsupportedSize.
Factorization factorize(const BigUint& n);

std::uint64_t euler_phi(std::uint64_t r);
BigUint euler_phi(const Factorization& f);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(const Factorization& f);

/// Exact rational in lowest terms.
struct Fraction {
  u128 num = 0;
  u128 den = 1;

  double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};
Fraction make_fraction(u128 num, u128 den);

/// phi(i) for i = 0..limit (phi(0) stored as 0).
std::vector<std::uint32_t> totients_upto(std::uint32_t limit);

/// Probability that two independent uniform integers in [1, r] are coprime:
/// (2 * sum_{i=1..r} phi(i) - 1) / r^2. Requires 1 <= r <= 10^7.
Fraction pr2_exact(std::uint64_t r);
/// pr2_exact for every r in [r_min, r_max] from one sieve.
std::vector<Fraction> pr2_exact_range(std::uint64_t r_min, std::uint64_t r_max);

/// 1 - (1 - 6/pi^2)^(L/2).
double coprimality_lower_bound(unsigned L);

struct CoprimalityReport {
  std::uint64_t r = 0;
  unsigned L = 0;
  std::uint64_t samples = 0;  // 0 marks an exact value
  double estimate = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of P(gcd(k_1..k_L) = 1), k_i uniform in [1, r].
/// Samples are drawn in fixed-size blocks, block b from stream b of the seed.
CoprimalityReport coprimality_mc(std::uint64_t r, unsigned L, std::uint64_t samples, std::uint64_t seed);

/// Monte Carlo estimate of P(gcd(k_1..k_L, r) = 1), k_i uniform in [1, r]:
/// the chance that L order-finding outcomes pin down N/r exactly.
CoprimalityReport order_recovery_success_prob(std::uint64_t r, unsigned L, std::uint64_t samples,
                                              std::uint64_t seed);
/// Same quantity exactly, sum over d | r of mu(d) / d^L.
double order_recovery_success_exact(std::uint64_t r, unsigned L);
/// L = 2 case as a reduced fraction.
Fraction order_recovery_success_exact_l2(std::uint64_t r);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const CoprimalityReport& report);

}  // namespace primq

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

#include "primq/numstats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "primq/errors.hpp"
#include "primq/rng.hpp"

namespace primq {

namespace {

constexpr std::uint64_t kBlockSize = 1 << 16;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t c) {
  if (n % 2 == 0) return 2;
  auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
  std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
  const std::uint64_t m = 128;
  std::uint64_t r = 1;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split_factor(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    const std::uint64_t d = pollard_brent(n, c);
    if (d != n && d != 1) {
      split_factor(d, out);
      split_factor(n / d, out);
      return;
    }
  }
}

Factorization collect(BigUint value, std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  Factorization f{std::move(value), {}};
  for (auto p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p) ++f.factors.back().multiplicity;
    else f.factors.push_back({p, 1});
  }
  return f;
}

std::uint64_t sample_gcd(CounterRng& rng, std::uint64_t r, unsigned L, std::uint64_t start) {
  std::uint64_t g = start;
  for (unsigned i = 0; i < L; ++i) g = std::gcd(g, rng.uniform(1, r));
  return g;
}

template <class Gcd>
CoprimalityReport run_blocks(std::uint64_t r, unsigned L, std::uint64_t samples, std::uint64_t seed, Gcd&& gcd_of) {
  std::uint64_t hits = 0;
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    CounterRng rng(seed, b);
    const std::uint64_t count = std::min(kBlockSize, samples - b * kBlockSize);
    for (std::uint64_t i = 0; i < count; ++i) hits += gcd_of(rng) == 1;
  }
  CoprimalityReport rep{r, L, samples, 0, 0, seed};
  rep.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  rep.std_error = std::sqrt(rep.estimate * (1 - rep.estimate) / static_cast<double>(samples));
  return rep;
}

void check_mc_args(std::uint64_t r, unsigned L, std::uint64_t samples) {
  if (r < 1) throw InvalidInput("r must be >= 1");
  if (L < 2) throw InvalidInput("L must be >= 2");
  if (samples < 1) throw InvalidInput("samples must be >= 1");
}

}  // namespace

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

BigUint Factorization::product() const {
  BigUint v = 1;
  for (const auto& pp : factors)
    for (unsigned i = 0; i < pp.multiplicity; ++i) v *= pp.prime;
  return v;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " * ";
    os << factors[i].prime;
    if (factors[i].multiplicity > 1) os << "^" << factors[i].multiplicity;
  }
  return os.str();
}

std::uint64_t int_gcd(std::span<const std::uint64_t> values) {
  if (values.empty()) throw InvalidInput("gcd of an empty list");
  std::uint64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  if (g == 0) throw InvalidInput("gcd of all-zero values");
  return g;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n < 2) throw InvalidInput("factorize requires N >= 2");
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p < 1000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  split_factor(rest, primes);
  return collect(BigUint(n), std::move(primes));
}

Factorization factorize(const BigUint& n) {
  const BigUint two64 = BigUint(1) << 64;
  if (n < 2) throw InvalidInput("factorize requires N >= 2");
  if (n > two64) throw UnsupportedSize("factorize supports N <= 2^64, got " + n.str());
  if (n == two64) return Factorization{n, {{2, 64}}};
  return factorize(static_cast<std::uint64_t>(n));
}

std::uint64_t euler_phi(std::uint64_t r) {
  if (r < 1) throw InvalidInput("euler_phi requires r >= 1");
  if (r == 1) return 1;
  return static_cast<std::uint64_t>(euler_phi(factorize(r)));
}

BigUint euler_phi(const Factorization& f) {
  BigUint phi = 1;
  for (const auto& [p, k] : f.factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < k; ++i) phi *= p;
  }
  return phi;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, k] : f.factors) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fraction make_fraction(u128 num, u128 den) {
  if (den == 0) throw DomainError("zero denominator");
  u128 a = num, b = den;
  while (b) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) return {0, 1};
  return {num / a, den / a};
}

std::vector<std::uint32_t> totients_upto(std::uint32_t limit) {
  std::vector<std::uint32_t> phi(limit + 1);
  std::iota(phi.begin(), phi.end(), 0u);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (phi[i] != i) continue;
    for (std::uint32_t j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
  }
  return phi;
}

std::vector<Fraction> pr2_exact_range(std::uint64_t r_min, std::uint64_t r_max) {
  if (r_min < 1 || r_max > 10'000'000 || r_min > r_max)
    throw InvalidInput("pr2_exact requires 1 <= r <= 10^7");
  const auto phi = totients_upto(static_cast<std::uint32_t>(r_max));
  std::vector<Fraction> out;
  u128 sum = 0;
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    sum += phi[r];
    if (r >= r_min) out.push_back(make_fraction(2 * sum - 1, static_cast<u128>(r) * r));
  }
  return out;
}

Fraction pr2_exact(std::uint64_t r) { return pr2_exact_range(r, r).front(); }

double coprimality_lower_bound(unsigned L) {
  return 1.0 - std::pow(1.0 - 6.0 / (std::numbers::pi * std::numbers::pi), L / 2.0);
}

CoprimalityReport coprimality_mc(std::uint64_t r, unsigned L, std::uint64_t samples, std::uint64_t seed) {
  check_mc_args(r, L, samples);
  return run_blocks(r, L, samples, seed, [&](CounterRng& rng) { return sample_gcd(rng, r, L, 0); });
}

CoprimalityReport order_recovery_success_prob(std::uint64_t r, unsigned L, std::uint64_t samples,
                                              std::uint64_t seed) {
  check_mc_args(r, L, samples);
  return run_blocks(r, L, samples, seed, [&](CounterRng& rng) { return sample_gcd(rng, r, L, r); });
}

double order_recovery_success_exact(std::uint64_t r, unsigned L) {
  if (r < 1) throw InvalidInput("r must be >= 1");
  if (L < 1) throw InvalidInput("L must be >= 1");
  if (r == 1) return 1.0;
  // Multiplicative form of sum_{d | r} mu(d) d^{-L}.
  double p = 1.0;
  for (const auto& pp : factorize(r).factors) p *= 1.0 - std::pow(static_cast<double>(pp.prime), -double(L));
  return p;
}

Fraction order_recovery_success_exact_l2(std::uint64_t r) {
  if (r < 1 || r > 10'000'000) throw InvalidInput("requires 1 <= r <= 10^7");
  if (r == 1) return {1, 1};
  const auto primes = factorize(r).primes();
  // Sum over squarefree divisors d of mu(d) * (r/d)^2.
  __int128 num = 0;
  const std::size_t k = primes.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) d *= primes[i];
    const __int128 term = static_cast<__int128>(r / d) * (r / d);
    num += (std::popcount(mask) % 2) ? -term : term;
  }
  return make_fraction(static_cast<u128>(num), static_cast<u128>(r) * r);
}

void write_csv_header(std::ostream& os) { os << "r,L,samples,estimate,stderr,seed\n"; }

void write_csv_row(std::ostream& os, const CoprimalityReport& rep) {
  std::ostringstream line;
  line << rep.r << ',' << rep.L << ',' << rep.samples << ',' << std::setprecision(10) << rep.estimate << ','
       << rep.std_error << ',' << rep.seed << '\n';
  os << line.str();
}

}  // namespace primq

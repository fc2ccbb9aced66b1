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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "primq/errors.hpp"
#include "primq/sim.hpp"

using namespace primq;

namespace {

double max_diff(const DenseState& a, const DenseState& b) {
  double d = 0;
  for (std::uint64_t i = 0; i < a.dimension(); ++i) d = std::max(d, std::abs(a.amplitude(i) - b.amplitude(i)));
  return d;
}

SparseState uniform_over(const std::vector<std::uint64_t>& keys, std::vector<unsigned> widths) {
  SparseState s(std::move(widths));
  s.clear();
  for (auto k : keys) s.set(k, 1.0);
  s.normalize();
  return s;
}

}  // namespace

TEST_SUITE("sim") {

TEST_CASE("single gates") {
  DenseState s(1);
  apply_gate(s, Gate::h(0));
  CHECK(s.amplitude(0).real() == doctest::Approx(std::numbers::sqrt2 / 2));
  CHECK(s.amplitude(1).real() == doctest::Approx(std::numbers::sqrt2 / 2));

  DenseState c(2, 0b01);
  apply_gate(c, Gate::cnot(0, 1));
  CHECK(c.amplitude(0b11) == Amp(1));

  DenseState f(5, 0b00001);
  const auto fig = build_ux(BitPoly(0x3b));
  apply_circuit(f, fig);
  CHECK(f.amplitude(0b00010) == Amp(1));
  DenseState g(5, 0b10000);
  apply_circuit(g, fig);
  CHECK(g.amplitude(oracle::gf2_mulmod(0x10, 2, 0x3b)) == Amp(1));

  DenseState p(1, 1);
  apply_gate(p, Gate::phase(2, 0));
  CHECK(std::abs(p.amplitude(1) - Amp(0, 1)) < 1e-15);

  DenseState r(3, 0b011);
  apply_gate(r, Gate::mcx({0, 1}, 2, true));
  CHECK(std::abs(r.amplitude(0b111) - Amp(0, 1)) < 1e-15);
  apply_gate(r, Gate::mcx({0, 1}, 2, true));
  CHECK(std::abs(r.amplitude(0b011) - Amp(1)) < 1e-15);

  CHECK_THROWS_AS(apply_gate(r, Gate::x(3)), InvalidInput);
}

TEST_CASE("norm is preserved over long random sequences") {
  CounterRng rng(17);
  DenseState d(8);
  SparseState s({8});
  for (int i = 0; i < 10000; ++i) {
    const unsigned a = rng() % 8, b = (a + 1 + rng() % 7) % 8, c = (b + 1 + rng() % 6) % 8;
    Gate g;
    switch (rng() % 6) {
      case 0: g = Gate::h(a); break;
      case 1: g = Gate::cnot(a, b); break;
      case 2: g = Gate::swap(a, b); break;
      case 3: g = Gate::phase(1 + rng() % 8, a); break;
      case 4: g = c == a ? Gate::x(a) : Gate::mcx({a, b}, c, rng() % 2); break;
      default: g = Gate::x(a);
    }
    apply_gate(d, g);
    if (i < 300) apply_gate(s, g);
    if (i == 299) CHECK(max_diff(d, to_dense(s)) < 1e-9);
  }
  CHECK(std::abs(d.norm2() - 1) < 1e-9);
}

TEST_CASE("basis maps") {
  SparseState id = uniform_over({1, 2, 3}, {3});
  const auto before = id.amplitudes();
  apply_basis_map(id, [](std::uint64_t k) { return k; });
  CHECK(id.amplitudes() == before);

  // Frobenius on {1, a, a^2} in GF(8) with a = x.
  const std::uint64_t m = 0xb;
  const std::uint64_t a = 2, a2 = oracle::gf2_mulmod(a, a, m), a4 = oracle::gf2_mulmod(a2, a2, m);
  SparseState fr = uniform_over({1, a, a2}, {3});
  apply_basis_map(fr, [&](std::uint64_t k) { return oracle::gf2_mulmod(k, k, m); });
  CHECK(fr.support_size() == 3);
  for (auto k : {std::uint64_t{1}, a2, a4}) CHECK(fr.amplitude(k).real() == doctest::Approx(1 / std::sqrt(3.0)));

  SparseState bad = uniform_over({1, 2}, {3});
  CHECK_THROWS_AS(apply_basis_map(bad, [](std::uint64_t) { return 5; }), NonInjectiveError);
  CHECK_THROWS_AS(apply_basis_map(bad, [](std::uint64_t k) { return k + 8; }), InvalidInput);
  DenseState dbad(2);
  dbad.mutable_amplitudes() = {0.5, 0.5, 0.5, 0.5};
  CHECK_THROWS_AS(apply_basis_map(dbad, [](std::uint64_t k) { return k / 2; }), NonInjectiveError);

  // (j, 1) -> (j, x^j) modulo x^4 + x + 1.
  std::vector<std::uint64_t> keys;
  for (std::uint64_t j = 0; j < 15; ++j) keys.push_back(j | (1u << 4));
  SparseState e = uniform_over(keys, {4, 4});
  apply_basis_map(e, [&](std::uint64_t k) {
    const std::uint64_t j = k & 15;
    std::uint64_t v = k >> 4;
    for (std::uint64_t i = 0; i < j; ++i) v = oracle::gf2_mulmod(v, 2, 0x13);
    return j | (v << 4);
  });
  std::uint64_t xj = 1;
  for (std::uint64_t j = 0; j < 15; ++j, xj = oracle::gf2_mulmod(xj, 2, 0x13))
    CHECK(std::abs(e.amplitude(j | (xj << 4))) == doctest::Approx(1 / std::sqrt(15.0)));
}

TEST_CASE("dense and sparse basis-map execution agree") {
  CounterRng rng(23);
  for (unsigned n = 2; n <= 8; ++n) {
    DenseState d(n);
    for (unsigned q = 0; q < n; ++q) apply_gate(d, Gate::h(q));
    apply_gate(d, Gate::phase(3, 0));
    SparseState s = to_sparse(d, {n});
    for (int round = 0; round < 5; ++round) {
      const std::uint64_t mult = (rng() % ((std::uint64_t{1} << n) - 1)) | 1;
      const std::uint64_t add = rng() & ((std::uint64_t{1} << n) - 1);
      const auto f = [&](std::uint64_t k) { return (k * mult + add) & ((std::uint64_t{1} << n) - 1); };
      apply_basis_map(d, f);
      apply_basis_map(s, f);
    }
    const auto back = to_dense(s);
    for (std::uint64_t i = 0; i < d.dimension(); ++i) {
      CHECK((std::abs(d.amplitude(i)) < kPruneThreshold) == (s.amplitude(i) == Amp{}));
      CHECK(std::abs(d.amplitude(i) - back.amplitude(i)) < 1e-12);
    }
  }
}

TEST_CASE("exact DFT") {
  DenseState delta(2);
  dft_zn(delta, {0, 2}, 3, DftDirection::Inverse);
  for (int l = 0; l < 3; ++l) CHECK(std::abs(delta.amplitude(l) - Amp(1 / std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(delta.amplitude(3)) == 0);

  SparseState uni = uniform_over({0, 1, 2, 3, 4, 5, 6}, {3});
  dft_zn(uni, 0, 7, DftDirection::Forward);
  CHECK(uni.support_size() == 1);
  CHECK(std::abs(uni.amplitude(0) - Amp(1)) < 1e-12);

  for (auto dir : {DftDirection::Forward, DftDirection::Inverse}) {
    for (std::uint64_t b = 0; b < 3; ++b) {
      SparseState s = uniform_over({b, 5 + b, 10 + b}, {4});
      dft_zn(s, 0, 15, dir);
      std::vector<std::uint64_t> support;
      for (const auto& [k, v] : s.amplitudes()) {
        support.push_back(k);
        CHECK(std::norm(v) == doctest::Approx(0.2));
      }
      CHECK(support == std::vector<std::uint64_t>{0, 3, 6, 9, 12});
    }
  }

  CounterRng rng(31);
  DenseState r(6);
  auto& amps = r.mutable_amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    amps[i] = (i & 7) < 7 ? Amp(rng.uniform01() - 0.5, rng.uniform01() - 0.5) : Amp{};
  r.normalize();
  const DenseState orig = r;
  dft_zn(r, {0, 3}, 7, DftDirection::Inverse);
  CHECK(std::abs(r.norm2() - 1) < 1e-12);
  dft_zn(r, {0, 3}, 7, DftDirection::Forward);
  CHECK(max_diff(r, orig) < 1e-9);

  SparseState leak = uniform_over({1, 7}, {3});
  CHECK_THROWS_AS(dft_zn(leak, 0, 7, DftDirection::Inverse), PreconditionError);
  DenseState dleak(3, 7);
  CHECK_THROWS_AS(dft_zn(dleak, {0, 3}, 7, DftDirection::Inverse), PreconditionError);
}

TEST_CASE("fused transform and measurement match the full transform") {
  std::vector<std::uint64_t> keys;
  for (std::uint64_t j = 0; j < 15; ++j) keys.push_back(j | ((j % 5 + 1) << 4));
  const SparseState s = uniform_over(keys, {4, 4});
  SparseState full = s;
  dft_zn(full, 0, 15, DftDirection::Inverse);
  const auto marginal = dft_marginal(s, 0, 15, DftDirection::Inverse);
  for (std::uint64_t l = 0; l < 15; ++l) {
    double p = 0;
    for (const auto& [k, v] : full.amplitudes())
      if ((k & 15) == l) p += std::norm(v);
    CHECK(marginal[l] == doctest::Approx(p).epsilon(1e-12));
    CHECK(marginal[l] == doctest::Approx(l % 3 == 0 ? 0.2 : 0.0));
  }
  CounterRng a(3), b(3);
  const auto m1 = dft_then_measure(s, 0, 15, DftDirection::Inverse, a);
  const auto m2 = measure(full, 0, b);
  CHECK(m1.value == m2.value);
  CHECK(m1.probability == doctest::Approx(m2.probability));
  CHECK(std::abs(inner_product(m1.post_state, m2.post_state)) == doctest::Approx(1.0));
}

TEST_CASE("measurement") {
  CounterRng rng(1);
  const auto one = measure(DenseState(1, 1), {0, 1}, rng);
  CHECK(one.value == 1);
  CHECK(one.probability == 1.0);
  CHECK(one.rng_position == rng.position());

  // Postselection ancilla: H on 4 qubits, MCX onto a fifth.
  Circuit prep(5);
  for (unsigned q = 0; q < 4; ++q) prep.append(Gate::h(q));
  prep.append(Gate::mcx({0, 1, 2, 3}, 4));
  DenseState st(5);
  apply_circuit(st, prep);
  const auto anc = measure(st, {4, 1}, rng);
  CHECK(anc.probability == doctest::Approx(anc.value == 0 ? 15.0 / 16 : 1.0 / 16));
  if (anc.value == 0) CHECK(std::abs(anc.post_state.amplitude(15)) == 0);

  // Born rule over 10^5 shots.
  DenseState b(2);
  b.mutable_amplitudes() = {std::sqrt(0.1), Amp(0, std::sqrt(0.2)), std::sqrt(0.3), -std::sqrt(0.4)};
  std::vector<int> hits(4, 0);
  CounterRng shots(77);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++hits[measure(b, {0, 2}, shots).value];
  for (int v = 0; v < 4; ++v) {
    const double p = 0.1 * (v + 1);
    CHECK(std::abs(hits[v] - n * p) < 5 * std::sqrt(n * p * (1 - p)));
  }

  // Sparse collapse keeps the other register.
  SparseState s = uniform_over({0x10, 0x21, 0x31}, {4, 4});
  CounterRng r2(9);
  const auto m = measure(s, 1, r2);
  CHECK(std::abs(m.post_state.norm2() - 1) < 1e-12);
  for (const auto& [k, v] : m.post_state.amplitudes()) CHECK((k >> 4) == m.value);
}

TEST_CASE("inner products and retained registers") {
  const SparseState a = uniform_over({1, 2, 4}, {3});
  CHECK(std::abs(inner_product(a, a) - Amp(1)) < 1e-12);
  const SparseState b = uniform_over({2, 4, 5}, {3});
  CHECK(inner_product(a, b).real() == doctest::Approx(2.0 / 3));
  CHECK_THROWS_AS(inner_product(a, uniform_over({1}, {4})), InvalidInput);

  SparseState j({2, 2});
  j.clear();
  j.set(0b0101, 1.0);
  j.set(0b1001, 1.0);
  j.set(0b0110, 1.0);
  const auto kept = retain_register(j, 1);
  CHECK(kept.widths() == std::vector<unsigned>{2});
  // Register 1 holds 1 on two keys and 2 on one.
  CHECK(kept.amplitude(1).real() == doctest::Approx(2 / std::sqrt(5.0)));
  CHECK(kept.amplitude(2).real() == doctest::Approx(1 / std::sqrt(5.0)));
  const auto low = retain_register(j, 0);
  CHECK(low.amplitude(1).real() == doctest::Approx(2 / std::sqrt(5.0)));
  CHECK(low.amplitude(2).real() == doctest::Approx(1 / std::sqrt(5.0)));
  SparseState cancel({1, 1});
  cancel.clear();
  cancel.set(0b00, 1.0);
  cancel.set(0b10, -1.0);
  CHECK_THROWS_AS(retain_register(cancel, 0), DomainError);
}

TEST_CASE("state dumps") {
  DenseState d(2);
  apply_gate(d, Gate::x(1));
  CHECK(dump_json(d).dump() == R"([["0x2",1.0,0.0]])");
  const SparseState s = uniform_over({0x1f, 0x3}, {8});
  const auto j = dump_json(s);
  CHECK(j.size() == 2);
  CHECK(j[0][0] == "0x3");
  CHECK(j[1][0] == "0x1f");
}

}  // TEST_SUITE

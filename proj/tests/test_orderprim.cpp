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
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "primq/errors.hpp"
#include "primq/numstats.hpp"
#include "primq/orderprim.hpp"

using namespace primq;

namespace {

std::set<std::uint64_t> field_values(const SparseState& s) {
  std::set<std::uint64_t> v;
  for (const auto& [k, a] : s.amplitudes()) v.insert(s.reg(1).extract(k));
  return v;
}

}  // namespace

TEST_SUITE("orderprim") {

TEST_CASE("uniform preparation over Z_N") {
  CounterRng rng(2);
  const auto two = prepare_uniform_zn(2, rng);
  for (std::uint64_t j = 0; j < 3; ++j) CHECK(std::abs(two.state.amplitude(j) - Amp(1 / std::sqrt(3.0))) < 1e-12);
  CHECK(two.state.amplitude(3) == Amp{});
  const auto four = prepare_uniform_zn(4, rng);
  for (std::uint64_t j = 0; j < 15; ++j) CHECK(std::abs(four.state.amplitude(j) - Amp(1 / std::sqrt(15.0))) < 1e-12);
  CHECK(four.state.amplitude(15) == Amp{});
  CHECK_THROWS_AS(prepare_uniform_zn(1, rng), InvalidInput);
  CHECK_THROWS_AS(prepare_uniform_zn(15, rng), InvalidInput);
}

TEST_CASE("retry counts are geometric") {
  CounterRng rng(8);
  const int runs = 10000;
  std::uint64_t total = 0;
  for (int i = 0; i < runs; ++i) total += prepare_uniform_zn(4, rng).retries;
  const double mean = static_cast<double>(total) / runs;
  const double sigma = std::sqrt((1.0 / 16) / ((15.0 / 16) * (15.0 / 16)) / runs);
  CHECK(std::abs(mean - 1.0 / 15) < 5 * sigma);
}

TEST_CASE("entangled register supports") {
  CounterRng rng(3);
  const auto f2 = FieldCtx::binary(BitPoly(0x7));
  const auto s2 = entangle_powers_semantic(prepare_uniform_zn(2, rng).state, *f2);
  std::set<std::uint64_t> keys;
  for (const auto& [k, a] : s2.amplitudes()) keys.insert(k);
  CHECK(keys == std::set<std::uint64_t>{0 | (1 << 2), 1 | (2 << 2), 2 | (3 << 2)});

  const auto f5 = FieldCtx::binary(BitPoly(0x1f));
  CHECK(field_values(entangle_powers_semantic(prepare_uniform_zn(4, rng).state, *f5)).size() == 5);
  const auto f15 = FieldCtx::binary(BitPoly(0x13));
  CHECK(field_values(entangle_powers_semantic(prepare_uniform_zn(4, rng).state, *f15)).size() == 15);
}

TEST_CASE("gate-level and semantic execution agree") {
  CounterRng rng(4);
  for (unsigned n = 2; n <= 6; ++n)
    for (const auto& p : irreducible_polys(n)) {
      const auto ctx = FieldCtx::binary(p, false);
      const auto prep = prepare_uniform_zn(n, rng);
      const auto gates = entangle_powers_gates(prep.state, *ctx);
      const auto semantic = to_dense(entangle_powers_semantic(prep.state, *ctx));
      double diff = 0;
      for (std::uint64_t i = 0; i < gates.dimension(); ++i)
        diff = std::max(diff, std::abs(gates.amplitude(i) - semantic.amplitude(i)));
      REQUIRE(diff <= 1e-9);
    }
  const auto big = FieldCtx::binary(BitPoly(0x83), false);
  CounterRng r7(1);
  CHECK_THROWS_AS(entangle_powers_gates(prepare_uniform_zn(7, r7).state, *big), UnsupportedSize);
}

TEST_CASE("frequency outcomes lie on the lattice") {
  const auto ctx = FieldCtx::binary(BitPoly(0x1f));
  CounterRng rng(5);
  const auto ent = entangle_powers_semantic(prepare_uniform_zn(4, rng).state, *ctx);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 500; ++i) {
    const auto rec = measure_frequency(ent, *ctx, rng);
    CHECK(rec.l % 3 == 0);
    CHECK(rec.normalized_l == (rec.l == 0 ? 15 : rec.l));
    seen.insert(rec.l);
  }
  CHECK(seen == std::set<std::uint64_t>{0, 3, 6, 9, 12});

  for (unsigned n = 3; n <= 8; ++n)
    for (const auto& p : irreducible_polys(n)) {
      const auto c = FieldCtx::binary(p, false);
      const std::uint64_t N = (std::uint64_t{1} << n) - 1;
      const std::uint64_t r = oracle::gf2_order_of_x(p.to_u64());
      const auto e = entangle_powers_semantic(prepare_uniform_zn(n, rng).state, *c);
      for (int t = 0; t < 3; ++t) REQUIRE(measure_frequency(e, *c, rng).l % (N / r) == 0);
    }
}

TEST_CASE("dense frequency measurement agrees with the sparse path") {
  const auto ctx = FieldCtx::binary(BitPoly(0x1f));
  CounterRng rng(6);
  const auto prep = prepare_uniform_zn(4, rng);
  const auto dense = entangle_powers_gates(prep.state, *ctx);
  const auto sparse = entangle_powers_semantic(prep.state, *ctx);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CounterRng a(seed), b(seed);
    const auto x = measure_frequency(dense, *ctx, a);
    const auto y = measure_frequency(sparse, *ctx, b);
    CHECK(x.l == y.l);
    CHECK(x.l % 3 == 0);
  }
}

TEST_CASE("gcd post-processing") {
  const auto ctx = FieldCtx::binary(BitPoly(0x1f));
  auto rec = [](std::uint64_t l) { return TrialRecord{l, l == 0 ? 15 : l}; };
  auto v = gcd_postprocess({rec(3), rec(6)}, *ctx);
  CHECK(v.decision == Decision::NotPrimitive);
  CHECK(v.g == 3);
  CHECK(v.order == 5);
  const auto prim = FieldCtx::binary(BitPoly(0x13));
  v = gcd_postprocess({rec(7)}, *prim);
  CHECK(v.decision == Decision::Primitive);
  CHECK(v.g == 1);
  v = gcd_postprocess({rec(0)}, *prim);
  CHECK(v.decision == Decision::Undecided);
  CHECK(v.g == 15);
  CHECK_FALSE(v.order.has_value());
  // g = 5 on a primitive polynomial: x^3 != 1, so nothing is decided yet.
  CHECK(gcd_postprocess({rec(5), rec(10)}, *prim).decision == Decision::Undecided);
  CHECK_THROWS_AS(gcd_postprocess({}, *prim), InvalidInput);
}

TEST_CASE("end-to-end verdicts") {
  OrderPolicy policy;
  policy.seed = 42;
  const auto np = test_primitivity(BitPoly(0x1f), policy);
  CHECK(np.verdict.decision == Decision::NotPrimitive);
  CHECK(np.verdict.order == 5);
  CHECK(np.N == 15);
  const auto pr = test_primitivity(BitPoly(0x13), policy);
  CHECK(pr.verdict.decision == Decision::Primitive);
  CHECK_THROWS_AS(test_primitivity(BitPoly(0x15), policy), InvalidInput);
  OrderPolicy gates = policy;
  gates.backend = Backend::GateLevel;
  CHECK(test_primitivity(BitPoly(0x1f), gates).verdict.decision == Decision::NotPrimitive);
  CHECK_THROWS_AS(test_primitivity(BitPoly(0x83), gates), UnsupportedSize);
  OrderPolicy zero = policy;
  zero.max_trials = 0;
  CHECK_THROWS_AS(test_primitivity(BitPoly(0x13), zero), InvalidInput);

  const auto again = test_primitivity(BitPoly(0x1f), policy);
  REQUIRE(again.trials.size() == np.trials.size());
  for (std::size_t i = 0; i < again.trials.size(); ++i) CHECK(again.trials[i].l == np.trials[i].l);

  for (unsigned n = 2; n <= 8; ++n)
    for (const auto& p : irreducible_polys(n)) {
      OrderPolicy pol;
      pol.seed = p.to_u64();
      const auto res = test_primitivity(p, pol);
      REQUIRE(res.verdict.decision != Decision::Undecided);
      REQUIRE((res.verdict.decision == Decision::Primitive) == classical_primitive_poly_test(p));
    }
}

TEST_CASE("characteristic-2 tower field") {
  FieldSpec spec;
  spec.m = 2;
  spec.n = 2;
  const auto ctx = FieldCtx::make(spec);
  OrderPolicy policy;
  policy.seed = 9;
  const auto res = test_primitivity(ctx, policy);
  REQUIRE(res.verdict.decision != Decision::Undecided);
  CHECK((res.verdict.decision == Decision::Primitive) == classical_primitive_elem_test(FFElem::x(ctx)));
  CHECK(res.width == 4);
}

TEST_CASE("two trials usually suffice at r near one thousand") {
  // Degree-12 modulus whose root has order 1365 = 4095 / 3.
  BitPoly target;
  for (const auto& p : irreducible_polys(12)) {
    if (oracle::gf2_order_of_x(p.to_u64()) == 1365) {
      target = p;
      break;
    }
  }
  REQUIRE(target.degree() == 12);
  const auto ctx = FieldCtx::binary(target, false);
  CounterRng rng(10);
  const auto ent = entangle_powers_semantic(prepare_uniform_zn(12, rng).state, *ctx);
  int decided = 0;
  const int reps = 1000;
  for (int i = 0; i < reps; ++i) {
    const auto a = measure_frequency(ent, *ctx, rng);
    const auto b = measure_frequency(ent, *ctx, rng);
    const auto v = gcd_postprocess({a, b}, *ctx);
    REQUIRE(v.decision != Decision::Primitive);
    decided += v.decision == Decision::NotPrimitive;
  }
  CHECK(static_cast<double>(decided) / reps > 0.6);
  const double exact = order_recovery_success_exact(1365, 2);
  CHECK(std::abs(static_cast<double>(decided) / reps - exact) < 5 * std::sqrt(exact * (1 - exact) / reps));
}

TEST_CASE("register layout") {
  for (unsigned n = 2; n <= 64; ++n) {
    CHECK(order_finding_qubits(n) == 2 * n + 1);
    CHECK(shor_layout_qubits(n) == 3 * n);
  }
  CHECK(static_cast<double>(order_finding_qubits(30)) / shor_layout_qubits(30) == doctest::Approx(61.0 / 90));
}

}  // TEST_SUITE

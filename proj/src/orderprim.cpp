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

#include "primq/orderprim.hpp"

#include <numeric>

#include "primq/circuit.hpp"
#include "primq/errors.hpp"

namespace primq {
namespace {

unsigned checked_width(const FieldCtx& ctx, unsigned limit) {
  if (!ctx.characteristic_two()) throw InvalidInput("order finding needs a characteristic-2 field");
  const unsigned w = ctx.code_bits();
  if (w < 2) throw InvalidInput("register width must be at least 2");
  if (w > limit) throw UnsupportedSize("register width " + std::to_string(w) + " exceeds " + std::to_string(limit));
  return w;
}

std::uint64_t group_order(const FieldCtx& ctx) { return to_u64(ctx.N()); }

TrialRecord make_record(std::uint64_t l, std::uint64_t N, const CounterRng& rng) {
  return {l, l == 0 ? N : l, 0, rng.seed(), rng.stream()};
}

}  // namespace

std::string_view decision_name(Decision d) {
  switch (d) {
    case Decision::Primitive: return "PRIMITIVE";
    case Decision::NotPrimitive: return "NOT_PRIMITIVE";
    case Decision::Undecided: return "UNDECIDED";
  }
  return "?";
}

PreparedRegister prepare_uniform_zn(unsigned width, CounterRng& rng) {
  if (width < 2 || width > 14) throw InvalidInput("prepare_uniform_zn needs 2 <= width <= 14");
  std::vector<unsigned> controls(width);
  std::iota(controls.begin(), controls.end(), 0u);
  Circuit prep(width + 1, "uniform Z_N");
  for (unsigned q = 0; q < width; ++q) prep.append(Gate::h(q));
  prep.append(Gate::mcx(controls, width));

  PreparedRegister out{DenseState(width), 0};
  for (;;) {
    DenseState s(width + 1);
    apply_circuit(s, prep);
    auto m = measure(std::move(s), RegisterSlice{width, 1}, rng);
    if (m.value == 1) {
      ++out.retries;
      continue;
    }
    auto& amps = out.state.mutable_amplitudes();
    const auto& src = m.post_state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) amps[i] = src[i];
    return out;
  }
}

DenseState entangle_powers_gates(const DenseState& freq, const FieldCtx& ctx) {
  const unsigned w = checked_width(ctx, 6);
  if (freq.num_qubits() != w) throw InvalidInput("frequency register width mismatch");
  std::vector<Amp> amps(std::uint64_t{1} << (2 * w), 0.0);
  // Field register starts at the element 1, i.e. qubit w set.
  for (std::uint64_t j = 0; j < freq.dimension(); ++j) amps[j | (std::uint64_t{1} << w)] = freq.amplitude(j);
  auto s = DenseState::from_amplitudes(2 * w, std::move(amps));
  for (unsigned k = 0; k < w; ++k) {
    const auto cu = controlled(build_u_pow2k(ctx, k));
    std::vector<unsigned> map(w + 1);
    for (unsigned i = 0; i < w; ++i) map[i] = w + i;
    map[w] = k;
    apply_circuit(s, cu, map);
  }
  return s;
}

SparseState entangle_powers_semantic(const DenseState& freq, const FieldCtx& ctx) {
  const unsigned w = checked_width(ctx, 14);
  if (freq.num_qubits() != w) throw InvalidInput("frequency register width mismatch");
  SparseState s({w, w});
  s.clear();
  const auto one = s.reg(1).insert(0, ctx.one());
  for (std::uint64_t j = 0; j < freq.dimension(); ++j) s.set(j | one, freq.amplitude(j));
  const auto x = ctx.x();
  apply_basis_map(s, [&](std::uint64_t key) {
    const std::uint64_t j = key & ((std::uint64_t{1} << w) - 1);
    const std::uint64_t b = key >> w;
    return j | (ctx.mul(ctx.pow(x, j), b) << w);
  });
  return s;
}

TrialRecord measure_frequency(const SparseState& entangled, const FieldCtx& ctx, CounterRng& rng) {
  const auto N = group_order(ctx);
  const auto m = dft_then_measure(entangled, 0, N, DftDirection::Inverse, rng);
  return make_record(m.value, N, rng);
}

TrialRecord measure_frequency(const DenseState& entangled, const FieldCtx& ctx, CounterRng& rng) {
  const auto N = group_order(ctx);
  const unsigned w = ctx.code_bits();
  DenseState s = entangled;
  dft_zn(s, RegisterSlice{0, w}, N, DftDirection::Inverse);
  const auto m = measure(std::move(s), RegisterSlice{0, w}, rng);
  return make_record(m.value, N, rng);
}

Verdict gcd_postprocess(const std::vector<TrialRecord>& records, const FieldCtx& ctx) {
  if (records.empty()) throw InvalidInput("gcd_postprocess needs at least one record");
  const auto N = group_order(ctx);
  std::uint64_t g = N;
  for (const auto& r : records) g = std::gcd(g, r.normalized_l == 0 ? N : r.normalized_l);
  Verdict v;
  v.g = g;
  v.trials = records.size();
  if (g == 1) {
    v.decision = Decision::Primitive;
    v.order = N;
    return v;
  }
  const auto candidate = N / g;
  if (ctx.pow(ctx.x(), candidate) == ctx.one()) {
    v.decision = candidate < N ? Decision::NotPrimitive : Decision::Primitive;
    v.order = candidate;
  }
  return v;
}

OrderTestResult test_primitivity(const FieldPtr& ctx, const OrderPolicy& policy) {
  if (policy.max_trials < 1) throw InvalidInput("max_trials must be at least 1");
  if (policy.shots < 1) throw InvalidInput("shots must be at least 1");
  const unsigned w = checked_width(*ctx, policy.backend == Backend::GateLevel ? 6 : 14);
  OrderTestResult out;
  out.width = w;
  out.N = group_order(*ctx);
  const CounterRng root(policy.seed);
  while (out.trials.size() < policy.max_trials) {
    for (std::size_t s = 0; s < policy.shots && out.trials.size() < policy.max_trials; ++s) {
      CounterRng rng = root.split(out.trials.size());
      auto prep = prepare_uniform_zn(w, rng);
      TrialRecord rec = policy.backend == Backend::GateLevel
                            ? measure_frequency(entangle_powers_gates(prep.state, *ctx), *ctx, rng)
                            : measure_frequency(entangle_powers_semantic(prep.state, *ctx), *ctx, rng);
      rec.retries = prep.retries;
      out.trials.push_back(rec);
    }
    out.verdict = gcd_postprocess(out.trials, *ctx);
    if (out.verdict.decision != Decision::Undecided) break;
  }
  return out;
}

OrderTestResult test_primitivity(const BitPoly& p, const OrderPolicy& policy) {
  if (p.degree() < 1) throw InvalidInput("polynomial degree must be at least 1");
  if (!irreducible_test(p)) throw InvalidInput("polynomial " + p.to_hex() + " is reducible");
  return test_primitivity(FieldCtx::binary(p, false), policy);
}

}  // namespace primq

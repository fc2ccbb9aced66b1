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
#include <optional>
#include <string_view>
#include <vector>

#include "primq/bitpoly.hpp"
#include "primq/ffield.hpp"
#include "primq/rng.hpp"
#include "primq/sim.hpp"

namespace primq {

struct TrialRecord {
  std::uint64_t l = 0;
  std::uint64_t normalized_l = 0;  // l, or N when l = 0
  std::uint64_t retries = 0;       // failed ancilla postselections
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

enum class Decision { Primitive, NotPrimitive, Undecided };
std::string_view decision_name(Decision d);

struct Verdict {
  Decision decision = Decision::Undecided;
  std::uint64_t g = 0;
  std::size_t trials = 0;
  std::optional<std::uint64_t> order;  // set when decided
};

enum class Backend { GateLevel, Semantic };

/// Frequency register over width qubits holding the uniform superposition of
/// 0..2^width-2, obtained by postselecting an MCX ancilla on 0.
struct PreparedRegister {
  DenseState state;
  std::uint64_t retries = 0;
};

/// 2 <= width <= 14.
PreparedRegister prepare_uniform_zn(unsigned width, CounterRng& rng);

/// Gate-level step 4: controlled U_x^{2^k} networks on a 2w-qubit register
/// (frequency qubits 0..w-1, field qubits w..2w-1). w <= 6.
DenseState entangle_powers_gates(const DenseState& freq, const FieldCtx& ctx);

/// Semantic step 4: the basis map (j, b) -> (j, x^j b) on registers {w, w}.
/// w <= 14.
SparseState entangle_powers_semantic(const DenseState& freq, const FieldCtx& ctx);

/// Inverse-kernel DFT on the frequency register followed by its measurement.
TrialRecord measure_frequency(const SparseState& entangled, const FieldCtx& ctx, CounterRng& rng);
TrialRecord measure_frequency(const DenseState& entangled, const FieldCtx& ctx, CounterRng& rng);

/// Throws InvalidInput for an empty record list.
Verdict gcd_postprocess(const std::vector<TrialRecord>& records, const FieldCtx& ctx);

struct OrderPolicy {
  std::size_t max_trials = 32;
  std::size_t shots = 1;  // runs per round before the gcd is re-evaluated
  std::uint64_t seed = 0;
  Backend backend = Backend::Semantic;
};

struct OrderTestResult {
  Verdict verdict;
  std::vector<TrialRecord> trials;
  unsigned width = 0;
  std::uint64_t N = 0;
};

/// Algorithm 1 on a characteristic-2 field whose element register has at
/// most 14 bits. Throws InvalidInput when the modulus is reducible.
OrderTestResult test_primitivity(const FieldPtr& ctx, const OrderPolicy& policy);
OrderTestResult test_primitivity(const BitPoly& p, const OrderPolicy& policy);

/// Qubits used by the Algorithm-1 layout: two width-n registers and one ancilla.
constexpr unsigned order_finding_qubits(unsigned n) { return 2 * n + 1; }
/// The three-register layout of Shor-style order finding.
constexpr unsigned shor_layout_qubits(unsigned n) { return 3 * n; }

}  // namespace primq

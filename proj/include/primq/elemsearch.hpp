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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primq/ffield.hpp"
#include "primq/rng.hpp"
#include "primq/sim.hpp"

namespace primq {

/// The superposition over powers a^0, ..., a^{q^n-1} after the last
/// multiplication stage, as a single field register.
struct GroupState {
  FFElem generator;
  SparseState state;
  unsigned stage = 0;
  /// Element code -> number of exponents in 0..q^n-1 landing on it.
  std::map<std::uint64_t, std::uint64_t> profile;
};

/// a != 0, its conjugates are distinct, and a^{(q^n-1)/d} != 1 for every
/// prime d <= D dividing q^n - 1.
bool prefilter(const FFElem& a, std::uint64_t D);

/// Frobenius images and reversible multiplications c <- c + g*s on three
/// registers, keeping the product register after each stage. q^n <= 2^20.
/// Throws DomainError for a = 0.
GroupState build_group_state(const FFElem& a);

struct ShiftOutcome {
  int outcome = 0;          // control-qubit result
  double probability = 0;   // of the observed result
  double prob_zero = 0;
  Amp overlap;              // <psi|P_w|psi>
  SparseState post_state;
};

/// <psi|P_w|psi> with P_w|u> = |u + w>.
Amp shift_overlap(const SparseState& psi, const FieldCtx& ctx, std::uint64_t w);

/// Hadamard test of the controlled shift P_w. Throws InvalidInput for w = 0.
ShiftOutcome shift_test(const SparseState& psi, const FFElem& w, CounterRng& rng);
ShiftOutcome shift_test(const GroupState& g, const FFElem& w, CounterRng& rng);

struct HadamardOutcome {
  bool all_zero = false;
  double probability = 0;  // of the observed result
  double prob_all_zero = 0;
};

/// |<s|psi>|^2 = |sum of amplitudes|^2 / q^n. Characteristic 2 only.
double hadamard_all_probability(const SparseState& psi, const FieldCtx& ctx);
/// Same quantity from H on every qubit of a dense copy (at most 20 qubits).
double hadamard_all_probability_dense(const SparseState& psi, const FieldCtx& ctx);
/// Throws UnsupportedSize outside characteristic 2.
HadamardOutcome hadamard_all_test(const GroupState& g, CounterRng& rng);

/// Order of a by repeated multiplication (no factorization). At most 2^24.
std::uint64_t enumerate_order(const FFElem& a);

/// #{(i, j) : a^i + a^j = w, 0 <= i, j < ord(a)}.
std::uint64_t solution_count_K(const FFElem& a, const FFElem& w);

/// |K - r^2 (Q - 2) / Q^2| and sqrt(Q - 1) for Q = q^n.
struct WeilCheck {
  double deviation;
  double bound;
  bool holds() const { return deviation < bound; }
};
WeilCheck weil_check(std::uint64_t K, std::uint64_t r, std::uint64_t field_size);

struct SearchPolicy {
  std::uint64_t D = 7;
  std::size_t L = 3;
  std::size_t shift_repeats = 0;  // 0 selects ceil(log2 D)
  std::uint64_t seed = 0;
  std::size_t max_candidates = 10000;
};

enum class CandidateStatus { Filtered, Discarded, Rejected, Accepted };
std::string_view status_name(CandidateStatus s);

struct TestEvidence {
  std::size_t candidate = 0;
  std::uint64_t element = 0;
  int stage = 0;  // 1 prefilter, 4 shift by 1, 5 random shift
  std::size_t repetition = 0;
  std::uint64_t w = 0;
  int outcome = 0;
  double probability = 0;
};

struct CandidateSummary {
  std::size_t candidate = 0;
  std::uint64_t element = 0;
  CandidateStatus status = CandidateStatus::Filtered;
};

struct SearchResult {
  std::optional<FFElem> alpha;
  BasePoly minpoly;
  std::vector<TestEvidence> tests;
  std::vector<CandidateSummary> candidates;
  std::size_t candidates_tried = 0;
};

/// Random search with the quantum group-state tests. A 1 on the shift by 1
/// only discards the candidate; in characteristic 2 a 1 on a later random
/// shift proves non-primitivity and rejects it. Throws SearchFailed after
/// max_candidates candidates without acceptance.
SearchResult search_primitive_element(const FieldPtr& ctx, const SearchPolicy& policy);

/// Hex of a polynomial over GF(q) with ceil(log2 q) bits per coefficient.
std::string poly_hex(const FieldCtx& ctx, const BasePoly& p);

}  // namespace primq

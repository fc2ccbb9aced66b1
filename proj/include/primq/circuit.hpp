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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "primq/bitpoly.hpp"
#include "primq/ffield.hpp"

namespace primq {

enum class GateKind { X, H, CNOT, SWAP, MCX, PHASE };

std::string_view gate_name(GateKind kind);

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<unsigned> controls;
  std::vector<unsigned> targets;
  bool relative_phase = false;  // MCX: apply i*Y instead of X on the target
  unsigned phase_k = 0;         // PHASE: diag(1, exp(2*pi*i / 2^k)), 1 <= k <= 64

  static Gate x(unsigned q);
  static Gate h(unsigned q);
  static Gate cnot(unsigned control, unsigned target);
  static Gate swap(unsigned a, unsigned b);
  static Gate mcx(std::vector<unsigned> controls, unsigned target, bool relative_phase = false);
  static Gate phase(unsigned k, unsigned q);

  std::vector<unsigned> operands() const;
  /// Maps basis states to basis states (up to a phase).
  bool classical() const { return kind != GateKind::H && kind != GateKind::PHASE; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a fixed number of qubits. Qubit i carries bit i of
/// the basis index, so for field registers qubit i holds the coefficient of x^i.
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits = 0, std::string label = {});

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Throws InvalidInput on out-of-range or repeated operands.
  Circuit& append(Gate g);
  /// Appends other with its qubit i relabelled to qubit_map[i].
  Circuit& append(const Circuit& other, std::span<const unsigned> qubit_map);
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned num_qubits_;
  std::vector<Gate> gates_;
  std::string label_;
  std::vector<std::string> warnings_;
};

struct GateCounts {
  std::size_t x = 0, h = 0, cnot = 0, swap = 0, mcx = 0, phase = 0;
  std::size_t total = 0;
  /// Greedy layering: each gate sits one layer above the latest gate sharing a qubit.
  std::size_t depth = 0;

  std::size_t of(GateKind kind) const;
};

GateCounts gate_counts(const Circuit& c);

/// Resource estimate for a relative-phase multiple-control Toffoli acting on
/// n qubits (controls plus target). Accounting only.
struct McxCosts {
  std::uint64_t t_gates;
  std::uint64_t cnot_gates;
  std::uint64_t hadamard_gates;
  std::uint64_t ancillas;

  friend bool operator==(const McxCosts&, const McxCosts&) = default;
};
McxCosts mcx_costs(unsigned n);

/// Multiplication by x modulo p(x) over GF(2): |p|-2 CNOTs controlled by
/// qubit n-1 followed by n-1 neighbouring SWAPs that rotate the register.
/// Throws InvalidInput when p(0) = 0; a reducible p is accepted with a warning.
Circuit build_ux(const BitPoly& modulus);
Circuit build_ux(const FieldCtx& ctx);

/// Multiplication by x^{2^k}, synthesized from its GF(2) matrix. k = 0 on a
/// binary context returns build_ux.
Circuit build_u_pow2k(const FieldCtx& ctx, unsigned k);

/// Multiplication by a fixed nonzero element of a characteristic-2 field.
Circuit build_multiplier(const FieldCtx& ctx, std::uint64_t factor);

/// CNOT/SWAP network for the invertible GF(2) map whose column j is the image
/// of basis vector e_j. Throws InvalidInput for a singular matrix.
Circuit synthesize_linear_map(std::span<const std::uint64_t> columns, std::string label = {});

/// Adds one control qubit (index c.num_qubits()) to a classical circuit.
Circuit controlled(const Circuit& c);

/// Basis permutation induced by a classical circuit (at most 24 qubits).
/// Throws NotClassicalError if the circuit contains H or PHASE.
std::vector<std::uint64_t> permutation_of(const Circuit& c);

/// Line format, one gate per line: "CNOT 4 2", "SWAP 3 4",
/// "MCX 0 1 2 3 -> 4", "RMCX 0 1 -> 2" (relative phase), "PHASE(3) 0".
/// Header comments carry the qubit count, label and warnings.
std::string to_text(const Circuit& c);
Circuit circuit_from_text(std::string_view text);

nlohmann::json to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace primq

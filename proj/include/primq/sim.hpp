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

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "json.hpp"
#include "primq/circuit.hpp"
#include "primq/rng.hpp"

namespace primq {

using Amp = std::complex<double>;

/// Amplitudes with magnitude below this are dropped from sparse states.
inline constexpr double kPruneThreshold = 1e-12;

/// A contiguous bit field [offset, offset + width) of a basis index.
struct RegisterSlice {
  unsigned offset = 0;
  unsigned width = 0;

  std::uint64_t mask() const { return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1; }
  std::uint64_t extract(std::uint64_t key) const { return key >> offset & mask(); }
  std::uint64_t insert(std::uint64_t key, std::uint64_t value) const {
    return (key & ~(mask() << offset)) | ((value & mask()) << offset);
  }
};

/// Full statevector. Qubit i is bit i of the basis index.
class DenseState {
 public:
  /// The basis state |basis>. At most 28 qubits.
  explicit DenseState(unsigned num_qubits, std::uint64_t basis = 0);
  /// Throws InvalidInput unless amps has 2^num_qubits entries.
  static DenseState from_amplitudes(unsigned num_qubits, std::vector<Amp> amps);

  unsigned num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return amps_.size(); }
  const std::vector<Amp>& amplitudes() const { return amps_; }
  std::vector<Amp>& mutable_amplitudes() { return amps_; }
  Amp amplitude(std::uint64_t index) const { return amps_.at(index); }
  double norm2() const;
  void normalize();

 private:
  unsigned num_qubits_;
  std::vector<Amp> amps_;
};

/// Amplitude map over packed registers. Register i occupies the bits after
/// registers 0..i-1. Iteration is in increasing key order.
class SparseState {
 public:
  /// Starts in the all-zero basis state.
  explicit SparseState(std::vector<unsigned> register_widths);
  static SparseState basis(std::vector<unsigned> register_widths, std::span<const std::uint64_t> values);

  const std::vector<unsigned>& widths() const { return widths_; }
  std::size_t num_registers() const { return widths_.size(); }
  RegisterSlice reg(std::size_t i) const;
  unsigned total_bits() const;

  std::uint64_t pack(std::span<const std::uint64_t> values) const;
  std::vector<std::uint64_t> unpack(std::uint64_t key) const;

  const std::map<std::uint64_t, Amp>& amplitudes() const { return amps_; }
  Amp amplitude(std::uint64_t key) const;
  /// Stores a, or erases the key when |a| is below the prune threshold.
  void set(std::uint64_t key, Amp a);
  void clear() { amps_.clear(); }
  std::size_t support_size() const { return amps_.size(); }
  double norm2() const;
  void normalize();

 private:
  std::vector<unsigned> widths_;
  std::map<std::uint64_t, Amp> amps_;
};

/// Throws InvalidInput when an operand is outside the state.
void apply_gate(DenseState& s, const Gate& g);
/// Runs c with its qubit i placed on state qubit qubit_map[i] (identity when empty).
void apply_circuit(DenseState& s, const Circuit& c, std::span<const unsigned> qubit_map = {});
/// Sparse execution of X, CNOT, SWAP, MCX, H and PHASE on bit positions of the key.
void apply_gate(SparseState& s, const Gate& g);
void apply_circuit(SparseState& s, const Circuit& c, std::span<const unsigned> qubit_map = {});

using BasisMap = std::function<std::uint64_t(std::uint64_t)>;

/// Relocates amplitudes |k> -> |f(k)>. Throws NonInjectiveError on a collision
/// within the support and InvalidInput when an image leaves the state.
void apply_basis_map(DenseState& s, const BasisMap& f);
void apply_basis_map(SparseState& s, const BasisMap& f);

/// Kernel sign: Forward uses exp(-2 pi i jl/N), Inverse exp(+2 pi i jl/N).
enum class DftDirection { Forward, Inverse };

/// Exact unitary N-point DFT on one register, independently for every value
/// of the remaining bits. Throws PreconditionError when that register has
/// amplitude at an index >= N.
void dft_zn(DenseState& s, RegisterSlice reg, std::uint64_t N, DftDirection dir);
void dft_zn(SparseState& s, std::size_t reg, std::uint64_t N, DftDirection dir);

template <class State>
struct Measurement {
  std::uint64_t value = 0;
  double probability = 0;
  State post_state;
  std::uint64_t rng_position = 0;  // generator position after sampling
};

/// Born-rule measurement of one register; collapses and renormalizes.
Measurement<DenseState> measure(DenseState s, RegisterSlice reg, CounterRng& rng);
Measurement<SparseState> measure(SparseState s, std::size_t reg, CounterRng& rng);

/// dft_zn on register reg followed by its measurement, computed from the
/// marginal distribution without materializing the full transformed state.
Measurement<SparseState> dft_then_measure(const SparseState& s, std::size_t reg, std::uint64_t N, DftDirection dir,
                                          CounterRng& rng);

/// Marginal distribution of a register after dft_zn, one entry per l < N.
std::vector<double> dft_marginal(const SparseState& s, std::size_t reg, std::uint64_t N, DftDirection dir);

/// <a|b>. Throws InvalidInput on a register-width mismatch.
Amp inner_product(const SparseState& a, const SparseState& b);

/// Single-register state whose amplitude at v is the sum of amplitudes over
/// keys whose register reg holds v, renormalized. Throws DomainError when the
/// sum vanishes.
SparseState retain_register(const SparseState& s, std::size_t reg);

SparseState to_sparse(const DenseState& s, std::vector<unsigned> register_widths);
DenseState to_dense(const SparseState& s);

/// [[index hex, re, im], ...] sorted by index, zero amplitudes omitted.
nlohmann::json dump_json(const DenseState& s);
nlohmann::json dump_json(const SparseState& s);

}  // namespace primq

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

#include "primq/sim.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "primq/errors.hpp"

namespace primq {
namespace {

constexpr unsigned kMaxDenseQubits = 28;

std::uint64_t bit(unsigned q) { return std::uint64_t{1} << q; }

// Basis image and phase of a classical gate.
std::pair<std::uint64_t, Amp> classical_action(const Gate& g, std::uint64_t k) {
  switch (g.kind) {
    case GateKind::X: return {k ^ bit(g.targets[0]), 1.0};
    case GateKind::CNOT: return {(k >> g.controls[0] & 1) ? k ^ bit(g.targets[0]) : k, 1.0};
    case GateKind::MCX: {
      for (auto c : g.controls)
        if (!(k >> c & 1)) return {k, 1.0};
      const unsigned t = g.targets[0];
      if (!g.relative_phase) return {k ^ bit(t), 1.0};
      // Y: |0> -> i|1>, |1> -> -i|0>.
      return {k ^ bit(t), (k >> t & 1) ? Amp(0, -1) : Amp(0, 1)};
    }
    case GateKind::SWAP: {
      const auto a = g.targets[0], b = g.targets[1];
      if ((k >> a & 1) != (k >> b & 1)) return {k ^ bit(a) ^ bit(b), 1.0};
      return {k, 1.0};
    }
    default: throw NotClassicalError("gate has no basis action");
  }
}

Amp phase_factor(unsigned k) { return std::polar(1.0, std::ldexp(2 * std::numbers::pi, -static_cast<int>(k))); }

void check_operands(const Gate& g, unsigned width) {
  for (auto q : g.operands())
    if (q >= width) throw InvalidInput("gate operand " + std::to_string(q) + " outside the state");
}

Gate remap(Gate g, std::span<const unsigned> qubit_map) {
  if (qubit_map.empty()) return g;
  for (auto& q : g.controls) q = qubit_map[q];
  for (auto& q : g.targets) q = qubit_map[q];
  return g;
}

std::vector<Amp> twiddles(std::uint64_t N, DftDirection dir) {
  const double sign = dir == DftDirection::Inverse ? 1.0 : -1.0;
  std::vector<Amp> w(N);
  for (std::uint64_t k = 0; k < N; ++k)
    w[k] = std::polar(1.0, sign * 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N));
  return w;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t N) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % N);
}

void check_dft_size(std::uint64_t N, unsigned width) {
  if (N < 1) throw InvalidInput("DFT size must be positive");
  if (width < 64 && N > (std::uint64_t{1} << width)) throw InvalidInput("DFT size exceeds the register");
  if (N > (std::uint64_t{1} << 24)) throw UnsupportedSize("exact DFT limited to N <= 2^24");
}

// Entries of a sparse state grouped by the bits outside one register.
using Groups = std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Amp>>>;

Groups group_by_rest(const SparseState& s, RegisterSlice r, std::uint64_t N) {
  Groups groups;
  for (const auto& [key, a] : s.amplitudes()) {
    const auto j = r.extract(key);
    if (j >= N) throw PreconditionError("register amplitude outside 0..N-1");
    groups[r.insert(key, 0)].emplace_back(j, a);
  }
  return groups;
}

Amp group_transform(const std::vector<std::pair<std::uint64_t, Amp>>& entries, std::uint64_t l, std::uint64_t N,
                    const std::vector<Amp>& w) {
  Amp acc = 0;
  for (const auto& [j, a] : entries) acc += a * w[mulmod(j, l, N)];
  return acc;
}

std::uint64_t sample_index(const std::vector<double>& probs, double total, CounterRng& rng) {
  const double u = rng.uniform01() * total;
  double cum = 0;
  std::uint64_t last = probs.size();
  for (std::uint64_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0) continue;
    cum += probs[i];
    last = i;
    if (u < cum) return i;
  }
  if (last == probs.size()) throw DomainError("cannot sample from a zero state");
  return last;
}

}  // namespace

DenseState::DenseState(unsigned num_qubits, std::uint64_t basis) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxDenseQubits) throw UnsupportedSize("dense states limited to 28 qubits");
  amps_.assign(std::uint64_t{1} << num_qubits, 0.0);
  amps_.at(basis) = 1.0;
}

DenseState DenseState::from_amplitudes(unsigned num_qubits, std::vector<Amp> amps) {
  DenseState s(num_qubits);
  if (amps.size() != s.amps_.size()) throw InvalidInput("amplitude vector has the wrong length");
  s.amps_ = std::move(amps);
  return s;
}

double DenseState::norm2() const {
  double t = 0;
  for (const auto& a : amps_) t += std::norm(a);
  return t;
}

void DenseState::normalize() {
  const double n = std::sqrt(norm2());
  if (n == 0) throw DomainError("cannot normalize a zero state");
  for (auto& a : amps_) a /= n;
}

SparseState::SparseState(std::vector<unsigned> register_widths) : widths_(std::move(register_widths)) {
  if (total_bits() > 64) throw UnsupportedSize("sparse keys limited to 64 bits");
  amps_[0] = 1.0;
}

SparseState SparseState::basis(std::vector<unsigned> register_widths, std::span<const std::uint64_t> values) {
  SparseState s(std::move(register_widths));
  s.amps_.clear();
  s.amps_[s.pack(values)] = 1.0;
  return s;
}

RegisterSlice SparseState::reg(std::size_t i) const {
  if (i >= widths_.size()) throw InvalidInput("register index out of range");
  unsigned off = 0;
  for (std::size_t k = 0; k < i; ++k) off += widths_[k];
  return {off, widths_[i]};
}

unsigned SparseState::total_bits() const { return std::accumulate(widths_.begin(), widths_.end(), 0u); }

std::uint64_t SparseState::pack(std::span<const std::uint64_t> values) const {
  if (values.size() != widths_.size()) throw InvalidInput("register count mismatch");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto r = reg(i);
    if ((values[i] & ~r.mask()) != 0) throw InvalidInput("register value too wide");
    key = r.insert(key, values[i]);
  }
  return key;
}

std::vector<std::uint64_t> SparseState::unpack(std::uint64_t key) const {
  std::vector<std::uint64_t> v(widths_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = reg(i).extract(key);
  return v;
}

Amp SparseState::amplitude(std::uint64_t key) const {
  auto it = amps_.find(key);
  return it == amps_.end() ? Amp{} : it->second;
}

void SparseState::set(std::uint64_t key, Amp a) {
  if (std::abs(a) < kPruneThreshold) amps_.erase(key);
  else amps_[key] = a;
}

double SparseState::norm2() const {
  double t = 0;
  for (const auto& [k, a] : amps_) t += std::norm(a);
  return t;
}

void SparseState::normalize() {
  const double n = std::sqrt(norm2());
  if (n == 0) throw DomainError("cannot normalize a zero state");
  for (auto& [k, a] : amps_) a /= n;
}

void apply_gate(DenseState& s, const Gate& g) {
  check_operands(g, s.num_qubits());
  auto& a = s.mutable_amplitudes();
  const auto dim = s.dimension();
  switch (g.kind) {
    case GateKind::H: {
      const auto t = bit(g.targets[0]);
      const double r = std::numbers::sqrt2 / 2;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & t) continue;
        const Amp a0 = a[i], a1 = a[i | t];
        a[i] = r * (a0 + a1);
        a[i | t] = r * (a0 - a1);
      }
      return;
    }
    case GateKind::PHASE: {
      const auto t = bit(g.targets[0]);
      const Amp ph = phase_factor(g.phase_k);
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & t) a[i] *= ph;
      return;
    }
    default: {
      std::vector<Amp> out(dim, 0.0);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (a[i] == Amp{}) continue;
        const auto [j, ph] = classical_action(g, i);
        out[j] = ph * a[i];
      }
      a = std::move(out);
    }
  }
}

void apply_circuit(DenseState& s, const Circuit& c, std::span<const unsigned> qubit_map) {
  if (!qubit_map.empty() && qubit_map.size() != c.num_qubits()) throw InvalidInput("qubit map size mismatch");
  for (const auto& g : c.gates()) apply_gate(s, remap(g, qubit_map));
}

void apply_gate(SparseState& s, const Gate& g) {
  check_operands(g, s.total_bits());
  std::map<std::uint64_t, Amp> acc;
  switch (g.kind) {
    case GateKind::H: {
      const auto t = bit(g.targets[0]);
      const double r = std::numbers::sqrt2 / 2;
      for (const auto& [k, a] : s.amplitudes()) {
        acc[k & ~t] += r * a;
        acc[k | t] += (k & t) ? -r * a : r * a;
      }
      break;
    }
    case GateKind::PHASE: {
      const auto t = bit(g.targets[0]);
      const Amp ph = phase_factor(g.phase_k);
      for (const auto& [k, a] : s.amplitudes()) acc[k] = (k & t) ? a * ph : a;
      break;
    }
    default:
      for (const auto& [k, a] : s.amplitudes()) {
        const auto [j, ph] = classical_action(g, k);
        acc[j] = ph * a;
      }
  }
  s.clear();
  for (const auto& [k, a] : acc) s.set(k, a);
}

void apply_circuit(SparseState& s, const Circuit& c, std::span<const unsigned> qubit_map) {
  if (!qubit_map.empty() && qubit_map.size() != c.num_qubits()) throw InvalidInput("qubit map size mismatch");
  for (const auto& g : c.gates()) apply_gate(s, remap(g, qubit_map));
}

void apply_basis_map(DenseState& s, const BasisMap& f) {
  auto& a = s.mutable_amplitudes();
  std::vector<Amp> out(a.size(), 0.0);
  std::vector<bool> hit(a.size(), false);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (a[i] == Amp{}) continue;
    const auto j = f(i);
    if (j >= a.size()) throw InvalidInput("basis map image outside the state");
    if (hit[j]) throw NonInjectiveError("basis map collides on the support");
    hit[j] = true;
    out[j] = a[i];
  }
  a = std::move(out);
}

void apply_basis_map(SparseState& s, const BasisMap& f) {
  const auto bits = s.total_bits();
  std::map<std::uint64_t, Amp> out;
  for (const auto& [k, a] : s.amplitudes()) {
    const auto j = f(k);
    if (bits < 64 && (j >> bits) != 0) throw InvalidInput("basis map image outside the registers");
    if (!out.emplace(j, a).second) throw NonInjectiveError("basis map collides on the support");
  }
  s.clear();
  for (const auto& [k, a] : out) s.set(k, a);
}

void dft_zn(DenseState& s, RegisterSlice reg, std::uint64_t N, DftDirection dir) {
  if (reg.offset + reg.width > s.num_qubits()) throw InvalidInput("register outside the state");
  check_dft_size(N, reg.width);
  auto& a = s.mutable_amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i)
    if (reg.extract(i) >= N && std::abs(a[i]) >= kPruneThreshold)
      throw PreconditionError("register amplitude outside 0..N-1");
  const auto w = twiddles(N, dir);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  std::vector<Amp> in(N), out(N);
  for (std::uint64_t base = 0; base < a.size(); ++base) {
    if (reg.extract(base) != 0) continue;
    bool any = false;
    for (std::uint64_t j = 0; j < N; ++j) {
      in[j] = a[reg.insert(base, j)];
      any = any || in[j] != Amp{};
    }
    if (!any) continue;
    for (std::uint64_t l = 0; l < N; ++l) {
      Amp acc = 0;
      for (std::uint64_t j = 0; j < N; ++j)
        if (in[j] != Amp{}) acc += in[j] * w[mulmod(j, l, N)];
      out[l] = acc * scale;
    }
    for (std::uint64_t l = 0; l < N; ++l) a[reg.insert(base, l)] = out[l];
  }
}

void dft_zn(SparseState& s, std::size_t reg, std::uint64_t N, DftDirection dir) {
  const auto r = s.reg(reg);
  check_dft_size(N, r.width);
  const auto groups = group_by_rest(s, r, N);
  const auto w = twiddles(N, dir);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  s.clear();
  for (const auto& [rest, entries] : groups)
    for (std::uint64_t l = 0; l < N; ++l) s.set(r.insert(rest, l), group_transform(entries, l, N, w) * scale);
}

Measurement<DenseState> measure(DenseState s, RegisterSlice reg, CounterRng& rng) {
  if (reg.offset + reg.width > s.num_qubits()) throw InvalidInput("register outside the state");
  std::vector<double> probs(std::uint64_t{1} << reg.width, 0.0);
  const auto& a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) probs[reg.extract(i)] += std::norm(a[i]);
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  const auto v = sample_index(probs, total, rng);
  auto& m = s.mutable_amplitudes();
  for (std::uint64_t i = 0; i < m.size(); ++i)
    if (reg.extract(i) != v) m[i] = 0;
  s.normalize();
  return {v, probs[v] / total, std::move(s), rng.position()};
}

Measurement<SparseState> measure(SparseState s, std::size_t reg, CounterRng& rng) {
  const auto r = s.reg(reg);
  std::map<std::uint64_t, double> marginal;
  for (const auto& [k, a] : s.amplitudes()) marginal[r.extract(k)] += std::norm(a);
  std::vector<std::uint64_t> values;
  std::vector<double> probs;
  for (const auto& [v, p] : marginal) {
    values.push_back(v);
    probs.push_back(p);
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  const auto idx = sample_index(probs, total, rng);
  const auto v = values[idx];
  SparseState post(s.widths());
  post.clear();
  for (const auto& [k, a] : s.amplitudes())
    if (r.extract(k) == v) post.set(k, a);
  post.normalize();
  return {v, probs[idx] / total, std::move(post), rng.position()};
}

std::vector<double> dft_marginal(const SparseState& s, std::size_t reg, std::uint64_t N, DftDirection dir) {
  const auto r = s.reg(reg);
  check_dft_size(N, r.width);
  const auto groups = group_by_rest(s, r, N);
  // P(l) = (1/N) sum_d C(d) w^{dl} with C(d) the summed autocorrelation
  // sum a_j conj(a_j') over pairs in one group with j - j' = d mod N.
  std::map<std::uint64_t, Amp> corr;
  for (const auto& [rest, entries] : groups)
    for (const auto& [j, a] : entries)
      for (const auto& [k, b] : entries) corr[(j + N - k) % N] += a * std::conj(b);
  const auto w = twiddles(N, dir);
  std::vector<double> probs(N, 0.0);
  for (std::uint64_t l = 0; l < N; ++l) {
    Amp acc = 0;
    for (const auto& [d, c] : corr) acc += c * w[mulmod(d, l, N)];
    probs[l] = std::max(0.0, acc.real()) / static_cast<double>(N);
  }
  return probs;
}

Measurement<SparseState> dft_then_measure(const SparseState& s, std::size_t reg, std::uint64_t N, DftDirection dir,
                                          CounterRng& rng) {
  const auto probs = dft_marginal(s, reg, N, dir);
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  const auto l = sample_index(probs, total, rng);
  const auto r = s.reg(reg);
  const auto groups = group_by_rest(s, r, N);
  const auto w = twiddles(N, dir);
  SparseState post(s.widths());
  post.clear();
  for (const auto& [rest, entries] : groups) post.set(r.insert(rest, l), group_transform(entries, l, N, w));
  post.normalize();
  return {l, probs[l] / total, std::move(post), rng.position()};
}

Amp inner_product(const SparseState& a, const SparseState& b) {
  if (a.widths() != b.widths()) throw InvalidInput("register widths differ");
  Amp acc = 0;
  const auto& small = a.support_size() <= b.support_size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (const auto& [k, v] : small.amplitudes()) {
    const Amp w = large.amplitude(k);
    if (w == Amp{}) continue;
    acc += &small == &a ? std::conj(v) * w : std::conj(w) * v;
  }
  return acc;
}

SparseState retain_register(const SparseState& s, std::size_t reg) {
  const auto r = s.reg(reg);
  std::map<std::uint64_t, Amp> acc;
  for (const auto& [k, a] : s.amplitudes()) acc[r.extract(k)] += a;
  SparseState out({r.width});
  out.clear();
  for (const auto& [v, a] : acc) out.set(v, a);
  if (out.support_size() == 0) throw DomainError("retained register has no amplitude");
  out.normalize();
  return out;
}

SparseState to_sparse(const DenseState& s, std::vector<unsigned> register_widths) {
  SparseState out(std::move(register_widths));
  if (out.total_bits() != s.num_qubits()) throw InvalidInput("register widths do not cover the state");
  out.clear();
  const auto& a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) out.set(i, a[i]);
  return out;
}

DenseState to_dense(const SparseState& s) {
  DenseState out(s.total_bits());
  auto& a = out.mutable_amplitudes();
  a[0] = 0;
  for (const auto& [k, v] : s.amplitudes()) a[k] = v;
  return out;
}

namespace {
std::string hex_index(std::uint64_t i) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(i));
  return buf;
}
}  // namespace

nlohmann::json dump_json(const DenseState& s) {
  auto j = nlohmann::json::array();
  const auto& a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i]) >= kPruneThreshold) j.push_back({hex_index(i), a[i].real(), a[i].imag()});
  return j;
}

nlohmann::json dump_json(const SparseState& s) {
  auto j = nlohmann::json::array();
  for (const auto& [k, a] : s.amplitudes()) j.push_back({hex_index(k), a.real(), a.imag()});
  return j;
}

}  // namespace primq

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

#include "primq/circuit.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "primq/errors.hpp"

namespace primq {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::MCX: return "MCX";
    case GateKind::PHASE: return "PHASE";
  }
  return "?";
}

Gate Gate::x(unsigned q) { return {GateKind::X, {}, {q}}; }
Gate Gate::h(unsigned q) { return {GateKind::H, {}, {q}}; }
Gate Gate::cnot(unsigned control, unsigned target) { return {GateKind::CNOT, {control}, {target}}; }
Gate Gate::swap(unsigned a, unsigned b) { return {GateKind::SWAP, {}, {a, b}}; }

Gate Gate::mcx(std::vector<unsigned> controls, unsigned target, bool relative_phase) {
  if (controls.empty()) throw InvalidInput("MCX needs at least one control");
  return {GateKind::MCX, std::move(controls), {target}, relative_phase};
}

Gate Gate::phase(unsigned k, unsigned q) {
  if (k < 1 || k > 64) throw InvalidInput("PHASE(k) requires 1 <= k <= 64");
  return {GateKind::PHASE, {}, {q}, false, k};
}

std::vector<unsigned> Gate::operands() const {
  std::vector<unsigned> ops = controls;
  ops.insert(ops.end(), targets.begin(), targets.end());
  return ops;
}

Circuit::Circuit(unsigned num_qubits, std::string label) : num_qubits_(num_qubits), label_(std::move(label)) {}

Circuit& Circuit::append(Gate g) {
  auto ops = g.operands();
  for (auto q : ops)
    if (q >= num_qubits_) throw InvalidInput("gate operand " + std::to_string(q) + " out of range");
  std::sort(ops.begin(), ops.end());
  if (std::adjacent_find(ops.begin(), ops.end()) != ops.end()) throw InvalidInput("gate operands must be distinct");
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other, std::span<const unsigned> qubit_map) {
  if (qubit_map.size() != other.num_qubits()) throw InvalidInput("qubit map size mismatch");
  for (Gate g : other.gates()) {
    for (auto& q : g.controls) q = qubit_map[q];
    for (auto& q : g.targets) q = qubit_map[q];
    append(std::move(g));
  }
  return *this;
}

std::size_t GateCounts::of(GateKind kind) const {
  switch (kind) {
    case GateKind::X: return x;
    case GateKind::H: return h;
    case GateKind::CNOT: return cnot;
    case GateKind::SWAP: return swap;
    case GateKind::MCX: return mcx;
    case GateKind::PHASE: return phase;
  }
  return 0;
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  std::vector<std::size_t> layer(c.num_qubits(), 0);
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::X: ++counts.x; break;
      case GateKind::H: ++counts.h; break;
      case GateKind::CNOT: ++counts.cnot; break;
      case GateKind::SWAP: ++counts.swap; break;
      case GateKind::MCX: ++counts.mcx; break;
      case GateKind::PHASE: ++counts.phase; break;
    }
    ++counts.total;
    std::size_t top = 0;
    for (auto q : g.operands()) top = std::max(top, layer[q]);
    for (auto q : g.operands()) layer[q] = top + 1;
    counts.depth = std::max(counts.depth, top + 1);
  }
  return counts;
}

McxCosts mcx_costs(unsigned n) {
  if (n < 3) throw InvalidInput("mcx_costs requires n >= 3");
  return {8ull * n - 17, 6ull * n - 12, 4ull * n - 10, (n - 3 + 1) / 2};
}

Circuit build_ux(const BitPoly& modulus) {
  const int n = modulus.degree();
  if (n < 1) throw InvalidInput("modulus degree must be >= 1");
  if (!modulus.coeff(0)) throw InvalidInput("modulus must have constant term 1");
  Circuit c(static_cast<unsigned>(n), "U_x mod " + modulus.to_hex());
  if (!irreducible_test(modulus)) c.add_warning("reducible modulus");
  for (int k = 0; k <= n - 2; ++k)
    if (modulus.coeff(k + 1)) c.append(Gate::cnot(n - 1, k));
  for (int k = n - 2; k >= 0; --k) c.append(Gate::swap(k, k + 1));
  return c;
}

Circuit build_ux(const FieldCtx& ctx) {
  if (!ctx.is_binary()) throw InvalidInput("build_ux requires a GF(2)[x]/(p) context");
  return build_ux(ctx.modulus_bits());
}

Circuit synthesize_linear_map(std::span<const std::uint64_t> columns, std::string label) {
  const auto w = static_cast<unsigned>(columns.size());
  if (w > 64) throw UnsupportedSize("linear maps wider than 64 bits");
  std::vector<std::uint64_t> rows(w, 0);
  for (unsigned j = 0; j < w; ++j)
    for (unsigned i = 0; i < w; ++i)
      if (columns[j] >> i & 1) rows[i] |= std::uint64_t{1} << j;

  // Reduce to the identity with row operations; the circuit is their reverse.
  std::vector<Gate> ops;
  for (unsigned col = 0; col < w; ++col) {
    unsigned pivot = col;
    while (pivot < w && !(rows[pivot] >> col & 1)) ++pivot;
    if (pivot == w) throw InvalidInput("linear map is singular");
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      ops.push_back(Gate::swap(std::min(col, pivot), std::max(col, pivot)));
    }
    for (unsigned i = 0; i < w; ++i) {
      if (i != col && (rows[i] >> col & 1)) {
        rows[i] ^= rows[col];
        ops.push_back(Gate::cnot(col, i));
      }
    }
  }
  Circuit c(w, std::move(label));
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) c.append(*it);
  return c;
}

Circuit build_multiplier(const FieldCtx& ctx, std::uint64_t factor) {
  if (!ctx.characteristic_two()) throw InvalidInput("qubit multipliers need a characteristic-2 field");
  if (factor == 0 || !ctx.valid_code(factor)) throw InvalidInput("multiplier factor must be a nonzero element");
  std::vector<std::uint64_t> columns(ctx.code_bits());
  for (unsigned j = 0; j < columns.size(); ++j) columns[j] = ctx.mul(factor, std::uint64_t{1} << j);
  return synthesize_linear_map(columns, "mul by " + BitPoly(factor).to_hex());
}

Circuit build_u_pow2k(const FieldCtx& ctx, unsigned k) {
  if (!ctx.characteristic_two()) throw InvalidInput("build_u_pow2k needs a characteristic-2 field");
  if (k >= ctx.code_bits()) throw InvalidInput("k must be below the register width");
  if (k == 0 && ctx.is_binary()) return build_ux(ctx);
  std::uint64_t factor = ctx.x();
  for (unsigned i = 0; i < k; ++i) factor = ctx.mul(factor, factor);
  Circuit net = build_multiplier(ctx, factor);
  Circuit c(net.num_qubits(), "U_x^(2^" + std::to_string(k) + ")");
  std::vector<unsigned> id(net.num_qubits());
  for (unsigned i = 0; i < id.size(); ++i) id[i] = i;
  c.append(net, id);
  return c;
}

Circuit controlled(const Circuit& c) {
  const unsigned ctl = c.num_qubits();
  Circuit out(ctl + 1, c.label().empty() ? std::string{} : "c-" + c.label());
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::X: out.append(Gate::cnot(ctl, g.targets[0])); break;
      case GateKind::CNOT: out.append(Gate::mcx({ctl, g.controls[0]}, g.targets[0])); break;
      case GateKind::MCX: {
        std::vector<unsigned> cs{ctl};
        cs.insert(cs.end(), g.controls.begin(), g.controls.end());
        out.append(Gate::mcx(std::move(cs), g.targets[0], g.relative_phase));
        break;
      }
      case GateKind::SWAP: {
        const unsigned a = g.targets[0], b = g.targets[1];
        out.append(Gate::cnot(b, a));
        out.append(Gate::mcx({ctl, a}, b));
        out.append(Gate::cnot(b, a));
        break;
      }
      case GateKind::H:
      case GateKind::PHASE:
        throw NotClassicalError("controlled() only supports classical gates");
    }
  }
  return out;
}

std::vector<std::uint64_t> permutation_of(const Circuit& c) {
  if (c.num_qubits() > 24) throw UnsupportedSize("permutation tables limited to 24 qubits");
  for (const auto& g : c.gates())
    if (!g.classical()) throw NotClassicalError("circuit contains " + std::string(gate_name(g.kind)));
  std::vector<std::uint64_t> table(std::uint64_t{1} << c.num_qubits());
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    std::uint64_t v = s;
    for (const auto& g : c.gates()) {
      switch (g.kind) {
        case GateKind::X: v ^= std::uint64_t{1} << g.targets[0]; break;
        case GateKind::CNOT:
          if (v >> g.controls[0] & 1) v ^= std::uint64_t{1} << g.targets[0];
          break;
        case GateKind::MCX: {
          bool all = true;
          for (auto q : g.controls) all = all && (v >> q & 1);
          if (all) v ^= std::uint64_t{1} << g.targets[0];
          break;
        }
        case GateKind::SWAP: {
          const auto a = g.targets[0], b = g.targets[1];
          if ((v >> a & 1) != (v >> b & 1)) v ^= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
          break;
        }
        default: break;
      }
    }
    table[s] = v;
  }
  return table;
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "# qubits: " << c.num_qubits() << '\n';
  if (!c.label().empty()) os << "# label: " << c.label() << '\n';
  for (const auto& w : c.warnings()) os << "# warning: " << w << '\n';
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::MCX:
        os << (g.relative_phase ? "RMCX" : "MCX");
        for (auto q : g.controls) os << ' ' << q;
        os << " -> " << g.targets[0];
        break;
      case GateKind::PHASE: os << "PHASE(" << g.phase_k << ") " << g.targets[0]; break;
      default:
        os << gate_name(g.kind);
        for (auto q : g.operands()) os << ' ' << q;
    }
    os << '\n';
  }
  return os.str();
}

Circuit circuit_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<unsigned> qubits;
  std::string label;
  std::vector<std::string> warnings;
  std::vector<Gate> gates;
  auto bad = [](const std::string& l) { return InvalidInput("cannot parse circuit line: " + l); };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.starts_with("# qubits: ")) qubits = static_cast<unsigned>(std::stoul(line.substr(10)));
      else if (line.starts_with("# label: ")) label = line.substr(9);
      else if (line.starts_with("# warning: ")) warnings.push_back(line.substr(11));
      continue;
    }
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    std::vector<unsigned> nums;
    std::string tok;
    std::optional<unsigned> arrow_target;
    while (ls >> tok) {
      if (tok == "->") {
        unsigned t;
        if (!(ls >> t)) throw bad(line);
        arrow_target = t;
        break;
      }
      try {
        nums.push_back(static_cast<unsigned>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw bad(line);
      }
    }
    if (name == "X" && nums.size() == 1) gates.push_back(Gate::x(nums[0]));
    else if (name == "H" && nums.size() == 1) gates.push_back(Gate::h(nums[0]));
    else if (name == "CNOT" && nums.size() == 2) gates.push_back(Gate::cnot(nums[0], nums[1]));
    else if (name == "SWAP" && nums.size() == 2) gates.push_back(Gate::swap(nums[0], nums[1]));
    else if ((name == "MCX" || name == "RMCX") && arrow_target && !nums.empty())
      gates.push_back(Gate::mcx(nums, *arrow_target, name == "RMCX"));
    else if (name.starts_with("PHASE(") && name.ends_with(")") && nums.size() == 1)
      gates.push_back(Gate::phase(static_cast<unsigned>(std::stoul(name.substr(6))), nums[0]));
    else throw bad(line);
  }
  unsigned width = qubits.value_or(0);
  if (!qubits)
    for (const auto& g : gates)
      for (auto q : g.operands()) width = std::max(width, q + 1);
  Circuit c(width, label);
  for (auto& w : warnings) c.add_warning(w);
  for (auto& g : gates) c.append(std::move(g));
  return c;
}

nlohmann::json to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates()) {
    nlohmann::json jg{{"gate", gate_name(g.kind)}};
    if (g.kind == GateKind::MCX) {
      jg["controls"] = g.controls;
      jg["target"] = g.targets[0];
      jg["relative_phase"] = g.relative_phase;
    } else {
      jg["qubits"] = g.operands();
      if (g.kind == GateKind::PHASE) jg["k"] = g.phase_k;
    }
    gates.push_back(std::move(jg));
  }
  return {{"num_qubits", c.num_qubits()}, {"label", c.label()}, {"warnings", c.warnings()}, {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    Circuit c(j.at("num_qubits").get<unsigned>(), j.value("label", std::string{}));
    for (const auto& w : j.value("warnings", std::vector<std::string>{})) c.add_warning(w);
    for (const auto& jg : j.at("gates")) {
      const auto name = jg.at("gate").get<std::string>();
      if (name == "MCX") {
        c.append(Gate::mcx(jg.at("controls").get<std::vector<unsigned>>(), jg.at("target").get<unsigned>(),
                           jg.value("relative_phase", false)));
        continue;
      }
      const auto qs = jg.at("qubits").get<std::vector<unsigned>>();
      if (name == "X" && qs.size() == 1) c.append(Gate::x(qs[0]));
      else if (name == "H" && qs.size() == 1) c.append(Gate::h(qs[0]));
      else if (name == "CNOT" && qs.size() == 2) c.append(Gate::cnot(qs[0], qs[1]));
      else if (name == "SWAP" && qs.size() == 2) c.append(Gate::swap(qs[0], qs[1]));
      else if (name == "PHASE" && qs.size() == 1) c.append(Gate::phase(jg.at("k").get<unsigned>(), qs[0]));
      else throw InvalidInput("unknown gate entry: " + jg.dump());
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed circuit json: ") + e.what());
  }
}

}  // namespace primq

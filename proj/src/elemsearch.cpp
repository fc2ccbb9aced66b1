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

#include "primq/elemsearch.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>

#include "primq/errors.hpp"

namespace primq {
namespace {

constexpr std::uint64_t kMaxGroupStateSize = std::uint64_t{1} << 20;

SparseState from_counts(const std::map<std::uint64_t, std::uint64_t>& counts, unsigned width) {
  SparseState s({width});
  s.clear();
  for (const auto& [e, c] : counts) s.set(e, static_cast<double>(c));
  s.normalize();
  return s;
}

std::uint64_t random_nonzero(const FieldCtx& ctx, CounterRng& rng) {
  const unsigned w = ctx.code_bits();
  const std::uint64_t mask = w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v != 0 && ctx.valid_code(v)) return v;
  }
}

std::size_t default_shift_repeats(std::uint64_t D) {
  std::size_t s = 0;
  while (s < 64 && (std::uint64_t{1} << s) < D) ++s;
  return std::max<std::size_t>(s, 1);
}

}  // namespace

bool prefilter(const FFElem& a, std::uint64_t D) {
  if (a.is_zero()) return false;
  if (!conjugates_distinct(a)) return false;
  const auto& N = a.ctx().N();
  for (std::uint64_t d = 2; d <= D; ++d) {
    if (!is_prime(d) || N % d != 0) continue;
    if (a.ctx().pow(a.code(), BigUint(N / d)) == 1) return false;
  }
  return true;
}

GroupState build_group_state(const FFElem& a) {
  if (a.is_zero()) throw DomainError("the group state of 0 is undefined");
  const auto& ctx = a.ctx();
  if (ctx.size() > kMaxGroupStateSize) throw UnsupportedSize("group states limited to q^n <= 2^20");
  const unsigned w = ctx.code_bits();

  std::map<std::uint64_t, std::uint64_t> gamma_counts;
  std::uint64_t e = 1;
  for (std::uint64_t i = 0; i < ctx.q(); ++i, e = ctx.mul(e, a.code())) ++gamma_counts[e];
  auto psi_counts = gamma_counts;
  SparseState gamma = from_counts(gamma_counts, w);
  SparseState psi = gamma;

  for (unsigned k = 0; k + 1 < ctx.n(); ++k) {
    std::map<std::uint64_t, std::uint64_t> next_gamma;
    for (const auto& [g, c] : gamma_counts) next_gamma[ctx.frobenius(g)] += c;
    gamma_counts = std::move(next_gamma);
    apply_basis_map(gamma, [&](std::uint64_t g) { return ctx.frobenius(g); });

    SparseState joint({w, w, w});
    joint.clear();
    for (const auto& [g, ag] : gamma.amplitudes())
      for (const auto& [s, as] : psi.amplitudes()) {
        const std::uint64_t vals[3] = {g, s, 0};
        joint.set(joint.pack(vals), ag * as);
      }
    const auto r0 = joint.reg(0), r1 = joint.reg(1), r2 = joint.reg(2);
    apply_basis_map(joint, [&](std::uint64_t key) {
      const auto prod = ctx.mul(r0.extract(key), r1.extract(key));
      return r2.insert(key, ctx.add(r2.extract(key), prod));
    });
    psi = retain_register(joint, 2);

    std::map<std::uint64_t, std::uint64_t> next_psi;
    for (const auto& [g, cg] : gamma_counts)
      for (const auto& [s, cs] : psi_counts) next_psi[ctx.mul(g, s)] += cg * cs;
    psi_counts = std::move(next_psi);
  }
  return {a, std::move(psi), ctx.n() - 1, std::move(psi_counts)};
}

Amp shift_overlap(const SparseState& psi, const FieldCtx& ctx, std::uint64_t w) {
  Amp acc = 0;
  for (const auto& [u, a] : psi.amplitudes()) acc += std::conj(psi.amplitude(ctx.add(u, w))) * a;
  return acc;
}

ShiftOutcome shift_test(const SparseState& psi, const FFElem& w, CounterRng& rng) {
  if (w.is_zero()) throw InvalidInput("shift w must be nonzero");
  const auto& ctx = w.ctx();
  ShiftOutcome out{0, 0, 0, shift_overlap(psi, ctx, w.code()), SparseState(psi.widths())};
  out.prob_zero = std::clamp((1.0 + out.overlap.real()) / 2.0, 0.0, 1.0);
  out.outcome = rng.uniform01() < out.prob_zero ? 0 : 1;
  out.probability = out.outcome == 0 ? out.prob_zero : 1.0 - out.prob_zero;

  std::map<std::uint64_t, Amp> acc;
  const double sign = out.outcome == 0 ? 1.0 : -1.0;
  for (const auto& [u, a] : psi.amplitudes()) {
    acc[u] += a;
    acc[ctx.add(u, w.code())] += sign * a;
  }
  out.post_state.clear();
  for (const auto& [k, a] : acc) out.post_state.set(k, a);
  out.post_state.normalize();
  return out;
}

ShiftOutcome shift_test(const GroupState& g, const FFElem& w, CounterRng& rng) { return shift_test(g.state, w, rng); }

double hadamard_all_probability(const SparseState& psi, const FieldCtx& ctx) {
  if (!ctx.characteristic_two()) throw UnsupportedSize("the Hadamard-all test needs characteristic 2");
  Amp sum = 0;
  for (const auto& [k, a] : psi.amplitudes()) sum += a;
  return std::norm(sum) / std::ldexp(1.0, static_cast<int>(ctx.code_bits()));
}

double hadamard_all_probability_dense(const SparseState& psi, const FieldCtx& ctx) {
  if (!ctx.characteristic_two()) throw UnsupportedSize("the Hadamard-all test needs characteristic 2");
  if (psi.total_bits() > 20) throw UnsupportedSize("dense Hadamard check limited to 20 qubits");
  DenseState d = to_dense(psi);
  for (unsigned q = 0; q < d.num_qubits(); ++q) apply_gate(d, Gate::h(q));
  return std::norm(d.amplitude(0));
}

HadamardOutcome hadamard_all_test(const GroupState& g, CounterRng& rng) {
  HadamardOutcome out;
  out.prob_all_zero = hadamard_all_probability(g.state, g.generator.ctx());
  out.all_zero = rng.uniform01() < out.prob_all_zero;
  out.probability = out.all_zero ? out.prob_all_zero : 1.0 - out.prob_all_zero;
  return out;
}

std::uint64_t enumerate_order(const FFElem& a) {
  if (a.is_zero()) throw DomainError("0 has no multiplicative order");
  const auto& ctx = a.ctx();
  std::uint64_t r = 1;
  for (std::uint64_t e = a.code(); e != 1; e = ctx.mul(e, a.code())) {
    if (++r > (std::uint64_t{1} << 24)) throw UnsupportedSize("order enumeration limited to 2^24");
  }
  return r;
}

std::uint64_t solution_count_K(const FFElem& a, const FFElem& w) {
  if (a.is_zero()) throw DomainError("subgroup generator must be nonzero");
  if (w.is_zero()) throw InvalidInput("w must be nonzero");
  if (!a.ctx().same_field(w.ctx())) throw ContextError("elements from different fields");
  const auto& ctx = a.ctx();
  const auto r = enumerate_order(a);
  std::unordered_set<std::uint64_t> group;
  group.reserve(r);
  std::uint64_t e = 1;
  for (std::uint64_t i = 0; i < r; ++i, e = ctx.mul(e, a.code())) group.insert(e);
  std::uint64_t K = 0;
  for (auto u : group) K += group.count(ctx.sub(w.code(), u));
  return K;
}

WeilCheck weil_check(std::uint64_t K, std::uint64_t r, std::uint64_t field_size) {
  const double Q = static_cast<double>(field_size);
  const double rr = static_cast<double>(r);
  return {std::abs(static_cast<double>(K) - rr * rr * (Q - 2) / (Q * Q)), std::sqrt(Q - 1)};
}

std::string_view status_name(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::Filtered: return "filtered";
    case CandidateStatus::Discarded: return "discarded";
    case CandidateStatus::Rejected: return "rejected";
    case CandidateStatus::Accepted: return "accepted";
  }
  return "?";
}

SearchResult search_primitive_element(const FieldPtr& ctx, const SearchPolicy& policy) {
  if (policy.D < 2) throw InvalidInput("D must be at least 2");
  if (policy.L < 1) throw InvalidInput("L must be at least 1");
  if (policy.max_candidates < 1) throw InvalidInput("max_candidates must be at least 1");
  if (ctx->size() > kMaxGroupStateSize) throw UnsupportedSize("element search limited to q^n <= 2^20");
  if (ctx->size() <= 2) throw InvalidInput("GF(2) has no group to search");
  const std::size_t repeats = policy.shift_repeats ? policy.shift_repeats : default_shift_repeats(policy.D);
  const FFElem one = FFElem::one(ctx);
  const CounterRng root(policy.seed);

  SearchResult result;
  for (std::size_t c = 0; c < policy.max_candidates; ++c) {
    CounterRng rng = root.split(c);
    const FFElem a(ctx, random_nonzero(*ctx, rng));
    result.candidates_tried = c + 1;
    CandidateSummary summary{c, a.code(), CandidateStatus::Filtered};
    if (!prefilter(a, policy.D)) {
      result.tests.push_back({c, a.code(), 1, 0, 0, 1, 1.0});
      result.candidates.push_back(summary);
      continue;
    }
    result.tests.push_back({c, a.code(), 1, 0, 0, 0, 1.0});
    const auto gs = build_group_state(a);
    summary.status = CandidateStatus::Accepted;
    for (std::size_t rep = 0; rep < policy.L && summary.status == CandidateStatus::Accepted; ++rep) {
      auto s4 = shift_test(gs, one, rng);
      result.tests.push_back({c, a.code(), 4, rep, 1, s4.outcome, s4.probability});
      if (s4.outcome == 1) {
        summary.status = CandidateStatus::Discarded;
        break;
      }
      SparseState phi = std::move(s4.post_state);
      for (std::size_t t = 0; t < repeats; ++t) {
        const FFElem w(ctx, random_nonzero(*ctx, rng));
        auto s5 = shift_test(phi, w, rng);
        result.tests.push_back({c, a.code(), 5, rep, w.code(), s5.outcome, s5.probability});
        if (s5.outcome == 1) {
          summary.status = ctx->characteristic_two() ? CandidateStatus::Rejected : CandidateStatus::Discarded;
          break;
        }
        phi = std::move(s5.post_state);
      }
    }
    result.candidates.push_back(summary);
    if (summary.status == CandidateStatus::Accepted) {
      result.alpha = a;
      result.minpoly = minimal_polynomial(a);
      return result;
    }
  }
  throw SearchFailed("no candidate accepted after " + std::to_string(result.candidates_tried) + " candidates");
}

std::string poly_hex(const FieldCtx& ctx, const BasePoly& p) {
  return to_hex(p, static_cast<unsigned>(std::bit_width(ctx.q() - 1)));
}

}  // namespace primq

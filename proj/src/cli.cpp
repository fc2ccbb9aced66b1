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

#include "primq/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "primq/circuit.hpp"
#include "primq/elemsearch.hpp"
#include "primq/errors.hpp"
#include "primq/ffield.hpp"
#include "primq/numstats.hpp"
#include "primq/orderprim.hpp"

namespace primq::cli {
namespace {

using nlohmann::json;

struct Common {
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool csv = false;
  std::string out_path;
};

struct Result {
  json payload = json::object();
  std::string text;
  std::optional<std::string> csv;
  int code = kOk;
};

using Action = std::function<Result(std::uint64_t seed)>;

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "RNG seed (generated and echoed when absent)");
  auto* j = sub->add_flag("--json", c.json, "Emit JSON");
  auto* v = sub->add_flag("--csv", c.csv, "Emit CSV");
  j->excludes(v);
  sub->add_option("--out", c.out_path, "Write output to this file");
}

BitPoly parse_poly(const std::string& hex) {
  BitPoly p = BitPoly::from_hex(hex);
  if (p.degree() < 1) throw InvalidInput("polynomial must have degree >= 1");
  return p;
}

// q = p^m for a prime p.
std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q) {
  if (q < 2 || q >= (std::uint64_t{1} << 32)) throw InvalidInput("q must be a prime power below 2^32");
  const auto f = factorize(q);
  if (f.factors.size() != 1) throw InvalidInput("q must be a prime power");
  if (f.factors[0].prime >= (1u << 16)) throw UnsupportedSize("characteristic must be below 2^16");
  return {static_cast<std::uint32_t>(f.factors[0].prime), f.factors[0].multiplicity};
}

std::string field_name(const FieldCtx& ctx) {
  std::ostringstream os;
  os << "GF(" << ctx.q() << '^' << ctx.n() << ')';
  return os.str();
}

json report_json(const CoprimalityReport& r) {
  return {{"r", r.r}, {"L", r.L}, {"samples", r.samples}, {"estimate", r.estimate}, {"stderr", r.std_error},
          {"seed", r.seed}};
}

Result stats_result(const std::vector<CoprimalityReport>& rows) {
  Result res;
  std::ostringstream os;
  write_csv_header(os);
  json arr = json::array();
  for (const auto& r : rows) {
    write_csv_row(os, r);
    arr.push_back(report_json(r));
  }
  res.payload["rows"] = std::move(arr);
  res.csv = os.str();
  res.text = *res.csv;
  return res;
}

Result classical_gen(unsigned n, std::uint64_t q, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  const auto [p, m] = split_prime_power(q);
  BigUint size = 1;
  for (unsigned i = 0; i < n; ++i) size *= q;
  if (size > (BigUint(1) << 64)) throw UnsupportedSize("q^n exceeds 2^64; factorization of q^n - 1 is out of range");
  const BigUint N = size - 1;
  const Factorization fac = N == 1 ? Factorization{1, {}} : factorize(N);
  CounterRng rng(seed);

  std::uint64_t trials = 0;
  std::string hex;
  if (q == 2) {
    for (;;) {
      ++trials;
      BitPoly poly = BitPoly::monomial(n);
      const std::uint64_t low = n >= 64 ? rng() : rng() & ((std::uint64_t{1} << n) - 1);
      poly += BitPoly(low);
      if (classical_primitive_poly_test(poly, fac)) {
        hex = poly.to_hex();
        break;
      }
    }
  } else {
    const BaseField base(p, m);
    for (;;) {
      ++trials;
      std::vector<std::uint64_t> c(n + 1);
      for (unsigned i = 0; i < n; ++i) c[i] = rng.uniform(0, q - 1);
      c[n] = 1;
      const BasePoly poly(std::move(c));
      if (classical_primitive_poly_test(base, poly)) {
        hex = to_hex(poly, static_cast<unsigned>(std::bit_width(q - 1)));
        break;
      }
    }
  }
  const double expected =
      N == 1 ? 1.0 : static_cast<double>(n) * N.convert_to<double>() / euler_phi(fac).convert_to<double>();
  Result res;
  res.payload = {{"poly", hex}, {"n", n}, {"q", q}, {"trials", trials}, {"expected_trials", expected}};
  std::ostringstream os;
  os << hex << "\ntrials: " << trials << "\nexpected_trials: " << expected << "\nseed: " << seed << '\n';
  res.text = os.str();
  return res;
}

Result classical_test(const std::string& poly_hex_in) {
  const BitPoly poly = parse_poly(poly_hex_in);
  if (poly.degree() > 64) throw UnsupportedSize("degree above 64");
  const bool irr = irreducible_test(poly);
  const bool prim = irr && classical_primitive_poly_test(poly);
  Result res;
  res.payload = {{"poly", poly.to_hex()}, {"n", poly.degree()}, {"irreducible", irr}, {"primitive", prim}};
  std::ostringstream os;
  os << poly.to_hex() << ": " << (irr ? "irreducible" : "reducible");
  if (irr) {
    const auto ctx = FieldCtx::binary(poly);
    const BigUint order = element_order(FFElem::x(ctx));
    if (fits_u64(order)) res.payload["order_of_x"] = to_u64(order);
    else res.payload["order_of_x"] = to_string(order);
    os << ", " << (prim ? "primitive" : "not primitive") << ", ord(x) = " << to_string(order);
  }
  os << '\n';
  res.text = os.str();
  return res;
}

Result order_test(const std::string& poly_in, std::size_t trials, std::size_t shots, const std::string& backend,
                  std::uint64_t seed) {
  const BitPoly poly = parse_poly(poly_in);
  OrderPolicy policy;
  policy.max_trials = trials;
  policy.shots = shots;
  policy.seed = seed;
  if (backend == "gates") policy.backend = Backend::GateLevel;
  else if (backend != "semantic") throw InvalidInput("backend must be semantic or gates");
  const int limit = policy.backend == Backend::GateLevel ? 6 : 14;
  if (poly.degree() < 2) throw InvalidInput("order finding needs degree >= 2");
  if (poly.degree() > limit)
    throw UnsupportedSize("degree " + std::to_string(poly.degree()) + " exceeds the " + backend + " backend limit");
  const auto out = test_primitivity(poly, policy);

  Result res;
  json tj = json::array();
  for (const auto& t : out.trials) tj.push_back({{"l", t.l}, {"retries", t.retries}});
  const auto verdict = std::string(decision_name(out.verdict.decision));
  res.payload = {{"poly", poly.to_hex()}, {"n", poly.degree()}, {"N", out.N},    {"verdict", verdict},
                 {"g", out.verdict.g},    {"trials", tj},         {"backend", backend}};
  res.payload["r"] = out.verdict.order ? json(*out.verdict.order) : json(nullptr);
  std::ostringstream os;
  os << poly.to_hex() << ": " << verdict;
  if (out.verdict.order) os << " r=" << *out.verdict.order;
  os << " after " << out.trials.size() << " trial(s), g=" << out.verdict.g << "\nseed: " << seed << '\n';
  res.text = os.str();
  res.code = out.verdict.decision == Decision::Undecided ? kUndecided : kOk;
  return res;
}

Result element_search(std::uint32_t p, unsigned m, unsigned n, const SearchPolicy& policy) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  BigUint size = 1;
  for (unsigned i = 0; i < m * n; ++i) size *= p;
  if (size > (BigUint(1) << 20)) throw UnsupportedSize("element search limited to q^n <= 2^20");
  FieldSpec spec;
  spec.p = p;
  spec.m = m;
  spec.n = n;
  spec.factorize = false;
  const auto ctx = FieldCtx::make(spec);
  const auto found = search_primitive_element(ctx, policy);

  Result res;
  json tests = json::array();
  std::size_t filtered = 0, discarded = 0, rejected = 0;
  for (const auto& t : found.tests)
    tests.push_back({{"candidate", t.candidate},
                     {"stage", t.stage},
                     {"w", BitPoly(t.w).to_hex()},
                     {"outcome", t.outcome},
                     {"prob", t.probability}});
  for (const auto& c : found.candidates) {
    filtered += c.status == CandidateStatus::Filtered;
    discarded += c.status == CandidateStatus::Discarded;
    rejected += c.status == CandidateStatus::Rejected;
  }
  const auto alpha = found.alpha->to_hex();
  const auto minpoly = poly_hex(*ctx, found.minpoly);
  res.payload = {{"field", field_name(*ctx)},
                 {"alpha", alpha},
                 {"minpoly", minpoly},
                 {"tests", tests},
                 {"candidates_tried", found.candidates_tried},
                 {"filtered", filtered},
                 {"discarded", discarded},
                 {"rejected", rejected}};
  std::ostringstream os;
  os << field_name(*ctx) << ": alpha = " << alpha << ", minimal polynomial " << minpoly << "\ncandidates: "
     << found.candidates_tried << " (filtered " << filtered << ", discarded " << discarded << ", rejected "
     << rejected << ")\nseed: " << policy.seed << '\n';
  res.text = os.str();
  return res;
}

Result build_ux_cmd(const std::string& poly_in, unsigned k, const std::string& emit) {
  const BitPoly poly = parse_poly(poly_in);
  if (poly.degree() > 24) throw UnsupportedSize("circuit builder limited to degree 24");
  if (emit != "text" && emit != "json") throw InvalidInput("--emit must be text or json");
  Circuit c = k == 0 ? build_ux(poly) : [&] {
    if (!irreducible_test(poly)) throw InvalidInput("powers of U_x need an irreducible modulus");
    return build_u_pow2k(*FieldCtx::binary(poly, false), k);
  }();
  const auto counts = gate_counts(c);
  Result res;
  res.payload = {{"circuit", to_json(c)},
                 {"counts",
                  {{"X", counts.x},
                   {"H", counts.h},
                   {"CNOT", counts.cnot},
                   {"SWAP", counts.swap},
                   {"MCX", counts.mcx},
                   {"PHASE", counts.phase},
                   {"total", counts.total},
                   {"depth", counts.depth}}}};
  res.text = to_text(c);
  return res;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int error_code(const std::exception& e) {
  if (dynamic_cast<const UnsupportedSize*>(&e)) return kUnsupportedSize;
  if (dynamic_cast<const SearchFailed*>(&e)) return kUndecided;
  return kInvalidInput;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const UnsupportedSize*>(&e)) return "unsupported_size";
  if (dynamic_cast<const SearchFailed*>(&e)) return "search_failed";
  if (dynamic_cast<const Error*>(&e)) return "invalid_input";
  return "internal";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Primitive polynomial and primitive element toolkit", "primq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Common common;
  Action action;

  auto* classical = app.add_subcommand("classical", "Classical generation and testing")->require_subcommand(1);
  auto* quantum = app.add_subcommand("quantum", "Simulated quantum algorithms")->require_subcommand(1);
  auto* circuit = app.add_subcommand("circuit", "Circuit construction")->require_subcommand(1);
  auto* stats = app.add_subcommand("stats", "Coprimality statistics")->require_subcommand(1);

  unsigned gen_n = 0;
  std::uint64_t gen_q = 2;
  auto* gen = classical->add_subcommand("gen", "Random primitive polynomial by rejection sampling");
  gen->add_option("--n", gen_n, "Degree")->required();
  gen->add_option("--q", gen_q, "Base field size (prime power)");
  add_common(gen, common);

  std::string test_poly;
  auto* ctest = classical->add_subcommand("test", "Irreducibility and primitivity of a GF(2) polynomial");
  ctest->add_option("--poly", test_poly, "Polynomial in hex")->required();
  add_common(ctest, common);

  std::string ot_poly, ot_backend = "semantic";
  std::size_t ot_trials = 32, ot_shots = 1;
  auto* ot = quantum->add_subcommand("order-test", "Order-finding primitivity test");
  ot->add_option("--poly", ot_poly, "Polynomial in hex")->required();
  ot->add_option("--trials", ot_trials, "Maximum number of runs")->check(CLI::PositiveNumber);
  ot->add_option("--shots", ot_shots, "Runs per round before the gcd is checked")->check(CLI::PositiveNumber);
  ot->add_option("--backend", ot_backend, "semantic or gates");
  add_common(ot, common);

  std::uint32_t es_p = 2;
  unsigned es_m = 1, es_n = 0;
  SearchPolicy es_policy;
  auto* es = quantum->add_subcommand("element-search", "Search for a primitive element");
  es->add_option("--p", es_p, "Characteristic");
  es->add_option("--m", es_m, "Base field degree over GF(p)");
  es->add_option("--n", es_n, "Extension degree")->required();
  es->add_option("--D", es_policy.D, "Prefilter bound");
  es->add_option("--L", es_policy.L, "Repetitions of the quantum tests");
  es->add_option("--shift-repeats", es_policy.shift_repeats, "Random shifts per repetition (0: ceil(log2 D))");
  es->add_option("--max-candidates", es_policy.max_candidates, "Candidate budget");
  add_common(es, common);

  std::string ux_poly, ux_emit = "text";
  unsigned ux_k = 0;
  auto* ux = circuit->add_subcommand("build-ux", "Multiplication-by-x circuit");
  ux->add_option("--poly", ux_poly, "Modulus in hex")->required();
  ux->add_option("--k", ux_k, "Build U_x^(2^k)");
  ux->add_option("--emit", ux_emit, "text or json");
  add_common(ux, common);

  std::uint64_t cp_r = 0, cp_samples = 1000000;
  std::vector<unsigned> cp_L{2};
  auto* cp = stats->add_subcommand("coprime", "Monte Carlo coprimality of L integers in [1, r]");
  cp->add_option("--r", cp_r, "Range bound")->required()->check(CLI::PositiveNumber);
  cp->add_option("--L", cp_L, "Comma-separated list of L")->delimiter(',');
  cp->add_option("--samples", cp_samples, "Samples per L")->check(CLI::PositiveNumber);
  add_common(cp, common);

  std::uint64_t pr_min = 1, pr_max = 1000, pr_step = 1;
  auto* pr = stats->add_subcommand("pr2", "Exact two-integer coprimality");
  pr->add_option("--r-min", pr_min, "First r")->check(CLI::PositiveNumber);
  pr->add_option("--r-max", pr_max, "Last r")->check(CLI::PositiveNumber);
  pr->add_option("--step", pr_step, "Stride")->check(CLI::PositiveNumber);
  add_common(pr, common);

  std::vector<std::uint64_t> f2_r;
  std::uint64_t f2_min = 1000, f2_max = 9000, f2_count = 20, f2_samples = 100000;
  unsigned f2_L = 2;
  bool f2_exact = false;
  auto* f2 = stats->add_subcommand("fig2", "Order-recovery success probability");
  f2->add_option("--r", f2_r, "Explicit list of r")->delimiter(',');
  f2->add_option("--r-min", f2_min, "Lower end of the sampled range")->check(CLI::PositiveNumber);
  f2->add_option("--r-max", f2_max, "Upper end of the sampled range")->check(CLI::PositiveNumber);
  f2->add_option("--count", f2_count, "Number of sampled r")->check(CLI::PositiveNumber);
  f2->add_option("--L", f2_L, "Number of samples combined");
  f2->add_option("--samples", f2_samples, "Monte Carlo samples per r")->check(CLI::PositiveNumber);
  f2->add_flag("--exact", f2_exact, "Exact values instead of Monte Carlo");
  add_common(f2, common);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (gen->parsed()) action = [&](std::uint64_t s) { return classical_gen(gen_n, gen_q, s); };
  else if (ctest->parsed()) action = [&](std::uint64_t) { return classical_test(test_poly); };
  else if (ot->parsed())
    action = [&](std::uint64_t s) { return order_test(ot_poly, ot_trials, ot_shots, ot_backend, s); };
  else if (es->parsed())
    action = [&](std::uint64_t s) {
      es_policy.seed = s;
      return element_search(es_p, es_m, es_n, es_policy);
    };
  else if (ux->parsed()) action = [&](std::uint64_t) {
      auto res = build_ux_cmd(ux_poly, ux_k, ux_emit);
      if (ux_emit == "json") common.json = true;
      return res;
    };
  else if (cp->parsed())
    action = [&](std::uint64_t s) {
      std::vector<CoprimalityReport> rows;
      for (auto L : cp_L) {
        if (L < 2) throw InvalidInput("L must be at least 2");
        rows.push_back(coprimality_mc(cp_r, L, cp_samples, s));
      }
      return stats_result(rows);
    };
  else if (pr->parsed())
    action = [&](std::uint64_t s) {
      if (pr_min > pr_max) throw InvalidInput("--r-min exceeds --r-max");
      const auto all = pr2_exact_range(pr_min, pr_max);
      std::vector<CoprimalityReport> rows;
      for (std::uint64_t r = pr_min; r <= pr_max; r += pr_step)
        rows.push_back({r, 2, 0, all[r - pr_min].value(), 0.0, s});
      return stats_result(rows);
    };
  else if (f2->parsed())
    action = [&](std::uint64_t s) {
      if (f2_L < 2) throw InvalidInput("L must be at least 2");
      std::vector<std::uint64_t> rs = f2_r;
      if (rs.empty()) {
        if (f2_min > f2_max) throw InvalidInput("--r-min exceeds --r-max");
        CounterRng pick = CounterRng(s).split(0xf162);
        for (std::uint64_t i = 0; i < f2_count; ++i) rs.push_back(pick.uniform(f2_min, f2_max));
      }
      std::vector<CoprimalityReport> rows;
      for (auto r : rs) {
        if (r < 1) throw InvalidInput("r must be positive");
        if (f2_exact) rows.push_back({r, f2_L, 0, order_recovery_success_exact(r, f2_L), 0.0, s});
        else rows.push_back(order_recovery_success_prob(r, f2_L, f2_samples, s));
      }
      return stats_result(rows);
    };

  const std::uint64_t seed = common.seed.value_or(fresh_seed());
  Result res;
  try {
    res = action(seed);
  } catch (const std::exception& e) {
    const int code = error_code(e);
    if (common.json) err << json{{"error", error_kind(e)}, {"message", e.what()}, {"exit_code", code}}.dump() << '\n';
    else err << "error: " << e.what() << '\n';
    return code;
  }

  std::string body;
  if (common.json) {
    res.payload["version"] = std::string(kVersion);
    res.payload["seed"] = seed;
    res.payload["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    body = res.payload.dump(2) + "\n";
  } else if (common.csv) {
    if (!res.csv) {
      err << "error: this command has no CSV output\n";
      return kInvalidInput;
    }
    body = *res.csv;
  } else {
    body = res.text;
  }

  if (common.out_path.empty()) {
    out << body;
  } else {
    std::ofstream f(common.out_path, std::ios::binary);
    if (!(f << body)) {
      err << "error: cannot write " << common.out_path << '\n';
      return kInvalidInput;
    }
  }
  return res.code;
}

}  // namespace primq::cli

// Acceptance runner: one [PASS]/[FAIL] line per criterion, details indented.
//
//   acceptance [--cli PATH] [--seed N] [criterion ...]

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "zklaims/algebra/curve.hpp"
#include "zklaims/bench.hpp"
#include "zklaims/circuit.hpp"
#include "zklaims/directory.hpp"
#include "zklaims/issuer.hpp"
#include "zklaims/prover.hpp"
#include "zklaims/verifier.hpp"

namespace fs = std::filesystem;
using namespace zklaims;
using encoding::AttributeValue;
using encoding::PredicateMask;
using encoding::ReferenceValue;

namespace {

constexpr std::uint64_t kLimit = encoding::kValueLimit;

struct Outcome {
  bool pass = false;
  std::string summary;
};

std::vector<std::string> g_details;

void detail(const std::string& line) { g_details.push_back(line); }
void progress(const std::string& line) { std::cerr << "  .. " << line << std::endl; }

class Env {
 public:
  Env(std::uint64_t seed, std::string cli) : rng(seed), cli_path(std::move(cli)) {}

  SeededRandom rng;
  std::string cli_path;
  issuer::IssuerKeypair key = issuer::IssuerKeypair::generate();
  std::vector<std::pair<std::size_t, std::size_t>> proof_sizes;  // (m, bytes)
  std::vector<bench::BenchRecord> bench;

  const CredentialSchema& schema(std::size_t m) {
    auto it = schemas_.find(m);
    if (it == schemas_.end()) {
      it = schemas_.emplace(m, CredentialSchema::make("accept-" + std::to_string(m), key.issuer_id(), m, {}))
               .first;
    }
    return it->second;
  }

  const issuer::IssuerArtifacts& artifacts(std::size_t m) {
    auto it = artifacts_.find(m);
    if (it == artifacts_.end()) {
      progress("setup for m=" + std::to_string(m));
      it = artifacts_.emplace(m, issuer::bootstrap_issuer(schema(m))).first;
    }
    return it->second;
  }

  std::uint64_t below(std::uint64_t n) { return rng.next_u64() % n; }

  // Mixed widths so both tiny and full-width values occur.
  std::uint64_t random_value() {
    switch (below(16)) {
      case 0: return 0;
      case 1: return kLimit - 1;
      default: {
        const auto width = 1 + below(50);
        return rng.next_u64() & ((std::uint64_t{1} << width) - 1);
      }
    }
  }

  Credential issue(std::size_t m, const std::function<std::uint64_t()>& value) {
    const auto& s = schema(m);
    std::map<std::string, AttributeValue> values;
    for (std::size_t i = 0; i < s.nonce_slot(); ++i) values[s.slot_labels[i]] = AttributeValue(value());
    return issuer::issue_credential(key, s, values, rng);
  }

  // A clause over `a` whose truth (by the independent oracle) equals `want`.
  Clause clause_with_truth(std::uint64_t a, bool want) {
    for (;;) {
      const auto mask = static_cast<std::uint8_t>(1 + below(want ? 7 : 6));
      std::uint64_t r = 0;
      switch (below(6)) {
        case 0: r = a; break;
        case 1: r = a == 0 ? 0 : a - 1; break;
        case 2: r = a + 1 < kLimit ? a + 1 : a; break;
        case 3: r = below(a + 1); break;
        case 4: r = a + below(kLimit - a); break;
        default: r = random_value(); break;
      }
      if (testing::oracle_holds(mask, a, r) == want) {
        return Clause{PredicateMask::from_bits(mask), ReferenceValue(r)};
      }
    }
  }

  Statement random_true_statement(const Credential& c) {
    std::vector<Clause> clauses(c.attributes.size());
    for (std::size_t i = 0; i + 1 < clauses.size(); ++i) {
      if (below(2) == 0) clauses[i] = clause_with_truth(c.attributes[i].value(), true);
    }
    return Statement::from_clauses(clauses);
  }

 private:
  std::map<std::size_t, CredentialSchema> schemas_;
  std::map<std::size_t, issuer::IssuerArtifacts> artifacts_;
};

// 1. issue -> prove -> serialize -> parse -> verify for 200 credentials.
Outcome end_to_end(Env& env) {
  std::size_t ok = 0;
  std::map<std::size_t, std::size_t> per_m;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t m = i < 100 ? 1 : 2;
    const auto& art = env.artifacts(m);
    try {
      const auto c = env.issue(m, [&] { return env.random_value(); });
      const auto st = env.random_true_statement(c);
      const auto json = prover::to_json(prover::create_context(art.pk, c, st, env.rng));
      const auto ctx = prover::context_from_json(json);
      const auto expected = prover::parse_statement(st.to_dsl(), env.schema(m));
      const auto report = verifier::verify_context(art.vk, env.key.public_key(), ctx, expected);
      env.proof_sizes.emplace_back(m, ctx.proof.serialize().size());
      if (report.overall) {
        ++ok;
        ++per_m[m];
      } else {
        detail("case " + std::to_string(i) + " rejected: " + report.failure_detail.value_or(""));
      }
    } catch (const std::exception& e) {
      detail("case " + std::to_string(i) + " raised: " + e.what());
    }
    if ((i + 1) % 25 == 0) progress("end-to-end " + std::to_string(i + 1) + "/200");
  }
  return {ok == 200, std::to_string(ok) + "/200 contexts verified (m=1: " + std::to_string(per_m[1]) +
                         "/100, m=2: " + std::to_string(per_m[2]) + "/100)"};
}

// 2. False statements fail in witness synthesis; exhaustive 6-bit
// differential of the in-circuit comparison against the native evaluator.
Outcome oracle_soundness(Env& env) {
  std::size_t raised = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t m = 1 + i % 2;
    const auto c = env.issue(m, [&] { return env.random_value(); });
    std::vector<Clause> clauses(c.attributes.size());
    const std::size_t false_slot = env.below(clauses.size() - 1);
    for (std::size_t s = 0; s + 1 < clauses.size(); ++s) {
      if (s == false_slot) {
        clauses[s] = env.clause_with_truth(c.attributes[s].value(), false);
      } else if (env.below(3) == 0) {
        clauses[s] = env.clause_with_truth(c.attributes[s].value(), env.below(4) != 0);
      }
    }
    const auto st = Statement::from_clauses(clauses);
    std::optional<std::size_t> expected_slot;
    for (std::size_t s = 0; s < clauses.size() && !expected_slot; ++s) {
      if (!testing::oracle_holds(st.clause(s).mask.bits(), c.attributes[s].value(), st.clause(s).reference.value())) {
        expected_slot = s;
      }
    }
    try {
      circuit::synthesize_witness(circuit::build_constraint_system(m), c, st);
      detail("false statement " + std::to_string(i) + " was accepted");
    } catch (const UnsatisfiableStatement& e) {
      if (expected_slot && e.slot() == *expected_slot) {
        ++raised;
      } else {
        detail("false statement " + std::to_string(i) + " reported slot " + std::to_string(e.slot()));
      }
    }
  }

  const auto d = circuit::build_constraint_system(1);
  const auto& wires = d.slot_wires();
  std::size_t cases = 0, mismatches = 0, system_mismatches = 0;
  const std::size_t total = 7 * 64 * 64;
  for (std::size_t base = 0; base < total; base += 4) {
    std::array<std::uint8_t, 4> mask{};
    std::array<std::uint64_t, 4> a{}, r{};
    Credential cred;
    std::vector<PredicateMask> p;
    std::vector<ReferenceValue> refs;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t id = base + k;
      mask[k] = static_cast<std::uint8_t>(1 + id / 4096);
      a[k] = (id / 64) % 64;
      r[k] = id % 64;
      cred.attributes.emplace_back(a[k]);
      p.push_back(PredicateMask::from_bits(mask[k]));
      refs.emplace_back(r[k]);
    }
    cred.attributes.emplace_back(0);
    p.push_back(PredicateMask::any());
    refs.emplace_back(0);
    const std::array payloads{cred.payload(0)};
    // Built directly so "any" clauses keep their raw reference.
    const auto x = encoding::assemble_public_input({encoding::hash_payload(payloads[0])}, p, refs);
    const auto z = circuit::assign_witness(d, payloads, x).assignment(x.field_elements());

    std::optional<std::size_t> first_false;
    for (std::size_t k = 0; k < 4; ++k) {
      ++cases;
      const bool native = encoding::evaluate_predicate(p[k], AttributeValue(a[k]), refs[k]);
      const bool independent = testing::oracle_holds(mask[k], a[k], r[k]);
      const bool in_circuit =
          !d.system().first_unsatisfied(z, wires[k].first_constraint, wires[k].end_constraint);
      if (native != in_circuit || native != independent) ++mismatches;
      if (!native && !first_false) first_false = k;
    }
    const auto failing = d.system().first_unsatisfied(z);
    const bool consistent = first_false ? (failing && *failing >= wires[*first_false].first_constraint &&
                                           *failing < wires[*first_false].end_constraint)
                                        : !failing;
    if (!consistent) ++system_mismatches;
    if ((base / 4 + 1) % 1024 == 0) progress("differential " + std::to_string(base + 4) + "/" + std::to_string(total));
  }
  detail("exhaustive cases: " + std::to_string(cases) + ", slot mismatches: " + std::to_string(mismatches) +
         ", whole-system mismatches: " + std::to_string(system_mismatches));
  return {raised == 200 && cases == total && mismatches == 0 && system_mismatches == 0,
          std::to_string(raised) + "/200 false statements raised UnsatisfiableStatement at the first false slot; " +
              std::to_string(cases - mismatches) + "/" + std::to_string(total) +
              " exhaustive (a, r, mask) cases agree"};
}

// 3. Single-field mutations of a valid m=2 context.
Outcome tamper_matrix(Env& env) {
  const std::size_t m = 2;
  const auto& art = env.artifacts(m);
  const auto c = env.issue(m, [&] { return env.random_value(); });
  auto st = env.random_true_statement(c);
  const auto ctx = prover::create_context(art.pk, c, st, env.rng);
  const auto pub = env.key.public_key();
  if (!verifier::verify_context(art.vk, pub, ctx, st).overall) return {false, "baseline context does not verify"};

  std::size_t total = 0, rejected = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_field;
  const auto check = [&](const std::string& field, const std::function<prover::ZklaimsContext()>& mutate) {
    ++total;
    ++per_field[field].first;
    bool accepted = false;
    try {
      accepted = verifier::verify_context(art.vk, pub, mutate(), st).overall;
    } catch (const Error&) {
    }
    if (!accepted) {
      ++rejected;
      ++per_field[field].second;
    }
  };
  const auto with_x = [&](std::vector<Digest> y, std::vector<PredicateMask> p, std::vector<ReferenceValue> r) {
    auto out = ctx;
    out.x = encoding::assemble_public_input(std::move(y), std::move(p), std::move(r));
    return out;
  };

  const auto proof = ctx.proof.serialize();
  for (std::size_t i = 0; i < proof.size(); ++i) {
    check("proof", [&] {
      auto bytes = proof;
      bytes[i] ^= static_cast<std::uint8_t>(1U << (i % 8));
      auto out = ctx;
      out.proof = snark::Proof::parse(bytes);
      return out;
    });
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t b = 0; b < 32; ++b) {
      check("digest " + std::to_string(j), [&] {
        auto y = ctx.x.digests();
        y[j][b] ^= static_cast<std::uint8_t>(1U << (b % 8));
        return with_x(y, ctx.x.masks(), ctx.x.references());
      });
    }
  }
  for (std::size_t i = 0; i < ctx.x.slot_count(); ++i) {
    for (std::uint8_t bits = 1; bits <= 7; ++bits) {
      if (bits == ctx.x.masks()[i].bits()) continue;
      check("mask " + std::to_string(i), [&] {
        auto p = ctx.x.masks();
        p[i] = PredicateMask::from_bits(bits);
        return with_x(ctx.x.digests(), p, ctx.x.references());
      });
    }
    for (std::uint64_t delta : {std::uint64_t{1}, std::uint64_t{1} << 49}) {
      check("reference " + std::to_string(i), [&] {
        auto r = ctx.x.references();
        r[i] = ReferenceValue((r[i].value() + delta) % kLimit);
        return with_x(ctx.x.digests(), ctx.x.masks(), r);
      });
    }
  }
  for (std::size_t i = 0; i < ctx.signature.size(); ++i) {
    check("S", [&] {
      auto out = ctx;
      out.signature[i] ^= static_cast<std::uint8_t>(1U << (i % 8));
      return out;
    });
  }
  check("S", [&] {
    auto out = ctx;
    out.signature.push_back(0);
    return out;
  });
  for (const auto& [field, counts] : per_field) {
    if (counts.first != counts.second) {
      detail(field + ": " + std::to_string(counts.first - counts.second) + " mutations accepted");
    }
  }
  return {rejected == total, std::to_string(rejected) + "/" + std::to_string(total) +
                                 " single-field mutations rejected across " +
                                 std::to_string(per_field.size()) + " fields"};
}

// 4. Proof size is one constant across payload counts and statements.
Outcome constant_proof_size(Env& env) {
  std::set<std::size_t> json_lengths;
  std::size_t generated = 0;
  while (env.proof_sizes.size() < 100) {
    const auto c = env.issue(1, [&] { return env.random_value(); });
    const auto ctx = prover::create_context(env.artifacts(1).pk, c, env.random_true_statement(c), env.rng);
    env.proof_sizes.emplace_back(1, ctx.proof.serialize().size());
    ++generated;
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto c = env.issue(m, [&] { return env.random_value(); });
      const auto ctx = prover::create_context(env.artifacts(m).pk, c, env.random_true_statement(c), env.rng);
      env.proof_sizes.emplace_back(m, ctx.proof.serialize().size());
      json_lengths.insert(nlohmann::json::parse(prover::to_json(ctx))["proof"].get<std::string>().size());
    }
  }
  std::set<std::size_t> sizes, counts;
  for (const auto& [m, bytes] : env.proof_sizes) {
    sizes.insert(bytes);
    counts.insert(m);
  }
  if (generated > 0) detail("generated " + std::to_string(generated) + " extra m=1 proofs");
  const std::size_t size = *sizes.begin();
  const bool within = 2 * size >= 137 && size <= 2 * 137;
  return {sizes.size() == 1 && counts.size() >= 3 && json_lengths.size() == 1 && within,
          std::to_string(env.proof_sizes.size()) + " proofs over m in {1,2,3}: " +
              std::to_string(sizes.size()) + " distinct size(s), " + std::to_string(size) +
              " bytes (reference 137, allowed 69..274)"};
}

void ensure_bench(Env& env) {
  if (!env.bench.empty()) return;
  env.bench = bench::run_scaling({1, 2, 3, 4}, 9, [](std::string_view msg) { progress("bench " + std::string(msg)); });
  std::istringstream csv(bench::to_csv(env.bench));
  for (std::string line; std::getline(csv, line);) detail(line);
}

// 5. Per-payload increments of setup, prove and pk size within +-50%.
Outcome linear_scaling(Env& env) {
  ensure_bench(env);
  bool ok = true;
  std::string summary;
  for (const auto& lin : bench::linearity_summary(env.bench)) {
    if (lin.metric != "setup_ms" && lin.metric != "prove_ms" && lin.metric != "pk_bytes") continue;
    const bool positive = std::all_of(lin.increments.begin(), lin.increments.end(), [](double d) { return d > 0; });
    const bool metric_ok = positive && lin.max_relative_deviation <= 0.5;
    ok = ok && metric_ok;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s%s max deviation %.1f%%", summary.empty() ? "" : ", ", lin.metric.c_str(),
                  100 * lin.max_relative_deviation);
    summary += buf;
  }
  for (std::size_t i = 1; i < env.bench.size(); ++i) {
    if (env.bench[i].pk_bytes <= env.bench[i - 1].pk_bytes || env.bench[i].vk_bytes <= env.bench[i - 1].vk_bytes) {
      ok = false;
      detail("key sizes are not strictly increasing");
    }
  }
  return {ok, summary};
}

// 6. Verification is fast in absolute terms and relative to proving.
Outcome fast_verification(Env& env) {
  ensure_bench(env);
  const auto it = std::find_if(env.bench.begin(), env.bench.end(), [](const auto& r) { return r.payload_count == 2; });
  if (it == env.bench.end()) return {false, "no m=2 measurement"};
  bool all_ratio = true;
  for (const auto& r : env.bench) all_ratio = all_ratio && r.verify_ms < r.prove_ms / 10;
  char buf[160];
  std::snprintf(buf, sizeof buf, "m=2 median verify %.2f ms (limit 100), prove %.1f ms, ratio %.1fx", it->verify_ms,
                it->prove_ms, it->prove_ms / it->verify_ms);
  return {it->verify_ms < 100 && it->verify_ms < it->prove_ms / 10 && all_ratio, buf};
}

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& command) {
  Run r;
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  while (const auto n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

// 7. Issuer and prover publish, exit and leave; a fresh verifier process
// works from the store alone.
Outcome non_interactivity(Env& env) {
  const auto root = fs::temp_directory_path() / ("zklaims-accept-" + std::to_string(env.rng.next_u64()));
  const auto issuer_dir = root / "issuer";
  const auto prover_dir = root / "prover";
  const auto store = root / "store";
  fs::create_directories(issuer_dir);
  fs::create_directories(prover_dir);
  const std::string cli = quote(env.cli_path) + " --format json ";
  const auto step = [&](const std::string& what, const std::string& args) {
    const auto r = run(cli + args);
    if (r.status != 0) throw std::runtime_error(what + " exited " + std::to_string(r.status) + ": " + r.out);
    return nlohmann::json::parse(r.out);
  };

  Outcome outcome;
  try {
    const auto ik = issuer_dir / "issuer.key";
    const auto issuer_ns = step("issuer keygen", "keygen --out " + quote(ik))["issuer_id"].get<std::string>();
    step("schema", "schema new --payloads 1 --labels birth,age --id kyc --key " + quote(ik) + " --out " +
                       quote(issuer_dir / "kyc.json"));
    step("setup", "setup --schema " + quote(issuer_dir / "kyc.json") + " --out-dir " + quote(issuer_dir));
    step("issue", "issue --schema " + quote(issuer_dir / "kyc.json") + " --key " + quote(ik) +
                      " --attr birth=631152000 --attr age=36 --attr slot2=7 --attr slot3=9 --out " +
                      quote(prover_dir / "cred.json"));
    for (const auto& [kind, file] : {std::pair{"vk", "kyc.vk"}, {"schema", "kyc.json"}, {"descriptor", "kyc.descriptor"}}) {
      step(std::string("publish ") + kind, "publish --store " + quote(store) + " --key " + quote(ik) + " --label kyc." +
                                               kind + " --kind " + kind + " --file " + quote(issuer_dir / file));
    }
    fs::copy_file(issuer_dir / "kyc.pk", prover_dir / "kyc.pk");  // out of band
    fs::copy_file(issuer_dir / "kyc.json", prover_dir / "kyc.json");

    const auto pkey = prover_dir / "prover.key";
    const auto prover_ns = step("prover keygen", "keygen --out " + quote(pkey))["issuer_id"].get<std::string>();
    step("prove", "prove --credential " + quote(prover_dir / "cred.json") + " --pk " + quote(prover_dir / "kyc.pk") +
                      " --schema " + quote(prover_dir / "kyc.json") + " --statement 'age >= 18' --out " +
                      quote(prover_dir / "ctx.json"));
    step("publish context", "publish --store " + quote(store) + " --key " + quote(pkey) +
                                " --label bar-entry --kind context --file " + quote(prover_dir / "ctx.json"));

    // Neither party is reachable any more.
    fs::remove_all(issuer_dir);
    fs::remove_all(prover_dir);

    const std::string verify = cli + "verify --store " + quote(store) + " --issuer " + issuer_ns + " --prover " +
                               prover_ns + " --label bar-entry";
    const auto ok = run(verify + " --expect 'age >= 18'");
    const auto mismatch = run(verify + " --expect 'age >= 21'");
    detail("fresh verifier: exit " + std::to_string(ok.status) + " " + ok.out.substr(0, ok.out.find('\n')));
    detail("stronger expectation: exit " + std::to_string(mismatch.status));
    outcome = {ok.status == 0 && mismatch.status == 3,
               "verifier process exited " + std::to_string(ok.status) + " using only the store (" +
                   std::to_string(mismatch.status) + " for a stronger expectation)"};
  } catch (const std::exception& e) {
    outcome = {false, e.what()};
  }
  fs::remove_all(root);
  return outcome;
}

// 8. Equality contexts reveal the disclosed value and nothing else.
Outcome selective_disclosure(Env& env) {
  const auto& art = env.artifacts(1);
  std::size_t clean = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    // Values of at least 2^40 so a match cannot be a short accidental substring.
    const auto c = env.issue(1, [&] { return (std::uint64_t{1} << 40) + env.below(kLimit - (std::uint64_t{1} << 40)); });
    const std::size_t k = i % 4;
    const auto v = c.attributes[k].value();
    std::vector<Clause> clauses(5);
    clauses[k] = Clause{encoding::encode_predicate("="), ReferenceValue(v)};
    const auto ctx = prover::create_context(art.pk, c, Statement::from_clauses(clauses), env.rng);
    const auto json = prover::to_json(ctx);

    const auto parsed = prover::context_from_json(json);
    const auto proof = parsed.proof.serialize();
    const std::vector<Bytes> blobs{Bytes(proof.begin(), proof.end()), parsed.signature, parsed.x.serialize()};
    bool ok = testing::contains_encoding(json, blobs, v);
    for (std::size_t s = 0; s < 5; ++s) {
      const bool disclosed = s == k;
      ok = ok && parsed.x.references()[s].value() == (disclosed ? v : 0);
      ok = ok && parsed.x.masks()[s] == (disclosed ? encoding::encode_predicate("=") : PredicateMask::any());
      if (!disclosed && testing::contains_encoding(json, blobs, c.attributes[s].value())) {
        ok = false;
        detail("credential " + std::to_string(i) + ": slot " + std::to_string(s) + " leaked");
      }
    }
    ok = ok && verifier::verify_context(art.vk, env.key.public_key(), parsed, parsed.statement()).overall;
    if (ok) ++clean;
    if ((i + 1) % 100 == 0) progress("disclosure " + std::to_string(i + 1) + "/1000");
  }
  return {clean == 1000, std::to_string(clean) + "/1000 equality contexts disclose exactly the chosen value"};
}

// 9. parse(serialize(v)) == v and serialize(parse(bytes)) == bytes.
Outcome serialization(Env& env) {
  auto& rng = env.rng;
  const auto random_bytes = [&](std::size_t n) {
    Bytes b(n);
    rng.fill(b);
    return b;
  };
  const auto random_digest = [&] {
    Digest d;
    rng.fill(d);
    return d;
  };
  const auto random_label = [&](std::size_t max_len) {
    static const std::string chars = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789._-";
    std::string s;
    do {
      s.clear();
      const auto len = 1 + env.below(max_len);
      for (std::size_t i = 0; i < len; ++i) s += chars[env.below(chars.size())];
    } while (s == "." || s == ".." || s == "nonce" || s.rfind("slot", 0) == 0);
    return s;
  };
  const auto g1 = [&] {
    if (env.below(16) == 0) return algebra::G1Affine::identity();
    return (algebra::G1(algebra::g1_generator()) * algebra::Fr::random(rng)).to_affine();
  };
  const auto g2 = [&] {
    if (env.below(16) == 0) return algebra::G2Affine::identity();
    return (algebra::G2(algebra::g2_generator()) * algebra::Fr::random(rng)).to_affine();
  };
  const auto key_header = [&] {
    snark::KeyHeader h;
    h.payload_count = 1 + env.below(64);
    h.seeded = env.below(2) == 0;
    h.fingerprint = random_digest();
    return h;
  };
  const auto public_input = [&](std::size_t m) {
    std::vector<Digest> y;
    std::vector<PredicateMask> p;
    std::vector<ReferenceValue> r;
    for (std::size_t j = 0; j < m; ++j) y.push_back(random_digest());
    for (std::size_t i = 0; i < 5 * m; ++i) {
      p.push_back(PredicateMask::from_bits(1 + env.below(7)));
      r.emplace_back(env.random_value());
    }
    return encoding::assemble_public_input(y, p, r);
  };
  const auto proof = [&] {
    snark::Proof pr;
    pr.a = g1();
    pr.b = g2();
    pr.c = g1();
    return pr;
  };
  const auto schema = [&] {
    const auto m = 1 + env.below(4);
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < env.below(5 * m); ++i) {
      auto l = random_label(12);
      if (seen.insert(l).second) labels.push_back(l);
    }
    return CredentialSchema::make(random_label(20), to_hex(random_digest()), m, labels);
  };

  std::map<std::string, std::size_t> passed;
  std::size_t failures = 0;
  const auto trial = [&](const std::string& format, auto make, auto serialize, auto parse) {
    for (int i = 0; i < 1000; ++i) {
      bool ok = false;
      try {
        const auto value = make();
        const auto bytes = serialize(value);
        const auto parsed = parse(bytes);
        ok = parsed == value && serialize(parsed) == bytes;
      } catch (const std::exception& e) {
        if (failures < 5) detail(format + ": " + e.what());
      }
      if (ok) {
        ++passed[format];
      } else {
        ++failures;
      }
    }
  };
  const auto bytes_view = [](const auto& b) { return std::span<const std::uint8_t>(b.data(), b.size()); };

  trial("schema json", schema, [](const auto& s) { return to_json(s); }, [](const auto& t) { return schema_from_json(t); });
  trial("credential json",
        [&] {
          Credential c;
          c.schema_id = random_label(16);
          c.issuer_id = to_hex(random_digest());
          const auto m = 1 + env.below(4);
          for (std::size_t i = 0; i < 5 * m; ++i) c.attributes.emplace_back(env.random_value());
          for (std::size_t j = 0; j < m; ++j) c.y.push_back(random_digest());
          c.signature = random_bytes(64);
          return c;
        },
        [](const auto& c) { return to_json(c); }, [](const auto& t) { return credential_from_json(t); });
  trial("context json",
        [&] {
          prover::ZklaimsContext c;
          c.schema_id = random_label(16);
          c.issuer_id = to_hex(random_digest());
          c.proof = proof();
          c.x = public_input(1 + env.below(3));
          c.signature = random_bytes(64);
          return c;
        },
        [](const auto& c) { return prover::to_json(c); }, [](const auto& t) { return prover::context_from_json(t); });
  trial("issuer secret key json",
        [&] {
          std::array<std::uint8_t, 32> seed{};
          rng.fill(seed);
          return issuer::IssuerKeypair::from_seed(seed);
        },
        [](const auto& k) { return k.to_secret_json(); }, [](const auto& t) { return issuer::IssuerKeypair::from_secret_json(t); });
  trial("issuer public key json",
        [&] {
          std::array<std::uint8_t, 32> seed{};
          rng.fill(seed);
          return issuer::IssuerKeypair::from_seed(seed).public_key();
        },
        [](const auto& k) { return issuer::public_key_to_json(k); }, [](const auto& t) { return issuer::public_key_from_json(t); });
  std::size_t statement_payloads = 1;
  trial("statement text",
        [&] {
          statement_payloads = 1 + env.below(4);
          std::vector<Clause> clauses(5 * statement_payloads);
          for (std::size_t i = 0; i + 1 < clauses.size(); ++i) {
            if (env.below(2) == 0) {
              clauses[i] = Clause{PredicateMask::from_bits(1 + env.below(6)), ReferenceValue(env.random_value())};
            }
          }
          return Statement::from_clauses(clauses);
        },
        [](const auto& s) { return s.to_dsl(); },
        [&](const auto& t) { return prover::parse_statement(t, statement_payloads); });
  trial("public input binary", [&] { return public_input(1 + env.below(4)); },
        [](const auto& x) { return x.serialize(); },
        [&](const auto& b) { return encoding::PublicInput::parse(bytes_view(b)); });
  trial("proof binary", proof, [](const auto& p) { return p.serialize(); },
        [&](const auto& b) { return snark::Proof::parse(bytes_view(b)); });
  trial("verification key binary",
        [&] {
          snark::VerificationKey vk;
          vk.header = key_header();
          vk.alpha_g1 = g1();
          vk.beta_g2 = g2();
          vk.gamma_g2 = g2();
          vk.delta_g2 = g2();
          vk.ic.resize(1 + env.below(6));
          for (auto& p : vk.ic) p = g1();
          return vk;
        },
        [](const auto& vk) { return vk.serialize(); },
        [&](const auto& b) { return snark::VerificationKey::parse(bytes_view(b)); });
  trial("proving key binary",
        [&] {
          snark::ProvingKey pk;
          pk.header = key_header();
          pk.alpha_g1 = g1();
          pk.beta_g1 = g1();
          pk.delta_g1 = g1();
          pk.beta_g2 = g2();
          pk.delta_g2 = g2();
          const auto n = 1 + env.below(5);
          pk.a_query.resize(n);
          pk.b_g1_query.resize(n);
          pk.b_g2_query.resize(n);
          pk.l_query.resize(env.below(n));
          pk.h_query.resize(env.below(5));
          for (auto* q : {&pk.a_query, &pk.b_g1_query, &pk.l_query, &pk.h_query}) {
            for (auto& p : *q) p = g1();
          }
          for (auto& p : pk.b_g2_query) p = g2();
          return pk;
        },
        [](const auto& pk) { return pk.serialize(); },
        [&](const auto& b) { return snark::ProvingKey::parse(bytes_view(b)); });
  trial("descriptor header",
        [&] {
          circuit::DescriptorHeader h;
          h.payload_count = 1 + env.below(64);
          h.constraint_count = env.rng.next_u64() & 0xffffffffU;
          h.num_variables = env.rng.next_u64() & 0xffffffffU;
          h.num_inputs = env.rng.next_u64() & 0xffffffffU;
          h.fingerprint = random_digest();
          return h;
        },
        [](const auto& h) { return h.serialize(); },
        [&](const auto& b) { return circuit::DescriptorHeader::parse(bytes_view(b)); });
  trial("namespace record",
        [&] {
          std::array<std::uint8_t, 32> seed{};
          rng.fill(seed);
          const auto owner = issuer::IssuerKeypair::from_seed(seed);
          directory::NamespaceRecord rec;
          rec.label = random_label(40);
          rec.kind = static_cast<directory::RecordKind>(1 + env.below(5));
          rec.blob = random_bytes(env.below(2048));
          rec.owner = owner.public_key();
          rec.signature = owner.sign(directory::record_message(rec.label, rec.kind, rec.blob));
          return rec;
        },
        [](const auto& r) { return r.serialize(); },
        [&](const auto& b) {
          auto rec = directory::NamespaceRecord::parse(bytes_view(b));
          if (!rec.signature_valid()) throw InvalidRecordSignature("round-tripped record signature invalid");
          return rec;
        });

  for (const auto& [format, n] : passed) detail(format + ": " + std::to_string(n) + "/1000");
  const bool pass = failures == 0 && passed.size() == 12;
  return {pass, std::to_string(passed.size()) + " formats, " + std::to_string(failures) + " round-trip failures"};
}

}  // namespace

int main(int argc, char** argv) {
#ifdef ZKLAIMS_CLI_PATH
  std::string cli = ZKLAIMS_CLI_PATH;
#else
  std::string cli = "zklaims";
#endif
  std::optional<std::uint64_t> seed;
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else if (!arg.empty() && std::all_of(arg.begin(), arg.end(), ::isdigit)) {
      selected.insert(std::stoi(arg));
    } else {
      std::cerr << "usage: acceptance [--cli PATH] [--seed N] [criterion ...]\n";
      return 64;
    }
  }
  if (!seed) seed = SystemRandom().next_u64();
  std::cout << "acceptance seed " << *seed << std::endl;

  Env env(*seed, cli);
  const std::vector<std::pair<int, std::function<Outcome(Env&)>>> criteria = {
      {1, end_to_end},          {2, oracle_soundness},  {3, tamper_matrix},
      {4, constant_proof_size}, {5, linear_scaling},    {6, fast_verification},
      {7, non_interactivity},   {8, selective_disclosure}, {9, serialization},
  };
  int failed = 0, ran = 0;
  for (const auto& [n, run_criterion] : criteria) {
    if (!selected.empty() && !selected.count(n)) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run_criterion(env);
    } catch (const std::exception& e) {
      o = {false, std::string("raised: ") + e.what()};
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::ostringstream line;
    line << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << o.summary << " (" << std::fixed
         << std::setprecision(1) << secs << " s)";
    std::cout << line.str() << std::endl;
    for (const auto& d : g_details) std::cout << "    " << d << std::endl;
    g_details.clear();
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

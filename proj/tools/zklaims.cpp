#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zklaims/bench.hpp"
#include "zklaims/directory.hpp"
#include "zklaims/issuer.hpp"
#include "zklaims/prover.hpp"
#include "zklaims/verifier.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace zklaims;

namespace {

constexpr int kExitError = 1;
constexpr int kExitMalformed = static_cast<int>(verifier::ExitCode::malformed_input);

struct Output {
  bool json_mode = false;

  // One JSON object per invocation in json mode; free text otherwise.
  void result(const json& j, const std::string& human) const {
    if (json_mode) {
      std::cout << j.dump() << '\n';
    } else if (!human.empty()) {
      std::cout << human;
    }
  }

  void error(std::string_view code, const std::string& message) const {
    if (json_mode) {
      std::cout << json{{"error", code}, {"message", message}}.dump() << '\n';
    } else {
      std::cerr << "error: " << message << '\n';
    }
  }
};

// Output paths are checked up front so no key material is computed for
// nothing.
const CLI::Validator kWritablePath(
    [](std::string& path) -> std::string {
      const auto parent = fs::absolute(fs::path(path)).parent_path();
      if (!fs::is_directory(parent)) return "directory " + parent.string() + " does not exist";
      return {};
    },
    "PATH");

std::optional<fs::path> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return fs::path(s);
}

void write_text(const fs::path& path, std::string_view text) { write_text_file_atomic(path, text); }

std::string schema_label(const std::string& schema_id, std::string_view kind) {
  return schema_id + "." + std::string(kind);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(what + ": '" + s + "' is not an unsigned integer");
  }
  return v;
}

Statement parse_expected(const std::string& dsl, const std::optional<CredentialSchema>& schema,
                         std::size_t payload_count) {
  if (schema) return prover::parse_statement(dsl, *schema);
  return prover::parse_statement(dsl, payload_count);
}

json report_json(const verifier::VerificationReport& r) {
  json j;
  j["signature_ok"] = r.signature_ok;
  j["semantics_ok"] = r.semantics_ok;
  j["proof_ok"] = r.proof_ok;
  j["overall"] = r.overall;
  j["failure_detail"] = r.failure_detail ? json(*r.failure_detail) : json(nullptr);
  j["exit_code"] = static_cast<int>(r.exit_code());
  return j;
}

std::string report_human(const verifier::VerificationReport& r) {
  // Checks run in this order and stop at the first failure.
  bool reached = !r.malformed;
  const auto flag = [&](bool ok) {
    const char* s = !reached ? "skipped" : ok ? "ok" : "FAILED";
    reached = reached && ok;
    return std::string(s);
  };
  std::string out;
  out += "signature: " + flag(r.signature_ok) + "\n";
  out += "semantics: " + flag(r.semantics_ok) + "\n";
  out += "proof:     " + flag(r.proof_ok) + "\n";
  out += std::string("overall:   ") + (r.overall ? "ACCEPT" : "REJECT") + "\n";
  if (r.failure_detail) out += "detail:    " + *r.failure_detail + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-preserving attribute credentials with zkSNARK predicate proofs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  Output out;
  std::function<int()> action;

  // keygen
  auto* keygen = app.add_subcommand("keygen", "Create an Ed25519 key pair for an issuer or namespace owner");
  std::string keygen_out, keygen_pub_out;
  keygen->add_option("--out", keygen_out, "Secret key file")->required()->check(kWritablePath);
  keygen->add_option("--pub-out", keygen_pub_out, "Public key file (default: <out>.pub)")
      ->check(kWritablePath);
  keygen->callback([&] {
    action = [&] {
      const auto key = issuer::IssuerKeypair::generate();
      const fs::path pub = keygen_pub_out.empty() ? fs::path(keygen_out + ".pub") : fs::path(keygen_pub_out);
      write_text(keygen_out, key.to_secret_json());
      write_text(pub, key.to_public_json());
      out.result({{"issuer_id", key.issuer_id()}, {"secret_key_file", keygen_out},
                  {"public_key_file", pub.string()}},
                 "issuer id " + key.issuer_id() + "\nsecret key: " + keygen_out +
                     "\npublic key: " + pub.string() + "\n");
      return 0;
    };
  });

  // schema new
  auto* schema_cmd = app.add_subcommand("schema", "Credential schemas");
  schema_cmd->require_subcommand(1);
  auto* schema_new = schema_cmd->add_subcommand("new", "Write a new credential schema");
  std::size_t schema_payloads = 1;
  std::vector<std::string> schema_labels;
  std::string schema_id, schema_key, schema_pub, schema_out;
  schema_new->add_option("--payloads", schema_payloads, "Number of 5-slot payloads")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxPayloads));
  schema_new->add_option("--labels", schema_labels, "Slot labels in order; the nonce slot is added")
      ->delimiter(',');
  schema_new->add_option("--id", schema_id, "Schema id")->required();
  auto* key_opt = schema_new->add_option("--key", schema_key, "Issuer secret key file")->check(CLI::ExistingFile);
  auto* pub_opt = schema_new->add_option("--issuer-pub", schema_pub, "Issuer public key file")
                      ->check(CLI::ExistingFile);
  key_opt->excludes(pub_opt);
  schema_new->add_option("--out", schema_out, "Schema file")->required()->check(kWritablePath);
  schema_new->callback([&] {
    action = [&] {
      std::string issuer_id;
      if (!schema_key.empty()) {
        issuer_id = issuer::IssuerKeypair::from_secret_json(read_text_file(schema_key)).issuer_id();
      } else if (!schema_pub.empty()) {
        issuer_id = issuer::issuer_id_for(issuer::public_key_from_json(read_text_file(schema_pub)));
      } else {
        throw ParseError("one of --key or --issuer-pub is required");
      }
      const auto schema = CredentialSchema::make(schema_id, issuer_id, schema_payloads, schema_labels);
      write_text(schema_out, to_json(schema));
      out.result({{"schema_id", schema.schema_id}, {"issuer_id", schema.issuer_id},
                  {"payload_count", schema.payload_count}, {"slot_labels", schema.slot_labels},
                  {"file", schema_out}},
                 "schema " + schema.schema_id + " with " + std::to_string(schema.slot_count()) +
                     " slots written to " + schema_out + "\n");
      return 0;
    };
  });

  // setup
  auto* setup_cmd = app.add_subcommand("setup", "Build the constraint system and generate pk and vk");
  std::string setup_schema, setup_seed, setup_dir = ".";
  setup_cmd->add_option("--schema", setup_schema, "Schema file")->required()->check(CLI::ExistingFile);
  setup_cmd->add_option("--seed", setup_seed, "64 hex digits; reproducible keys for testing only");
  setup_cmd->add_option("--out-dir", setup_dir, "Directory for <schema_id>.descriptor/.pk/.vk")
      ->check(CLI::ExistingDirectory)
      ->capture_default_str();
  setup_cmd->callback([&] {
    action = [&] {
      const auto schema = schema_from_json(read_text_file(setup_schema));
      std::optional<snark::Seed> seed;
      if (!setup_seed.empty()) {
        const auto bytes = from_hex(setup_seed);
        if (bytes.size() != 32) throw MalformedInput("--seed must be 64 hex digits");
        seed.emplace();
        std::copy(bytes.begin(), bytes.end(), seed->begin());
        std::cerr << "warning: seeded keys are reproducible by anyone who knows the seed\n";
      }
      const auto artifacts = issuer::bootstrap_issuer(schema, seed);
      const fs::path dir(setup_dir);
      const auto descriptor_path = dir / (schema.schema_id + ".descriptor");
      const auto pk_path = dir / (schema.schema_id + ".pk");
      const auto vk_path = dir / (schema.schema_id + ".vk");
      const auto pk_bytes = artifacts.pk.serialize();
      const auto vk_bytes = artifacts.vk.serialize();
      write_file_atomic(descriptor_path, artifacts.descriptor.serialize());
      write_file_atomic(pk_path, pk_bytes);
      write_file_atomic(vk_path, vk_bytes);
      out.result({{"descriptor", descriptor_path.string()}, {"pk", pk_path.string()},
                  {"vk", vk_path.string()}, {"constraints", artifacts.descriptor.constraint_count()},
                  {"pk_bytes", pk_bytes.size()}, {"vk_bytes", vk_bytes.size()},
                  {"seeded", seed.has_value()}},
                 std::to_string(artifacts.descriptor.constraint_count()) + " constraints\n" +
                     "descriptor: " + descriptor_path.string() + "\npk: " + pk_path.string() + " (" +
                     std::to_string(pk_bytes.size()) + " bytes)\nvk: " + vk_path.string() + " (" +
                     std::to_string(vk_bytes.size()) + " bytes)\n");
      return 0;
    };
  });

  // issue
  auto* issue_cmd = app.add_subcommand("issue", "Issue a signed credential");
  std::string issue_schema, issue_key, issue_out;
  std::vector<std::string> issue_attrs;
  issue_cmd->add_option("--schema", issue_schema, "Schema file")->required()->check(CLI::ExistingFile);
  issue_cmd->add_option("--key", issue_key, "Issuer secret key file")->required()->check(CLI::ExistingFile);
  issue_cmd->add_option("--attr", issue_attrs, "label=value, once per non-nonce slot")->required();
  issue_cmd->add_option("--out", issue_out, "Credential file")->required()->check(kWritablePath);
  issue_cmd->callback([&] {
    action = [&] {
      const auto schema = schema_from_json(read_text_file(issue_schema));
      const auto key = issuer::IssuerKeypair::from_secret_json(read_text_file(issue_key));
      std::map<std::string, std::uint64_t> values;
      for (const auto& a : issue_attrs) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw ParseError("--attr expects label=value, got '" + a + "'");
        const auto label = a.substr(0, eq);
        if (!values.emplace(label, parse_u64(a.substr(eq + 1), "attribute " + label)).second) {
          throw ParseError("attribute '" + label + "' given twice");
        }
      }
      SystemRandom rng;
      const auto credential = issuer::issue_credential(key, schema, values, rng);
      write_text(issue_out, to_json(credential));
      json y = json::array();
      for (const auto& d : credential.y) y.push_back(to_hex(d));
      out.result({{"schema_id", credential.schema_id}, {"issuer_id", credential.issuer_id},
                  {"y", y}, {"file", issue_out}},
                 "credential for schema " + credential.schema_id + " written to " + issue_out + "\n");
      return 0;
    };
  });

  // prove
  auto* prove_cmd = app.add_subcommand("prove", "Prove a statement about a credential");
  std::string prove_credential, prove_pk, prove_statement, prove_schema, prove_out;
  prove_cmd->add_option("--credential", prove_credential, "Credential file")->required()->check(CLI::ExistingFile);
  prove_cmd->add_option("--pk", prove_pk, "Proving key file")->required()->check(CLI::ExistingFile);
  prove_cmd->add_option("--statement", prove_statement, "Clauses such as 'slot1 >= 18'; empty proves nothing");
  prove_cmd->add_option("--schema", prove_schema, "Schema file, to refer to slots by label")
      ->check(CLI::ExistingFile);
  prove_cmd->add_option("--out", prove_out, "Context file")->required()->check(kWritablePath);
  prove_cmd->callback([&] {
    action = [&] {
      const auto credential = credential_from_json(read_text_file(prove_credential));
      std::optional<CredentialSchema> schema;
      if (!prove_schema.empty()) schema = schema_from_json(read_text_file(prove_schema));
      const auto statement = parse_expected(prove_statement, schema, credential.payload_count());
      const auto pk = snark::ProvingKey::parse(read_file(prove_pk));
      const auto context = prover::create_context(pk, credential, statement);
      write_text(prove_out, prover::to_json(context));
      out.result({{"schema_id", context.schema_id}, {"issuer_id", context.issuer_id},
                  {"statement", statement.to_dsl()}, {"proof_bytes", snark::Proof::kSize},
                  {"file", prove_out}},
                 "context written to " + prove_out + "\n");
      return 0;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Verify a context against an expected statement");
  std::string verify_context_file, verify_vk, verify_pub, verify_expect, verify_schema;
  std::string verify_store, verify_issuer_ns, verify_prover_ns, verify_label;
  verify_cmd->add_option("--context", verify_context_file, "Context file")->check(CLI::ExistingFile);
  verify_cmd->add_option("--vk", verify_vk, "Verification key file")->check(CLI::ExistingFile);
  verify_cmd->add_option("--issuer-pub", verify_pub, "Issuer public key file")->check(CLI::ExistingFile);
  verify_cmd->add_option("--schema", verify_schema, "Schema file, to refer to slots by label")
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--expect", verify_expect, "Statement the verifier requires")->required();
  verify_cmd->add_option("--store", verify_store, "Directory store (overridden by $ZKLAIMS_STORE)");
  verify_cmd->add_option("--issuer", verify_issuer_ns, "Issuer namespace id (store mode)");
  verify_cmd->add_option("--prover", verify_prover_ns, "Prover namespace id (store mode)");
  verify_cmd->add_option("--label", verify_label, "Context record label (store mode)");
  verify_cmd->callback([&] {
    action = [&] {
      prover::ZklaimsContext context;
      snark::VerificationKey vk;
      issuer::PublicKey issuer_key{};
      std::optional<CredentialSchema> schema;
      try {
        if (!verify_context_file.empty()) {
          if (verify_vk.empty() || verify_pub.empty()) {
            throw ParseError("file mode needs --context, --vk and --issuer-pub");
          }
          context = prover::context_from_json(read_text_file(verify_context_file));
          vk = snark::VerificationKey::parse(read_file(verify_vk));
          issuer_key = issuer::public_key_from_json(read_text_file(verify_pub));
          if (!verify_schema.empty()) schema = schema_from_json(read_text_file(verify_schema));
        } else {
          if (verify_issuer_ns.empty() || verify_prover_ns.empty() || verify_label.empty()) {
            throw ParseError("store mode needs --issuer, --prover and --label (or use --context)");
          }
          const auto store = directory::Store::open(optional_path(verify_store));
          const auto ctx_record = store.resolve(verify_prover_ns, verify_label);
          if (ctx_record.kind != directory::RecordKind::context) {
            throw MalformedInput("record " + verify_label + " is not a context");
          }
          context = prover::context_from_json(
              std::string(ctx_record.blob.begin(), ctx_record.blob.end()));
          if (context.issuer_id != verify_issuer_ns) {
            throw MalformedInput("context was issued by " + context.issuer_id + ", not " + verify_issuer_ns);
          }
          const auto vk_record = store.resolve(verify_issuer_ns, schema_label(context.schema_id, "vk"));
          vk = snark::VerificationKey::parse(vk_record.blob);
          issuer_key = vk_record.owner;
          try {
            const auto rec = store.resolve(verify_issuer_ns, schema_label(context.schema_id, "schema"));
            schema = schema_from_json(std::string(rec.blob.begin(), rec.blob.end()));
          } catch (const NotFound&) {
          }
          try {
            const auto rec = store.resolve(verify_issuer_ns, schema_label(context.schema_id, "descriptor"));
            if (circuit::load_descriptor(rec.blob).fingerprint() != vk.header.fingerprint) {
              throw KeyMismatch("published vk does not match the published constraint system");
            }
          } catch (const NotFound&) {
          }
        }
        if (schema && schema->schema_id != context.schema_id) {
          throw KeyMismatch("schema " + schema->schema_id + " does not match context schema " +
                            context.schema_id);
        }
        const auto expected = parse_expected(verify_expect, schema, context.x.payload_count());
        const auto report = verifier::verify_context(vk, issuer_key, context, expected);
        out.result(report_json(report), report_human(report));
        return static_cast<int>(report.exit_code());
      } catch (const NotFound&) {
        throw;
      } catch (const IoError&) {
        throw;
      } catch (const Error& e) {
        verifier::VerificationReport r;
        r.malformed = true;
        r.failure_detail = e.what();
        out.result(report_json(r), report_human(r));
        return kExitMalformed;
      }
    };
  });

  // publish
  auto* publish_cmd = app.add_subcommand("publish", "Sign and store a record in the owner's namespace");
  std::string publish_store, publish_key, publish_label, publish_kind, publish_file;
  publish_cmd->add_option("--store", publish_store, "Directory store (overridden by $ZKLAIMS_STORE)");
  publish_cmd->add_option("--key", publish_key, "Owner secret key file")->required()->check(CLI::ExistingFile);
  publish_cmd->add_option("--label", publish_label, "Record label, e.g. <schema_id>.vk")->required();
  publish_cmd->add_option("--kind", publish_kind, "Record kind")
      ->required()
      ->check(CLI::IsMember({"descriptor", "vk", "context", "schema", "pk"}));
  publish_cmd->add_option("--file", publish_file, "Blob to publish")->required()->check(CLI::ExistingFile);
  publish_cmd->callback([&] {
    action = [&] {
      const auto store = directory::Store::open(optional_path(publish_store));
      const auto key = issuer::IssuerKeypair::from_secret_json(read_text_file(publish_key));
      const auto record = store.publish(key, publish_label, directory::parse_record_kind(publish_kind),
                                        read_file(publish_file));
      const auto path = store.record_path(record.namespace_id(), record.label);
      out.result({{"namespace_id", record.namespace_id()}, {"label", record.label},
                  {"kind", directory::to_string(record.kind)}, {"blob_bytes", record.blob.size()},
                  {"path", path.string()}},
                 "published " + record.label + " in namespace " + record.namespace_id() + "\n");
      return 0;
    };
  });

  // resolve
  auto* resolve_cmd = app.add_subcommand("resolve", "Fetch and check a record");
  std::string resolve_store, resolve_ns, resolve_label, resolve_out;
  resolve_cmd->add_option("--store", resolve_store, "Directory store (overridden by $ZKLAIMS_STORE)");
  resolve_cmd->add_option("--namespace", resolve_ns, "Namespace id")->required();
  resolve_cmd->add_option("--label", resolve_label, "Record label")->required();
  resolve_cmd->add_option("--out", resolve_out, "Write the blob here")->check(kWritablePath);
  resolve_cmd->callback([&] {
    action = [&] {
      const auto store = directory::Store::open(optional_path(resolve_store));
      const auto record = store.resolve(resolve_ns, resolve_label);
      if (!resolve_out.empty()) write_file_atomic(resolve_out, record.blob);
      out.result({{"namespace_id", record.namespace_id()}, {"label", record.label},
                  {"kind", directory::to_string(record.kind)}, {"blob_bytes", record.blob.size()},
                  {"owner_public_key", to_base64(record.owner)},
                  {"out", resolve_out.empty() ? json(nullptr) : json(resolve_out)}},
                 record.label + ": " + std::string(directory::to_string(record.kind)) + ", " +
                     std::to_string(record.blob.size()) + " bytes, signature ok" +
                     (resolve_out.empty() ? "" : ", written to " + resolve_out) + "\n");
      return 0;
    };
  });

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Measure setup, prove and verify across payload counts");
  std::string bench_payloads = "1..4", bench_out = "-";
  std::size_t bench_reps = 3;
  bench_cmd->add_option("--payloads", bench_payloads, "Counts, e.g. 1..4 or 1,2,4")->capture_default_str();
  bench_cmd->add_option("--reps", bench_reps, "Measured repetitions per count (>= 3)")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "CSV file, '-' for stdout")->capture_default_str();
  bench_cmd->callback([&] {
    action = [&] {
      const auto counts = bench::parse_counts(bench_payloads);
      if (bench_out != "-") {
        std::string path = bench_out;
        if (const auto err = kWritablePath(path); !err.empty()) throw IoError(err);
      }
      const auto records = bench::run_scaling(counts, bench_reps, [&](std::string_view msg) {
        if (!out.json_mode) std::cerr << "bench: " << msg << '\n';
      });
      const auto csv = bench::to_csv(records);
      if (bench_out != "-") write_text(bench_out, csv);
      json rows = json::array();
      for (const auto& r : records) {
        rows.push_back({{"payloads", r.payload_count}, {"setup_ms", r.setup_ms}, {"prove_ms", r.prove_ms},
                        {"verify_ms", r.verify_ms}, {"pk_bytes", r.pk_bytes}, {"vk_bytes", r.vk_bytes},
                        {"proof_bytes", r.proof_bytes}, {"reps", r.repetitions}});
      }
      out.result({{"records", rows}, {"host", bench::host_fingerprint()},
                  {"out", bench_out == "-" ? json(nullptr) : json(bench_out)}},
                 bench_out == "-" ? csv : "results written to " + bench_out + "\n");
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  out.json_mode = format == "json";

  try {
    return action();
  } catch (const UnsatisfiableStatement& e) {
    out.error(to_string(e.code()), e.what());
    return kExitError;
  } catch (const MalformedInput& e) {
    out.error(to_string(e.code()), e.what());
    return kExitMalformed;
  } catch (const InvalidRecordSignature& e) {
    out.error(to_string(e.code()), e.what());
    return kExitMalformed;
  } catch (const Error& e) {
    out.error(to_string(e.code()), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    out.error("internal", e.what());
    return kExitError;
  }
}

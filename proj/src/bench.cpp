#include "zklaims/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "zklaims/issuer.hpp"
#include "zklaims/prover.hpp"
#include "zklaims/verifier.hpp"

namespace zklaims::bench {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::size_t kVerifyCallsPerRound = 5;

struct Round {
  double setup_ms = 0;
  double prove_ms = 0;
  std::vector<double> verify_ms;
  std::size_t pk_bytes = 0, vk_bytes = 0, proof_bytes = 0;
};

Round run_round(std::size_t m, const issuer::IssuerKeypair& key, RandomSource& rng) {
  const auto schema = CredentialSchema::make("bench-" + std::to_string(m), key.issuer_id(), m, {});
  Round round;
  issuer::IssuerArtifacts artifacts;
  round.setup_ms = time_ms([&] { artifacts = issuer::bootstrap_issuer(schema); });
  round.pk_bytes = artifacts.pk.serialize().size();
  round.vk_bytes = artifacts.vk.serialize().size();

  std::map<std::string, encoding::AttributeValue> values;
  for (std::size_t i = 0; i < schema.nonce_slot(); ++i) {
    values[schema.slot_labels[i]] = encoding::AttributeValue(rng.next_u64() % encoding::kValueLimit);
  }
  const auto credential = issuer::issue_credential(key, schema, values, rng);
  std::vector<Clause> clauses(schema.slot_count());
  clauses[0] = Clause{encoding::encode_predicate("="),
                      encoding::ReferenceValue(credential.attributes[0].value())};
  const auto statement = Statement::from_clauses(clauses);

  prover::ZklaimsContext context;
  round.prove_ms = time_ms([&] { context = prover::create_context(artifacts.pk, credential, statement, rng); });
  round.proof_bytes = context.proof.serialize().size();
  for (std::size_t i = 0; i < kVerifyCallsPerRound; ++i) {
    verifier::VerificationReport report;
    round.verify_ms.push_back(time_ms([&] {
      report = verifier::verify_context(artifacts.vk, key.public_key(), context, statement);
    }));
    if (!report.overall) throw BackendError("benchmark context failed to verify");
  }
  return round;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

double median(std::vector<double> samples) {
  if (samples.empty()) return 0;
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 == 1 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2;
}

std::string host_fingerprint() {
  std::string cpu = "unknown cpu";
  std::ifstream info("/proc/cpuinfo");
  for (std::string line; std::getline(info, line);) {
    if (line.rfind("model name", 0) == 0) {
      cpu = line.substr(line.find(':') + 2);
      break;
    }
  }
  std::ostringstream os;
  os << cpu << "; " << std::thread::hardware_concurrency() << " cpu(s); gcc " << __VERSION__;
  return os.str();
}

std::vector<BenchRecord> run_scaling(const std::vector<std::size_t>& payload_counts,
                                     std::size_t repetitions, const Progress& progress) {
  if (repetitions < 3) throw RangeError("at least 3 repetitions are needed for a median");
  for (auto m : payload_counts) {
    if (m < 1 || m > kMaxPayloads) throw RangeError("payload count out of range: " + std::to_string(m));
  }
  const auto host = host_fingerprint();
  const auto key = issuer::IssuerKeypair::generate();
  SystemRandom rng;
  // Rounds are interleaved across payload counts so that a slow spell on a
  // shared host lands on every count instead of skewing one row.
  const std::size_t n = payload_counts.size();
  std::vector<BenchRecord> records(n);
  std::vector<std::vector<double>> setup(n), prove(n), verify(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (progress) progress("payloads=" + std::to_string(payload_counts[i]) + " warm-up");
    const auto round = run_round(payload_counts[i], key, rng);
    records[i].payload_count = payload_counts[i];
    records[i].repetitions = repetitions;
    records[i].host = host;
    records[i].pk_bytes = round.pk_bytes;
    records[i].vk_bytes = round.vk_bytes;
    records[i].proof_bytes = round.proof_bytes;
  }
  for (std::size_t r = 0; r < repetitions; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      auto& rec = records[i];
      if (progress) progress("payloads=" + std::to_string(rec.payload_count) + " round " + std::to_string(r + 1));
      const auto round = run_round(rec.payload_count, key, rng);
      setup[i].push_back(round.setup_ms);
      prove[i].push_back(round.prove_ms);
      verify[i].insert(verify[i].end(), round.verify_ms.begin(), round.verify_ms.end());
      if (round.pk_bytes != rec.pk_bytes || round.vk_bytes != rec.vk_bytes || round.proof_bytes != rec.proof_bytes) {
        throw BackendError("artifact sizes changed between repetitions");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    records[i].setup_ms = median(setup[i]);
    records[i].prove_ms = median(prove[i]);
    records[i].verify_ms = median(verify[i]);
  }
  return records;
}

std::vector<Linearity> linearity_summary(const std::vector<BenchRecord>& records) {
  if (records.size() < 2) return {};
  auto sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.payload_count < b.payload_count; });

  const auto summarize = [&](std::string name, auto metric) {
    Linearity lin;
    lin.metric = std::move(name);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      const double steps = static_cast<double>(sorted[i].payload_count - sorted[i - 1].payload_count);
      lin.increments.push_back((metric(sorted[i]) - metric(sorted[i - 1])) / steps);
    }
    double sum = 0;
    for (double d : lin.increments) sum += d;
    lin.mean_increment = sum / static_cast<double>(lin.increments.size());
    for (double d : lin.increments) {
      const double dev = lin.mean_increment == 0 ? (d == 0 ? 0 : INFINITY)
                                                 : std::abs(d - lin.mean_increment) / std::abs(lin.mean_increment);
      lin.max_relative_deviation = std::max(lin.max_relative_deviation, dev);
    }
    return lin;
  };
  return {
      summarize("setup_ms", [](const BenchRecord& r) { return r.setup_ms; }),
      summarize("prove_ms", [](const BenchRecord& r) { return r.prove_ms; }),
      summarize("verify_ms", [](const BenchRecord& r) { return r.verify_ms; }),
      summarize("pk_bytes", [](const BenchRecord& r) { return static_cast<double>(r.pk_bytes); }),
      summarize("vk_bytes", [](const BenchRecord& r) { return static_cast<double>(r.vk_bytes); }),
  };
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "payloads,setup_ms,prove_ms,verify_ms,pk_bytes,vk_bytes,proof_bytes,reps\n";
  for (const auto& r : records) {
    os << r.payload_count << ',' << format_double(r.setup_ms) << ',' << format_double(r.prove_ms)
       << ',' << format_double(r.verify_ms) << ',' << r.pk_bytes << ',' << r.vk_bytes << ','
       << r.proof_bytes << ',' << r.repetitions << '\n';
  }
  if (!records.empty()) os << "# host: " << records.front().host << '\n';
  for (const auto& lin : linearity_summary(records)) {
    os << "# linearity " << lin.metric << ": increments";
    for (std::size_t i = 0; i < lin.increments.size(); ++i) {
      os << (i == 0 ? " " : ";") << format_double(lin.increments[i]);
    }
    os << " mean " << format_double(lin.mean_increment) << " max_rel_dev "
       << format_double(100 * lin.max_relative_deviation) << "%\n";
  }
  return os.str();
}

std::vector<std::size_t> parse_counts(std::string_view text) {
  const std::string original(text);
  const auto number = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
      throw ParseError("bad payload count '" + std::string(s) + "' in '" + original + "'");
    }
    return v;
  };
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto lo = number(text.substr(0, dots));
    const auto hi = number(text.substr(dots + 2));
    if (hi < lo) throw ParseError("empty payload range '" + original + "'");
    for (auto m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }
  while (true) {
    const auto comma = text.find(',');
    out.push_back(number(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace zklaims::bench

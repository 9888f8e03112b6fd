#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace zklaims::bench {

struct BenchRecord {
  std::size_t payload_count = 0;
  double setup_ms = 0;   // median
  double prove_ms = 0;   // median, witness synthesis included
  double verify_ms = 0;  // median
  std::size_t pk_bytes = 0;
  std::size_t vk_bytes = 0;
  std::size_t proof_bytes = 0;
  std::size_t repetitions = 0;
  std::string host;
};

using Progress = std::function<void(std::string_view)>;

/// For each count: one discarded warm-up, then `repetitions` rounds of
/// setup, issue, prove and verify with fresh keys. RangeError if
/// repetitions < 3 or a count is outside [1, 64].
std::vector<BenchRecord> run_scaling(const std::vector<std::size_t>& payload_counts,
                                     std::size_t repetitions = 3, const Progress& progress = {});

/// CPU model, core count and compiler.
std::string host_fingerprint();

/// Consecutive differences of one metric and their spread around the mean.
struct Linearity {
  std::string metric;
  std::vector<double> increments;
  double mean_increment = 0;
  /// max |increment - mean| / |mean|
  double max_relative_deviation = 0;
};

/// setup_ms, prove_ms, verify_ms, pk_bytes and vk_bytes over records sorted
/// by payload count. Empty when fewer than two records.
std::vector<Linearity> linearity_summary(const std::vector<BenchRecord>& records);

/// Header "payloads,setup_ms,prove_ms,verify_ms,pk_bytes,vk_bytes,proof_bytes,reps",
/// one row per record, then '#' comment lines with the host and the
/// linearity summary.
std::string to_csv(const std::vector<BenchRecord>& records);

/// "1..4", "1,2,5" or "3". ParseError otherwise.
std::vector<std::size_t> parse_counts(std::string_view text);

double median(std::vector<double> samples);

}  // namespace zklaims::bench

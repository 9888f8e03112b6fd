#pragma once

#include <optional>
#include <string>

#include "zklaims/issuer.hpp"
#include "zklaims/prover.hpp"
#include "zklaims/snark.hpp"
#include "zklaims/statement.hpp"

namespace zklaims::verifier {

/// Process exit codes of `zklaims verify`.
enum class ExitCode : int {
  ok = 0,
  signature_failure = 2,
  semantic_mismatch = 3,
  proof_invalid = 4,
  malformed_input = 5,
};

struct VerificationReport {
  bool signature_ok = false;
  bool semantics_ok = false;
  bool proof_ok = false;
  bool overall = false;
  /// Set whenever overall is false.
  std::optional<std::string> failure_detail;
  /// True when the context could not be interpreted at all.
  bool malformed = false;

  ExitCode exit_code() const;
};

/// Checks S over y, then that (p, r) equal the expected statement exactly,
/// then the proof. Stops at the first failing check; later flags stay
/// false. ShapeError if vk's arity does not match x. Undecodable pieces
/// (for example a signature of the wrong length) produce a malformed report.
VerificationReport verify_context(const snark::VerificationKey& vk,
                                  const issuer::PublicKey& issuer_public_key,
                                  const prover::ZklaimsContext& context,
                                  const Statement& expected);

}  // namespace zklaims::verifier

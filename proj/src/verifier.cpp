#include "zklaims/verifier.hpp"

namespace zklaims::verifier {

ExitCode VerificationReport::exit_code() const {
  if (overall) return ExitCode::ok;
  if (malformed) return ExitCode::malformed_input;
  if (!signature_ok) return ExitCode::signature_failure;
  if (!semantics_ok) return ExitCode::semantic_mismatch;
  return ExitCode::proof_invalid;
}

VerificationReport verify_context(const snark::VerificationKey& vk,
                                  const issuer::PublicKey& issuer_public_key,
                                  const prover::ZklaimsContext& context,
                                  const Statement& expected) {
  if (vk.public_input_arity() != context.x.arity()) {
    throw ShapeError("verification key expects " + std::to_string(vk.public_input_arity()) +
                     " public inputs, context has " + std::to_string(context.x.arity()));
  }
  VerificationReport report;
  const auto fail = [&](std::string detail) {
    report.failure_detail = std::move(detail);
    return report;
  };

  if (context.issuer_id != issuer::issuer_id_for(issuer_public_key)) {
    return fail("context names issuer " + context.issuer_id + ", key belongs to " +
                issuer::issuer_id_for(issuer_public_key));
  }
  try {
    report.signature_ok = issuer::verify_credential_signature(
        issuer_public_key, context.schema_id, context.issuer_id, context.x.digests(),
        context.signature);
  } catch (const MalformedInput& e) {
    report.malformed = true;
    return fail(std::string("malformed signature: ") + e.what());
  }
  if (!report.signature_ok) return fail("issuer signature does not verify over y");

  if (expected.slot_count() != context.x.slot_count()) {
    return fail("expected statement covers " + std::to_string(expected.slot_count()) +
                " slots, context covers " + std::to_string(context.x.slot_count()));
  }
  for (std::size_t i = 0; i < expected.slot_count(); ++i) {
    const auto& want = expected.clause(i);
    if (context.x.masks()[i] != want.mask || context.x.references()[i] != want.reference) {
      return fail("slot " + std::to_string(i) + ": context proves " +
                  std::string(context.x.masks()[i].symbol()) + " " +
                  std::to_string(context.x.references()[i].value()) + ", expected " +
                  std::string(want.mask.symbol()) + " " + std::to_string(want.reference.value()));
    }
  }
  report.semantics_ok = true;

  report.proof_ok = snark::verify(vk, context.proof, context.x);
  if (!report.proof_ok) return fail("proof does not verify");
  report.overall = true;
  return report;
}

}  // namespace zklaims::verifier

#pragma once

#include <string>
#include <string_view>

#include "zklaims/credential.hpp"
#include "zklaims/encoding.hpp"
#include "zklaims/random.hpp"
#include "zklaims/snark.hpp"
#include "zklaims/statement.hpp"

namespace zklaims::prover {

/// Clauses "<slot> <op> <value>" separated by newlines or ';'. A slot is a
/// schema label or "slot<index>"; op is one of < <= = != >= >. Blank
/// clauses and '#' comments are ignored. Unmentioned slots become "any".
///
/// ParseError, UnknownSlot, DuplicateClause, NoncePredicateForbidden.
Statement parse_statement(std::string_view dsl, const CredentialSchema& schema);
/// Index-only form for a schema with default labels.
Statement parse_statement(std::string_view dsl, std::size_t payload_count);

/// Everything a verifier needs besides vk, the issuer key and its own
/// expected statement.
struct ZklaimsContext {
  std::string schema_id;
  std::string issuer_id;
  snark::Proof proof;
  encoding::PublicInput x;
  Bytes signature;

  /// The statement carried by x's masks and references.
  Statement statement() const;

  friend bool operator==(const ZklaimsContext&, const ZklaimsContext&) = default;
};

/// {schema_id, issuer_id, proof (base64), y (hex), p (ints), r (decimal
/// strings), S (base64)}. Parsing throws MalformedInput.
std::string to_json(const ZklaimsContext& context);
ZklaimsContext context_from_json(std::string_view text);

/// KeyMismatch if the credential does not fit pk; UnsatisfiableStatement
/// (with the slot) before any proving work if a clause is false.
ZklaimsContext create_context(const snark::ProvingKey& pk, const Credential& credential,
                              const Statement& statement, RandomSource& rng);
ZklaimsContext create_context(const snark::ProvingKey& pk, const Credential& credential,
                              const Statement& statement);

}  // namespace zklaims::prover

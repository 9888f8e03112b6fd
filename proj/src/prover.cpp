#include "zklaims/prover.hpp"

#include <charconv>
#include <regex>

#include "json_util.hpp"
#include "zklaims/circuit.hpp"

namespace zklaims::prover {

using detail::ordered_json;
using encoding::PredicateMask;
using encoding::ReferenceValue;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::optional<std::size_t> slot_number(std::string_view token) {
  if (token.size() <= 4 || token.substr(0, 4) != "slot") return std::nullopt;
  const auto digits = token.substr(4);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return v;
}

Statement parse_clauses(std::string_view dsl, std::size_t slot_count,
                        const CredentialSchema* schema) {
  static const std::regex clause_re(R"(([^\s<>=!#;]+)\s*(<=|>=|!=|<|>|=)\s*(\S+))");
  std::vector<Clause> clauses(slot_count);
  std::vector<bool> seen(slot_count, false);

  std::size_t line_no = 0;
  while (!dsl.empty()) {
    const auto cut = dsl.find_first_of("\n;");
    auto part = dsl.substr(0, cut);
    dsl = cut == std::string_view::npos ? std::string_view{} : dsl.substr(cut + 1);
    ++line_no;
    if (const auto hash = part.find('#'); hash != std::string_view::npos) part = part.substr(0, hash);
    part = trim(part);
    if (part.empty()) continue;

    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(part.begin(), part.end(), m, clause_re)) {
      throw ParseError("clause " + std::to_string(line_no) + ": expected '<slot> <op> <value>', got '" +
                       std::string(part) + "'");
    }
    const std::string slot_token = m[1].str();
    const std::string op = m[2].str();
    const std::string value_token = m[3].str();

    std::optional<std::size_t> slot;
    if (schema != nullptr) slot = schema->slot_index(slot_token);
    if (!slot) {
      slot = slot_number(slot_token);
      if (slot && *slot >= slot_count) slot.reset();
    }
    if (!slot) throw UnknownSlot(slot_token);
    if (*slot == slot_count - 1) throw NoncePredicateForbidden();
    if (seen[*slot]) throw DuplicateClause(*slot);
    seen[*slot] = true;

    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(value_token.data(), value_token.data() + value_token.size(), value);
    if (ec != std::errc() || ptr != value_token.data() + value_token.size()) {
      throw ParseError("clause " + std::to_string(line_no) + ": '" + value_token +
                       "' is not an unsigned integer");
    }
    if (value >= encoding::kValueLimit) {
      throw ParseError("clause " + std::to_string(line_no) + ": reference " + value_token +
                       " does not fit in 50 bits");
    }
    clauses[*slot] = Clause{encoding::encode_predicate(op), ReferenceValue(value)};
  }
  return Statement::from_clauses(std::move(clauses));
}

}  // namespace

Statement parse_statement(std::string_view dsl, const CredentialSchema& schema) {
  schema.validate();
  return parse_clauses(dsl, schema.slot_count(), &schema);
}

Statement parse_statement(std::string_view dsl, std::size_t payload_count) {
  if (payload_count < 1 || payload_count > kMaxPayloads) {
    throw ShapeError("payload count must be in [1, 64], got " + std::to_string(payload_count));
  }
  return parse_clauses(dsl, encoding::kSlotsPerPayload * payload_count, nullptr);
}

Statement ZklaimsContext::statement() const {
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < x.slot_count(); ++i) {
    clauses.push_back(Clause{x.masks()[i], x.references()[i]});
  }
  return Statement::from_clauses(std::move(clauses));
}

std::string to_json(const ZklaimsContext& context) {
  ordered_json j;
  j["schema_id"] = context.schema_id;
  j["issuer_id"] = context.issuer_id;
  j["proof"] = to_base64(context.proof.serialize());
  auto& y = j["y"] = ordered_json::array();
  for (const auto& d : context.x.digests()) y.push_back(to_hex(d));
  auto& p = j["p"] = ordered_json::array();
  for (const auto& m : context.x.masks()) p.push_back(m.bits());
  auto& r = j["r"] = ordered_json::array();
  for (const auto& v : context.x.references()) r.push_back(std::to_string(v.value()));
  j["S"] = to_base64(context.signature);
  return j.dump(2) + "\n";
}

ZklaimsContext context_from_json(std::string_view text) {
  const auto j = detail::parse_json(text);
  return detail::guarded("context", [&] {
    detail::expect_keys(j, {"schema_id", "issuer_id", "proof", "y", "p", "r", "S"});
    ZklaimsContext c;
    c.schema_id = j.at("schema_id").get<std::string>();
    c.issuer_id = j.at("issuer_id").get<std::string>();
    c.proof = snark::Proof::parse(from_base64(j.at("proof").get<std::string>()));
    std::vector<Digest> y;
    for (const auto& d : j.at("y")) y.push_back(detail::parse_digest(d.get<std::string>()));
    std::vector<PredicateMask> p;
    for (const auto& m : j.at("p")) {
      if (!m.is_number_unsigned()) throw MalformedInput("masks must be integers in [1, 7]");
      p.push_back(PredicateMask::from_bits(m.get<std::uint64_t>()));
    }
    std::vector<ReferenceValue> r;
    for (const auto& v : j.at("r")) r.emplace_back(detail::parse_decimal(v.get<std::string>()));
    c.x = encoding::assemble_public_input(std::move(y), std::move(p), std::move(r));
    c.signature = from_base64(j.at("S").get<std::string>());
    return c;
  });
}

ZklaimsContext create_context(const snark::ProvingKey& pk, const Credential& credential,
                              const Statement& statement, RandomSource& rng) {
  if (pk.header.payload_count != credential.payload_count()) {
    throw KeyMismatch("proving key covers " + std::to_string(pk.header.payload_count) +
                      " payloads, credential has " + std::to_string(credential.payload_count()));
  }
  const auto descriptor = circuit::build_constraint_system(credential.payload_count(), pk.header.hash);
  if (descriptor.fingerprint() != pk.header.fingerprint) {
    throw KeyMismatch("proving key was made for a different constraint system");
  }
  const auto witness = circuit::synthesize_witness(descriptor, credential, statement);
  ZklaimsContext c;
  c.schema_id = credential.schema_id;
  c.issuer_id = credential.issuer_id;
  c.x = circuit::public_input_for(credential, statement);
  c.proof = snark::prove(pk, witness, c.x, rng);
  c.signature = credential.signature;
  return c;
}

ZklaimsContext create_context(const snark::ProvingKey& pk, const Credential& credential,
                              const Statement& statement) {
  SystemRandom rng;
  return create_context(pk, credential, statement, rng);
}

}  // namespace zklaims::prover

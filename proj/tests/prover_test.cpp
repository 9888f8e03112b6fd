#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zklaims/issuer.hpp"
#include "zklaims/prover.hpp"
#include "zklaims/verifier.hpp"

namespace zklaims::prover {
namespace {

using encoding::PredicateMask;
using encoding::ReferenceValue;

issuer::IssuerKeypair key_of(std::uint8_t v) {
  std::array<std::uint8_t, 32> seed{};
  seed.fill(v);
  return issuer::IssuerKeypair::from_seed(seed);
}

const CredentialSchema& age_schema() {
  static const auto schema = CredentialSchema::make("age", key_of(1).issuer_id(), 1, {"birth", "country"});
  return schema;
}

TEST(StatementParseTest, EmptyIsTrivial) {
  EXPECT_EQ(parse_statement("", age_schema()), Statement::trivial(1));
  EXPECT_EQ(parse_statement("  \n# nothing\n;;", age_schema()), Statement::trivial(1));
}

TEST(StatementParseTest, SingleClause) {
  const auto s = parse_statement("slot1 >= 18", age_schema());
  EXPECT_EQ(s.clause(1).mask.bits(), 0b110);
  EXPECT_EQ(s.clause(1).reference.value(), 18u);
  for (std::size_t i : {0, 2, 3, 4}) EXPECT_TRUE(s.clause(i).mask.is_any());
  EXPECT_EQ(parse_statement("slot1>=18", age_schema()), s);
  EXPECT_EQ(parse_statement("country >= 18 # comment", age_schema()), s);
}

TEST(StatementParseTest, AllOperatorsAndSeparators) {
  const auto s = parse_statement("birth < 5; country <= 6\nslot2 = 7;slot3 != 8", age_schema());
  EXPECT_EQ(s.clause(0).mask.bits(), 0b001);
  EXPECT_EQ(s.clause(1).mask.bits(), 0b011);
  EXPECT_EQ(s.clause(2).mask.bits(), 0b010);
  EXPECT_EQ(s.clause(3).mask.bits(), 0b101);
  EXPECT_EQ(parse_statement("slot0 > 1", 1).clause(0).mask.bits(), 0b100);
  EXPECT_EQ(parse_statement(s.to_dsl(), age_schema()), s);
  EXPECT_EQ(parse_statement(s.to_dsl(), 1), s);
}

TEST(StatementParseTest, Errors) {
  const auto& schema = age_schema();
  EXPECT_THROW(parse_statement("slot1 >= 18\nslot1 < 65", schema), DuplicateClause);
  EXPECT_THROW(parse_statement("country >= 18; slot1 < 65", schema), DuplicateClause);
  EXPECT_THROW(parse_statement("height > 3", schema), UnknownSlot);
  EXPECT_THROW(parse_statement("slot5 > 3", schema), UnknownSlot);
  EXPECT_THROW(parse_statement("nonce > 3", schema), NoncePredicateForbidden);
  EXPECT_THROW(parse_statement("slot4 = 3", schema), NoncePredicateForbidden);
  EXPECT_THROW(parse_statement("slot1 >> 3", schema), ParseError);
  EXPECT_THROW(parse_statement("slot1 >=", schema), ParseError);
  EXPECT_THROW(parse_statement("slot1 >= -1", schema), ParseError);
  EXPECT_THROW(parse_statement("slot1 >= 1125899906842624", schema), ParseError);
  EXPECT_THROW(parse_statement("slot1 any 0", schema), ParseError);
  EXPECT_NO_THROW(parse_statement("slot1 >= 1125899906842623", schema));
  EXPECT_THROW(parse_statement("", 0), ShapeError);
}

class ContextTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    snark::Seed seed{};
    seed.fill(4);
    artifacts_ = new issuer::IssuerArtifacts(issuer::bootstrap_issuer(age_schema(), seed));
  }
  static void TearDownTestSuite() {
    delete artifacts_;
    artifacts_ = nullptr;
  }

  static Credential credential(RandomSource& rng) {
    std::map<std::string, encoding::AttributeValue> values;
    for (std::size_t i = 0; i < 4; ++i) {
      // Large values keep the encoding grep free of accidental matches.
      values[age_schema().slot_labels[i]] =
          encoding::AttributeValue((std::uint64_t{1} << 45) + rng.next_u64() % (std::uint64_t{1} << 44));
    }
    return issuer::issue_credential(key_of(1), age_schema(), values, rng);
  }

  static issuer::IssuerArtifacts* artifacts_;
};

issuer::IssuerArtifacts* ContextTest::artifacts_ = nullptr;

TEST_F(ContextTest, TrivialStatementVerifiesFromBytesAlone) {
  SeededRandom rng(1);
  const auto c = credential(rng);
  std::string json;
  {
    const auto ctx = create_context(artifacts_->pk, c, Statement::trivial(1), rng);
    json = to_json(ctx);
  }
  const auto vk = snark::VerificationKey::parse(artifacts_->vk.serialize());
  const auto restored = context_from_json(json);
  EXPECT_EQ(to_json(restored), json);
  const auto report = verifier::verify_context(vk, key_of(1).public_key(), restored, Statement::trivial(1));
  EXPECT_TRUE(report.overall);
  EXPECT_EQ(restored.statement(), Statement::trivial(1));
}

TEST_F(ContextTest, SelectiveDisclosureRevealsOnlyTheReference) {
  SeededRandom rng(2);
  for (int i = 0; i < 3; ++i) {
    const auto c = credential(rng);
    const std::size_t disclosed = static_cast<std::size_t>(i) % 4;
    const auto v = c.attributes[disclosed].value();
    const auto st = parse_statement("slot" + std::to_string(disclosed) + " = " + std::to_string(v), age_schema());
    const auto ctx = create_context(artifacts_->pk, c, st, rng);
    EXPECT_EQ(ctx.x.references()[disclosed].value(), v);
    EXPECT_TRUE(verifier::verify_context(artifacts_->vk, key_of(1).public_key(), ctx, st).overall);

    const auto json = to_json(ctx);
    const auto proof = ctx.proof.serialize();
    const std::vector<Bytes> blobs{Bytes(proof.begin(), proof.end()), ctx.signature,
                                   ctx.x.serialize()};
    EXPECT_TRUE(testing::contains_encoding(json, blobs, v));
    for (std::size_t s = 0; s < c.attributes.size(); ++s) {
      if (s == disclosed) continue;
      EXPECT_FALSE(testing::contains_encoding(json, blobs, c.attributes[s].value())) << "slot " << s;
    }
  }
}

TEST_F(ContextTest, FalseStatementFailsBeforeProving) {
  SeededRandom rng(3);
  const auto c = credential(rng);
  const auto st = parse_statement("country > " + std::to_string(c.attributes[1].value()), age_schema());
  try {
    create_context(artifacts_->pk, c, st, rng);
    FAIL() << "expected UnsatisfiableStatement";
  } catch (const UnsatisfiableStatement& e) {
    EXPECT_EQ(e.slot(), 1u);
  }
}

TEST_F(ContextTest, KeyAndShapeMismatch) {
  SeededRandom rng(4);
  const auto schema2 = CredentialSchema::make("age2", key_of(1).issuer_id(), 2, {});
  std::map<std::string, encoding::AttributeValue> values;
  for (std::size_t i = 0; i < 9; ++i) values[schema2.slot_labels[i]] = encoding::AttributeValue(i);
  const auto c2 = issuer::issue_credential(key_of(1), schema2, values, rng);
  EXPECT_THROW(create_context(artifacts_->pk, c2, Statement::trivial(2), rng), KeyMismatch);
  EXPECT_THROW(create_context(artifacts_->pk, credential(rng), Statement::trivial(2), rng), ShapeError);
}

TEST_F(ContextTest, JsonRejectsMalformedFields) {
  SeededRandom rng(5);
  const auto ctx = create_context(artifacts_->pk, credential(rng), Statement::trivial(1), rng);
  const auto json = to_json(ctx);
  const auto mutate = [&](const std::string& from, const std::string& to) {
    auto s = json;
    const auto pos = s.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return s.replace(pos, from.size(), to);
  };
  EXPECT_THROW(context_from_json(mutate("\"p\": [\n    7", "\"p\": [\n    0")), MalformedInput);
  EXPECT_THROW(context_from_json(mutate("\"p\": [\n    7", "\"p\": [\n    8")), MalformedInput);
  EXPECT_THROW(context_from_json(mutate("\"r\": [\n    \"0\"", "\"r\": [\n    \"00\"")), MalformedInput);
  EXPECT_THROW(context_from_json(mutate("\"schema_id\"", "\"schema\"")), MalformedInput);
  EXPECT_THROW(context_from_json(mutate(to_hex(ctx.x.digests()[0]), "zz")), MalformedInput);
  EXPECT_THROW(context_from_json(mutate("\"proof\": \"", "\"proof\": \"AAAA")), MalformedInput);
  EXPECT_THROW(context_from_json("[]"), MalformedInput);
}

}  // namespace
}  // namespace zklaims::prover

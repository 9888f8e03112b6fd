#include "zklaims/statement.hpp"

namespace zklaims {

Statement Statement::trivial(std::size_t payload_count) {
  return from_clauses(std::vector<Clause>(encoding::kSlotsPerPayload * payload_count));
}

Statement Statement::from_clauses(std::vector<Clause> clauses) {
  if (clauses.empty() || clauses.size() % encoding::kSlotsPerPayload != 0) {
    throw ShapeError("a statement needs a positive multiple of 5 clauses, got " +
                     std::to_string(clauses.size()));
  }
  if (!clauses.back().mask.is_any()) throw NoncePredicateForbidden();
  for (auto& c : clauses) {
    if (c.mask.is_any()) c.reference = encoding::ReferenceValue();
  }
  Statement s;
  s.clauses_ = std::move(clauses);
  return s;
}

std::vector<encoding::PredicateMask> Statement::masks() const {
  std::vector<encoding::PredicateMask> out;
  out.reserve(clauses_.size());
  for (const auto& c : clauses_) out.push_back(c.mask);
  return out;
}

std::vector<encoding::ReferenceValue> Statement::references() const {
  std::vector<encoding::ReferenceValue> out;
  out.reserve(clauses_.size());
  for (const auto& c : clauses_) out.push_back(c.reference);
  return out;
}

std::string Statement::to_dsl() const {
  std::string out;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const auto& c = clauses_[i];
    if (c.mask.is_any()) continue;
    out += "slot" + std::to_string(i) + " " + std::string(c.mask.symbol()) + " " +
           std::to_string(c.reference.value()) + "\n";
  }
  return out;
}

}  // namespace zklaims

#pragma once

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "zklaims/bytes.hpp"
#include "zklaims/errors.hpp"

namespace zklaims::detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
auto guarded(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  } catch (const RangeError& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  } catch (const ShapeError& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

inline std::uint64_t parse_decimal(const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || (s.size() > 1 && s[0] == '0')) {
    throw MalformedInput("not a canonical decimal integer: '" + s + "'");
  }
  return v;
}

inline Digest parse_digest(const std::string& hex) {
  const Bytes b = from_hex(hex);
  if (b.size() != 32 || to_hex(b) != hex) throw MalformedInput("digest must be 64 lowercase hex digits");
  Digest d;
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

inline void expect_keys(const ordered_json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object() || j.size() != keys.size()) throw MalformedInput("unexpected set of fields");
  for (const char* k : keys) {
    if (!j.contains(k)) throw MalformedInput(std::string("missing field '") + k + "'");
  }
}

}  // namespace zklaims::detail

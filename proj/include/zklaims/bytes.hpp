#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zklaims {

using Bytes = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

/// Initializes libsodium once; throws on failure.
void ensure_sodium();

std::string to_hex(std::span<const std::uint8_t> data);
/// Lowercase or uppercase hex, even length; throws MalformedInput.
Bytes from_hex(std::string_view hex);

std::string to_base64(std::span<const std::uint8_t> data);
/// Standard alphabet with padding; throws MalformedInput.
Bytes from_base64(std::string_view text);

Digest sha256(std::span<const std::uint8_t> data);

Bytes read_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> data);
void write_text_file_atomic(const std::filesystem::path& path, std::string_view text);

/// Little-endian append-only encoder.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) { put_le(v, 2); }
  void u32(std::uint32_t v) { put_le(v, 4); }
  void u64(std::uint64_t v) { put_le(v, 8); }
  void bytes(std::span<const std::uint8_t> data) { out_.insert(out_.end(), data.begin(), data.end()); }
  void text(std::string_view s) { out_.insert(out_.end(), s.begin(), s.end()); }

  const Bytes& data() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  void put_le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  Bytes out_;
};

/// Bounds-checked little-endian decoder; every overrun throws MalformedInput.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  std::span<const std::uint8_t> bytes(std::size_t n);
  std::string text(std::size_t n);

  template <std::size_t N>
  std::span<const std::uint8_t, N> fixed() {
    return bytes(N).template first<N>();
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  /// Throws unless every byte has been consumed.
  void expect_end() const;

 private:
  std::uint64_t get_le(int n);
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace zklaims

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace onlinecut {

/// Fixed-length advice bit string. Bit value 1 means "place on X". Bits are
/// consumed first to last; in hex form each byte holds eight bits, most
/// significant bit first, and the final byte is zero-padded.
class AdviceTape {
 public:
  AdviceTape() = default;
  explicit AdviceTape(std::vector<bool> bits) : bits_(std::move(bits)) {}

  std::size_t length() const { return bits_.size(); }
  bool bit(std::size_t i) const { return bits_.at(i); }
  const std::vector<bool>& bits() const { return bits_; }

  /// First `count` bits (count clamped to length).
  AdviceTape prefix(std::size_t count) const;

  std::string to_hex() const;
  static AdviceTape from_hex(const std::string& hex, std::size_t bit_length);
  /// "1011" style rendering, for tests and logs.
  std::string to_bitstring() const;
  static AdviceTape from_bitstring(const std::string& bits);

  /// Fixed-width unsigned integer, most significant bit first.
  static AdviceTape encode_index(std::size_t value, std::size_t width);

  friend bool operator==(const AdviceTape&, const AdviceTape&) = default;

 private:
  std::vector<bool> bits_;
};

/// Read cursor over a tape. One reader belongs to one run.
class AdviceReader {
 public:
  explicit AdviceReader(const AdviceTape& tape) : tape_(&tape) {}

  /// Throws TapeExhausted when no bits remain.
  bool read_bit();
  /// Reads `width` bits as an unsigned integer, most significant first.
  std::size_t read_index(std::size_t width);

  std::size_t consumed() const { return cursor_; }
  std::size_t remaining() const { return tape_->length() - cursor_; }
  std::size_t length() const { return tape_->length(); }

 private:
  const AdviceTape* tape_;
  std::size_t cursor_ = 0;
};

/// Smallest w with 2^w >= n (0 for n <= 1).
std::size_t ceil_log2(std::size_t n);

}  // namespace onlinecut

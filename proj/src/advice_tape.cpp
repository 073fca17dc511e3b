#include "onlinecut/advice_tape.hpp"

#include <stdexcept>

#include "onlinecut/errors.hpp"

namespace onlinecut {

AdviceTape AdviceTape::prefix(std::size_t count) const {
  if (count > bits_.size()) count = bits_.size();
  return AdviceTape(std::vector<bool>(bits_.begin(), bits_.begin() + static_cast<long>(count)));
}

std::string AdviceTape::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t byte = 0; byte * 8 < bits_.size(); ++byte) {
    unsigned value = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t i = byte * 8 + b;
      value = (value << 1) | ((i < bits_.size() && bits_[i]) ? 1U : 0U);
    }
    out += kDigits[value >> 4];
    out += kDigits[value & 0xF];
  }
  return out;
}

AdviceTape AdviceTape::from_hex(const std::string& hex, std::size_t bit_length) {
  if (hex.size() != 2 * ((bit_length + 7) / 8)) {
    throw std::invalid_argument("hex length does not match bit length");
  }
  std::vector<bool> bits(bit_length);
  for (std::size_t i = 0; i < bit_length; ++i) {
    const char c = hex[i / 4];
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw std::invalid_argument("invalid hex digit in advice tape");
    }
    bits[i] = (nibble >> (3 - i % 4)) & 1;
  }
  return AdviceTape(std::move(bits));
}

std::string AdviceTape::to_bitstring() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out += b ? '1' : '0';
  return out;
}

AdviceTape AdviceTape::from_bitstring(const std::string& bits) {
  std::vector<bool> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("advice bitstring must be 0/1");
    out.push_back(c == '1');
  }
  return AdviceTape(std::move(out));
}

AdviceTape AdviceTape::encode_index(std::size_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw std::out_of_range("index does not fit in the advice width");
  }
  std::vector<bool> bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[i] = (value >> (width - 1 - i)) & 1U;
  return AdviceTape(std::move(bits));
}

bool AdviceReader::read_bit() {
  if (cursor_ >= tape_->length()) {
    throw TapeExhausted("advice tape exhausted after " + std::to_string(cursor_) + " bits");
  }
  return tape_->bit(cursor_++);
}

std::size_t AdviceReader::read_index(std::size_t width) {
  std::size_t value = 0;
  for (std::size_t i = 0; i < width; ++i) value = (value << 1) | (read_bit() ? 1U : 0U);
  return value;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t w = 0;
  while ((std::size_t{1} << w) < n) ++w;
  return w;
}

}  // namespace onlinecut

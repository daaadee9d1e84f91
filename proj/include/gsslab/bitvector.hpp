#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsslab {

/// Fixed-length binary vector, packed 64 bits per word. Bits beyond size()
/// in the last word are kept zero so word-wise equality and hashing are exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  /// Parses a string of '0'/'1' characters. Throws ParseError otherwise.
  static BitVector from_string(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void push_back(bool value);

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool all() const noexcept { return count() == size_; }

  /// Throws LengthMismatch on differing sizes.
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  BitVector operator~() const;

  bool operator==(const BitVector& other) const = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  std::string to_string() const;

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

}  // namespace gsslab

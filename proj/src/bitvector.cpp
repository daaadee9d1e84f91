#include "gsslab/bitvector.hpp"

#include <algorithm>
#include <bit>

#include "gsslab/error.hpp"

namespace gsslab {

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  clear_tail();
}

BitVector BitVector::from_string(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i, true);
    } else if (text[i] != '0') {
      throw Error(ErrorKind::ParseError, "bit string contains '" + std::string(1, text[i]) + "'");
    }
  }
  return v;
}

void BitVector::push_back(bool value) {
  if ((size_ & 63) == 0) words_.push_back(0);
  ++size_;
  set(size_ - 1, value);
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw Error(ErrorKind::LengthMismatch,
                "xor of lengths " + std::to_string(size_) + " and " + std::to_string(other.size_));
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

std::size_t BitVector::hash() const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ size_;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

void BitVector::clear_tail() noexcept {
  if (const auto rem = size_ & 63; rem != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

}  // namespace gsslab

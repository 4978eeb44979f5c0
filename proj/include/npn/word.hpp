#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace npn {

using Symbol = std::uint8_t;

/// A non-empty word over {0,1}.
///
/// Symbols are stored first-symbol-first, so for two words of equal length
/// lexicographic order coincides with the numeric order of their base-2
/// values. A word a1...an doubles as the column vector (a1,...,an)^t.
/// Element access through operator[] is 0-based; APIs elsewhere in the
/// library that talk about "positions" count from 1.
class BitWord {
 public:
  explicit BitWord(std::vector<Symbol> bits);

  static BitWord from_string(std::string_view text);
  /// The `length` low bits of `value`, most significant first.
  static BitWord from_uint(std::uint64_t value, std::size_t length);
  static BitWord zeros(std::size_t length);
  static BitWord ones(std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  Symbol operator[](std::size_t index) const noexcept { return bits_[index]; }
  std::span<const Symbol> bits() const noexcept { return bits_; }

  /// Base-2 value of the word; requires size() <= 64.
  std::uint64_t to_uint() const;
  std::string to_string() const;

  /// The factor of `length` symbols starting at 0-based `index`.
  BitWord slice(std::size_t index, std::size_t length) const;

  BitWord& operator+=(const BitWord& tail);
  friend BitWord operator+(BitWord head, const BitWord& tail) {
    head += tail;
    return head;
  }

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<Symbol> bits_;
};

/// A non-empty word over {0,...,base-1}. Only the verification path uses
/// bases other than 2.
class DigitWord {
 public:
  DigitWord(std::vector<Symbol> digits, unsigned base);
  DigitWord(const BitWord& word);  // NOLINT(google-explicit-constructor)

  static DigitWord from_string(std::string_view text, unsigned base);

  std::size_t size() const noexcept { return digits_.size(); }
  unsigned base() const noexcept { return base_; }
  Symbol operator[](std::size_t index) const noexcept { return digits_[index]; }
  std::span<const Symbol> digits() const noexcept { return digits_; }
  std::string to_string() const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;

 private:
  std::vector<Symbol> digits_;
  unsigned base_;
};

/// sigma^t: each application moves the last symbol to the front.
BitWord sigma(const BitWord& w, std::size_t t = 1);
/// Inverse rotation: each application moves the first symbol to the back.
BitWord sigma_inverse(const BitWord& w, std::size_t t = 1);

/// Componentwise sum over GF(2). Throws std::invalid_argument on length mismatch.
BitWord xor_words(const BitWord& w, const BitWord& v);

/// All 2^m words of length m in lexicographic order; the i-th word
/// (1-indexed) is the m-bit expansion of i-1. Requires 1 <= m <= 24.
std::vector<BitWord> lex_words(std::size_t m);

/// z repeated r times.
BitWord tile(const BitWord& z, std::size_t r);

}  // namespace npn

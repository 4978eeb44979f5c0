#include "npn/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace npn {

namespace {

std::vector<Symbol> parse_symbols(std::string_view text, unsigned base) {
  if (text.empty()) {
    throw std::invalid_argument("word must not be empty");
  }
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    unsigned digit = 0;
    if (c >= '0' && c <= '9') {
      digit = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      digit = static_cast<unsigned>(c - 'a') + 10;
    } else {
      throw std::invalid_argument(std::string("invalid symbol '") + c + "' in word");
    }
    if (digit >= base) {
      throw std::invalid_argument(std::string("symbol '") + c + "' out of range for base " +
                                  std::to_string(base));
    }
    out.push_back(static_cast<Symbol>(digit));
  }
  return out;
}

char symbol_char(Symbol s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

}  // namespace

BitWord::BitWord(std::vector<Symbol> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) {
    throw std::invalid_argument("word must not be empty");
  }
  if (std::any_of(bits_.begin(), bits_.end(), [](Symbol s) { return s > 1; })) {
    throw std::invalid_argument("binary word contains a symbol other than 0 or 1");
  }
}

BitWord BitWord::from_string(std::string_view text) { return BitWord(parse_symbols(text, 2)); }

BitWord BitWord::from_uint(std::uint64_t value, std::size_t length) {
  if (length == 0 || length > 64) {
    throw std::invalid_argument("from_uint: length must be in 1..64");
  }
  std::vector<Symbol> bits(length);
  for (std::size_t i = 0; i < length; ++i) {
    bits[i] = static_cast<Symbol>((value >> (length - 1 - i)) & 1U);
  }
  return BitWord(std::move(bits));
}

BitWord BitWord::zeros(std::size_t length) { return BitWord(std::vector<Symbol>(length, 0)); }

BitWord BitWord::ones(std::size_t length) { return BitWord(std::vector<Symbol>(length, 1)); }

std::uint64_t BitWord::to_uint() const {
  if (bits_.size() > 64) {
    throw std::length_error("to_uint: word longer than 64 symbols");
  }
  std::uint64_t v = 0;
  for (Symbol s : bits_) {
    v = (v << 1) | s;
  }
  return v;
}

std::string BitWord::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i] = symbol_char(bits_[i]);
  }
  return out;
}

BitWord BitWord::slice(std::size_t index, std::size_t length) const {
  if (index + length > bits_.size()) {
    throw std::out_of_range("slice exceeds word length");
  }
  return BitWord(std::vector<Symbol>(bits_.begin() + static_cast<std::ptrdiff_t>(index),
                                     bits_.begin() + static_cast<std::ptrdiff_t>(index + length)));
}

BitWord& BitWord::operator+=(const BitWord& tail) {
  bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
  return *this;
}

DigitWord::DigitWord(std::vector<Symbol> digits, unsigned base)
    : digits_(std::move(digits)), base_(base) {
  if (base_ < 2 || base_ > 36) {
    throw std::invalid_argument("base must be in 2..36");
  }
  if (digits_.empty()) {
    throw std::invalid_argument("word must not be empty");
  }
  if (std::any_of(digits_.begin(), digits_.end(), [this](Symbol s) { return s >= base_; })) {
    throw std::invalid_argument("digit out of range for base " + std::to_string(base_));
  }
}

DigitWord::DigitWord(const BitWord& word)
    : digits_(word.bits().begin(), word.bits().end()), base_(2) {}

DigitWord DigitWord::from_string(std::string_view text, unsigned base) {
  if (base < 2 || base > 36) {
    throw std::invalid_argument("base must be in 2..36");
  }
  return DigitWord(parse_symbols(text, base), base);
}

std::string DigitWord::to_string() const {
  std::string out(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    out[i] = symbol_char(digits_[i]);
  }
  return out;
}

BitWord sigma(const BitWord& w, std::size_t t) {
  const std::size_t n = w.size();
  const std::size_t shift = t % n;
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[(i + shift) % n] = w[i];
  }
  return BitWord(std::move(out));
}

BitWord sigma_inverse(const BitWord& w, std::size_t t) {
  const std::size_t n = w.size();
  return sigma(w, n - t % n);
}

BitWord xor_words(const BitWord& w, const BitWord& v) {
  if (w.size() != v.size()) {
    throw std::invalid_argument("xor: length mismatch (" + std::to_string(w.size()) + " vs " +
                                std::to_string(v.size()) + ")");
  }
  std::vector<Symbol> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = static_cast<Symbol>(w[i] ^ v[i]);
  }
  return BitWord(std::move(out));
}

std::vector<BitWord> lex_words(std::size_t m) {
  if (m == 0) {
    throw std::invalid_argument("lex_words: m must be positive");
  }
  if (m > 24) {
    throw std::out_of_range("lex_words: m exceeds 24");
  }
  std::vector<BitWord> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
    out.push_back(BitWord::from_uint(i, m));
  }
  return out;
}

BitWord tile(const BitWord& z, std::size_t r) {
  if (r == 0) {
    throw std::invalid_argument("tile: repeat count must be positive");
  }
  std::vector<Symbol> out;
  out.reserve(z.size() * r);
  for (std::size_t i = 0; i < r; ++i) {
    out.insert(out.end(), z.bits().begin(), z.bits().end());
  }
  return BitWord(std::move(out));
}

}  // namespace npn

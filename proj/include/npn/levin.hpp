#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "npn/gf2_matrix.hpp"
#include "npn/necklace.hpp"
#include "npn/word.hpp"

namespace npn {

/// Per-order choices for the stream. Block d (m = 2^d) defaults to the
/// affine necklace with zero profile and zero mask and k = m.
struct LevinOptions {
  /// Replacement specs; each must have k = m = 2^d.
  std::map<std::size_t, AffineSpec> specs;
  /// Replacement blocks given verbatim; each must have length m*2^m and is
  /// rejected at emission time unless it is (m,m)-nested perfect.
  std::map<std::size_t, BitWord> blocks;
};

/// Length of block d, m * 2^m with m = 2^d. Requires d <= 5.
std::uint64_t levin_block_length(std::size_t d);
/// 1-based position of the first digit of block d.
std::uint64_t levin_block_start(std::size_t d);

/// Lazy digit source for the concatenation over d = 0,1,2,... of one
/// (2^d,2^d)-nested perfect necklace per order.
class LevinStream {
 public:
  explicit LevinStream(LevinOptions options = {});

  Symbol next();
  std::vector<Symbol> take(std::size_t count);

  std::size_t order() const noexcept { return d_; }
  std::uint64_t offset_in_block() const noexcept { return offset_; }

 private:
  void enter_block(std::size_t d);

  LevinOptions options_;
  std::size_t d_ = 0;
  std::uint64_t offset_ = 0;
  std::optional<GF2Matrix> matrix_;
  std::uint64_t mask_ = 0;
  std::uint64_t current_ = 0;  // M(w_i xor z) for the chunk holding offset_
  std::optional<BitWord> verbatim_;
};

/// First `count` digits of the stream. Every block completely inside the
/// prefix is checked to be (m,m)-nested perfect; a failing block raises
/// std::invalid_argument.
std::vector<Symbol> levin_digits(std::size_t count, const LevinOptions& options = {});

enum class SourceKind { levin, champernowne, vandercorput, pseudorandom };

SourceKind parse_source_kind(std::string_view name);
const char* to_string(SourceKind kind);

/// Comparison digit sequences.
///
/// champernowne: base-2 expansions of 1, 2, 3, ... concatenated.
/// vandercorput: for i = 1, 2, 3, ... the digits of the van der Corput
///   point phi_2(i), i.e. the binary expansion of i reversed.
/// pseudorandom: 64 bits per step, most significant first, of the mixer
///   state += 0x9E3779B97F4A7C15;
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; out = z ^ (z >> 31)
///   starting from state = seed.
std::vector<Symbol> baseline_digits(SourceKind kind, std::size_t count, std::uint64_t seed = 0);

struct DigitSource {
  SourceKind kind = SourceKind::levin;
  std::uint64_t seed = 0;
  LevinOptions levin;

  std::vector<Symbol> digits(std::size_t count) const;
};

}  // namespace npn

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "npn/gf2_matrix.hpp"
#include "npn/word.hpp"

namespace npn {

struct NecklaceParams {
  std::size_t k = 1;
  std::size_t m = 1;
  unsigned base = 2;

  /// m * base^k; throws std::out_of_range when it does not fit in 2^32.
  std::size_t length() const;
  std::size_t factor_count() const;  // base^k

  friend bool operator==(const NecklaceParams&, const NecklaceParams&) = default;
};

/// Occurrence table of a circular word.
///
/// Cell (f, phase) counts the positions p (1-based, factors read
/// circularly) whose length-k factor has base-b value f and whose phase
/// ((p - 1) mod m) + 1 equals `phase`. The word is perfect iff every cell
/// is exactly 1.
struct PerfectionCertificate {
  NecklaceParams params;
  std::vector<std::uint32_t> counts;  // row-major: factor * m + (phase - 1)
  bool verdict = false;

  std::uint32_t count(std::size_t factor, std::size_t phase) const;
  std::uint64_t total() const;
};

PerfectionCertificate is_perfect(const DigitWord& w, const NecklaceParams& params);

/// Every aligned block of length m*b^l, l = 1..k, is (l,m)-perfect.
bool is_nested_perfect(const DigitWord& w, const NecklaceParams& params);
/// Recursive form: perfect, and for k > 1 each of the b equal factors is
/// (k-1,m)-nested. Must agree with is_nested_perfect.
bool is_nested_perfect_recursive(const DigitWord& w, const NecklaceParams& params);

struct AffineSpec {
  std::size_t d = 0;
  RotationProfile profile = RotationProfile::zero(1);
  BitWord z = BitWord::zeros(1);
  std::size_t k = 1;

  std::size_t m() const noexcept { return std::size_t{1} << d; }
  /// Throws std::invalid_argument on inconsistent fields.
  void validate() const;
};

/// (M(w_1 xor z))(M(w_2 xor z))...(M(w_{2^k} xor z)) where M is the rotated
/// Pascal matrix of the spec and w_i the i-th word of length m in
/// lexicographic order. Length m * 2^k, capped at 2^24.
BitWord affine_necklace(const AffineSpec& spec);

/// w xor z^(2^k). Requires |w| = m*2^k and |z| = m.
BitWord xor_mask_necklace(const BitWord& w, const BitWord& z, const NecklaceParams& params);

/// Every (k,m)-affine necklace, sorted and deduplicated. Requires
/// 1 <= k <= m, m a power of two, m <= 8.
std::vector<BitWord> enumerate_affine(std::size_t k, std::size_t m);

struct EnumerateOptions {
  /// Accept any m >= 1, not just powers of two. No count is known for those.
  bool allow_any_modulus = false;
};

/// Every binary (k,m)-nested perfect necklace, sorted, built level by level
/// without the matrix machinery: level 1 is {w (w xor 1^m)}, level l+1 keeps
/// the concatenations of two level-l words that are (l+1,m)-perfect.
std::vector<BitWord> enumerate_nested(std::size_t k, std::size_t m, EnumerateOptions options = {});

std::size_t count_nested(std::size_t k, std::size_t m, EnumerateOptions options = {});

/// "# k=<k> m=<m> b=<b>" followed by one necklace per line. Later lines
/// starting with "#" are comments.
void write_necklace_file(std::ostream& out, const NecklaceParams& params,
                         const std::vector<DigitWord>& words);
void write_necklace_file(std::ostream& out, const NecklaceParams& params,
                         const std::vector<BitWord>& words);

struct NecklaceFile {
  NecklaceParams params;
  std::vector<DigitWord> words;
};
NecklaceFile read_necklace_file(std::istream& in);

/// CSV with header "factor,residue,count"; factor as a digit string,
/// residue as the phase 1..m.
void write_certificate_csv(std::ostream& out, const PerfectionCertificate& cert);

}  // namespace npn

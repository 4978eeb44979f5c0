#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "npn/word.hpp"

namespace npn {

/// Dense GF(2) matrix with at most 64 rows and 64 columns.
///
/// Stored column-major, one machine word per column. Entry (i, j) of a
/// matrix with R rows sits at bit R - i of column j, so a column read as an
/// integer is the base-2 value of the column viewed as a word. Row and
/// column indices are 1-based.
class GF2Matrix {
 public:
  static constexpr std::size_t kMaxDim = 64;

  GF2Matrix(std::size_t rows, std::size_t cols);
  /// Each string is one row of '0'/'1' characters; all rows the same length.
  static GF2Matrix from_rows(const std::vector<std::string>& rows);
  static GF2Matrix from_columns(std::size_t rows, std::vector<std::uint64_t> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  bool square() const noexcept { return rows_ == columns_.size(); }

  bool entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  std::uint64_t column_bits(std::size_t j) const;
  BitWord column(std::size_t j) const;
  std::string row_string(std::size_t i) const;

  /// M * x with x a column vector of length cols(); packed in and out.
  std::uint64_t apply(std::uint64_t x) const noexcept;
  BitWord apply(const BitWord& x) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  GF2Matrix(std::size_t rows, std::vector<std::uint64_t> columns);
  std::uint64_t row_mask() const noexcept;

  std::size_t rows_;
  std::vector<std::uint64_t> columns_;
};

/// n_1,...,n_m with n_m = 0 and n_{i+1} <= n_i <= n_{i+1} + 1.
class RotationProfile {
 public:
  /// Throws std::invalid_argument naming the violated inequality.
  explicit RotationProfile(std::vector<std::size_t> n);
  /// Profile with n_i - n_{i+1} = differences[i-1]; size m - 1 yields length m.
  static RotationProfile from_differences(const std::vector<bool>& differences);
  static RotationProfile zero(std::size_t m);
  /// Comma-separated "n1,n2,...,nm".
  static RotationProfile parse(std::string_view text);

  std::size_t size() const noexcept { return n_.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return n_[i]; }
  const std::vector<std::size_t>& values() const noexcept { return n_; }
  std::vector<bool> differences() const;
  std::string to_string() const;

  friend bool operator==(const RotationProfile&, const RotationProfile&) = default;
  friend auto operator<=>(const RotationProfile& a, const RotationProfile& b) { return a.n_ <=> b.n_; }

 private:
  std::vector<std::size_t> n_;
};

/// Inclusive 1-based index range.
struct IndexRange {
  std::size_t first;
  std::size_t last;
  std::size_t size() const noexcept { return last - first + 1; }
};

/// Per-column row indices of the first and last 1-entry.
struct BorderPath {
  std::vector<std::size_t> upper;
  std::vector<std::size_t> lower;
};

enum class BorderStep { east, north_east, south_east, other };

/// Step taken by a border between columns j and j+1 (1-based j).
BorderStep upper_step(const BorderPath& path, std::size_t j);
BorderStep lower_step(const BorderPath& path, std::size_t j);

/// Pascal triangle modulo 2 in the 2^d x 2^d block form:
/// M_0 = (1), M_{d+1} = [[M_d, M_d], [0, M_d]]. Requires d <= 6.
GF2Matrix build_pascal(std::size_t d);

/// Column j of the result is sigma^{n_j} applied to column j of m.
GF2Matrix rotate_columns(const GF2Matrix& m, const RotationProfile& profile);

/// All valid profiles of length m (a power of two, m <= 16), ordered by the
/// difference vector read as a binary number with n_1 - n_2 least significant.
std::vector<RotationProfile> enumerate_profiles(std::size_t m);

/// Determinant over GF(2) is 1. Throws std::invalid_argument if not square.
bool is_invertible(const GF2Matrix& m);
std::size_t rank(const GF2Matrix& m);

GF2Matrix submatrix(const GF2Matrix& m, IndexRange rows, IndexRange cols);

/// Throws std::invalid_argument if some column has no 1-entry.
BorderPath borders(const GF2Matrix& m);

/// Whether sigma^k(C_i) xor C_i lies in the span of C_{i+1},...,C_{2^d}
/// for the columns of the unrotated M_d.
bool column_span_check(std::size_t d, std::size_t i, std::size_t k);

/// Text form: "rows cols" on the first line, then one 0/1 string per row.
std::string to_text(const GF2Matrix& m);
GF2Matrix matrix_from_text(std::string_view text);
void write_matrix(std::ostream& out, const GF2Matrix& m);
GF2Matrix read_matrix(std::istream& in);

}  // namespace npn

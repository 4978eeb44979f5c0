#include "npn/gf2_matrix.hpp"

#include <array>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace npn {

namespace {

constexpr std::size_t kMaxPascalOrder = 6;
constexpr std::size_t kMaxProfileLength = 16;

std::uint64_t mask_of(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// sigma on an n-bit column: the last symbol (least significant bit) moves to
// the front (most significant bit).
std::uint64_t rotate_column(std::uint64_t c, std::size_t n, std::size_t t) {
  t %= n;
  if (t == 0) {
    return c;
  }
  return ((c >> t) | (c << (n - t))) & mask_of(n);
}

// Reduces `v` against an echelon basis indexed by leading bit. Returns the
// residue; inserts it when `insert` is set and the residue is non-zero.
std::uint64_t reduce(std::array<std::uint64_t, 64>& basis, std::uint64_t v, bool insert) {
  while (v != 0) {
    const int lead = 63 - std::countl_zero(v);
    if (basis[lead] == 0) {
      if (insert) {
        basis[lead] = v;
      }
      return v;
    }
    v ^= basis[lead];
  }
  return 0;
}

void check_row(std::size_t i, std::size_t rows) {
  if (i < 1 || i > rows) {
    throw std::out_of_range("row index " + std::to_string(i) + " outside 1.." + std::to_string(rows));
  }
}

void check_col(std::size_t j, std::size_t cols) {
  if (j < 1 || j > cols) {
    throw std::out_of_range("column index " + std::to_string(j) + " outside 1.." +
                            std::to_string(cols));
  }
}

}  // namespace

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : GF2Matrix(rows, std::vector<std::uint64_t>(cols, 0)) {}

GF2Matrix::GF2Matrix(std::size_t rows, std::vector<std::uint64_t> columns)
    : rows_(rows), columns_(std::move(columns)) {
  if (rows_ == 0 || columns_.empty()) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  if (rows_ > kMaxDim || columns_.size() > kMaxDim) {
    throw std::out_of_range("matrix dimensions exceed 64");
  }
  for (auto& c : columns_) {
    if ((c & ~row_mask()) != 0) {
      throw std::invalid_argument("column has bits beyond the row count");
    }
  }
}

GF2Matrix GF2Matrix::from_columns(std::size_t rows, std::vector<std::uint64_t> columns) {
  return GF2Matrix(rows, std::move(columns));
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("matrix must have at least one row and column");
  }
  GF2Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has length " +
                                  std::to_string(rows[i].size()) + ", expected " +
                                  std::to_string(m.cols()));
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw std::invalid_argument("matrix entries must be 0 or 1");
      }
      m.set(i + 1, j + 1, c == '1');
    }
  }
  return m;
}

std::uint64_t GF2Matrix::row_mask() const noexcept { return mask_of(rows_); }

bool GF2Matrix::entry(std::size_t i, std::size_t j) const {
  check_row(i, rows_);
  check_col(j, cols());
  return ((columns_[j - 1] >> (rows_ - i)) & 1U) != 0;
}

void GF2Matrix::set(std::size_t i, std::size_t j, bool value) {
  check_row(i, rows_);
  check_col(j, cols());
  const std::uint64_t bit = std::uint64_t{1} << (rows_ - i);
  if (value) {
    columns_[j - 1] |= bit;
  } else {
    columns_[j - 1] &= ~bit;
  }
}

std::uint64_t GF2Matrix::column_bits(std::size_t j) const {
  check_col(j, cols());
  return columns_[j - 1];
}

BitWord GF2Matrix::column(std::size_t j) const { return BitWord::from_uint(column_bits(j), rows_); }

std::string GF2Matrix::row_string(std::size_t i) const {
  std::string out(cols(), '0');
  for (std::size_t j = 1; j <= cols(); ++j) {
    if (entry(i, j)) {
      out[j - 1] = '1';
    }
  }
  return out;
}

std::uint64_t GF2Matrix::apply(std::uint64_t x) const noexcept {
  const std::size_t n = columns_.size();
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if ((x >> (n - 1 - j)) & 1U) {
      out ^= columns_[j];
    }
  }
  return out;
}

BitWord GF2Matrix::apply(const BitWord& x) const {
  if (x.size() != cols()) {
    throw std::invalid_argument("matrix-vector product: vector length " + std::to_string(x.size()) +
                                " does not match column count " + std::to_string(cols()));
  }
  return BitWord::from_uint(apply(x.to_uint()), rows_);
}

RotationProfile::RotationProfile(std::vector<std::size_t> n) : n_(std::move(n)) {
  if (n_.empty()) {
    throw std::invalid_argument("rotation profile must not be empty");
  }
  const std::size_t m = n_.size();
  if (n_.back() != 0) {
    throw std::invalid_argument("rotation profile violates n_m = 0 (n_" + std::to_string(m) +
                                " = " + std::to_string(n_.back()) + ")");
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const std::string at = " at i=" + std::to_string(i + 1) + " (n_" + std::to_string(i + 1) +
                           " = " + std::to_string(n_[i]) + ", n_" + std::to_string(i + 2) +
                           " = " + std::to_string(n_[i + 1]) + ")";
    if (n_[i + 1] > n_[i]) {
      throw std::invalid_argument("rotation profile violates n_{i+1} <= n_i" + at);
    }
    if (n_[i] > n_[i + 1] + 1) {
      throw std::invalid_argument("rotation profile violates n_i <= n_{i+1} + 1" + at);
    }
  }
}

RotationProfile RotationProfile::from_differences(const std::vector<bool>& differences) {
  std::vector<std::size_t> n(differences.size() + 1, 0);
  for (std::size_t i = differences.size(); i-- > 0;) {
    n[i] = n[i + 1] + (differences[i] ? 1 : 0);
  }
  return RotationProfile(std::move(n));
}

RotationProfile RotationProfile::zero(std::size_t m) {
  return RotationProfile(std::vector<std::size_t>(m, 0));
}

RotationProfile RotationProfile::parse(std::string_view text) {
  std::vector<std::size_t> n;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    if (item.empty()) {
      throw std::invalid_argument("rotation profile: empty entry in \"" + std::string(text) + "\"");
    }
    std::size_t value = 0;
    for (char c : item) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("rotation profile: \"" + std::string(item) +
                                    "\" is not a non-negative integer");
      }
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    n.push_back(value);
    pos = comma + 1;
  }
  return RotationProfile(std::move(n));
}

std::vector<bool> RotationProfile::differences() const {
  std::vector<bool> out(n_.size() - 1);
  for (std::size_t i = 0; i + 1 < n_.size(); ++i) {
    out[i] = n_[i] != n_[i + 1];
  }
  return out;
}

std::string RotationProfile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(n_[i]);
  }
  return out;
}

BorderStep upper_step(const BorderPath& path, std::size_t j) {
  check_col(j + 1, path.upper.size());
  const auto a = path.upper[j - 1];
  const auto b = path.upper[j];
  if (a == b) {
    return BorderStep::east;
  }
  return b + 1 == a ? BorderStep::north_east : BorderStep::other;
}

BorderStep lower_step(const BorderPath& path, std::size_t j) {
  check_col(j + 1, path.lower.size());
  const auto a = path.lower[j - 1];
  const auto b = path.lower[j];
  if (a == b) {
    return BorderStep::east;
  }
  return a + 1 == b ? BorderStep::south_east : BorderStep::other;
}

GF2Matrix build_pascal(std::size_t d) {
  if (d > kMaxPascalOrder) {
    throw std::out_of_range("build_pascal: d = " + std::to_string(d) + " exceeds the limit " +
                            std::to_string(kMaxPascalOrder));
  }
  std::vector<std::uint64_t> cols{1};
  for (std::size_t level = 0; level < d; ++level) {
    const std::size_t half = cols.size();
    std::vector<std::uint64_t> next(2 * half);
    for (std::size_t j = 0; j < half; ++j) {
      next[j] = cols[j] << half;
      next[j + half] = (cols[j] << half) | cols[j];
    }
    cols = std::move(next);
  }
  const std::size_t m = cols.size();
  return GF2Matrix::from_columns(m, std::move(cols));
}

GF2Matrix rotate_columns(const GF2Matrix& m, const RotationProfile& profile) {
  if (profile.size() != m.cols()) {
    throw std::invalid_argument("rotation profile length " + std::to_string(profile.size()) +
                                " does not match column count " + std::to_string(m.cols()));
  }
  std::vector<std::uint64_t> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    cols[j] = rotate_column(m.column_bits(j + 1), m.rows(), profile[j]);
  }
  return GF2Matrix::from_columns(m.rows(), std::move(cols));
}

std::vector<RotationProfile> enumerate_profiles(std::size_t m) {
  if (m == 0 || !std::has_single_bit(m)) {
    throw std::invalid_argument("enumerate_profiles: m = " + std::to_string(m) +
                                " is not a power of two");
  }
  if (m > kMaxProfileLength) {
    throw std::out_of_range("enumerate_profiles: m = " + std::to_string(m) + " exceeds " +
                            std::to_string(kMaxProfileLength));
  }
  std::vector<RotationProfile> out;
  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<bool> diff(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      diff[i] = ((code >> i) & 1U) != 0;
    }
    out.push_back(RotationProfile::from_differences(diff));
  }
  return out;
}

std::size_t rank(const GF2Matrix& m) {
  std::array<std::uint64_t, 64> basis{};
  std::size_t r = 0;
  for (std::size_t j = 1; j <= m.cols(); ++j) {
    if (reduce(basis, m.column_bits(j), true) != 0) {
      ++r;
    }
  }
  return r;
}

bool is_invertible(const GF2Matrix& m) {
  if (!m.square()) {
    throw std::invalid_argument("is_invertible: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", not square");
  }
  return rank(m) == m.rows();
}

GF2Matrix submatrix(const GF2Matrix& m, IndexRange rows, IndexRange cols) {
  if (rows.first < 1 || rows.first > rows.last || rows.last > m.rows() || cols.first < 1 ||
      cols.first > cols.last || cols.last > m.cols()) {
    throw std::out_of_range("submatrix: range outside " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  const std::size_t r = rows.size();
  std::vector<std::uint64_t> out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    out[j] = (m.column_bits(cols.first + j) >> (m.rows() - rows.last)) & mask_of(r);
  }
  return GF2Matrix::from_columns(r, std::move(out));
}

BorderPath borders(const GF2Matrix& m) {
  BorderPath path;
  path.upper.reserve(m.cols());
  path.lower.reserve(m.cols());
  for (std::size_t j = 1; j <= m.cols(); ++j) {
    const std::uint64_t c = m.column_bits(j);
    if (c == 0) {
      throw std::invalid_argument("borders: column " + std::to_string(j) + " has no 1-entry");
    }
    // Row i lives at bit rows - i.
    const auto top_bit = static_cast<std::size_t>(63 - std::countl_zero(c));
    const auto bottom_bit = static_cast<std::size_t>(std::countr_zero(c));
    path.upper.push_back(m.rows() - top_bit);
    path.lower.push_back(m.rows() - bottom_bit);
  }
  return path;
}

bool column_span_check(std::size_t d, std::size_t i, std::size_t k) {
  const GF2Matrix pascal = build_pascal(d);
  const std::size_t m = pascal.cols();
  if (i < 1 || i > m) {
    throw std::out_of_range("column_span_check: column " + std::to_string(i) + " outside 1.." +
                            std::to_string(m));
  }
  std::array<std::uint64_t, 64> basis{};
  for (std::size_t j = i + 1; j <= m; ++j) {
    reduce(basis, pascal.column_bits(j), true);
  }
  const std::uint64_t c = pascal.column_bits(i);
  return reduce(basis, rotate_column(c, m, k) ^ c, false) == 0;
}

std::string to_text(const GF2Matrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

GF2Matrix matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const GF2Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    out << m.row_string(i) << '\n';
  }
}

GF2Matrix read_matrix(std::istream& in) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(in >> rows >> cols)) {
    throw std::invalid_argument("matrix text: expected \"rows cols\" header");
  }
  std::vector<std::string> lines;
  lines.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string line;
    if (!(in >> line)) {
      throw std::invalid_argument("matrix text: expected " + std::to_string(rows) + " rows, got " +
                                  std::to_string(i));
    }
    if (line.size() != cols) {
      throw std::invalid_argument("matrix text: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(line.size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    lines.push_back(std::move(line));
  }
  return GF2Matrix::from_rows(lines);
}

}  // namespace npn

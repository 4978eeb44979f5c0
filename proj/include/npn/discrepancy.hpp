#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "npn/levin.hpp"
#include "npn/word.hpp"

namespace npn {

using BigInt = boost::multiprecision::cpp_int;
using Window = unsigned __int128;

/// Reduced fraction with positive denominator.
struct Rational {
  BigInt num{0};
  BigInt den{1};

  static Rational make(BigInt num, BigInt den);
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(a.num * b.den - b.num * a.den, a.den * b.den);
  }
};

/// N points of [0,1), each the dyadic fraction window / 2^width.
struct PointSet {
  std::size_t width = 64;
  std::vector<Window> windows;

  std::size_t size() const noexcept { return windows.size(); }
};

constexpr std::size_t kMaxWindowWidth = 128;

/// Point n (n = 1..N) is 0.d_{n+1} d_{n+2} ... d_{n+width} in base 2,
/// digits numbered from 1. Requires digits.size() >= N + width.
PointSet points_of(std::span<const Symbol> digits, std::size_t count, std::size_t width = 64);

/// Builds a point set from explicit windows; each must be < 2^width.
PointSet make_point_set(std::vector<Window> windows, std::size_t width);

enum class DiscrepancyKind {
  /// sup over 0 <= a < b <= 1 of |#{a <= x < b}/N - (b - a)|.
  extreme,
  /// sup over 0 < b <= 1 of |#{x < b}/N - b|.
  star,
};

DiscrepancyKind parse_discrepancy_kind(std::string_view name);
const char* to_string(DiscrepancyKind kind);

/// Exact discrepancy from one pass over the sorted points. Throws
/// std::invalid_argument on an empty set.
Rational discrepancy(const PointSet& points, DiscrepancyKind kind = DiscrepancyKind::extreme);

struct DiscrepancyRow {
  std::size_t n = 0;
  Rational value;
  double value_double = 0.0;
  /// N * D_N / (log2 N)^2, absent for N < 4.
  std::optional<double> scaled;
};

struct DiscrepancyReport {
  DiscrepancyKind kind = DiscrepancyKind::extreme;
  std::size_t width = 64;
  std::vector<DiscrepancyRow> rows;
};

/// One row per N of the points of the first max(Ns) + width digits of the
/// source. Ns must be non-decreasing and positive.
DiscrepancyReport discrepancy_profile(const DigitSource& source, const std::vector<std::size_t>& ns,
                                      std::size_t width = 64,
                                      DiscrepancyKind kind = DiscrepancyKind::extreme);

/// CSV with header "N,D_N_num,D_N_den,D_N,scaled"; scaled is empty for N < 4.
void write_report_csv(std::ostream& out, const DiscrepancyReport& report);

}  // namespace npn

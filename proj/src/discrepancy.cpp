#include "npn/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace npn {

namespace {

using boost::multiprecision::int256_t;

int256_t to_int256(Window w) {
  int256_t v = static_cast<std::uint64_t>(w >> 64);
  v <<= 64;
  v += static_cast<std::uint64_t>(w);
  return v;
}

BigInt to_big(const int256_t& v) { return BigInt(v); }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

}  // namespace

Rational Rational::make(BigInt num, BigInt den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{std::move(num), std::move(den)};
}

double Rational::to_double() const {
  // Scale so the quotient keeps 60 significant bits before conversion.
  const auto shift = static_cast<long>(boost::multiprecision::msb(den)) + 60 -
                     (num == 0 ? 0 : static_cast<long>(boost::multiprecision::msb(abs(num))));
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (BigInt(1) << -shift));
  return std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
}

std::string Rational::to_string() const { return num.str() + "/" + den.str(); }

PointSet points_of(std::span<const Symbol> digits, std::size_t count, std::size_t width) {
  if (width == 0 || width > kMaxWindowWidth) {
    throw std::invalid_argument("window width must be in 1..128");
  }
  if (count == 0) {
    throw std::invalid_argument("point count must be positive");
  }
  if (digits.size() < count + width) {
    throw std::invalid_argument("need " + std::to_string(count + width) + " digits for " +
                                std::to_string(count) + " points of width " + std::to_string(width) +
                                ", have " + std::to_string(digits.size()));
  }
  const Window mask = width == 128 ? ~Window{0} : (Window{1} << width) - 1;
  PointSet ps;
  ps.width = width;
  ps.windows.reserve(count);
  Window w = 0;
  // Window for point n covers digits n+1..n+width (1-based), i.e. 0-based n..n+width-1.
  for (std::size_t i = 0; i < width; ++i) {
    w = (w << 1) | digits[1 + i];
  }
  ps.windows.push_back(w);
  for (std::size_t n = 2; n <= count; ++n) {
    w = ((w << 1) | digits[n + width - 1]) & mask;
    ps.windows.push_back(w);
  }
  return ps;
}

PointSet make_point_set(std::vector<Window> windows, std::size_t width) {
  if (width == 0 || width > kMaxWindowWidth) {
    throw std::invalid_argument("window width must be in 1..128");
  }
  if (width < 128) {
    for (Window w : windows) {
      if (w >> width != 0) {
        throw std::invalid_argument("window exceeds 2^width");
      }
    }
  }
  return PointSet{width, std::move(windows)};
}

DiscrepancyKind parse_discrepancy_kind(std::string_view name) {
  if (name == "extreme") return DiscrepancyKind::extreme;
  if (name == "star") return DiscrepancyKind::star;
  throw std::invalid_argument("unknown discrepancy measure \"" + std::string(name) + "\"");
}

const char* to_string(DiscrepancyKind kind) {
  return kind == DiscrepancyKind::star ? "star" : "extreme";
}

Rational discrepancy(const PointSet& points, DiscrepancyKind kind) {
  const std::size_t n = points.size();
  if (n == 0) {
    throw std::invalid_argument("discrepancy of an empty point set");
  }
  std::vector<Window> sorted = points.windows;
  std::sort(sorted.begin(), sorted.end());

  // Everything is scaled by the common denominator N * 2^width:
  // i/N - x_(i) becomes i*2^width - N*window.
  const int256_t one = int256_t(1) << points.width;
  const int256_t count = n;
  int256_t above;  // max_i (i/N - x_(i))
  int256_t below;  // max_i (x_(i) - (i-1)/N)
  for (std::size_t i = 1; i <= n; ++i) {
    const int256_t scaled_x = count * to_int256(sorted[i - 1]);
    const int256_t a = int256_t(i) * one - scaled_x;
    const int256_t b = scaled_x - int256_t(i - 1) * one;
    if (i == 1 || a > above) above = a;
    if (i == 1 || b > below) below = b;
  }
  const int256_t num = kind == DiscrepancyKind::extreme ? above + below : std::max(above, below);
  return Rational::make(to_big(num), to_big(count * one));
}

DiscrepancyReport discrepancy_profile(const DigitSource& source, const std::vector<std::size_t>& ns,
                                      std::size_t width, DiscrepancyKind kind) {
  if (ns.empty()) {
    throw std::invalid_argument("discrepancy profile needs at least one N");
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == 0) {
      throw std::invalid_argument("N must be positive");
    }
    if (i > 0 && ns[i] < ns[i - 1]) {
      throw std::invalid_argument("N list must be sorted ascending");
    }
  }
  const std::vector<Symbol> digits = source.digits(ns.back() + width);
  DiscrepancyReport report{kind, width, {}};
  for (std::size_t n : ns) {
    DiscrepancyRow row;
    row.n = n;
    row.value = discrepancy(points_of(digits, n, width), kind);
    row.value_double = row.value.to_double();
    if (n >= 4) {
      const double lg = std::log2(static_cast<double>(n));
      row.scaled = static_cast<double>(n) * row.value_double / (lg * lg);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_report_csv(std::ostream& out, const DiscrepancyReport& report) {
  out << "N,D_N_num,D_N_den,D_N,scaled\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << row.value.num << ',' << row.value.den << ','
        << format_double(row.value_double) << ',';
    if (row.scaled) {
      out << format_double(*row.scaled);
    }
    out << '\n';
  }
}

}  // namespace npn

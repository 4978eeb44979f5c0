#include "npn/levin.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace npn {

namespace {

// Blocks up to this order are materialised and checked when complete.
constexpr std::size_t kMaxVerifiedOrder = 4;

AffineSpec default_spec(std::size_t d) {
  const std::size_t m = std::size_t{1} << d;
  return AffineSpec{d, RotationProfile::zero(m), BitWord::zeros(m), m};
}

void validate_options(const LevinOptions& options) {
  for (const auto& [d, spec] : options.specs) {
    if (spec.d != d) {
      throw std::invalid_argument("levin: spec registered for d = " + std::to_string(d) +
                                  " has d = " + std::to_string(spec.d));
    }
    if (spec.k != spec.m()) {
      throw std::invalid_argument("levin: spec for d = " + std::to_string(d) + " has k = " +
                                  std::to_string(spec.k) + ", but k must equal m = " +
                                  std::to_string(spec.m()));
    }
    spec.validate();
  }
  for (const auto& [d, block] : options.blocks) {
    if (d > kMaxVerifiedOrder) {
      throw std::out_of_range("levin: verbatim blocks are limited to d <= " +
                              std::to_string(kMaxVerifiedOrder));
    }
    if (block.size() != levin_block_length(d)) {
      throw std::invalid_argument("levin: block for d = " + std::to_string(d) + " has length " +
                                  std::to_string(block.size()) + ", expected " +
                                  std::to_string(levin_block_length(d)));
    }
    if (options.specs.contains(d)) {
      throw std::invalid_argument("levin: d = " + std::to_string(d) +
                                  " has both a spec and a verbatim block");
    }
  }
}

}  // namespace

std::uint64_t levin_block_length(std::size_t d) {
  if (d > 5) {
    throw std::out_of_range("levin block length overflows for d > 5");
  }
  const std::uint64_t m = std::uint64_t{1} << d;
  return m << m;
}

std::uint64_t levin_block_start(std::size_t d) {
  std::uint64_t start = 1;
  for (std::size_t i = 0; i < d; ++i) {
    start += levin_block_length(i);
  }
  return start;
}

LevinStream::LevinStream(LevinOptions options) : options_(std::move(options)) {
  validate_options(options_);
  enter_block(0);
}

void LevinStream::enter_block(std::size_t d) {
  if (d > 5) {
    throw std::out_of_range("levin stream exhausted: order d > 5 is not representable");
  }
  d_ = d;
  offset_ = 0;
  verbatim_.reset();
  matrix_.reset();
  if (auto it = options_.blocks.find(d); it != options_.blocks.end()) {
    verbatim_ = it->second;
    return;
  }
  const auto it = options_.specs.find(d);
  const AffineSpec spec = it != options_.specs.end() ? it->second : default_spec(d);
  matrix_.emplace(rotate_columns(build_pascal(d), spec.profile));
  mask_ = spec.z.to_uint();
}

Symbol LevinStream::next() {
  const std::uint64_t m = std::uint64_t{1} << d_;
  Symbol s = 0;
  if (verbatim_) {
    s = (*verbatim_)[offset_];
  } else {
    const std::uint64_t row = offset_ % m;
    if (row == 0) {
      current_ = matrix_->apply((offset_ / m) ^ mask_);
    }
    s = static_cast<Symbol>((current_ >> (m - 1 - row)) & 1U);
  }
  if (++offset_ == levin_block_length(d_)) {
    enter_block(d_ + 1);
  }
  return s;
}

std::vector<Symbol> LevinStream::take(std::size_t count) {
  std::vector<Symbol> out(count);
  for (auto& s : out) {
    s = next();
  }
  return out;
}

std::vector<Symbol> levin_digits(std::size_t count, const LevinOptions& options) {
  if (count == 0) {
    throw std::invalid_argument("levin_digits: count must be positive");
  }
  LevinStream stream(options);
  std::vector<Symbol> digits = stream.take(count);
  for (std::size_t d = 0; d <= kMaxVerifiedOrder; ++d) {
    const std::uint64_t start = levin_block_start(d) - 1;
    const std::uint64_t length = levin_block_length(d);
    if (start + length > count) {
      break;
    }
    const std::size_t m = std::size_t{1} << d;
    const BitWord block(std::vector<Symbol>(digits.begin() + static_cast<std::ptrdiff_t>(start),
                                            digits.begin() + static_cast<std::ptrdiff_t>(start + length)));
    if (!is_nested_perfect(block, NecklaceParams{m, m, 2})) {
      throw std::invalid_argument("levin_digits: block d = " + std::to_string(d) +
                                  " is not (m,m)-nested perfect");
    }
  }
  return digits;
}

SourceKind parse_source_kind(std::string_view name) {
  if (name == "levin") return SourceKind::levin;
  if (name == "champernowne") return SourceKind::champernowne;
  if (name == "vandercorput" || name == "vandercorput-digits") return SourceKind::vandercorput;
  if (name == "pseudorandom" || name == "seeded-pseudorandom") return SourceKind::pseudorandom;
  throw std::invalid_argument("unknown digit source \"" + std::string(name) + "\"");
}

const char* to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::levin:
      return "levin";
    case SourceKind::champernowne:
      return "champernowne";
    case SourceKind::vandercorput:
      return "vandercorput";
    case SourceKind::pseudorandom:
      break;
  }
  return "pseudorandom";
}

std::vector<Symbol> baseline_digits(SourceKind kind, std::size_t count, std::uint64_t seed) {
  std::vector<Symbol> out;
  out.reserve(count + 64);
  switch (kind) {
    case SourceKind::levin:
      return levin_digits(count);
    case SourceKind::champernowne:
      for (std::uint64_t i = 1; out.size() < count; ++i) {
        for (int b = std::bit_width(i) - 1; b >= 0; --b) {
          out.push_back(static_cast<Symbol>((i >> b) & 1U));
        }
      }
      break;
    case SourceKind::vandercorput:
      for (std::uint64_t i = 1; out.size() < count; ++i) {
        for (std::uint64_t v = i; v != 0; v >>= 1) {
          out.push_back(static_cast<Symbol>(v & 1U));
        }
      }
      break;
    case SourceKind::pseudorandom: {
      std::uint64_t state = seed;
      while (out.size() < count) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        for (int b = 63; b >= 0; --b) {
          out.push_back(static_cast<Symbol>((z >> b) & 1U));
        }
      }
      break;
    }
  }
  out.resize(count);
  return out;
}

std::vector<Symbol> DigitSource::digits(std::size_t count) const {
  if (kind == SourceKind::levin) {
    return levin_digits(count, levin);
  }
  return baseline_digits(kind, count, seed);
}

}  // namespace npn

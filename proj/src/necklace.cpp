#include "npn/necklace.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>

namespace npn {

namespace {

constexpr std::size_t kMaxAffineModulus = 8;
constexpr std::size_t kMaxAnyModulus = 16;
constexpr std::size_t kMaxAffineLength = std::size_t{1} << 24;

std::string params_string(const NecklaceParams& p) {
  return "(k=" + std::to_string(p.k) + ", m=" + std::to_string(p.m) +
         ", b=" + std::to_string(p.base) + ")";
}

// Fills `counts` (size m * b^k) with the circular occurrence table of `w`.
// Returns true iff every cell is 1. `w.size()` must equal m * b^k.
bool tally(std::span<const Symbol> w, std::size_t k, std::size_t m, unsigned base,
           std::vector<std::uint32_t>& counts) {
  const std::size_t n = w.size();
  const std::size_t factors = n / m;
  counts.assign(n, 0);
  std::size_t value = 0;
  for (std::size_t i = 0; i < k; ++i) {
    value = value * base + w[i % n];
  }
  const std::size_t top = factors / base;  // base^(k-1)
  bool ok = true;
  for (std::size_t p = 0; p < n; ++p) {
    std::uint32_t& cell = counts[value * m + p % m];
    if (++cell != 1) {
      ok = false;
    }
    value = (value - w[p] * top) * base + w[(p + k) % n];
  }
  return ok;
}

bool perfect_span(std::span<const Symbol> w, std::size_t k, std::size_t m, unsigned base,
                  std::vector<std::uint32_t>& scratch) {
  return tally(w, k, m, base, scratch);
}

bool nested_blocks(std::span<const Symbol> w, std::size_t k, std::size_t m, unsigned base) {
  std::vector<std::uint32_t> scratch;
  std::size_t block = m;
  for (std::size_t level = 1; level <= k; ++level) {
    block *= base;
    for (std::size_t start = 0; start < w.size(); start += block) {
      if (!perfect_span(w.subspan(start, block), level, m, base, scratch)) {
        return false;
      }
    }
  }
  return true;
}

bool nested_recursive(std::span<const Symbol> w, std::size_t k, std::size_t m, unsigned base,
                      std::vector<std::uint32_t>& scratch) {
  if (!perfect_span(w, k, m, base, scratch)) {
    return false;
  }
  if (k == 1) {
    return true;
  }
  const std::size_t part = w.size() / base;
  for (unsigned i = 0; i < base; ++i) {
    if (!nested_recursive(w.subspan(i * part, part), k - 1, m, base, scratch)) {
      return false;
    }
  }
  return true;
}

void check_length(std::size_t actual, const NecklaceParams& params) {
  const std::size_t expected = params.length();
  if (actual != expected) {
    throw std::invalid_argument("word length " + std::to_string(actual) + " does not match m*b^k = " +
                                std::to_string(expected) + " for " + params_string(params));
  }
}

void check_binary_range(std::size_t k, std::size_t m, std::size_t max_m, bool any_modulus) {
  if (m == 0 || k == 0) {
    throw std::invalid_argument("k and m must be positive");
  }
  if (!any_modulus && !std::has_single_bit(m)) {
    throw std::invalid_argument("m = " + std::to_string(m) + " is not a power of two");
  }
  if (m > max_m) {
    throw std::out_of_range("m = " + std::to_string(m) + " exceeds the enumeration cap " +
                            std::to_string(max_m));
  }
  if (k > m) {
    throw std::out_of_range("k = " + std::to_string(k) + " exceeds m = " + std::to_string(m));
  }
}

// Phase-1 factors of length `len`, as a bitset over their values. Only
// meaningful when every phase-1 factor lies inside the word.
std::vector<std::uint64_t> phase_one_signature(std::span<const Symbol> w, std::size_t len,
                                               std::size_t m) {
  std::vector<std::uint64_t> bits(((std::size_t{1} << len) + 63) / 64, 0);
  for (std::size_t p = 0; p + len <= w.size(); p += m) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < len; ++i) {
      v = (v << 1) | w[p + i];
    }
    bits[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  return bits;
}

}  // namespace

std::size_t NecklaceParams::length() const { return m * factor_count(); }

std::size_t NecklaceParams::factor_count() const {
  if (k == 0 || m == 0) {
    throw std::invalid_argument("necklace parameters require k >= 1 and m >= 1");
  }
  if (base < 2) {
    throw std::invalid_argument("necklace parameters require base >= 2");
  }
  std::uint64_t f = 1;
  for (std::size_t i = 0; i < k; ++i) {
    f *= base;
    if (f * m > (std::uint64_t{1} << 32)) {
      throw std::out_of_range("necklace length m*b^k exceeds 2^32 for " + params_string(*this));
    }
  }
  return static_cast<std::size_t>(f);
}

std::uint32_t PerfectionCertificate::count(std::size_t factor, std::size_t phase) const {
  if (phase < 1 || phase > params.m || factor >= params.factor_count()) {
    throw std::out_of_range("certificate cell out of range");
  }
  return counts[factor * params.m + (phase - 1)];
}

std::uint64_t PerfectionCertificate::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

PerfectionCertificate is_perfect(const DigitWord& w, const NecklaceParams& params) {
  if (w.base() != params.base) {
    throw std::invalid_argument("word base " + std::to_string(w.base()) +
                                " does not match necklace base " + std::to_string(params.base));
  }
  check_length(w.size(), params);
  PerfectionCertificate cert{params, {}, false};
  cert.verdict = tally(w.digits(), params.k, params.m, params.base, cert.counts);
  return cert;
}

bool is_nested_perfect(const DigitWord& w, const NecklaceParams& params) {
  if (w.base() != params.base) {
    throw std::invalid_argument("word base does not match necklace base");
  }
  check_length(w.size(), params);
  return nested_blocks(w.digits(), params.k, params.m, params.base);
}

bool is_nested_perfect_recursive(const DigitWord& w, const NecklaceParams& params) {
  if (w.base() != params.base) {
    throw std::invalid_argument("word base does not match necklace base");
  }
  check_length(w.size(), params);
  std::vector<std::uint32_t> scratch;
  return nested_recursive(w.digits(), params.k, params.m, params.base, scratch);
}

void AffineSpec::validate() const {
  if (d > 6) {
    throw std::out_of_range("affine spec: d = " + std::to_string(d) + " exceeds 6");
  }
  const std::size_t modulus = m();
  if (profile.size() != modulus) {
    throw std::invalid_argument("affine spec: profile length " + std::to_string(profile.size()) +
                                " must equal m = 2^d = " + std::to_string(modulus));
  }
  if (z.size() != modulus) {
    throw std::invalid_argument("affine spec: mask z has length " + std::to_string(z.size()) +
                                ", expected m = " + std::to_string(modulus));
  }
  if (k < 1 || k > modulus) {
    throw std::invalid_argument("affine spec: k = " + std::to_string(k) + " must satisfy 1 <= k <= " +
                                std::to_string(modulus));
  }
  if (k >= 32 || (modulus << k) > kMaxAffineLength) {
    throw std::out_of_range("affine spec: necklace length m*2^k exceeds 2^24");
  }
}

BitWord affine_necklace(const AffineSpec& spec) {
  spec.validate();
  const std::size_t m = spec.m();
  const GF2Matrix matrix = rotate_columns(build_pascal(spec.d), spec.profile);
  const std::uint64_t z = spec.z.to_uint();
  const std::uint64_t blocks = std::uint64_t{1} << spec.k;
  std::vector<Symbol> out(m * blocks);
  for (std::uint64_t i = 0; i < blocks; ++i) {
    const std::uint64_t y = matrix.apply(i ^ z);
    for (std::size_t r = 0; r < m; ++r) {
      out[i * m + r] = static_cast<Symbol>((y >> (m - 1 - r)) & 1U);
    }
  }
  return BitWord(std::move(out));
}

BitWord xor_mask_necklace(const BitWord& w, const BitWord& z, const NecklaceParams& params) {
  if (params.base != 2) {
    throw std::invalid_argument("xor mask requires a binary necklace");
  }
  check_length(w.size(), params);
  if (z.size() != params.m) {
    throw std::invalid_argument("mask length " + std::to_string(z.size()) + " must equal m = " +
                                std::to_string(params.m));
  }
  return xor_words(w, tile(z, w.size() / params.m));
}

std::vector<BitWord> enumerate_affine(std::size_t k, std::size_t m) {
  check_binary_range(k, m, kMaxAffineModulus, false);
  const auto d = static_cast<std::size_t>(std::countr_zero(m));
  std::vector<BitWord> out;
  const auto profiles = enumerate_profiles(m);
  out.reserve(profiles.size() << m);
  for (const auto& profile : profiles) {
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << m); ++z) {
      out.push_back(affine_necklace(AffineSpec{d, profile, BitWord::from_uint(z, m), k}));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BitWord> enumerate_nested(std::size_t k, std::size_t m, EnumerateOptions options) {
  check_binary_range(k, m, options.allow_any_modulus ? kMaxAnyModulus : kMaxAffineModulus,
                     options.allow_any_modulus);

  std::vector<BitWord> level;
  level.reserve(std::size_t{1} << m);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    const BitWord w = BitWord::from_uint(v, m);
    level.push_back(w + xor_words(w, BitWord::ones(m)));
  }

  std::vector<std::uint32_t> scratch;
  for (std::size_t l = 1; l < k; ++l) {
    // In a (l+1,m)-perfect ww' with l+1 <= m, the phase-1 factors of length
    // l+1 inside w and inside w' are complementary sets, so w' can be looked
    // up by the complement of w's set before the full check.
    std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> by_signature;
    std::vector<std::vector<std::uint64_t>> signatures;
    signatures.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      signatures.push_back(phase_one_signature(level[i].bits(), l + 1, m));
      by_signature[signatures.back()].push_back(i);
    }
    const std::size_t universe = std::size_t{1} << (l + 1);

    std::vector<BitWord> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      auto wanted = signatures[i];
      for (std::size_t b = 0; b < wanted.size(); ++b) {
        wanted[b] = ~wanted[b];
      }
      if (universe % 64 != 0) {
        wanted.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
      }
      const auto found = by_signature.find(wanted);
      if (found == by_signature.end()) {
        continue;
      }
      for (std::size_t j : found->second) {
        BitWord candidate = level[i] + level[j];
        if (perfect_span(candidate.bits(), l + 1, m, 2, scratch)) {
          next.push_back(std::move(candidate));
        }
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::size_t count_nested(std::size_t k, std::size_t m, EnumerateOptions options) {
  return enumerate_nested(k, m, options).size();
}

void write_necklace_file(std::ostream& out, const NecklaceParams& params,
                         const std::vector<DigitWord>& words) {
  out << "# k=" << params.k << " m=" << params.m << " b=" << params.base << '\n';
  for (const auto& w : words) {
    out << w.to_string() << '\n';
  }
}

void write_necklace_file(std::ostream& out, const NecklaceParams& params,
                         const std::vector<BitWord>& words) {
  out << "# k=" << params.k << " m=" << params.m << " b=" << params.base << '\n';
  for (const auto& w : words) {
    out << w.to_string() << '\n';
  }
}

NecklaceFile read_necklace_file(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("necklace file: missing header line");
  }
  NecklaceFile file;
  {
    std::istringstream hs(header);
    std::string hash;
    std::string kf;
    std::string mf;
    std::string bf;
    if (!(hs >> hash >> kf >> mf >> bf) || hash != "#" || kf.rfind("k=", 0) != 0 ||
        mf.rfind("m=", 0) != 0 || bf.rfind("b=", 0) != 0) {
      throw std::invalid_argument("necklace file: header must be \"# k=<k> m=<m> b=<b>\"");
    }
    try {
      file.params.k = std::stoul(kf.substr(2));
      file.params.m = std::stoul(mf.substr(2));
      file.params.base = static_cast<unsigned>(std::stoul(bf.substr(2)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("necklace file: malformed number in header");
    }
  }
  const std::size_t length = file.params.length();
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    DigitWord w = DigitWord::from_string(line, file.params.base);
    if (w.size() != length) {
      throw std::invalid_argument("necklace file: word of length " + std::to_string(w.size()) +
                                  " does not match m*b^k = " + std::to_string(length));
    }
    file.words.push_back(std::move(w));
  }
  return file;
}

void write_certificate_csv(std::ostream& out, const PerfectionCertificate& cert) {
  const auto& p = cert.params;
  out << "factor,residue,count\n";
  const std::size_t factors = p.factor_count();
  std::vector<Symbol> digits(p.k);
  for (std::size_t f = 0; f < factors; ++f) {
    std::size_t v = f;
    for (std::size_t i = p.k; i-- > 0;) {
      digits[i] = static_cast<Symbol>(v % p.base);
      v /= p.base;
    }
    const std::string name = DigitWord(digits, p.base).to_string();
    for (std::size_t phase = 1; phase <= p.m; ++phase) {
      out << name << ',' << phase << ',' << cert.counts[f * p.m + (phase - 1)] << '\n';
    }
  }
}

}  // namespace npn

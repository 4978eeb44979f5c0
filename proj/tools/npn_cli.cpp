// Command-line front end: generate | verify | enumerate | graph-dump | discrepancy.
//
// Exit codes: 0 success (or verdict true), 3 verdict false, 2 usage error,
// 1 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npn/discrepancy.hpp"
#include "npn/gf2_matrix.hpp"
#include "npn/levin.hpp"
#include "npn/necklace.hpp"
#include "npn/necklace_graph.hpp"
#include "npn/word.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kUsage = 2;
constexpr int kFalse = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Writes to the named file, or stdout when the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) {
        throw std::runtime_error("cannot open " + path + " for writing");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("invalid list entry \"" + item + "\" in \"" + text + "\"");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) {
    throw UsageError("empty list");
  }
  return out;
}

// "d:profile:z" with profile comma-separated, e.g. "2:1,1,0,0:0110".
std::pair<std::size_t, npn::AffineSpec> parse_override(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw UsageError("override \"" + text + "\" must look like d:n1,...,nm:z");
  }
  const std::size_t d = parse_size_list(text.substr(0, first)).at(0);
  if (d > 5) {
    throw UsageError("override order d = " + std::to_string(d) + " exceeds 5");
  }
  npn::AffineSpec spec{d, npn::RotationProfile::parse(text.substr(first + 1, second - first - 1)),
                       npn::BitWord::from_string(text.substr(second + 1)), std::size_t{1} << d};
  spec.validate();
  return {d, std::move(spec)};
}

npn::LevinOptions levin_options(const std::vector<std::string>& overrides) {
  npn::LevinOptions options;
  for (const auto& o : overrides) {
    auto [d, spec] = parse_override(o);
    options.specs.insert_or_assign(d, std::move(spec));
  }
  return options;
}

void write_digits(std::ostream& out, const std::vector<npn::Symbol>& digits) {
  std::string s(digits.size(), '0');
  for (std::size_t i = 0; i < digits.size(); ++i) {
    s[i] = static_cast<char>('0' + digits[i]);
  }
  out << s << '\n';
}

struct GenerateArgs {
  std::size_t d = 0;
  std::string profile;
  std::string z;
  std::size_t k = 0;
  std::size_t count = 0;
  std::string format = "raw";
  std::vector<std::string> overrides;
  std::string out;
};

struct VerifyArgs {
  std::string word;
  std::string in;
  std::string matrix;
  std::size_t k = 0;
  std::size_t m = 0;
  unsigned base = 2;
  bool nested = false;
  std::string certificate;
};

struct EnumerateArgs {
  std::size_t k = 0;
  std::size_t m = 0;
  bool count_only = false;
  std::string method = "nested";
  bool experimental = false;
  std::string out;
};

struct GraphArgs {
  std::size_t k = 0;
  std::size_t m = 0;
  std::string out;
};

struct DiscrepancyArgs {
  std::string source = "levin";
  std::string ns;
  std::size_t width = 64;
  std::uint64_t seed = 0;
  std::string measure = "extreme";
  std::vector<std::string> overrides;
  std::string out;
};

npn::AffineSpec affine_spec_from(const GenerateArgs& a) {
  if (a.d > 6) {
    throw UsageError("--d must be at most 6");
  }
  const std::size_t m = std::size_t{1} << a.d;
  npn::AffineSpec spec{a.d,
                       a.profile.empty() ? npn::RotationProfile::zero(m)
                                         : npn::RotationProfile::parse(a.profile),
                       a.z.empty() ? npn::BitWord::zeros(m) : npn::BitWord::from_string(a.z),
                       a.k == 0 ? m : a.k};
  spec.validate();
  return spec;
}

int run_generate_affine(const GenerateArgs& a) {
  const npn::AffineSpec spec = affine_spec_from(a);
  const npn::BitWord w = npn::affine_necklace(spec);
  Output out(a.out);
  if (a.format == "necklace") {
    npn::write_necklace_file(out.stream(), npn::NecklaceParams{spec.k, spec.m(), 2},
                             std::vector<npn::BitWord>{w});
  } else {
    out.stream() << w.to_string() << '\n';
  }
  return kOk;
}

int run_generate_matrix(const GenerateArgs& a) {
  const npn::AffineSpec spec = affine_spec_from(a);
  Output out(a.out);
  npn::write_matrix(out.stream(), npn::rotate_columns(npn::build_pascal(spec.d), spec.profile));
  return kOk;
}

int run_generate_levin(const GenerateArgs& a) {
  if (a.count == 0) {
    throw UsageError("--count must be positive");
  }
  const auto digits = npn::levin_digits(a.count, levin_options(a.overrides));
  Output out(a.out);
  write_digits(out.stream(), digits);
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  if (!a.matrix.empty()) {
    const npn::GF2Matrix m = npn::matrix_from_text(read_file(a.matrix));
    if (!m.square()) {
      throw UsageError("matrix is not square");
    }
    const bool ok = npn::is_invertible(m);
    std::cout << (ok ? "invertible" : "singular") << '\n';
    return ok ? kOk : kFalse;
  }

  npn::NecklaceParams params{a.k, a.m, a.base};
  std::vector<npn::DigitWord> words;
  if (!a.word.empty()) {
    if (a.k == 0 || a.m == 0) {
      throw UsageError("--k and --m are required with --word");
    }
    words.push_back(npn::DigitWord::from_string(a.word, a.base));
  } else {
    std::istringstream in(read_file(a.in));
    npn::NecklaceFile file = npn::read_necklace_file(in);
    if (a.k != 0 && a.k != file.params.k) {
      throw UsageError("--k disagrees with the file header");
    }
    if (a.m != 0 && a.m != file.params.m) {
      throw UsageError("--m disagrees with the file header");
    }
    params = file.params;
    words = std::move(file.words);
    if (words.empty()) {
      throw UsageError("necklace file contains no words");
    }
  }
  for (const auto& w : words) {
    if (w.size() != params.length()) {
      throw UsageError("word length " + std::to_string(w.size()) + " does not match m*b^k = " +
                       std::to_string(params.length()));
    }
  }

  bool all = true;
  for (const auto& w : words) {
    const npn::PerfectionCertificate cert = npn::is_perfect(w, params);
    bool verdict = cert.verdict;
    if (a.nested) {
      verdict = npn::is_nested_perfect(w, params);
    }
    if (!a.certificate.empty() && words.size() == 1) {
      Output out(a.certificate);
      npn::write_certificate_csv(out.stream(), cert);
    }
    all = all && verdict;
  }
  if (a.certificate != "-") {
    std::cout << (all ? "true" : "false") << '\n';
  }
  return all ? kOk : kFalse;
}

int run_enumerate(const EnumerateArgs& a) {
  std::vector<npn::BitWord> words;
  if (a.method == "nested") {
    words = npn::enumerate_nested(a.k, a.m, npn::EnumerateOptions{a.experimental});
  } else if (a.method == "affine") {
    if (a.experimental) {
      throw UsageError("--experimental applies to --method nested only");
    }
    words = npn::enumerate_affine(a.k, a.m);
  } else {
    throw UsageError("unknown method " + a.method);
  }
  Output out(a.out);
  if (a.count_only) {
    out.stream() << words.size() << '\n';
    return kOk;
  }
  npn::write_necklace_file(out.stream(), npn::NecklaceParams{a.k, a.m, 2}, words);
  out.stream() << "# count=" << words.size() << '\n';
  return kOk;
}

int run_graph_dump(const GraphArgs& a) {
  const npn::NecklaceGraph g = npn::build_graph(a.k, a.m);
  Output out(a.out);
  npn::write_edge_list(out.stream(), g);
  return kOk;
}

int run_discrepancy(const DiscrepancyArgs& a) {
  npn::DigitSource source;
  source.kind = npn::parse_source_kind(a.source);
  source.seed = a.seed;
  source.levin = levin_options(a.overrides);
  if (!a.overrides.empty() && source.kind != npn::SourceKind::levin) {
    throw UsageError("--override applies to the levin source only");
  }
  const auto ns = parse_size_list(a.ns);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == 0 || (i > 0 && ns[i] < ns[i - 1])) {
      throw UsageError("--N must be positive and ascending");
    }
  }
  if (ns.back() > (std::size_t{1} << 24)) {
    throw UsageError("--N values above 2^24 are not supported");
  }
  const auto report =
      npn::discrepancy_profile(source, ns, a.width, npn::parse_discrepancy_kind(a.measure));
  Output out(a.out);
  npn::write_report_csv(out.stream(), report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested perfect necklaces, affine necklaces and Levin's low-discrepancy stream"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate an affine necklace, matrix or Levin digits");
  generate->require_subcommand(1);
  auto add_affine_options = [&gen](CLI::App* cmd) {
    cmd->add_option("--d", gen.d, "Order: matrix size m = 2^d")->required();
    cmd->add_option("--profile", gen.profile, "Rotation profile n1,...,nm (default all zero)");
    cmd->add_option("--z", gen.z, "Mask word of length m (default all zero)");
    cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  };
  auto* gen_affine = generate->add_subcommand("affine", "Affine necklace from (d, profile, z, k)");
  add_affine_options(gen_affine);
  gen_affine->add_option("--k", gen.k, "Block exponent 1 <= k <= m (default m)");
  gen_affine->add_option("--format", gen.format, "raw | necklace")
      ->check(CLI::IsMember({"raw", "necklace"}));
  auto* gen_matrix = generate->add_subcommand("matrix", "Rotated Pascal matrix in text form");
  add_affine_options(gen_matrix);
  auto* gen_levin = generate->add_subcommand("levin", "Prefix of Levin's digit stream");
  gen_levin->add_option("--count", gen.count, "Number of digits")->required();
  gen_levin->add_option("--override", gen.overrides, "Per-order spec d:n1,...,nm:z (repeatable)");
  gen_levin->add_option("-o,--out", gen.out, "Output file (default stdout)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check perfection / nestedness, or matrix invertibility");
  auto* word_opt = verify->add_option("--word", ver.word, "Word as a digit string");
  auto* in_opt = verify->add_option("--in", ver.in, "Necklace file");
  auto* matrix_opt = verify->add_option("--matrix", ver.matrix, "Matrix text file");
  word_opt->excludes(in_opt)->excludes(matrix_opt);
  in_opt->excludes(matrix_opt);
  verify->add_option("--k", ver.k, "Factor length");
  verify->add_option("--m", ver.m, "Modulus");
  verify->add_option("--b", ver.base, "Alphabet size (default 2)")->check(CLI::Range(2, 36));
  verify->add_flag("--nested", ver.nested, "Check nested perfection");
  verify->add_option("--certificate", ver.certificate, "Write the certificate CSV here ('-' for stdout)");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List or count (k,m)-nested perfect necklaces");
  enumerate->add_option("--k", en.k, "Factor length")->required();
  enumerate->add_option("--m", en.m, "Modulus (power of two, at most 8)")->required();
  enumerate->add_flag("--count-only", en.count_only, "Print only the count");
  enumerate->add_option("--method", en.method, "nested | affine")
      ->check(CLI::IsMember({"nested", "affine"}));
  enumerate->add_flag("--experimental", en.experimental,
                      "Allow m that is not a power of two (nested method, m <= 16)");
  enumerate->add_option("-o,--out", en.out, "Output file (default stdout)");

  GraphArgs gr;
  auto* graph = app.add_subcommand("graph-dump", "Edge list of the phased de Bruijn graph");
  graph->add_option("--k", gr.k, "Vertex word length")->required();
  graph->add_option("--m", gr.m, "Number of phases")->required();
  graph->add_option("-o,--out", gr.out, "Output file (default stdout)");

  DiscrepancyArgs dis;
  auto* disc = app.add_subcommand("discrepancy", "Exact discrepancy of ({2^n x}) for a digit source");
  disc->add_option("--source", dis.source, "levin | champernowne | vandercorput | pseudorandom")
      ->check(CLI::IsMember({"levin", "champernowne", "vandercorput", "pseudorandom"}));
  disc->add_option("--N", dis.ns, "Comma-separated ascending point counts")->required();
  disc->add_option("--P", dis.width, "Digits per point window (1..128, default 64)")
      ->check(CLI::Range(1, 128));
  disc->add_option("--seed", dis.seed, "Seed for the pseudorandom source (default 0)");
  disc->add_option("--measure", dis.measure, "extreme | star (default extreme)")
      ->check(CLI::IsMember({"extreme", "star"}));
  disc->add_option("--override", dis.overrides, "Per-order spec d:n1,...,nm:z (repeatable)");
  disc->add_option("-o,--out", dis.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate) {
      if (*gen_affine) return run_generate_affine(gen);
      if (*gen_matrix) return run_generate_matrix(gen);
      return run_generate_levin(gen);
    }
    if (*verify) {
      if (ver.word.empty() && ver.in.empty() && ver.matrix.empty()) {
        throw UsageError("one of --word, --in or --matrix is required");
      }
      return run_verify(ver);
    }
    if (*enumerate) return run_enumerate(en);
    if (*graph) return run_graph_dump(gr);
    return run_discrepancy(dis);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

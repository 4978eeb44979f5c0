#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "npn/discrepancy.hpp"
#include "npn/gf2_matrix.hpp"
#include "npn/levin.hpp"
#include "npn/necklace.hpp"
#include "npn/necklace_graph.hpp"
#include "npn/word.hpp"

namespace py = pybind11;

namespace {

// Words cross the boundary as strings of digits.
npn::BitWord bw(const std::string& s) { return npn::BitWord::from_string(s); }

std::vector<std::string> strings(const std::vector<npn::BitWord>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

std::string digit_string(const std::vector<npn::Symbol>& digits) {
  std::string s(digits.size(), '0');
  for (std::size_t i = 0; i < digits.size(); ++i) s[i] = static_cast<char>('0' + digits[i]);
  return s;
}

npn::NecklaceParams params(std::size_t k, std::size_t m, unsigned base) {
  return npn::NecklaceParams{k, m, base};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nested perfect necklaces, affine necklaces and Levin's low-discrepancy stream.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("sigma", [](const std::string& w, std::size_t t) { return npn::sigma(bw(w), t).to_string(); },
        py::arg("w"), py::arg("t") = 1);
  m.def("xor_words", [](const std::string& a, const std::string& b) {
    return npn::xor_words(bw(a), bw(b)).to_string();
  });
  m.def("lex_words", [](std::size_t n) { return strings(npn::lex_words(n)); });
  m.def("tile", [](const std::string& z, std::size_t r) { return npn::tile(bw(z), r).to_string(); });

  py::class_<npn::GF2Matrix>(m, "GF2Matrix")
      .def(py::init([](const std::vector<std::string>& rows) { return npn::GF2Matrix::from_rows(rows); }))
      .def_property_readonly("rows", &npn::GF2Matrix::rows)
      .def_property_readonly("cols", &npn::GF2Matrix::cols)
      .def("entry", &npn::GF2Matrix::entry)
      .def("row_strings",
           [](const npn::GF2Matrix& a) {
             std::vector<std::string> out;
             for (std::size_t i = 1; i <= a.rows(); ++i) out.push_back(a.row_string(i));
             return out;
           })
      .def("to_text", [](const npn::GF2Matrix& a) { return npn::to_text(a); })
      .def_static("from_text", [](const std::string& s) { return npn::matrix_from_text(s); })
      .def(py::self == py::self)
      .def("__repr__", [](const npn::GF2Matrix& a) { return "GF2Matrix(\n" + npn::to_text(a) + ")"; });

  py::class_<npn::RotationProfile>(m, "RotationProfile")
      .def(py::init<std::vector<std::size_t>>())
      .def_static("parse", &npn::RotationProfile::parse)
      .def_static("zero", &npn::RotationProfile::zero)
      .def("values", &npn::RotationProfile::values)
      .def("__str__", &npn::RotationProfile::to_string)
      .def(py::self == py::self);

  py::class_<npn::BorderPath>(m, "BorderPath")
      .def_readonly("upper", &npn::BorderPath::upper)
      .def_readonly("lower", &npn::BorderPath::lower);

  m.def("build_pascal", &npn::build_pascal, py::arg("d"));
  m.def("rotate_columns", &npn::rotate_columns);
  m.def("enumerate_profiles", &npn::enumerate_profiles);
  m.def("is_invertible", &npn::is_invertible);
  m.def("submatrix", [](const npn::GF2Matrix& a, std::size_t r0, std::size_t r1, std::size_t c0,
                        std::size_t c1) { return npn::submatrix(a, {r0, r1}, {c0, c1}); },
        py::arg("m"), py::arg("row_first"), py::arg("row_last"), py::arg("col_first"),
        py::arg("col_last"));
  m.def("borders", &npn::borders);
  m.def("column_span_check", &npn::column_span_check);

  py::class_<npn::PerfectionCertificate>(m, "PerfectionCertificate")
      .def_readonly("verdict", &npn::PerfectionCertificate::verdict)
      .def_readonly("counts", &npn::PerfectionCertificate::counts)
      .def("count", &npn::PerfectionCertificate::count)
      .def("total", &npn::PerfectionCertificate::total)
      .def("__bool__", [](const npn::PerfectionCertificate& c) { return c.verdict; });

  m.def("is_perfect",
        [](const std::string& w, std::size_t k, std::size_t mod, unsigned base) {
          return npn::is_perfect(npn::DigitWord::from_string(w, base), params(k, mod, base));
        },
        py::arg("w"), py::arg("k"), py::arg("m"), py::arg("b") = 2);
  m.def("is_nested_perfect",
        [](const std::string& w, std::size_t k, std::size_t mod, unsigned base) {
          return npn::is_nested_perfect(npn::DigitWord::from_string(w, base), params(k, mod, base));
        },
        py::arg("w"), py::arg("k"), py::arg("m"), py::arg("b") = 2);

  py::class_<npn::AffineSpec>(m, "AffineSpec")
      .def(py::init([](std::size_t d, const npn::RotationProfile& profile, const std::string& z,
                       std::size_t k) { return npn::AffineSpec{d, profile, bw(z), k}; }),
           py::arg("d"), py::arg("profile"), py::arg("z"), py::arg("k"))
      .def_readonly("d", &npn::AffineSpec::d)
      .def_readonly("k", &npn::AffineSpec::k)
      .def_readonly("profile", &npn::AffineSpec::profile);

  m.def("affine_necklace", [](const npn::AffineSpec& s) { return npn::affine_necklace(s).to_string(); });
  m.def("xor_mask_necklace",
        [](const std::string& w, const std::string& z, std::size_t k, std::size_t mod) {
          return npn::xor_mask_necklace(bw(w), bw(z), params(k, mod, 2)).to_string();
        },
        py::arg("w"), py::arg("z"), py::arg("k"), py::arg("m"));
  m.def("enumerate_affine", [](std::size_t k, std::size_t mod) { return strings(npn::enumerate_affine(k, mod)); });
  m.def("enumerate_nested",
        [](std::size_t k, std::size_t mod, bool experimental) {
          return strings(npn::enumerate_nested(k, mod, {experimental}));
        },
        py::arg("k"), py::arg("m"), py::arg("experimental") = false);
  m.def("count_nested",
        [](std::size_t k, std::size_t mod, bool experimental) {
          return npn::count_nested(k, mod, {experimental});
        },
        py::arg("k"), py::arg("m"), py::arg("experimental") = false);

  m.def("necklace_to_cycle", [](const std::string& w, std::size_t k, std::size_t mod) {
    return npn::to_string(npn::necklace_to_cycle(bw(w), npn::build_graph(k, mod)).kind);
  });
  m.def("extensions", [](const std::string& w, std::size_t k, std::size_t mod) {
    return strings(npn::extensions(bw(w), k, mod));
  });

  m.def("levin_digits", [](std::size_t count) { return digit_string(npn::levin_digits(count)); });
  m.def("baseline_digits",
        [](const std::string& kind, std::size_t count, std::uint64_t seed) {
          return digit_string(npn::baseline_digits(npn::parse_source_kind(kind), count, seed));
        },
        py::arg("kind"), py::arg("count"), py::arg("seed") = 0);

  // Points given as dyadic numerators over 2^width; returns (num, den) as Python ints.
  m.def("discrepancy",
        [](const std::vector<std::uint64_t>& numerators, std::size_t width, const std::string& kind) {
          if (width > 64) throw std::invalid_argument("width above 64 is not exposed to Python");
          std::vector<npn::Window> windows(numerators.begin(), numerators.end());
          const auto r = npn::discrepancy(npn::make_point_set(std::move(windows), width),
                                          npn::parse_discrepancy_kind(kind));
          return py::make_tuple(py::int_(py::str(r.num.str())), py::int_(py::str(r.den.str())));
        },
        py::arg("numerators"), py::arg("width"), py::arg("kind") = "extreme");

  py::class_<npn::DiscrepancyRow>(m, "DiscrepancyRow")
      .def_readonly("n", &npn::DiscrepancyRow::n)
      .def_readonly("value", &npn::DiscrepancyRow::value_double)
      .def_readonly("scaled", &npn::DiscrepancyRow::scaled);

  m.def("discrepancy_profile",
        [](const std::string& source, const std::vector<std::size_t>& ns, std::size_t width,
           std::uint64_t seed, const std::string& kind) {
          npn::DigitSource src;
          src.kind = npn::parse_source_kind(source);
          src.seed = seed;
          return npn::discrepancy_profile(src, ns, width, npn::parse_discrepancy_kind(kind)).rows;
        },
        py::arg("source"), py::arg("ns"), py::arg("width") = 64, py::arg("seed") = 0,
        py::arg("kind") = "extreme");
}

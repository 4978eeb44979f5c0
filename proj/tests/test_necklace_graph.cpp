#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "npn/necklace.hpp"
#include "npn/necklace_graph.hpp"
#include "oracles.hpp"

using npn::BitWord;
using npn::CycleKind;

namespace {

BitWord W(const std::string& s) { return BitWord::from_string(s); }

CycleKind kind(const std::string& w, std::size_t k, std::size_t m) {
  return npn::necklace_to_cycle(W(w), npn::build_graph(k, m)).kind;
}

// Extensions by definition: filter the nested set.
std::vector<BitWord> filtered(const BitWord& w, const std::vector<BitWord>& level, std::size_t k,
                              std::size_t m) {
  std::vector<BitWord> out;
  for (const auto& v : level) {
    if (oracle::perfect((w + v).to_string(), k + 1, m)) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("graph sizes and degrees") {
  const auto g11 = npn::build_graph(1, 1);
  CHECK(g11.vertex_count() == 2);
  CHECK(g11.edge_count() == 4);
  const auto g12 = npn::build_graph(1, 2);
  CHECK(g12.vertex_count() == 4);
  CHECK(g12.edge_count() == 8);
  for (auto [k, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {1, 3}, {3, 4}, {4, 8}}) {
    const auto g = npn::build_graph(k, m);
    CHECK(g.edge_count() == (m << (k + 1)));
    std::vector<int> out_seen(g.edge_count()), in_seen(g.edge_count());
    for (npn::NecklaceGraph::Id v = 0; v < g.vertex_count(); ++v) {
      for (auto e : g.out_edges(v)) {
        CHECK(g.source(e) == v);
        ++out_seen[e];
      }
      for (auto e : g.in_edges(v)) {
        CHECK(g.target(e) == v);
        ++in_seen[e];
      }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      CHECK(out_seen[e] == 1);
      CHECK(in_seen[e] == 1);
      const auto id = static_cast<npn::NecklaceGraph::Id>(e);
      // Edge (v, i) joins prefix and suffix of v, phase i to i mod m + 1.
      CHECK(g.vertex_word(g.source(id)) == g.edge_label(id) >> 1);
      CHECK(g.vertex_word(g.target(id)) == (g.edge_label(id) & ((1U << k) - 1)));
      CHECK(g.vertex_phase(g.target(id)) == g.edge_phase(id) % m + 1);
    }
  }
  CHECK_THROWS_AS(npn::build_graph(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(npn::build_graph(14, 8), std::out_of_range);
}

TEST_CASE("necklace_to_cycle examples") {
  CHECK(kind("0011", 1, 2) == CycleKind::hamiltonian);
  CHECK(kind("00110110", 1, 2) == CycleKind::eulerian);
  CHECK(kind("0000", 1, 2) == CycleKind::neither);
  CHECK_THROWS_AS(kind("001", 1, 2), std::invalid_argument);
  const auto witness = npn::necklace_to_cycle(W("0011"), npn::build_graph(1, 2));
  const auto g = npn::build_graph(1, 2);
  for (std::size_t i = 0; i < witness.edges.size(); ++i) {
    CHECK(g.target(witness.edges[i]) == g.source(witness.edges[(i + 1) % witness.edges.size()]));
  }
}

TEST_CASE("cycle classification matches perfection, all short words") {
  for (std::size_t m : {1, 2, 4}) {
    for (std::size_t k = 1; (m << (k + 1)) <= 16; ++k) {
      const std::size_t ham = m << k;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << ham); ++v) {
        const auto s = oracle::bits(v, ham);
        CHECK((kind(s, k, m) == CycleKind::hamiltonian) == oracle::perfect(s, k, m));
      }
      const std::size_t eul = m << (k + 1);
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << eul); ++v) {
        const auto s = oracle::bits(v, eul);
        CHECK((kind(s, k, m) == CycleKind::eulerian) == oracle::perfect(s, k + 1, m));
      }
    }
  }
}

TEST_CASE("nested necklaces are Hamiltonian, their doublings Eulerian") {
  for (std::size_t m : {2, 4, 8}) {
    for (std::size_t k = 1; k < m && k <= 3; ++k) {
      const auto g = npn::build_graph(k, m);
      for (const auto& w : npn::enumerate_nested(k, m)) {
        CHECK(npn::necklace_to_cycle(w, g).kind == CycleKind::hamiltonian);
      }
      for (const auto& w : npn::enumerate_nested(k + 1, m)) {
        CHECK(npn::necklace_to_cycle(w, g).kind == CycleKind::eulerian);
      }
    }
  }
}

TEST_CASE("extensions examples") {
  const auto ext = npn::extensions(W("0011"), 1, 2);
  CHECK(ext.size() <= 2);
  CHECK(std::find(ext.begin(), ext.end(), W("0110")) != ext.end());
  CHECK_THROWS_AS(npn::extensions(W("0000"), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(npn::extensions(W("001"), 1, 2), std::invalid_argument);

  // Concatenating each nested necklace with its extensions rebuilds the next level.
  for (std::size_t m : {2, 4}) {
    for (std::size_t k = 1; k < m; ++k) {
      std::set<BitWord> doubled;
      for (const auto& w : npn::enumerate_nested(k, m)) {
        for (const auto& v : npn::extensions(w, k, m)) doubled.insert(w + v);
      }
      const auto affine = npn::enumerate_affine(k + 1, m);
      CHECK(doubled == std::set<BitWord>(affine.begin(), affine.end()));
    }
  }
  // Past k = m nothing extends: there are no (3,2)-nested necklaces at all.
  for (const auto& w : npn::enumerate_nested(2, 2)) CHECK(npn::extensions(w, 2, 2).empty());
  CHECK(oracle::brute_nested(3, 2).empty());
}

TEST_CASE("graph extensions equal filtered extensions, m in {2,4}, k < m") {
  for (std::size_t m : {2, 4}) {
    for (std::size_t k = 1; k < m; ++k) {
      const auto level = npn::enumerate_nested(k, m);
      const std::size_t shift = m << (k - 1);
      for (const auto& w : level) {
        const auto ext = npn::extensions(w, k, m);
        CHECK(ext == filtered(w, level, k, m));
        CHECK(ext.size() <= 2);
        if (ext.size() == 2) {
          CHECK(npn::sigma(ext[0], shift) == ext[1]);
        }
      }
    }
  }
}

TEST_CASE("perfect but not nested inputs are opt-in") {
  CHECK_FALSE(npn::is_nested_perfect(W("00011011"), {2, 2, 2}));
  CHECK_THROWS_AS(npn::extensions(W("00011011"), 2, 2), std::invalid_argument);
  const auto ext = npn::extensions(W("00011011"), 2, 2, {true});
  for (const auto& v : ext) {
    CHECK(oracle::nested(v.to_string(), 2, 2));
    CHECK(oracle::perfect("00011011" + v.to_string(), 3, 2));
  }
}

TEST_CASE("edge list dump") {
  std::ostringstream out;
  npn::write_edge_list(out, npn::build_graph(1, 2));
  const std::string s = out.str();
  CHECK(std::count(s.begin(), s.end(), '\n') == 8);
  CHECK(s.rfind("0 1 0 2 00\n", 0) == 0);
  CHECK(s.find("1 2 1 1 11\n") != std::string::npos);
}

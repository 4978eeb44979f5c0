#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "npn/word.hpp"

namespace npn {

/// De Bruijn graph with phases: vertices are pairs (u, i) with u a binary
/// word of length k and i in 1..m; each binary word v of length k+1 labels
/// one edge per phase, from (prefix_k(v), i) to (suffix_k(v), i mod m + 1).
///
/// Nothing is materialised. Vertex (u, i) has id (i-1)*2^k + value(u) and
/// edge (v, i) has id (i-1)*2^(k+1) + value(v).
class NecklaceGraph {
 public:
  using Id = std::uint32_t;

  static constexpr std::size_t kMaxVertices = std::size_t{1} << 16;

  NecklaceGraph(std::size_t k, std::size_t m);

  std::size_t k() const noexcept { return k_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t vertex_count() const noexcept { return m_ << k_; }
  std::size_t edge_count() const noexcept { return m_ << (k_ + 1); }

  Id vertex(std::uint64_t word, std::size_t phase) const noexcept {
    return static_cast<Id>(((phase - 1) << k_) + word);
  }
  Id edge(std::uint64_t label, std::size_t phase) const noexcept {
    return static_cast<Id>(((phase - 1) << (k_ + 1)) + label);
  }

  std::uint64_t vertex_word(Id v) const noexcept { return v & ((Id{1} << k_) - 1); }
  std::size_t vertex_phase(Id v) const noexcept { return (v >> k_) + 1; }
  std::uint64_t edge_label(Id e) const noexcept { return e & ((Id{1} << (k_ + 1)) - 1); }
  std::size_t edge_phase(Id e) const noexcept { return (e >> (k_ + 1)) + 1; }

  Id source(Id e) const noexcept { return vertex(edge_label(e) >> 1, edge_phase(e)); }
  Id target(Id e) const noexcept {
    return vertex(edge_label(e) & ((Id{1} << k_) - 1), edge_phase(e) % m_ + 1);
  }

  std::array<Id, 2> out_edges(Id v) const noexcept;
  std::array<Id, 2> in_edges(Id v) const noexcept;

 private:
  std::size_t k_;
  std::size_t m_;
};

NecklaceGraph build_graph(std::size_t k, std::size_t m);

enum class CycleKind { hamiltonian, eulerian, neither };

const char* to_string(CycleKind kind);

/// The closed walk a circular word traces through the graph.
struct CycleWitness {
  std::vector<NecklaceGraph::Id> edges;
  CycleKind kind = CycleKind::neither;
};

/// Requires |w| = m*2^k (Hamiltonian probe) or m*2^(k+1) (Eulerian probe).
CycleWitness necklace_to_cycle(const BitWord& w, const NecklaceGraph& g);

struct ExtensionOptions {
  /// Accept a (k,m)-perfect but not nested w. The at-most-two bound is not
  /// known to hold for such inputs.
  bool allow_non_nested = false;
};

/// Every (k,m)-nested perfect w' such that ww' is (k+1,m)-perfect, sorted.
///
/// Removing the Hamiltonian cycle of w leaves each vertex with one out-edge;
/// the candidates are the closed walks of that residual graph read from
/// phase-1 vertices, kept when they pass both checks.
std::vector<BitWord> extensions(const BitWord& w, std::size_t k, std::size_t m,
                                ExtensionOptions options = {});

/// One edge per line: "from_u from_i to_u to_i label".
void write_edge_list(std::ostream& out, const NecklaceGraph& g);

}  // namespace npn

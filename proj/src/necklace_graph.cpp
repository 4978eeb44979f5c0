#include "npn/necklace_graph.hpp"

#include <algorithm>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "npn/necklace.hpp"

namespace npn {

namespace {

std::uint64_t factor_value(std::span<const Symbol> w, std::size_t start, std::size_t len) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len; ++i) {
    v = (v << 1) | w[(start + i) % w.size()];
  }
  return v;
}

}  // namespace

NecklaceGraph::NecklaceGraph(std::size_t k, std::size_t m) : k_(k), m_(m) {
  if (k == 0 || m == 0) {
    throw std::invalid_argument("graph requires k >= 1 and m >= 1");
  }
  if (k > 16 || (m << k) > kMaxVertices) {
    throw std::out_of_range("graph with m*2^k vertices exceeds the cap 2^16");
  }
}

std::array<NecklaceGraph::Id, 2> NecklaceGraph::out_edges(Id v) const noexcept {
  const std::uint64_t label = vertex_word(v) << 1;
  const std::size_t phase = vertex_phase(v);
  return {edge(label, phase), edge(label | 1U, phase)};
}

std::array<NecklaceGraph::Id, 2> NecklaceGraph::in_edges(Id v) const noexcept {
  const std::uint64_t u = vertex_word(v);
  const std::size_t phase = (vertex_phase(v) + m_ - 2) % m_ + 1;
  return {edge(u, phase), edge(u | (std::uint64_t{1} << k_), phase)};
}

NecklaceGraph build_graph(std::size_t k, std::size_t m) { return NecklaceGraph(k, m); }

const char* to_string(CycleKind kind) {
  switch (kind) {
    case CycleKind::hamiltonian:
      return "hamiltonian";
    case CycleKind::eulerian:
      return "eulerian";
    case CycleKind::neither:
      break;
  }
  return "neither";
}

CycleWitness necklace_to_cycle(const BitWord& w, const NecklaceGraph& g) {
  const std::size_t n = w.size();
  if (n != g.vertex_count() && n != g.edge_count()) {
    throw std::invalid_argument("word length " + std::to_string(n) + " is neither m*2^k = " +
                                std::to_string(g.vertex_count()) + " nor m*2^(k+1) = " +
                                std::to_string(g.edge_count()));
  }
  CycleWitness witness;
  witness.edges.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    witness.edges.push_back(g.edge(factor_value(w.bits(), p, g.k() + 1), p % g.m() + 1));
  }

  if (n == g.vertex_count()) {
    std::vector<bool> seen(g.vertex_count(), false);
    for (auto e : witness.edges) {
      const auto v = g.source(e);
      if (seen[v]) {
        return witness;
      }
      seen[v] = true;
    }
    witness.kind = CycleKind::hamiltonian;
  } else {
    std::vector<bool> seen(g.edge_count(), false);
    for (auto e : witness.edges) {
      if (seen[e]) {
        return witness;
      }
      seen[e] = true;
    }
    witness.kind = CycleKind::eulerian;
  }
  return witness;
}

std::vector<BitWord> extensions(const BitWord& w, std::size_t k, std::size_t m,
                                ExtensionOptions options) {
  const NecklaceParams params{k, m, 2};
  if (w.size() != params.length()) {
    throw std::invalid_argument("extensions: word length " + std::to_string(w.size()) +
                                " does not match m*2^k = " + std::to_string(params.length()));
  }
  if (options.allow_non_nested) {
    if (!is_perfect(w, params).verdict) {
      throw std::invalid_argument("extensions: word is not (k,m)-perfect");
    }
  } else if (!is_nested_perfect(w, params)) {
    throw std::invalid_argument("extensions: word is not (k,m)-nested perfect");
  }

  const NecklaceGraph g(k, m);
  const CycleWitness cycle = necklace_to_cycle(w, g);

  std::vector<bool> used(g.edge_count(), false);
  for (auto e : cycle.edges) {
    used[e] = true;
  }
  std::vector<NecklaceGraph::Id> next_edge(g.vertex_count());
  for (NecklaceGraph::Id v = 0; v < g.vertex_count(); ++v) {
    const auto outs = g.out_edges(v);
    next_edge[v] = used[outs[0]] ? outs[1] : outs[0];
  }

  const std::size_t n = w.size();
  const NecklaceParams doubled{k + 1, m, 2};
  std::vector<BitWord> out;
  std::vector<Symbol> word(n);
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u) {
    const auto start = g.vertex(u, 1);
    auto v = start;
    for (std::size_t p = 0; p < n; ++p) {
      const auto e = next_edge[v];
      word[p] = static_cast<Symbol>(g.edge_label(e) >> k);
      v = g.target(e);
    }
    if (v != start) {
      continue;
    }
    BitWord candidate(word);
    if (is_nested_perfect(candidate, params) && is_perfect(w + candidate, doubled).verdict) {
      out.push_back(std::move(candidate));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_edge_list(std::ostream& out, const NecklaceGraph& g) {
  const std::size_t k = g.k();
  for (NecklaceGraph::Id e = 0; e < g.edge_count(); ++e) {
    const auto from = g.source(e);
    const auto to = g.target(e);
    out << BitWord::from_uint(g.vertex_word(from), k).to_string() << ' ' << g.vertex_phase(from)
        << ' ' << BitWord::from_uint(g.vertex_word(to), k).to_string() << ' ' << g.vertex_phase(to)
        << ' ' << BitWord::from_uint(g.edge_label(e), k + 1).to_string() << '\n';
  }
}

}  // namespace npn

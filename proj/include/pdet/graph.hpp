#ifndef PDET_GRAPH_HPP
#define PDET_GRAPH_HPP

#include <pdet/charpoly.hpp>
#include <pdet/exact.hpp>
#include <pdet/matrix.hpp>
#include <pdet/scalar.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdet {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple undirected graph on vertices 0..n-1. Edges are stored as
/// (u, v) with u < v, sorted, without duplicates.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
      if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
      if (u >= n_ || v >= n_)
        throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for " + std::to_string(n_) + " vertices");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
      throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                  std::to_string(dup->second) + ")");
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * Edge-list text: the first non-comment line holds the vertex count, every
 * following line one whitespace-separated pair "u v". Text after '#' is a
 * comment; blank lines are ignored.
 */
inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;

  const auto fail = [&](const std::string& why) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": " + why);
  };
  const auto read_index = [&](const std::string& token) -> std::size_t {
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](unsigned char c) { return std::isdigit(c); }))
      fail("expected a vertex index, got '" + token + "'");
    try {
      return std::stoul(token);
    } catch (const std::exception&) {
      fail("vertex index too large: '" + token + "'");
    }
    return 0;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 1) fail("expected a single vertex count");
      n = read_index(tokens[0]);
      have_header = true;
      continue;
    }
    if (tokens.size() != 2) fail("expected two vertex indices");
    const std::size_t u = read_index(tokens[0]);
    const std::size_t v = read_index(tokens[1]);
    if (u == v) fail("loop at vertex " + std::to_string(u));
    if (u >= n || v >= n)
      fail("vertex out of range for " + std::to_string(n) + " vertices");
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!have_header) throw ParseError("edge list has no vertex-count header");

  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
    throw ParseError("duplicate edge (" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + ")");
  return Graph(n, std::move(sorted));
}

inline std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// Named families.

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(e));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, std::move(e));
}

inline Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

/// Number of connected components (isolated vertices count).
inline std::size_t component_count(const Graph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertex_count();
  for (const auto& [u, v] : g.edges()) {
    const auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

/// |E| x |V| oriented incidence matrix: the row of edge (u, v), u < v, is
/// -1 at u and +1 at v.
inline ExactMatrix incidence_matrix(const Graph& g) {
  ExactMatrix f(g.edge_count(), g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    f(e, g.edges()[e].first) = -1;
    f(e, g.edges()[e].second) = 1;
  }
  return f;
}

/// Degree matrix minus adjacency matrix.
inline ExactMatrix scalar_laplacian(const Graph& g) {
  ExactMatrix l(g.vertex_count(), g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    l(u, u) += 1;
    l(v, v) += 1;
    l(u, v) -= 1;
    l(v, u) -= 1;
  }
  return l;
}

/// Det(L) / |V|. Requires a one-dimensional Laplacian kernel.
inline Scalar spanning_tree_count(const Graph& g) {
  const auto l = scalar_laplacian(g);
  const std::size_t kernel_dim = l.rows() - rank(l);
  if (kernel_dim != 1)
    throw DisconnectedGraph("spanning_tree_count needs a connected graph; Laplacian kernel has "
                            "dimension " +
                            std::to_string(kernel_dim));
  return pseudo_det(l) / Scalar(g.vertex_count());
}

/// det(1 + L), the number of rooted spanning forests.
inline Scalar rooted_forest_count(const Graph& g) {
  const auto l = scalar_laplacian(g);
  return determinant(l + ExactMatrix::identity(l.rows()));
}

/// Largest edge count the brute-force oracles accept.
inline constexpr std::size_t kBruteForceEdgeLimit = 20;

namespace detail {

inline void check_oracle_budget(const Graph& g, const char* what) {
  if (g.edge_count() > kBruteForceEdgeLimit)
    throw std::length_error(std::string(what) + ": " + std::to_string(g.edge_count()) +
                            " edges exceed the brute-force limit of " +
                            std::to_string(kBruteForceEdgeLimit));
}

/// Union-find over the edges selected by `mask`. Returns false on a cycle;
/// otherwise fills `sizes` with the component size at every root.
inline bool acyclic_components(const Graph& g, std::uint32_t mask,
                               std::vector<std::size_t>& parent,
                               std::vector<std::size_t>& sizes) {
  const std::size_t n = g.vertex_count();
  parent.resize(n);
  sizes.assign(n, 1);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!(mask >> e & 1u)) continue;
    const auto a = find(g.edges()[e].first), b = find(g.edges()[e].second);
    if (a == b) return false;
    parent[a] = b;
    sizes[b] += sizes[a];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (find(v) != v) sizes[v] = 0;
  return true;
}

}  // namespace detail

/// Counts (|V|-1)-edge subsets that form a spanning tree by direct enumeration.
inline std::uint64_t brute_force_tree_count(const Graph& g) {
  detail::check_oracle_budget(g, "brute_force_tree_count");
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> parent, sizes;
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n - 1) continue;
    if (detail::acyclic_components(g, mask, parent, sizes)) ++count;
  }
  return count;
}

/// Σ over acyclic edge subsets of the product of tree sizes: one root per
/// tree, isolated vertices being single-vertex trees with one choice.
inline std::uint64_t brute_force_rooted_forest_count(const Graph& g) {
  detail::check_oracle_budget(g, "brute_force_rooted_forest_count");
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> parent, sizes;
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (!detail::acyclic_components(g, mask, parent, sizes)) continue;
    std::uint64_t roots = 1;
    for (auto s : sizes)
      if (s != 0) roots *= s;
    total += roots;
  }
  return total;
}

}  // namespace pdet

#endif  // PDET_GRAPH_HPP

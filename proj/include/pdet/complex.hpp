#ifndef PDET_COMPLEX_HPP
#define PDET_COMPLEX_HPP

#include <pdet/exact.hpp>
#include <pdet/graph.hpp>
#include <pdet/minors.hpp>
#include <pdet/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdet {

/// Strictly increasing vertex tuple.
using Simplex = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultSimplexBudget = 100'000;

/*
 * Simplices grouped by dimension, lexicographic within each dimension. The
 * global index runs dimension-major, so the simplices of dimension d occupy
 * the contiguous range [offset(d), offset(d) + count(d)).
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  explicit SimplicialComplex(std::vector<std::vector<Simplex>> by_dimension)
      : levels_(std::move(by_dimension)) {
    while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
    offsets_.assign(levels_.size() + 1, 0);
    for (std::size_t d = 0; d < levels_.size(); ++d) {
      std::sort(levels_[d].begin(), levels_[d].end());
      offsets_[d + 1] = offsets_[d] + levels_[d].size();
    }
  }

  /// Number of populated dimensions; the top dimension is levels() - 1.
  std::size_t levels() const noexcept { return levels_.size(); }
  std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }
  std::size_t count(std::size_t d) const { return d < levels_.size() ? levels_[d].size() : 0; }
  std::size_t offset(std::size_t d) const { return offsets_.at(d); }
  const std::vector<Simplex>& simplices(std::size_t d) const { return levels_.at(d); }

  /// Position of s among simplices of its dimension.
  std::size_t local_index(const Simplex& s) const {
    const auto& level = levels_.at(s.size() - 1);
    const auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) throw std::out_of_range("simplex not in complex");
    return static_cast<std::size_t>(it - level.begin());
  }

  std::size_t global_index(const Simplex& s) const {
    return offsets_[s.size() - 1] + local_index(s);
  }

 private:
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::size_t> offsets_;
};

/// All cliques of g (vertices, edges, triangles, ...) by extending each
/// clique with larger adjacent vertices.
inline SimplicialComplex clique_complex(const Graph& g,
                                        std::size_t budget = kDefaultSimplexBudget) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> higher(n);  // neighbors above each vertex
  for (const auto& [u, v] : g.edges()) higher[u].push_back(v);

  std::vector<std::vector<Simplex>> levels;
  std::size_t total = n;
  if (total > budget)
    throw BudgetExceeded("clique_complex: more than " + std::to_string(budget) + " simplices");
  if (n > 0) {
    levels.emplace_back();
    for (std::size_t v = 0; v < n; ++v) levels[0].push_back({v});
  }
  while (!levels.empty() && !levels.back().empty()) {
    std::vector<Simplex> next;
    for (const auto& s : levels.back())
      for (std::size_t w : higher[s.back()]) {
        const bool joins_all = std::all_of(s.begin(), s.end() - 1,
                                           [&](std::size_t u) { return g.has_edge(u, w); });
        if (!joins_all) continue;
        Simplex t = s;
        t.push_back(w);
        next.push_back(std::move(t));
        if (++total > budget)
          throw BudgetExceeded("clique_complex: more than " + std::to_string(budget) +
                               " simplices");
      }
    levels.push_back(std::move(next));
  }
  return SimplicialComplex(std::move(levels));
}

/// The simplices of c of dimension at most max_dim. The 1-skeleton of a
/// clique complex is the graph itself as a one-dimensional complex.
inline SimplicialComplex skeleton(const SimplicialComplex& c, std::size_t max_dim) {
  std::vector<std::vector<Simplex>> levels;
  for (std::size_t d = 0; d < c.levels() && d <= max_dim; ++d) levels.push_back(c.simplices(d));
  return SimplicialComplex(std::move(levels));
}

/// ∂_d from d-simplices to (d-1)-simplices; the face omitting the i-th
/// vertex carries sign (-1)^i.
inline ExactMatrix boundary_operator(const SimplicialComplex& c, std::size_t d) {
  if (d < 1 || d >= c.levels())
    throw std::out_of_range("boundary dimension " + std::to_string(d) + " outside [1, " +
                            std::to_string(c.levels() == 0 ? 0 : c.levels() - 1) + "]");
  ExactMatrix b(c.count(d - 1), c.count(d));
  const auto& cells = c.simplices(d);
  for (std::size_t j = 0; j < cells.size(); ++j)
    for (std::size_t i = 0; i < cells[j].size(); ++i) {
      Simplex face = cells[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      b(c.local_index(face), j) = (i % 2 == 0) ? 1 : -1;
    }
  return b;
}

/// D = d + d* on all simplices in global index order. Symmetric.
inline ExactMatrix dirac_operator(const SimplicialComplex& c) {
  ExactMatrix dirac(c.size(), c.size());
  for (std::size_t d = 1; d < c.levels(); ++d) {
    const auto b = boundary_operator(c, d);
    const std::size_t row0 = c.offset(d - 1), col0 = c.offset(d);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(i, j) == 0) continue;
        dirac(row0 + i, col0 + j) = b(i, j);
        dirac(col0 + j, row0 + i) = b(i, j);
      }
  }
  return dirac;
}

/// Diagonal block of D² acting on d-forms (the form Laplacian L_d).
inline ExactMatrix form_laplacian_block(const SimplicialComplex& c, const ExactMatrix& dirac_sq,
                                        std::size_t d) {
  const std::size_t start = c.offset(d), len = c.count(d);
  ExactMatrix block(len, len);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) block(i, j) = dirac_sq(start + i, start + j);
  return block;
}

struct BettiNumbers {
  std::vector<std::size_t> by_degree;  // b_0, b_1, ...
  std::size_t harmonic_dimension = 0;  // dim ker D²
};

inline BettiNumbers betti_numbers(const SimplicialComplex& c) {
  const auto dirac = dirac_operator(c);
  const auto dirac_sq = mat_mul(dirac, dirac);
  BettiNumbers out;
  for (std::size_t d = 0; d < c.levels(); ++d) {
    const auto block = form_laplacian_block(c, dirac_sq, d);
    out.by_degree.push_back(block.rows() - rank(block));
  }
  out.harmonic_dimension = dirac_sq.rows() - rank(dirac_sq);
  return out;
}

/// Both sides of Euler-Poincaré: Σ(-1)^k b_k and Σ(-1)^k (number of k-simplices).
struct EulerCheck {
  std::int64_t from_betti = 0;
  std::int64_t from_simplices = 0;
};

inline EulerCheck euler_characteristic_check(const SimplicialComplex& c) {
  const auto betti = betti_numbers(c);
  EulerCheck out;
  for (std::size_t d = 0; d < c.levels(); ++d) {
    const auto sign = d % 2 == 0 ? std::int64_t{1} : std::int64_t{-1};
    out.from_betti += sign * static_cast<std::int64_t>(betti.by_degree[d]);
    out.from_simplices += sign * static_cast<std::int64_t>(c.count(d));
  }
  return out;
}

/// Graph on the simplices of the clique complex (global indexing); two
/// simplices are adjacent when one is a codimension-one face of the other.
inline Graph simplex_graph(const Graph& g, std::size_t budget = kDefaultSimplexBudget) {
  const auto c = clique_complex(g, budget);
  std::vector<Edge> edges;
  for (std::size_t d = 1; d < c.levels(); ++d)
    for (const auto& s : c.simplices(d)) {
      const std::size_t self = c.global_index(s);
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        edges.emplace_back(c.global_index(face), self);
      }
    }
  return Graph(c.size(), std::move(edges));
}

}  // namespace pdet

#endif  // PDET_COMPLEX_HPP

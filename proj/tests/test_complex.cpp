#include "corpus.hpp"

#include <pdet/complex.hpp>

#include <gtest/gtest.h>

#include <cstdint>

using namespace pdet;

namespace {

Scalar int_power(long base, unsigned exp) {
  Scalar out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

Graph two_edges() { return Graph(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST(CliqueComplex, Counts) {
  const auto k3 = clique_complex(complete_graph(3));
  EXPECT_EQ(k3.levels(), 3u);
  EXPECT_EQ(k3.count(0), 3u);
  EXPECT_EQ(k3.count(1), 3u);
  EXPECT_EQ(k3.count(2), 1u);
  for (std::size_t n = 1; n <= 7; ++n)
    EXPECT_EQ(clique_complex(complete_graph(n)).size(), (std::size_t{1} << n) - 1);
  const auto c4 = clique_complex(cycle_graph(4));
  EXPECT_EQ(c4.size(), 8u);
  EXPECT_EQ(c4.levels(), 2u);
  EXPECT_EQ(clique_complex(Graph()).size(), 0u);
}

TEST(CliqueComplex, ClosedUnderFaces) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto c = clique_complex(erdos_renyi(7, 0.6, rng));
    for (std::size_t d = 1; d < c.levels(); ++d)
      for (const auto& s : c.simplices(d))
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          EXPECT_NO_THROW(c.local_index(face));
        }
  }
}

TEST(CliqueComplex, GlobalIndexIsDimensionMajor) {
  const auto c = clique_complex(complete_graph(3));
  EXPECT_EQ(c.global_index({0}), 0u);
  EXPECT_EQ(c.global_index({2}), 2u);
  EXPECT_EQ(c.global_index({0, 1}), 3u);
  EXPECT_EQ(c.global_index({1, 2}), 5u);
  EXPECT_EQ(c.global_index({0, 1, 2}), 6u);
  EXPECT_THROW(c.local_index({0, 3}), std::out_of_range);
}

TEST(CliqueComplex, Budget) {
  EXPECT_THROW(clique_complex(complete_graph(8), 100), BudgetExceeded);
  EXPECT_NO_THROW(clique_complex(complete_graph(8), 255));
  EXPECT_THROW(clique_complex(complete_graph(8), 254), BudgetExceeded);
}

TEST(Boundary, EdgesMatchIncidence) {
  const auto g = complete_graph(4);
  const auto c = clique_complex(g);
  EXPECT_EQ(boundary_operator(c, 1), transpose(incidence_matrix(g)));
}

TEST(Boundary, TriangleSigns) {
  const auto c = clique_complex(complete_graph(3));
  EXPECT_EQ(boundary_operator(c, 2), (ExactMatrix{{1}, {-1}, {1}}));
  EXPECT_THROW(boundary_operator(c, 0), std::out_of_range);
  EXPECT_THROW(boundary_operator(c, 3), std::out_of_range);
}

TEST(Boundary, SquaresToZero) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 25; ++t) {
    const auto c = clique_complex(erdos_renyi(7, 0.7, rng));
    for (std::size_t d = 2; d < c.levels(); ++d)
      EXPECT_TRUE(is_zero(mat_mul(boundary_operator(c, d - 1), boundary_operator(c, d))));
  }
}

TEST(Dirac, SymmetricWithBlockDiagonalSquare) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 15; ++t) {
    const auto c = clique_complex(erdos_renyi(6, 0.6, rng));
    const auto d = dirac_operator(c);
    EXPECT_TRUE(is_symmetric(d));
    const auto d2 = mat_mul(d, d);
    for (std::size_t p = 0; p < c.levels(); ++p)
      for (std::size_t q = 0; q < c.levels(); ++q) {
        if (p == q) continue;
        for (std::size_t i = 0; i < c.count(p); ++i)
          for (std::size_t j = 0; j < c.count(q); ++j)
            EXPECT_EQ(d2(c.offset(p) + i, c.offset(q) + j), 0);
      }
  }
}

TEST(Dirac, ClosedFormsForCompleteGraphs) {
  for (unsigned n = 2; n <= 5; ++n) {
    const auto d = dirac_operator(clique_complex(complete_graph(n)));
    EXPECT_EQ(d.rows(), (std::size_t{1} << n) - 1);
    EXPECT_EQ(pseudo_det(d), -int_power(n, (1u << (n - 1)) - 1)) << "K" << n;
  }
}

TEST(Dirac, ClosedFormsForPathsAndCycles) {
  for (unsigned n = 2; n <= 8; ++n)
    EXPECT_EQ(pseudo_det(dirac_operator(clique_complex(path_graph(n)))),
              Scalar(n) * sign_power(n - 1))
        << "L" << n;
  for (unsigned n = 3; n <= 8; ++n) {
    const auto d = dirac_operator(skeleton(clique_complex(cycle_graph(n)), 1));
    EXPECT_EQ(d.rows(), 2 * n);
    EXPECT_EQ(pseudo_det(d), Scalar(n * n) * sign_power(n - 1)) << "C" << n;
    EXPECT_EQ(pseudo_det(mat_mul(d, d)), int_power(n, 4)) << "C" << n;
  }
}

TEST(Dirac, TriangleCycleIsCompleteGraph) {
  const auto full = clique_complex(cycle_graph(3));
  EXPECT_EQ(full.size(), 7u);
  EXPECT_EQ(pseudo_det(dirac_operator(full)), Scalar(-27));
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto c = clique_complex(cycle_graph(n));
    EXPECT_EQ(skeleton(c, 1).size(), c.size());
  }
}

TEST(Skeleton, Truncates) {
  const auto c = clique_complex(complete_graph(4));
  EXPECT_EQ(skeleton(c, 0).size(), 4u);
  EXPECT_EQ(skeleton(c, 1).size(), 10u);
  EXPECT_EQ(skeleton(c, 1).levels(), 2u);
  EXPECT_EQ(skeleton(c, 9).size(), c.size());
  EXPECT_EQ(betti_numbers(skeleton(c, 1)).by_degree, (std::vector<std::size_t>{1, 3}));
}

TEST(Dirac, SmallExamples) {
  const auto k2 = dirac_operator(clique_complex(complete_graph(2)));
  EXPECT_EQ(k2, (ExactMatrix{{0, 0, -1}, {0, 0, 1}, {-1, 1, 0}}));
  EXPECT_EQ(pseudo_det(k2), Scalar(-2));
  EXPECT_EQ(pseudo_det(dirac_operator(clique_complex(complete_graph(3)))), Scalar(-27));
  const auto c4 = dirac_operator(clique_complex(cycle_graph(4)));
  EXPECT_EQ(c4.rows(), 8u);
  EXPECT_EQ(pseudo_det(c4), Scalar(-16));
  EXPECT_EQ(pseudo_det(mat_mul(c4, c4)), Scalar(256));
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_numbers(clique_complex(complete_graph(3))).by_degree,
            (std::vector<std::size_t>{1, 0, 0}));
  const auto c4 = betti_numbers(clique_complex(cycle_graph(4)));
  EXPECT_EQ(c4.by_degree, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(c4.harmonic_dimension, 2u);
  EXPECT_EQ(betti_numbers(clique_complex(two_edges())).by_degree[0], 2u);
}

TEST(Betti, GraphsWithoutTrianglesFollowCycleRank) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto g = cycle_graph(n);
    const auto b = betti_numbers(clique_complex(g));
    ASSERT_EQ(b.by_degree.size(), 2u);
    EXPECT_EQ(b.by_degree[0], component_count(g));
    EXPECT_EQ(b.by_degree[1], g.edge_count() - n + component_count(g));
  }
}

TEST(Euler, Examples) {
  const auto c4 = euler_characteristic_check(clique_complex(cycle_graph(4)));
  EXPECT_EQ(c4.from_betti, 0);
  EXPECT_EQ(c4.from_simplices, 0);
  const auto k3 = euler_characteristic_check(clique_complex(complete_graph(3)));
  EXPECT_EQ(k3.from_betti, 1);
  EXPECT_EQ(k3.from_simplices, 1);
  const auto two = euler_characteristic_check(clique_complex(two_edges()));
  EXPECT_EQ(two.from_betti, 2);
  EXPECT_EQ(two.from_simplices, 2);
}

TEST(HodgeEuler, Corpus) {
  for (const auto& [name, g] : corpus::connected_corpus()) {
    const auto c = clique_complex(g);
    const auto b = betti_numbers(c);
    std::size_t sum = 0;
    for (auto x : b.by_degree) sum += x;
    EXPECT_EQ(sum, b.harmonic_dimension) << name;
    const auto e = euler_characteristic_check(c);
    EXPECT_EQ(e.from_betti, e.from_simplices) << name;
    EXPECT_EQ(b.by_degree[0], 1u) << name;
    if (c.size() <= 40) {
      const auto det = pseudo_det(dirac_operator(c));
      EXPECT_TRUE(is_integer(det / Scalar(static_cast<long>(g.vertex_count())))) << name;
    }
  }
}

TEST(SimplexGraph, Examples) {
  const auto k2 = simplex_graph(complete_graph(2));
  EXPECT_EQ(k2, Graph(3, {{0, 2}, {1, 2}}));
  const auto k3 = simplex_graph(complete_graph(3));
  EXPECT_EQ(k3.vertex_count(), 7u);
  EXPECT_EQ(k3.edge_count(), 9u);
  for (std::size_t e = 3; e < 6; ++e) EXPECT_TRUE(k3.has_edge(e, 6));
  for (std::size_t v = 0; v < 3; ++v) EXPECT_FALSE(k3.has_edge(v, 6));
  EXPECT_EQ(simplex_graph(Graph(5, {})).edge_count(), 0u);
}

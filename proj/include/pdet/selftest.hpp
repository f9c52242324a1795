#ifndef PDET_SELFTEST_HPP
#define PDET_SELFTEST_HPP

#include <pdet/charpoly.hpp>
#include <pdet/complex.hpp>
#include <pdet/exact.hpp>
#include <pdet/graph.hpp>
#include <pdet/minors.hpp>
#include <pdet/numeric.hpp>
#include <pdet/random.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pdet {

enum class Verdict { pass, fail, skipped_budget };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_budget: return "skipped-budget";
  }
  return "fail";
}

struct PropertyOutcome {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::size_t instances = 0;
  std::string detail;  // first counterexample, empty on pass
};

/// A property check draws `instances` random cases and returns a
/// description of the first failure, if any.
struct Property {
  std::string name;
  std::function<std::optional<std::string>(Rng&, std::size_t)> check;
};

namespace selftest_detail {

inline std::size_t draw_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(uniform_int(rng, static_cast<long>(lo), static_cast<long>(hi)));
}

inline std::string mismatch(const std::string& what, const Scalar& lhs, const Scalar& rhs) {
  return what + ": " + to_string(lhs) + " != " + to_string(rhs);
}

}  // namespace selftest_detail

/// The property suite behind `selftest`, covering every module.
inline std::vector<Property> property_suite() {
  using namespace selftest_detail;
  std::vector<Property> props;

  props.push_back({"exact.penrose_conditions", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const auto a = random_low_rank_matrix(rng, draw_size(rng, 1, 8), draw_size(rng, 0, 4));
      const auto x = pseudo_inverse(a);
      const auto ax = mat_mul(a, x), xa = mat_mul(x, a);
      if (mat_mul(ax, a) != a || mat_mul(xa, x) != x || transpose(ax) != ax ||
          transpose(xa) != xa)
        return "Penrose conditions fail for\n" + std::to_string(a.rows()) + "x" +
               std::to_string(a.cols()) + " input";
    }
    return std::nullopt;
  }});

  props.push_back({"exact.rank_factorization", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const auto a = random_integer_matrix(rng, draw_size(rng, 0, 6), draw_size(rng, 0, 6), -2, 2);
      const auto f = rank_factorization(a);
      if (mat_mul(f.left, f.right) != a) return std::string("left * right != input");
      if (f.rank != rank(transpose(a))) return std::string("rank(a) != rank(aᵀ)");
    }
    return std::nullopt;
  }});

  props.push_back({"pseudodet.invertible_equals_det", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const auto a = random_invertible_matrix(rng, draw_size(rng, 1, 7));
      if (pseudo_det(a) != determinant(a))
        return mismatch("Det vs det", pseudo_det(a), determinant(a));
    }
    return std::nullopt;
  }});

  props.push_back({"pseudodet.transpose_power_blocks", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t n = draw_size(rng, 1, 6);
      const auto a = i % 3 == 0 ? random_nilpotent_matrix(rng, n)
                                : random_low_rank_matrix(rng, n, draw_size(rng, 0, n));
      const Scalar d = pseudo_det(a);
      if (d == 0) return std::string("Det returned 0");
      if (pseudo_det(transpose(a)) != d) return mismatch("Det(aᵀ)", pseudo_det(transpose(a)), d);
      for (unsigned m = 1; m <= 3; ++m) {
        Scalar expected(1);
        for (unsigned j = 0; j < m; ++j) expected *= d;
        if (pseudo_det(power(a, m)) != expected)
          return mismatch("Det(a^" + std::to_string(m) + ")", pseudo_det(power(a, m)), expected);
      }
      const auto b = random_nilpotent_matrix(rng, draw_size(rng, 1, 3));
      if (pseudo_det(block_diag(a, b)) != d * pseudo_det(b))
        return mismatch("Det(diag(a, b))", pseudo_det(block_diag(a, b)), d * pseudo_det(b));
    }
    return std::nullopt;
  }});

  props.push_back({"pseudodet.similarity_and_duality", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t n = draw_size(rng, 1, 6);
      const auto a = random_low_rank_matrix(rng, n, draw_size(rng, 0, n));
      const auto s = random_invertible_matrix(rng, n);
      const auto conj = mat_mul(mat_mul(s, a), inverse(s));
      if (pseudo_det(conj) != pseudo_det(a))
        return mismatch("Det(S a S⁻¹)", pseudo_det(conj), pseudo_det(a));
      const auto f = random_integer_matrix(rng, draw_size(rng, 1, 5), n, -3, 3);
      const auto g = random_integer_matrix(rng, f.rows(), n, -3, 3);
      const Scalar lhs = pseudo_det(mat_mul(transpose(f), g));
      const Scalar rhs = pseudo_det(mat_mul(f, transpose(g)));
      if (lhs != rhs) return mismatch("Det(fᵀg) vs Det(fgᵀ)", lhs, rhs);
    }
    return std::nullopt;
  }});

  props.push_back({"pseudodet.normal_pseudo_inverse", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const auto a = random_normal_matrix(rng, draw_size(rng, 1, 7));
      const Scalar lhs = pseudo_det(pseudo_inverse(a));
      const Scalar rhs = Scalar(1) / pseudo_det(a);
      if (lhs != rhs) return mismatch("Det(a⁺) vs 1/Det(a)", lhs, rhs);
    }
    return std::nullopt;
  }});

  props.push_back({"minors.generalized_cauchy_binet", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const auto f = random_integer_matrix(rng, draw_size(rng, 1, 6), draw_size(rng, 1, 8));
      const auto g = random_integer_matrix(rng, f.rows(), f.cols());
      const auto cp = char_poly(mat_mul(transpose(f), g));
      const auto sums = cauchy_binet_coeffs(f, g);
      for (std::size_t k = 0; k <= f.cols(); ++k) {
        const Scalar rhs = k < sums.coeffs.size() ? sums.coeffs[k] : Scalar(0);
        if (elementary_coefficient(cp, k) != rhs)
          return mismatch("p_" + std::to_string(k), elementary_coefficient(cp, k), rhs);
      }
      if (pseudo_det_via_minors(f, g) != pseudo_det(mat_mul(transpose(f), g)))
        return std::string("Det via minors disagrees");
    }
    return std::nullopt;
  }});

  props.push_back({"minors.compound_multiplication", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const auto f = random_integer_matrix(rng, draw_size(rng, 1, 5), draw_size(rng, 1, 5));
      const auto g = random_integer_matrix(rng, f.cols(), draw_size(rng, 1, 5));
      for (std::size_t k = 0; k <= 3; ++k)
        if (exterior_power(mat_mul(f, g), k) !=
            mat_mul(exterior_power(f, k), exterior_power(g, k)))
          return "Λ^" + std::to_string(k) + "(fg) != Λ^k f Λ^k g";
    }
    return std::nullopt;
  }});

  props.push_back({"minors.trace_and_append", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t side = draw_size(rng, 1, 6);
      const auto sq = random_integer_matrix(rng, side, side);
      const auto cp = char_poly(sq);
      for (std::size_t k = 0; k <= sq.rows(); ++k)
        if (diag_minor_trace(sq, k) != elementary_coefficient(cp, k))
          return mismatch("tr Λ^" + std::to_string(k), diag_minor_trace(sq, k),
                          elementary_coefficient(cp, k));

      const std::size_t m = draw_size(rng, 1, 3);
      const std::size_t n = m + draw_size(rng, 0, 2);
      ExactMatrix f, g;
      do {
        f = random_integer_matrix(rng, n, m, -3, 3);
        g = random_integer_matrix(rng, n, m, -3, 3);
      } while (determinant(mat_mul(transpose(f), g)) == 0);
      const long lambda = uniform_int(rng, -3, 3), mu = uniform_int(rng, -3, 3);
      if (1 + lambda * mu == 0) continue;
      const auto [at, bt] =
          append_parallel_rows(transpose(f), transpose(g), draw_size(rng, 0, m - 1),
                               Scalar(lambda), Scalar(mu));
      const Scalar before = pseudo_det(mat_mul(transpose(f), g));
      const Scalar after = pseudo_det(mat_mul(at, transpose(bt)));
      if (after != Scalar(1 + lambda * mu) * before)
        return mismatch("appended-row Det", after, Scalar(1 + lambda * mu) * before);
    }
    return std::nullopt;
  }});

  props.push_back({"graphs.tree_and_forest_oracles", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      Graph g;
      do {
        g = erdos_renyi(draw_size(rng, 2, 7), 0.5, rng);
      } while (!is_connected(g) || g.edge_count() > 16);
      if (spanning_tree_count(g) != Scalar(brute_force_tree_count(g)))
        return "tree count mismatch on\n" + format_graph(g);
      if (rooted_forest_count(g) != Scalar(brute_force_rooted_forest_count(g)))
        return "forest count mismatch on\n" + format_graph(g);
    }
    return std::nullopt;
  }});

  props.push_back({"graphs.hodge_and_euler", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const auto g = erdos_renyi(draw_size(rng, 1, 7), 0.5, rng);
      const auto c = clique_complex(g);
      const auto betti = betti_numbers(c);
      std::size_t total = 0;
      for (auto b : betti.by_degree) total += b;
      if (total != betti.harmonic_dimension) return "Σ b_k != dim ker D² on\n" + format_graph(g);
      const auto euler = euler_characteristic_check(c);
      if (euler.from_betti != euler.from_simplices)
        return "Euler-Poincaré fails on\n" + format_graph(g);
      if (is_connected(g)) {
        const Scalar det_d = pseudo_det(dirac_operator(c));
        if (!is_integer(det_d / Scalar(g.vertex_count())))
          return "|V| does not divide Det(D) on\n" + format_graph(g);
      }
    }
    return std::nullopt;
  }});

  props.push_back({"numeric.pfaffian_and_spectra", [](Rng& rng, std::size_t count)
                       -> std::optional<std::string> {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t n = draw_size(rng, 1, 8);
      auto skew = random_skew_matrix(rng, n);
      if (i % 2 == 1) {  // lower the rank
        const auto b = random_integer_matrix(rng, draw_size(rng, 1, n), n, -2, 2);
        skew = mat_mul(mat_mul(transpose(b), random_skew_matrix(rng, b.rows(), -2, 2)), b);
      }
      const double pf = pseudo_pfaffian_abs(skew);
      const double det = to_double(pseudo_det(skew));
      if (std::abs(pf * pf - det) > 1e-8 * det) return std::string("Pf² != Det");

      const auto sym = random_symmetric_matrix(rng, n);
      const auto spectrum = symmetric_eigenvalues(sym);
      const double norm = frobenius_norm(to_double_matrix(sym));
      if (numeric_nonzero_count(spectrum, norm) != spectral_count(sym))
        return std::string("numeric nonzero count != spectral count");
      double sum = 0;
      for (double x : spectrum.eigenvalues) sum += x;
      const double tr = to_double(trace(sym));
      if (std::abs(sum - tr) > 1e-9 * std::max(1.0, norm))
        return std::string("Σλ != trace");
    }
    return std::nullopt;
  }});

  return props;
}

/// Runs every property with `instances` random cases each. Zero instances
/// marks every property skipped.
inline std::vector<PropertyOutcome> run_selftest(std::uint64_t seed, std::size_t instances) {
  std::vector<PropertyOutcome> outcomes;
  for (const auto& prop : property_suite()) {
    PropertyOutcome out{prop.name, Verdict::pass, instances, {}};
    if (instances == 0) {
      out.verdict = Verdict::skipped_budget;
    } else {
      // Each property gets its own stream so adding one does not perturb others.
      Rng rng(seed ^ std::hash<std::string>{}(prop.name));
      try {
        if (auto failure = prop.check(rng, instances)) {
          out.verdict = Verdict::fail;
          out.detail = *failure;
        }
      } catch (const BudgetExceeded& e) {
        out.verdict = Verdict::skipped_budget;
        out.detail = e.what();
      } catch (const std::exception& e) {
        out.verdict = Verdict::fail;
        out.detail = e.what();
      }
    }
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

}  // namespace pdet

#endif  // PDET_SELFTEST_HPP

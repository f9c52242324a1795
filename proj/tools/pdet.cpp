#include "report.hpp"

#include <pdet/pdet.hpp>
#include <pdet/selftest.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace pdet;
using namespace pdet::cli;

struct Common {
  std::uint64_t budget = kDefaultPatternBudget;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool no_timing = false;
};

void add_common(CLI::App* sub, Common& c, bool with_budget = true) {
  if (with_budget)
    sub->add_option("--budget", c.budget, "Cap on minor pattern pairs")->capture_default_str();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_flag("--no-timing", c.no_timing, "Report duration_ms as 0");
}

ExactMatrix load_matrix(ResultReport& report, const std::string& path) {
  const auto text = read_file(path);
  record_input(report, path, text);
  return parse_matrix(text);
}

Graph load_graph(ResultReport& report, const std::string& path) {
  const auto text = read_file(path);
  record_input(report, path, text);
  return parse_graph(text);
}

void run_pdet(ResultReport& r, const std::string& path, bool full) {
  const auto a = load_matrix(r, path);
  detail::require_square(a, "pdet");
  const auto p = char_poly(a);
  r.results["char_poly"] = polynomial_json(p);
  r.results["pseudo_det"] = scalar_json(pseudo_det_from_char_poly(p));
  if (!full) return;
  r.results["spectral_count"] = a.rows() - lowest_nonzero_index(p);
  r.results["rank"] = rank(a);
}

void run_cauchy_binet(ResultReport& r, const ExactMatrix& f, const ExactMatrix& g,
                      std::uint64_t budget) {
  detail::require_same_shape(f, g, "cauchy-binet");
  const auto ftg = mat_mul(transpose(f), g);
  const auto p = char_poly(ftg);
  const std::size_t top = f.cols();
  const auto det_ftg = pseudo_det_from_char_poly(p);
  const std::size_t k = f.cols() - lowest_nonzero_index(p);
  r.results["shape"] = shape_string(f.rows(), f.cols());

  Json table = Json::array();
  bool skipped = false;
  for (std::size_t j = 0; j <= top; ++j) {
    const auto lhs = elementary_coefficient(p, j);
    Json row{{"k", j}, {"char_poly_coefficient", to_string(lhs)}};
    try {
      const auto rhs = minor_pair_sum(f, g, j, budget);
      row["minor_pair_sum"] = to_string(rhs);
      r.add_verdict("coefficient k=" + std::to_string(j), lhs == rhs, to_string(lhs),
                    to_string(rhs));
    } catch (const BudgetExceeded& e) {
      row["minor_pair_sum"] = nullptr;
      r.add_skipped("coefficient k=" + std::to_string(j), e.what());
      skipped = true;
    }
    table.push_back(std::move(row));
  }
  r.results["coefficients"] = std::move(table);

  r.results["pseudo_det"] = scalar_json(det_ftg);
  r.results["spectral_count"] = k;
  if (skipped && pattern_count(f.rows(), f.cols(), k) > budget) {
    r.add_skipped("pseudo_det via minors", "pattern budget exceeded at k=" + std::to_string(k));
  } else {
    const auto via = minor_pair_sum(f, g, k, budget);
    r.add_verdict("pseudo_det via minors (k=" + std::to_string(k) + ")", det_ftg == via,
                  to_string(det_ftg), to_string(via));
  }
  const auto dual = pseudo_det(mat_mul(f, transpose(g)));
  r.add_verdict("duality Det(FtG) = Det(FGt)", det_ftg == dual, to_string(det_ftg),
                to_string(dual));
}

ExactMatrix random_shape(Rng& rng, const std::string& spec) {
  const auto x = spec.find('x');
  if (x == std::string::npos) throw ParseError("expected RxC, got '" + spec + "'");
  try {
    const auto rows = std::stoul(spec.substr(0, x));
    const auto cols = std::stoul(spec.substr(x + 1));
    return random_integer_matrix(rng, rows, cols);
  } catch (const std::logic_error&) {
    throw ParseError("expected RxC, got '" + spec + "'");
  }
}

void run_graph(ResultReport& r, const std::string& path, const std::string& analysis) {
  const auto g = load_graph(r, path);
  r.results["vertices"] = g.vertex_count();
  r.results["edges"] = g.edges().size();
  const bool oracle = g.edges().size() <= 16;

  if (analysis == "trees") {
    const auto count = spanning_tree_count(g);
    r.results["spanning_trees"] = scalar_json(count);
    if (oracle) {
      const Scalar brute(brute_force_tree_count(g));
      r.add_verdict("Det(L)/|V| = enumerated trees", count == brute, to_string(count),
                    to_string(brute));
    } else {
      r.add_skipped("Det(L)/|V| = enumerated trees", "more than 16 edges");
    }
    return;
  }
  if (analysis == "forests") {
    const auto count = rooted_forest_count(g);
    r.results["rooted_forests"] = scalar_json(count);
    if (oracle) {
      const Scalar brute(brute_force_rooted_forest_count(g));
      r.add_verdict("det(1+L) = enumerated rooted forests", count == brute, to_string(count),
                    to_string(brute));
    } else {
      r.add_skipped("det(1+L) = enumerated rooted forests", "more than 16 edges");
    }
    return;
  }
  if (analysis == "simplexgraph") {
    const auto sg = simplex_graph(g);
    r.results["simplex_graph_vertices"] = sg.vertex_count();
    r.results["simplex_graph_edges"] = sg.edges().size();
    Json edges = Json::array();
    for (const auto& e : sg.edges()) edges.push_back(Json::array({e.first, e.second}));
    r.results["simplex_graph_edge_list"] = std::move(edges);
    return;
  }

  const auto c = clique_complex(g);
  Json counts = Json::array();
  for (std::size_t d = 0; d < c.levels(); ++d) counts.push_back(c.count(d));
  r.results["simplex_counts"] = std::move(counts);
  const auto betti = betti_numbers(c);
  r.results["betti"] = betti.by_degree;
  r.results["harmonic_dimension"] = betti.harmonic_dimension;
  std::size_t sum = 0;
  for (auto b : betti.by_degree) sum += b;
  r.add_verdict("sum of Betti numbers = dim ker D^2", sum == betti.harmonic_dimension,
                std::to_string(sum), std::to_string(betti.harmonic_dimension));
  const auto euler = euler_characteristic_check(c);
  r.add_verdict("Euler characteristic", euler.from_betti == euler.from_simplices,
                std::to_string(euler.from_betti), std::to_string(euler.from_simplices));
  if (analysis == "betti") return;

  const auto d = dirac_operator(c);
  const auto det_d = pseudo_det(d);
  const auto det_d2 = pseudo_det(mat_mul(d, d));
  r.results["dirac_size"] = d.rows();
  r.results["pseudo_det_dirac"] = scalar_json(det_d);
  r.results["pseudo_det_dirac_squared"] = scalar_json(det_d2);
  r.add_verdict("Det(D)^2 = Det(D^2)", det_d * det_d == det_d2, to_string(det_d * det_d),
                to_string(det_d2));
  if (is_connected(g) && g.vertex_count() > 0) {
    const Scalar q = det_d / Scalar(g.vertex_count());
    r.add_verdict("|V| divides Det(D)", is_integer(q), to_string(det_d),
                  std::to_string(g.vertex_count()) + " * " + to_string(q));
  }
}

void run_selftest(ResultReport& r, std::uint64_t seed, std::size_t instances) {
  r.results["seed"] = seed;
  r.results["instances_per_property"] = instances;
  for (const auto& out : pdet::run_selftest(seed, instances)) {
    std::string note = std::to_string(out.instances) + " instances";
    if (!out.detail.empty()) note += ": " + out.detail;
    r.verdicts.push_back({out.name, out.verdict, "", "", note});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pseudo-determinants, Cauchy-Binet checks and graph invariants"};
  app.require_subcommand(1);

  Common common;
  std::string path, path_g, random_spec, analysis = "trees";
  std::size_t power = 1;
  std::size_t instances = 25;

  auto* pdet_cmd = app.add_subcommand("pdet", "Characteristic polynomial, Det, k and rank");
  pdet_cmd->add_option("matrix", path, "Square matrix file")->required();
  add_common(pdet_cmd, common);

  auto* cp_cmd = app.add_subcommand("charpoly", "Characteristic polynomial and Det");
  cp_cmd->add_option("matrix", path, "Square matrix file")->required();
  add_common(cp_cmd, common);

  auto* cb_cmd = app.add_subcommand("cauchy-binet", "Verify det(1+zFtG) coefficient by coefficient");
  cb_cmd->add_option("F", path, "Matrix file F");
  cb_cmd->add_option("G", path_g, "Matrix file G");
  cb_cmd->add_option("--random", random_spec, "Random integer pair of shape RxC instead of files");
  cb_cmd->add_option("--seed", common.seed, "Seed for --random")->capture_default_str();
  add_common(cb_cmd, common);

  auto* ext_cmd = app.add_subcommand("exterior", "k-th compound matrix");
  ext_cmd->add_option("matrix", path, "Matrix file")->required();
  ext_cmd->add_option("--k", power, "Order of the minors")->capture_default_str();
  add_common(ext_cmd, common);

  auto* graph_cmd = app.add_subcommand("graph", "Graph invariants with oracle checks");
  graph_cmd->add_option("edges", path, "Edge-list file")->required();
  graph_cmd->add_option("--analysis", analysis, "Analysis to run")
      ->check(CLI::IsMember({"trees", "forests", "betti", "dirac", "simplexgraph"}))
      ->capture_default_str();
  add_common(graph_cmd, common, false);

  auto* self_cmd = app.add_subcommand("selftest", "Run the randomized property suite");
  self_cmd->add_option("--seed", common.seed, "Seed")->capture_default_str();
  self_cmd->add_option("--budget", instances, "Random instances per property")
      ->capture_default_str();
  add_common(self_cmd, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  ResultReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*pdet_cmd) {
      report.command = "pdet";
      run_pdet(report, path, true);
    } else if (*cp_cmd) {
      report.command = "charpoly";
      run_pdet(report, path, false);
    } else if (*cb_cmd) {
      report.command = "cauchy-binet";
      ExactMatrix f, g;
      if (!random_spec.empty()) {
        Rng rng(common.seed);
        f = random_shape(rng, random_spec);
        g = random_shape(rng, random_spec);
        const std::string tag = "random:" + random_spec + ":seed=" + std::to_string(common.seed);
        record_input(report, tag + ":F", format_matrix(f));
        record_input(report, tag + ":G", format_matrix(g));
      } else {
        if (path.empty() || path_g.empty())
          throw std::invalid_argument("cauchy-binet needs two matrix files or --random RxC");
        f = load_matrix(report, path);
        g = load_matrix(report, path_g);
      }
      run_cauchy_binet(report, f, g, common.budget);
    } else if (*ext_cmd) {
      report.command = "exterior";
      const auto f = load_matrix(report, path);
      report.results["k"] = power;
      report.results["compound"] = matrix_json(exterior_power(f, power, common.budget));
    } else if (*graph_cmd) {
      report.command = "graph " + analysis;
      try {
        run_graph(report, path, analysis);
      } catch (const BudgetExceeded& e) {
        report.add_skipped(analysis, e.what());
      }
    } else if (*self_cmd) {
      report.command = "selftest";
      run_selftest(report, common.seed, instances);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (!common.no_timing)
    report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  if (common.format == "json")
    std::cout << report.to_json().dump(2) << '\n';
  else
    std::cout << report.to_text();
  return report.any_failure() ? 1 : 0;
}

#include "aeq/constructions.hpp"
#include "aeq/core.hpp"
#include "aeq/graph.hpp"
#include "aeq/io.hpp"
#include "aeq/search.hpp"
#include "aeq/spectral.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

aeq::Tolerance tolerance_from_env(double unit_eps) {
  aeq::Tolerance tol;
  tol.unit_eps = unit_eps;
  if (const char* s = std::getenv("AEQ_EIG_EPS")) tol.eig_eps = std::atof(s);
  if (const char* s = std::getenv("AEQ_ZERO_EPS")) tol.zero_eps = std::atof(s);
  tol.validate();
  return tol;
}

std::string format_witness(const aeq::TripleWitness& w) {
  return "(" + std::to_string(w.indices[0] + 1) + "," +
         std::to_string(w.indices[1] + 1) + "," +
         std::to_string(w.indices[2] + 1) + ")";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text << "\n";
  if (!out) throw std::invalid_argument("write failed: " + path);
}

int run(int argc, char** argv) {
  CLI::App app{"Almost-equidistant point set toolkit"};
  app.require_subcommand(1);

  // verify
  std::string verify_file;
  double verify_tol = 1e-9;
  auto* verify = app.add_subcommand("verify",
                                    "Check the almost-equidistant property");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--tol", verify_tol, "unit-distance tolerance");

  // certify
  std::string certify_file;
  double certify_tol = 1e-9;
  bool certify_json = false;
  auto* certify = app.add_subcommand("certify", "Run the full certificate suite");
  certify->add_option("file", certify_file)->required();
  certify->add_option("--tol", certify_tol, "unit-distance tolerance");
  certify->add_flag("--json", certify_json, "emit the report as JSON");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit a built-in point set");
  construct->require_subcommand(1);
  std::string construct_out;
  auto* moser = construct->add_subcommand("moser", "Moser spindle (7 points, R^2)");
  moser->add_option("-o,--output", construct_out)->required();
  int simplex_d = 2, simplex_m = 2;
  auto* simplex =
      construct->add_subcommand("simplex", "Regular unit simplex, centered");
  simplex->add_option("--d", simplex_d, "ambient dimension")->required();
  simplex->add_option("--m", simplex_m, "simplex order")->required();
  simplex->add_option("-o,--output", construct_out)->required();
  int two_d = 2;
  std::uint64_t two_seed = 0;
  auto* two = construct->add_subcommand(
      "two-simplex", "Two scaled unit-sphere simplices (2d+2 points)");
  two->add_option("--d", two_d, "ambient dimension")->required();
  two->add_option("--seed", two_seed, "rotation seed");
  two->add_option("-o,--output", construct_out)->required();

  // search
  aeq::SearchConfig cfg;
  double budget_sec = 0.0;
  std::string search_out;
  auto* search_cmd =
      app.add_subcommand("search", "Look for large almost-equidistant sets");
  search_cmd->add_option("--d", cfg.d, "ambient dimension")->required();
  search_cmd->add_option("--target", cfg.target_n, "target cardinality")
      ->required();
  search_cmd->add_option("--seed", cfg.seed);
  search_cmd->add_option("--restarts", cfg.restarts);
  search_cmd->add_option("--max-iter", cfg.max_iters);
  search_cmd->add_option("--budget-sec", budget_sec);
  search_cmd->add_option("-o,--output", search_out)->required();

  // bounds
  int bounds_d = 2;
  auto* bounds = app.add_subcommand("bounds", "Closed-form cardinality bounds");
  bounds->add_option("--d", bounds_d, "dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (*verify) {
    const aeq::PointSet ps = aeq::load_point_set(verify_file);
    const auto verdict =
        aeq::is_almost_equidistant(ps, tolerance_from_env(verify_tol));
    if (verdict.holds) {
      std::cout << "almost-equidistant: yes (n=" << ps.size()
                << ", d=" << ps.dim() << ")\n";
      return 0;
    }
    std::cout << "almost-equidistant: no, witness "
              << format_witness(*verdict.witness) << "\n";
    return 1;
  }

  if (*certify) {
    const aeq::PointSet ps = aeq::load_point_set(certify_file);
    const auto report =
        aeq::full_certificate(ps, tolerance_from_env(certify_tol));
    if (certify_json) {
      std::cout << aeq::certificate_report_to_json(report) << "\n";
    } else {
      std::cout << "n=" << report.n << " d=" << report.d
                << " positive_count_V=" << report.positive_count_V
                << " above_one_count_U=" << report.above_one_count_U
                << " equal_one_count_U=" << report.equal_one_count_U
                << " rank_W=" << report.rank_W << "\n";
      for (const auto& c : report.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                  << " margin=" << c.margin << "\n";
      }
    }
    return report.all_pass() ? 0 : 1;
  }

  if (*construct) {
    aeq::PointSet ps = [&] {
      if (*moser) return aeq::moser_spindle();
      if (*simplex) return aeq::regular_unit_simplex(simplex_m, simplex_d);
      return aeq::two_simplex_union(two_d, two_seed);
    }();
    aeq::save_point_set(ps, construct_out);
    return 0;
  }

  if (*search_cmd) {
    if (budget_sec > 0) cfg.budget_seconds = budget_sec;
    const aeq::SearchResult result = aeq::search(cfg);
    write_output(aeq::search_result_to_json(result), search_out);
    return (result.verified && result.n_achieved >= cfg.target_n) ? 0 : 1;
  }

  if (*bounds) {
    aeq::BoundReport report;
    report.d = bounds_d;
    report.theorem_bound = aeq::bound_theorem(bounds_d);
    report.ramsey_bound = aeq::bound_ramsey(bounds_d);
    std::cout << aeq::bound_report_to_json(report) << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

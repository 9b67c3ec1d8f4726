#include "aeq/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace aeq {

using nlohmann::json;

namespace {

json point_set_json(const PointSet& ps) {
  json points = json::array();
  for (int i = 0; i < ps.size(); ++i) {
    json row = json::array();
    for (int c = 0; c < ps.dim(); ++c) row.push_back(ps.coords()(i, c));
    points.push_back(std::move(row));
  }
  return json{{"dim", ps.dim()}, {"points", std::move(points)}};
}

json certificate_json(const CertificateReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"margin", c.margin}});
  }
  return json{{"n", report.n},
              {"d", report.d},
              {"positive_count_V", report.positive_count_V},
              {"above_one_count_U", report.above_one_count_U},
              {"equal_one_count_U", report.equal_one_count_U},
              {"trace_U", report.trace_U},
              {"trace_U_cubed", report.trace_U_cubed},
              {"rank_W", report.rank_W},
              {"lambda_max_U", report.lambda_max_U},
              {"checks", std::move(checks)}};
}

}  // namespace

std::string point_set_to_json(const PointSet& ps) {
  return point_set_json(ps).dump(2);
}

PointSet point_set_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("PointSet JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("points") ||
      !j["dim"].is_number_integer() || !j["points"].is_array()) {
    throw std::invalid_argument(
        "PointSet JSON: expected {\"dim\": int, \"points\": [[...], ...]}");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw std::invalid_argument("PointSet JSON: dim must be >= 1");
  const auto& rows = j["points"];
  if (rows.empty()) {
    throw std::invalid_argument("PointSet JSON: need at least one point");
  }
  Eigen::MatrixXd coords(rows.size(), dim);
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw std::invalid_argument("PointSet JSON: ragged row at index " +
                                  std::to_string(i));
    }
    for (int c = 0; c < dim; ++c) {
      if (!row[c].is_number()) {
        throw std::invalid_argument(
            "PointSet JSON: non-numeric coordinate at row " +
            std::to_string(i));
      }
      const double value = row[c].get<double>();
      if (!std::isfinite(value)) {
        throw std::invalid_argument(
            "PointSet JSON: non-finite coordinate at row " + std::to_string(i));
      }
      coords(static_cast<Eigen::Index>(i), c) = value;
    }
  }
  return PointSet(dim, std::move(coords));
}

PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return point_set_from_json(buffer.str());
}

void save_point_set(const PointSet& ps, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << point_set_to_json(ps) << "\n";
  if (!out) throw std::invalid_argument("write failed: " + path);
}

std::string certificate_report_to_json(const CertificateReport& report) {
  return certificate_json(report).dump(2);
}

std::string bound_report_to_json(const BoundReport& report) {
  json j{{"d", report.d},
         {"theorem_bound", report.theorem_bound},
         {"ramsey_bound", report.ramsey_bound}};
  if (report.observed_n) {
    j["observed_n"] = *report.observed_n;
  } else {
    j["observed_n"] = nullptr;
  }
  return j.dump(2);
}

std::string search_result_to_json(const SearchResult& result) {
  json trace = json::array();
  for (const auto& t : result.trace) {
    trace.push_back({{"restart", t.restart_index},
                     {"seed", t.seed},
                     {"iterations", t.iterations},
                     {"n", t.n},
                     {"final_penalty", t.final_penalty}});
  }
  json j{{"best", point_set_json(result.best)},
         {"n_achieved", result.n_achieved},
         {"penalty", result.penalty},
         {"verified", result.verified},
         {"certificates", certificate_json(result.certificates)},
         {"trace", std::move(trace)}};
  return j.dump(2);
}

}  // namespace aeq

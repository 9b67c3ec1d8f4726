#pragma once

#include "aeq/graph.hpp"
#include "aeq/search.hpp"
#include "aeq/spectral.hpp"
#include "aeq/types.hpp"

#include <string>

namespace aeq {

/// { "dim": <int>, "points": [[<float>, ...], ...] } with round-trip floats.
std::string point_set_to_json(const PointSet& ps);

/// Parses the PointSet format; rejects ragged rows and non-finite values.
PointSet point_set_from_json(const std::string& text);

PointSet load_point_set(const std::string& path);
void save_point_set(const PointSet& ps, const std::string& path);

std::string certificate_report_to_json(const CertificateReport& report);
std::string bound_report_to_json(const BoundReport& report);
std::string search_result_to_json(const SearchResult& result);

}  // namespace aeq

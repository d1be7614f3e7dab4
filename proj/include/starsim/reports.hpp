#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "starsim/suzuki.hpp"

namespace starsim {

/// Structural report of the decomposition: per-forest and per-galaxy
/// statistics plus the full invariant battery; ["pass"] holds the verdict.
nlohmann::json decomposition_report(const SparseHermitian& h);

/// Decomposition checks plus norm identities plus (up to dim 4096) one short
/// accuracy run against the dense reference.
nlohmann::json verification_report(const SparseHermitian& h, double t, double eps, int k);

nlohmann::json report_to_json(const QueryReport& r);

struct BenchmarkPoint {
  std::string label;  // swept variable
  double value = 0.0;
  QueryReport report;
  double trace_distance = -1.0;  // -1: not measured (dry run)
};

/// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

nlohmann::json benchmark_to_json(const std::vector<BenchmarkPoint>& points);
std::string benchmark_to_csv(const std::vector<BenchmarkPoint>& points);

}  // namespace starsim

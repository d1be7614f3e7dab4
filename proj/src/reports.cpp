#include "starsim/reports.hpp"

#include <cmath>
#include <sstream>

#include "starsim/checks.hpp"
#include "starsim/dense_reference.hpp"

namespace starsim {

using nlohmann::json;

namespace {

json check_to_json(const CheckResult& r) {
  return json{{"pass", r.pass}, {"detail", r.detail}};
}

double json_safe(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

json decomposition_report(const SparseHermitian& h) {
  MatrixOracle oracle(h);
  const GalaxyDecomposition dec = GalaxyDecomposition::build(oracle);
  const int d = h.sparsity();

  json forests = json::array();
  for (int c = 1; c <= d; ++c) {
    const auto& parents = dec.parents(c);
    std::size_t edges = 0;
    for (const ParentEdge& pe : parents)
      if (pe.parent) ++edges;
    forests.push_back(json{{"c", c}, {"edges", edges}});
  }

  json galaxies = json::array();
  for (int c = 1; c <= d; ++c) {
    for (int t = 0; t < 6; ++t) {
      const auto& stars = dec.stars(TermId::galaxy(c, t));
      std::size_t edges = 0;
      for (const StarInfo& star : stars) edges += star.leaves.size();
      galaxies.push_back(
          json{{"c", c}, {"t", t}, {"stars", stars.size()}, {"edges", edges}});
    }
  }

  const CheckResult partition = check_partition_exact(h, dec);
  const CheckResult forests_ok = check_forests(h, oracle);
  const CheckResult coloring_ok = check_coloring(h, oracle);
  const CheckResult galaxies_ok = check_galaxies(dec);

  json out;
  out["n"] = h.dim();
  out["d"] = d;
  out["edge_count"] = h.edge_count();
  out["rounds"] = color_rounds(h.dim());
  out["unit_query_cost"] = unit_query_cost(h.dim(), d);
  out["forests"] = std::move(forests);
  out["galaxies"] = std::move(galaxies);
  out["checks"] = json{{"partition_exact", check_to_json(partition)},
                       {"forests", check_to_json(forests_ok)},
                       {"coloring", check_to_json(coloring_ok)},
                       {"galaxies", check_to_json(galaxies_ok)}};
  out["pass"] = partition.pass && forests_ok.pass && coloring_ok.pass && galaxies_ok.pass;
  return out;
}

json verification_report(const SparseHermitian& h, double t, double eps, int k) {
  json out = decomposition_report(h);
  MatrixOracle oracle(h);
  const GalaxyDecomposition dec = GalaxyDecomposition::build(oracle);
  const CheckResult norms_ok = check_norm_identities(h, dec);
  out["checks"]["norm_identities"] = check_to_json(norms_ok);
  bool pass = out["pass"].get<bool>() && norms_ok.pass;

  if (h.dim() <= 4096 && t > 0.0) {
    SimulationOptions opts;
    opts.t = t;
    opts.epsilon = eps;
    opts.k = k;
    const StateVector initial = random_state(h.dim(), 12345);
    const SimulationResult sim = simulate(h, initial, opts);
    const StateVector reference = apply_operator(dense_expm(h, t), initial);
    const ErrorMetrics err = compare_states(sim.state, reference);
    const bool within = err.trace_distance <= eps;
    out["accuracy"] = json{{"t", t},
                           {"epsilon", eps},
                           {"k", k},
                           {"r", sim.report.r},
                           {"trace_distance", err.trace_distance},
                           {"infidelity", err.infidelity},
                           {"norm_error", err.norm_error},
                           {"pass", within}};
    pass = pass && within;
  }
  out["pass"] = pass;
  return out;
}

json report_to_json(const QueryReport& r) {
  json norms_obj{{"spectral", json_safe(r.spectral)},
                 {"max_entry", r.max_entry},
                 {"max_column", r.max_column},
                 {"used", json_safe(r.norm_used)},
                 {"mode", r.norm_mode}};
  return json{{"n", r.n},
              {"d", r.d},
              {"m", r.m},
              {"k", r.k},
              {"t", r.t},
              {"epsilon", r.epsilon},
              {"norms", std::move(norms_obj)},
              {"r", r.r},
              {"n_exp", r.n_exp},
              {"n_exp_bound", r.n_exp_bound},
              {"unit_query_cost", r.unit_cost},
              {"circuit_cost", r.circuit_cost},
              {"classical_calls", r.classical_calls},
              {"bounds", json{{"star_decomposition", r.bound_star},
                              {"edge_decomposition", r.bound_edge}}},
              {"precondition_ok", r.precondition_ok},
              {"wall_seconds", r.wall_seconds}};
}

double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need matching samples, at least two");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0)
      throw std::invalid_argument("fit_loglog_slope: samples must be positive");
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_loglog_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

json benchmark_to_json(const std::vector<BenchmarkPoint>& points) {
  json rows = json::array();
  for (const BenchmarkPoint& p : points) {
    json row = report_to_json(p.report);
    row["sweep"] = p.label;
    row["value"] = p.value;
    if (p.trace_distance >= 0.0) row["trace_distance"] = p.trace_distance;
    rows.push_back(std::move(row));
  }
  json out{{"points", std::move(rows)}};
  if (points.size() >= 2) {
    std::vector<double> xs, cost, bound_star, bound_edge;
    bool positive = true;
    for (const BenchmarkPoint& p : points) {
      xs.push_back(p.value);
      cost.push_back(static_cast<double>(p.report.circuit_cost));
      bound_star.push_back(p.report.bound_star);
      bound_edge.push_back(p.report.bound_edge);
      positive = positive && p.value > 0 && p.report.circuit_cost > 0 &&
                 p.report.bound_star > 0 && p.report.bound_edge > 0;
    }
    if (positive) {
      out["fit"] = json{{"slope_circuit_cost", fit_loglog_slope(xs, cost)},
                        {"slope_bound_star", fit_loglog_slope(xs, bound_star)},
                        {"slope_bound_edge", fit_loglog_slope(xs, bound_edge)}};
    }
  }
  return out;
}

std::string benchmark_to_csv(const std::vector<BenchmarkPoint>& points) {
  std::ostringstream out;
  out << "sweep,value,n,d,k,epsilon,t,norm_used,m,r,n_exp,unit_query_cost,circuit_cost,"
         "classical_calls,bound_star,bound_edge,trace_distance,wall_seconds\n";
  out.precision(17);
  for (const BenchmarkPoint& p : points) {
    const QueryReport& r = p.report;
    out << p.label << ',' << p.value << ',' << r.n << ',' << r.d << ',' << r.k << ','
        << r.epsilon << ',' << r.t << ',' << json_safe(r.norm_used) << ',' << r.m << ',' << r.r
        << ',' << r.n_exp << ',' << r.unit_cost << ',' << r.circuit_cost << ','
        << r.classical_calls << ',' << r.bound_star << ',' << r.bound_edge << ',';
    if (p.trace_distance >= 0.0) out << p.trace_distance;
    out << ',' << r.wall_seconds << '\n';
  }
  return out.str();
}

}  // namespace starsim

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starsim/galaxy.hpp"

namespace starsim {

/// One exponential of the product formula: e^{-i H_term * duration}.
/// Durations are signed; orders k >= 2 use negative middle steps.
struct ExpInstruction {
  int term;  // flat index, see term_from_index
  double duration;
};

/// p_k = (4 - 4^{1/(2k-1)})^{-1}, the recursion coefficient of order 2k.
double suzuki_p(int k);

/// One order-k segment over m terms and segment time lambda: 2 m 5^{k-1}
/// instructions whose durations sum to lambda for every term. Order 1 is the
/// symmetric (forward then backward) half-step sweep; higher orders follow
/// the fractal recursion S_{k-1}(p λ)^2 S_{k-1}((1-4p) λ) S_{k-1}(p λ)^2.
std::vector<ExpInstruction> suzuki_segment(int k, int m, double lambda);

struct SegmentChoice {
  std::uint64_t r = 1;
  double n_exp_bound = 0.0;
  /// The a priori error bound is only a guarantee when eps <= 1 and
  /// 2 m 5^{k-1} * norm * t >= 1; outside that region r is still produced
  /// but flagged.
  bool precondition_ok = true;
};

/// Number of segments r from the a priori exponential-count bound
/// N_exp <= 5^{2k} m^2 (norm t) (m norm t / eps)^{1/2k}, divided by the
/// 2 m 5^{k-1} exponentials of one segment and clamped to at least 1.
SegmentChoice segment_count(int m, double norm_value, double t, double eps, int k);

struct QueryBounds {
  /// 5^{2k} d^2 (d + log* n) (norm t) (d norm t / eps)^{1/2k} — the scaling
  /// this decomposition achieves (unit constants).
  double star_decomposition = 0.0;
  /// 5^{2k} d^4 (log* n) (norm t) (d^2 norm t / eps)^{1/2k} — the scaling of
  /// the older edge-by-edge decomposition, for comparison.
  double edge_decomposition = 0.0;
};

QueryBounds predicted_query_bounds(int d, std::size_t n, double norm_t, double eps, int k);

enum class NormMode { Spectral, MaxColumn };

struct SimulationOptions {
  double t = 1.0;
  double epsilon = 1e-3;
  int k = 1;
  NormMode norm_mode = NormMode::Spectral;
  /// Override the a priori segment count (convergence studies, empirical
  /// mode). The error guarantee is void when set below the a priori r.
  std::optional<std::uint64_t> fixed_r;
  /// false: replay the schedule only for its query accounting, leaving the
  /// state untouched (benchmark dry runs).
  bool evolve = true;
};

struct QueryReport {
  std::size_t n = 0;
  int d = 0;
  int m = 0;  // 6d + 1 product-formula terms
  int k = 1;
  double t = 0.0;
  double epsilon = 0.0;
  std::string norm_mode;
  double norm_used = 0.0;
  double spectral = 0.0;  // NaN when not computed (large dim, max-column mode)
  double max_entry = 0.0;
  double max_column = 0.0;
  std::uint64_t r = 0;
  std::uint64_t n_exp = 0;  // exponentials actually applied
  double n_exp_bound = 0.0;
  std::uint64_t unit_cost = 0;  // queries of one star-identification template
  std::uint64_t circuit_cost = 0;
  std::uint64_t classical_calls = 0;
  double bound_star = 0.0;
  double bound_edge = 0.0;
  bool precondition_ok = true;
  double wall_seconds = 0.0;
};

struct SimulationResult {
  StateVector state;
  QueryReport report;
};

/// The full pipeline: validate, decompose through the black box, choose r
/// from the requested norm, replay the order-k product formula, and account
/// queries. t = 0 runs a single zero-duration segment (still charged).
SimulationResult simulate(const SparseHermitian& h, const StateVector& initial,
                          const SimulationOptions& opts);

/// Smallest segment count whose measured trace distance against `reference`
/// stays within eps/2, found by bisection below the a priori r. A
/// benchmarking aid, not a guarantee.
std::uint64_t empirical_segment_search(const SparseHermitian& h, const StateVector& initial,
                                       const SimulationOptions& opts,
                                       const StateVector& reference);

}  // namespace starsim

#include "doctest.h"

#include <cmath>
#include <map>

#include "starsim/suzuki.hpp"
#include "test_support.hpp"

using namespace starsim;
using namespace starsim::testing;

namespace {

// Independent per-term duration totals.
std::map<int, double> duration_sums(const std::vector<ExpInstruction>& seg) {
  std::map<int, double> sums;
  for (const ExpInstruction& ins : seg) sums[ins.term] += ins.duration;
  return sums;
}

StateVector dense_evolution(const SparseHermitian& h, double t, const StateVector& initial) {
  return apply_operator(dense_expm(h, t), initial);
}

}  // namespace

TEST_SUITE_BEGIN("suzuki");

TEST_CASE("recursion coefficients") {
  CHECK(suzuki_p(2) == doctest::Approx(0.4144907717943757).epsilon(1e-15));
  CHECK(suzuki_p(3) == doctest::Approx(1.0 / (4.0 - std::pow(4.0, 0.2))).epsilon(1e-15));
  CHECK_THROWS_AS(suzuki_p(1), std::invalid_argument);
}

TEST_CASE("order-1 segment is the symmetric half-step sweep") {
  const auto seg = suzuki_segment(1, 2, 1.0);
  REQUIRE(seg.size() == 4);
  CHECK(seg[0].term == 0);
  CHECK(seg[1].term == 1);
  CHECK(seg[2].term == 1);
  CHECK(seg[3].term == 0);
  for (const ExpInstruction& ins : seg) CHECK(ins.duration == 0.5);
}

TEST_CASE("order-2 segment over one term") {
  const double lambda = 0.9;
  const auto seg = suzuki_segment(2, 1, lambda);
  REQUIRE(seg.size() == 10);
  const double p = suzuki_p(2);
  for (int i = 0; i < 4; ++i) CHECK(seg[i].duration == doctest::Approx(p * lambda / 2).epsilon(1e-15));
  // The middle recursion step runs backward in time.
  CHECK(seg[4].duration == doctest::Approx((1 - 4 * p) * lambda / 2).epsilon(1e-14));
  CHECK(seg[4].duration < 0);
  CHECK(seg[5].duration < 0);
  for (int i = 6; i < 10; ++i) CHECK(seg[i].duration == doctest::Approx(p * lambda / 2).epsilon(1e-15));
}

TEST_CASE("segment sizes and per-term duration sums") {
  for (int k = 1; k <= 4; ++k) {
    for (int m : {1, 2, 5, 13}) {
      const double lambda = 0.37;
      const auto seg = suzuki_segment(k, m, lambda);
      CHECK(seg.size() == 2ull * m * static_cast<std::size_t>(std::pow(5, k - 1)));
      const auto sums = duration_sums(seg);
      CHECK(sums.size() == static_cast<std::size_t>(m));
      for (const auto& [term, total] : sums) {
        CHECK(term >= 0);
        CHECK(term < m);
        CHECK(total == doctest::Approx(lambda).epsilon(1e-13));
      }
    }
  }
  CHECK_THROWS_AS(suzuki_segment(0, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(suzuki_segment(7, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(suzuki_segment(1, 0, 1.0), std::invalid_argument);
}

TEST_CASE("order 1 never runs backward; order 2 must") {
  for (const ExpInstruction& ins : suzuki_segment(1, 3, 0.5)) CHECK(ins.duration > 0);
  bool negative = false;
  for (const ExpInstruction& ins : suzuki_segment(2, 3, 0.5)) negative |= ins.duration < 0;
  CHECK(negative);
}

TEST_CASE("segment count: pinned value and clamping") {
  // m = 2, norm t = 1, eps = 1e-4, k = 1: the bound is
  // 25 * 4 * sqrt(2 / 1e-4) = 14142.13..., i.e. 3536 four-exponential segments.
  const SegmentChoice choice = segment_count(2, 1.0, 1.0, 1e-4, 1);
  CHECK(choice.r == 3536);
  CHECK(choice.n_exp_bound == doctest::Approx(100.0 * std::sqrt(20000.0)).epsilon(1e-12));
  CHECK(choice.precondition_ok);

  // Tiny norm t clamps to a single segment and voids the guarantee flag.
  const SegmentChoice weak = segment_count(2, 0.01, 0.1, 0.5, 1);
  CHECK(weak.r == 1);
  CHECK(!weak.precondition_ok);

  CHECK_THROWS_AS(segment_count(2, 1.0, -1.0, 1e-3, 1), std::invalid_argument);
  CHECK_THROWS_AS(segment_count(2, 1.0, 1.0, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(segment_count(2, 1.0, 0.0, 1e-3, 1), std::invalid_argument);
  // Astronomical segment counts are refused rather than silently overflowed.
  CHECK_THROWS(segment_count(13, 1e8, 1e8, 1e-6, 1));
}

TEST_CASE("segment count scales homogeneously in t") {
  // Bound ~ t^{1 + 1/2k}: doubling t multiplies it by 2^{1.5} at order 1.
  const double b1 = segment_count(5, 1.0, 1.0, 1e-3, 1).n_exp_bound;
  const double b2 = segment_count(5, 1.0, 2.0, 1e-3, 1).n_exp_bound;
  CHECK(b2 / b1 == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-12));
  const double c1 = segment_count(5, 1.0, 1.0, 1e-3, 2).n_exp_bound;
  const double c2 = segment_count(5, 1.0, 2.0, 1e-3, 2).n_exp_bound;
  CHECK(c2 / c1 == doctest::Approx(std::pow(2.0, 1.25)).epsilon(1e-12));
}

TEST_CASE("predicted query bounds, worked arithmetic") {
  // d = 4, n = 16 (log* = 3), norm t = 1, eps = 4, order 1:
  //   star: 25 * 16 * (4 + 3) * 1 * (4 / 4)^{1/2}  = 2800
  //   edge: 25 * 256 * 3 * 1 * (16 / 4)^{1/2}      = 38400
  const QueryBounds bounds = predicted_query_bounds(4, 16, 1.0, 4.0, 1);
  CHECK(bounds.star_decomposition == doctest::Approx(2800.0).epsilon(1e-12));
  CHECK(bounds.edge_decomposition == doctest::Approx(38400.0).epsilon(1e-12));
}

TEST_CASE("simulation: a purely diagonal instance evolves exactly") {
  SparseHermitian h(8, 1);
  for (Label v = 0; v < 8; ++v) h.set_diagonal(v, 0.25 * static_cast<double>(v) - 0.9);
  const StateVector initial = random_state(8, 11);
  SimulationOptions opts;
  opts.t = 1.7;
  opts.epsilon = 1e-3;
  const SimulationResult res = simulate(h, initial, opts);
  const ErrorMetrics err = compare_states(res.state, dense_evolution(h, 1.7, initial));
  CHECK(err.trace_distance < 1e-12);
}

TEST_CASE("simulation: one star needs only one segment") {
  // With center 0 every edge lands in the same galaxy, so the product formula
  // has a single non-trivial factor and is exact at r = 1.
  const SparseHermitian h =
      single_star(6, 0, {cplx{0.5, 0}, cplx{0, -0.3}, cplx{0.2, 0.2}});
  const StateVector initial = random_state(6, 4);
  SimulationOptions opts;
  opts.t = 2.1;
  opts.epsilon = 0.5;
  opts.fixed_r = 1;
  const SimulationResult res = simulate(h, initial, opts);
  CHECK(res.report.r == 1);
  const ErrorMetrics err = compare_states(res.state, dense_evolution(h, 2.1, initial));
  CHECK(err.trace_distance < 1e-12);
}

TEST_CASE("simulation stays within epsilon and accounts every exponential") {
  const SparseHermitian h = random_instance(16, 2, 7, true);
  const double norm = norms(h).spectral;
  const StateVector initial = random_state(16, 99);
  for (int k : {1, 2}) {
    SimulationOptions opts;
    opts.t = 1.0 / norm;  // norm t = 1
    opts.epsilon = 1e-2;
    opts.k = k;
    const SimulationResult res = simulate(h, initial, opts);
    const QueryReport& rep = res.report;

    const ErrorMetrics err = compare_states(res.state, dense_evolution(h, opts.t, initial));
    CHECK(err.trace_distance < opts.epsilon);
    CHECK(err.norm_error < 1e-9);  // unitary output

    // m = 13 terms, unit cost 8 at n = 16, d = 2.
    CHECK(rep.m == 13);
    CHECK(rep.unit_cost == 8);
    const std::uint64_t per_segment = 2ull * 13 * static_cast<std::uint64_t>(std::pow(5, k - 1));
    CHECK(rep.n_exp == rep.r * per_segment);
    const std::uint64_t charge =
        rep.r * static_cast<std::uint64_t>(std::pow(5, k - 1)) * (24ull * 2 * rep.unit_cost + 4);
    CHECK(rep.circuit_cost == charge);
    CHECK(rep.classical_calls > 0);
    CHECK(rep.precondition_ok);
    CHECK(rep.norm_used == doctest::Approx(norm).epsilon(1e-12));
  }
}

TEST_CASE("simulation at t = 0 is the identity") {
  const SparseHermitian h = four_cycle();
  const StateVector initial = random_state(4, 5);
  SimulationOptions opts;
  opts.t = 0.0;
  const SimulationResult res = simulate(h, initial, opts);
  CHECK(res.report.r == 1);
  for (std::size_t i = 0; i < initial.size(); ++i)
    CHECK(std::abs(res.state[i] - initial[i]) < 1e-15);
  // The single zero-duration segment is still charged.
  CHECK(res.report.circuit_cost ==
        static_cast<std::uint64_t>(24 * 2 * res.report.unit_cost + 4));
}

TEST_CASE("dry runs charge like real runs but leave the state alone") {
  const SparseHermitian h = random_instance(16, 2, 3);
  const StateVector initial = random_state(16, 1);
  SimulationOptions opts;
  opts.t = 0.4;
  opts.epsilon = 1e-2;
  SimulationOptions dry = opts;
  dry.evolve = false;
  const SimulationResult live = simulate(h, initial, opts);
  const SimulationResult accounting = simulate(h, initial, dry);
  CHECK(accounting.state == initial);
  CHECK(accounting.report.circuit_cost == live.report.circuit_cost);
  CHECK(accounting.report.n_exp == live.report.n_exp);
  CHECK(accounting.report.r == live.report.r);
}

TEST_CASE("fixed segment counts override the a priori choice") {
  const SparseHermitian h = four_cycle();
  SimulationOptions opts;
  opts.t = 0.3;
  opts.fixed_r = 5;
  const SimulationResult res = simulate(h, basis_state(4, 0), opts);
  CHECK(res.report.r == 5);
  CHECK(res.report.n_exp == 5ull * 2 * 13);
}

TEST_CASE("row order changes the decomposition, not the guarantee") {
  const SparseHermitian h = random_instance(16, 3, 21);
  const StateVector initial = random_state(16, 2);
  SimulationOptions opts;
  opts.t = 0.5 / norms(h).spectral;
  opts.epsilon = 1e-2;
  for (std::uint64_t perm_seed : {0ull, 17ull, 91ull}) {
    const SparseHermitian g = perm_seed == 0 ? h : h.with_permuted_rows(perm_seed);
    const SimulationResult res = simulate(g, initial, opts);
    const ErrorMetrics err = compare_states(res.state, dense_evolution(h, opts.t, initial));
    CHECK(err.trace_distance < opts.epsilon);
  }
}

TEST_CASE("simulation rejects malformed requests") {
  const SparseHermitian h = four_cycle();
  const StateVector ok = basis_state(4, 0);
  SimulationOptions opts;
  CHECK_THROWS_AS(simulate(h, StateVector(3, cplx{}), opts), std::invalid_argument);
  StateVector unnormalized(4, cplx{0.9, 0});
  CHECK_THROWS_AS(simulate(h, unnormalized, opts), std::invalid_argument);
  SimulationOptions bad = opts;
  bad.epsilon = 0;
  CHECK_THROWS_AS(simulate(h, ok, bad), std::invalid_argument);
  bad = opts;
  bad.t = -1;
  CHECK_THROWS_AS(simulate(h, ok, bad), std::invalid_argument);
  bad = opts;
  bad.k = 0;
  CHECK_THROWS_AS(simulate(h, ok, bad), std::invalid_argument);
  bad = opts;
  bad.k = 7;
  CHECK_THROWS_AS(simulate(h, ok, bad), std::invalid_argument);
}

TEST_CASE("empirical search finds the smallest sufficient segment count") {
  const SparseHermitian h = random_instance(8, 2, 13);
  const StateVector initial = random_state(8, 8);
  SimulationOptions opts;
  opts.t = 0.8 / norms(h).spectral;
  opts.epsilon = 1e-3;
  const StateVector reference = dense_evolution(h, opts.t, initial);
  const std::uint64_t r_measured = empirical_segment_search(h, initial, opts, reference);
  const std::uint64_t r_bound = simulate(h, initial, opts).report.r;
  CHECK(r_measured <= r_bound);

  const auto distance_at = [&](std::uint64_t r) {
    SimulationOptions fixed = opts;
    fixed.fixed_r = r;
    return compare_states(simulate(h, initial, fixed).state, reference).trace_distance;
  };
  CHECK(distance_at(r_measured) <= opts.epsilon / 2);
  if (r_measured > 1) CHECK(distance_at(r_measured - 1) > opts.epsilon / 2);
}

TEST_SUITE_END();

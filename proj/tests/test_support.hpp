#pragma once

// Shared fixtures and independent reference helpers for the test suites.

#include <functional>
#include <vector>

#include "starsim/dense_reference.hpp"
#include "starsim/matrix_io.hpp"

namespace starsim::testing {

// The 4-cycle 0-1-2-3-0 with distinct complex weights, the hand-worked
// instance most structural expectations below are pinned to. Rows are in
// ascending neighbor order, so the position of each neighbor is known.
inline SparseHermitian four_cycle() {
  SparseHermitian h(4, 2);
  h.add_edge(0, 1, cplx{0.5, 0.25});
  h.add_edge(0, 3, cplx{-0.3, 0.6});
  h.add_edge(1, 2, cplx{0.0, -0.75});
  h.add_edge(2, 3, cplx{0.8, 0.0});
  return h;
}

// A path 0-1-2-...-(n-1): every edge joins consecutive labels, so all edges
// land in forest 1 as a single maximal-depth arborescence. Worst case for
// ancestor-chain truncation.
inline SparseHermitian path_graph(std::size_t n) {
  SparseHermitian h(n, 2);
  for (Label v = 0; v + 1 < n; ++v) h.add_edge(v, v + 1, cplx{1.0, 0.0});
  return h;
}

// A single star with the given center; weights[i] = H[leaf_i][center], the
// same convention StarInfo uses. Leaves are the smallest labels other than
// the center, ascending.
inline SparseHermitian single_star(std::size_t n, Label center, const std::vector<cplx>& weights) {
  SparseHermitian h(n, static_cast<int>(weights.size()));
  Label leaf = 0;
  for (const cplx& w : weights) {
    if (leaf == center) ++leaf;
    if (center < leaf)
      h.add_edge(center, leaf, std::conj(w));
    else
      h.add_edge(leaf, center, w);
    ++leaf;
  }
  return h;
}

inline SparseHermitian random_instance(std::size_t n, int d, std::uint64_t seed,
                                       bool diagonal = false, double density = 0.9) {
  GeneratorOptions opts;
  opts.n = n;
  opts.d = d;
  opts.density = density;
  opts.seed = seed;
  opts.random_diagonal = diagonal;
  return generate_instance(opts);
}

// Materialize a linear map column by column.
inline DenseMatrix operator_of(std::size_t n, const std::function<StateVector(StateVector)>& fn) {
  DenseMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t col = 0; col < n; ++col) {
    StateVector e(n, cplx{});
    e[col] = cplx{1.0, 0.0};
    const StateVector image = fn(std::move(e));
    for (std::size_t row = 0; row < n; ++row)
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = image[row];
  }
  return out;
}

}  // namespace starsim::testing

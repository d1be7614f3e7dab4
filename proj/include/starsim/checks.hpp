#pragma once

#include <string>

#include "starsim/galaxy.hpp"

namespace starsim {

struct CheckResult {
  bool pass = true;
  std::string detail;  // first failure, or a one-line summary when passing
};

/// The term matrices (6d galaxies + diagonal) reassemble H entry-for-entry:
/// every stored entry appears in exactly one term with a bit-identical
/// weight, and nothing extra appears.
CheckResult check_partition_exact(const SparseHermitian& h, const GalaxyDecomposition& dec);

/// Every edge gets one color in [1, d]; per color the edges form a forest
/// (no undirected cycle, in-degree at most 1 under smaller-to-larger
/// orientation, one root per tree), and parent_in_forest agrees with a brute
/// scan of the smaller neighbors.
CheckResult check_forests(const SparseHermitian& h, const MatrixOracle& oracle);

/// Per forest: the coloring is proper after every round, the final palette
/// sits inside [0, 5], the chain-local color of every vertex equals the
/// global recoloring, and each local computation stays within its query
/// budget.
CheckResult check_coloring(const SparseHermitian& h, const MatrixOracle& oracle);

/// Every connected component of every galaxy is a star K_{1,r}: one center,
/// r leaves of degree 1, verified from the raw edge lists.
CheckResult check_galaxies(const GalaxyDecomposition& dec);

/// Norm facts the evolution relies on: per galaxy the spectral norm equals
/// the max-column norm (checked densely up to dim 1024), every galaxy's
/// max-column norm is bounded by H's, and for zero-diagonal instances
/// max-column <= sqrt(d) * max-entry.
CheckResult check_norm_identities(const SparseHermitian& h, const GalaxyDecomposition& dec);

}  // namespace starsim

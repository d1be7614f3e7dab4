#pragma once

#include <cstdint>
#include <vector>

#include "starsim/coloring.hpp"

namespace starsim {

/// One term of the decomposition H = sum of 6d galaxies + diagonal. A galaxy
/// is addressed by its forest color c in [1, d] and vertex color t in [0, 5];
/// c == 0 marks the diagonal term.
struct TermId {
  int c = 0;
  int t = -1;

  static TermId galaxy(int c, int t) { return TermId{c, t}; }
  static TermId diagonal() { return TermId{0, -1}; }
  bool is_diagonal() const { return c == 0; }
};

/// Total number of terms, diagonal included: 6d + 1.
int term_count(int d);

/// Flat ordering of the terms: galaxies first as (c-1)*6 + t, diagonal last.
TermId term_from_index(int index, int d);
int term_to_index(TermId id, int d);

/// One star of a galaxy: the center, its leaves in ascending label order,
/// leaf weights w_i = H[leaf_i][center], and the combined weight
/// s = sqrt(sum_i |w_i|^2). A star with no leaves acts as the identity.
struct StarInfo {
  Label center = 0;
  std::vector<Label> leaves;
  std::vector<cplx> weights;
  double s = 0.0;

  bool empty() const { return leaves.empty(); }
};

/// Queries consumed by one local star identification: ancestor chain
/// (rounds + 1, the extra link covering the hop from a leaf to its center),
/// plus the 2d neighbor scan and child verification.
std::uint64_t unit_query_cost(std::size_t n, int d);

/// Identify the star of galaxy (c, t) containing x through the black box
/// alone, with at most unit_query_cost(n, d) queries. Every member of a star
/// gets the same answer; a vertex outside the galaxy gets the (possibly
/// empty) star centered on it.
StarInfo star_info(const MatrixOracle& oracle, Label x, TermId galaxy);

/// Exact unitary e^{-i H_star t} applied in place: a 2x2 rotation between
/// |center> and the weighted leaf superposition, identity on the rest.
void apply_star_exponential(const StarInfo& star, double t, StateVector& state);

/// Same rotation with the trigonometry precomputed: cos_a = cos(s t),
/// sin_a = sin(s t).
void apply_star_rotation(const StarInfo& star, double cos_a, double sin_a, StateVector& state);

/// The full decomposition of an oracle-accessed matrix: d forests with their
/// parent arrays and colorings, the star lists of all 6d galaxies, and the
/// diagonal. Built once per run with classical queries; applying term
/// exponentials afterwards charges the circuit ledger at a fixed price per
/// template.
class GalaxyDecomposition {
 public:
  static GalaxyDecomposition build(const MatrixOracle& oracle);

  std::size_t dim() const { return n_; }
  int sparsity() const { return d_; }
  int terms() const { return term_count(d_); }

  const std::vector<ParentEdge>& parents(ForestColor c) const;
  const std::vector<int>& colors(ForestColor c) const;
  const std::vector<StarInfo>& stars(TermId galaxy) const;
  const std::vector<double>& diagonal_values() const { return diag_; }

  /// e^{-i H_term t} applied to state. Charges 2 * unit_query_cost(n, d)
  /// circuit queries for a galaxy term and 2 for the diagonal term.
  void apply_term_exponential(const MatrixOracle& oracle, TermId term, double t,
                              StateVector& state) const;

  /// The term by itself as a standalone matrix (same dim and sparsity bound,
  /// zero diagonal for galaxies).
  SparseHermitian term_matrix(TermId term) const;

 private:
  std::size_t n_ = 0;
  int d_ = 0;
  std::vector<std::vector<ParentEdge>> parents_;  // [c-1]
  std::vector<std::vector<int>> colors_;          // [c-1]
  std::vector<std::vector<StarInfo>> stars_;      // [(c-1)*6 + t]
  std::vector<double> diag_;
};

}  // namespace starsim

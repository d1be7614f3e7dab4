#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starsim/types.hpp"

namespace starsim {

struct SparseEntry {
  Label col;
  cplx w;
};

/// A d-sparse Hermitian matrix held as per-row adjacency lists plus a real
/// diagonal. The position of an entry inside its row is fixed at construction
/// and defines the index i used by black-box queries, so two instances of the
/// same matrix with different row orders are different (equally valid)
/// oracles.
class SparseHermitian {
 public:
  SparseHermitian(std::size_t n, int d);

  std::size_t dim() const { return n_; }
  int sparsity() const { return d_; }

  /// Append the undirected edge {x, y} with weight H[x][y] = w; the conjugate
  /// entry is mirrored into row y.
  void add_edge(Label x, Label y, cplx w);

  /// Append a single one-directional entry without the conjugate mirror.
  /// Callers are responsible for overall Hermiticity; validate() reports
  /// violations.
  void append_entry_unchecked(Label x, Label y, cplx w);

  void set_diagonal(Label x, double value);

  const std::vector<SparseEntry>& row(Label x) const { return rows_[x]; }
  double diagonal(Label x) const { return diag_[x]; }
  const std::vector<double>& diagonal() const { return diag_; }

  /// Stored weight H[x][y], or 0 when the edge is absent.
  cplx entry(Label x, Label y) const;
  bool has_edge(Label x, Label y) const;

  /// Number of undirected edges (mirrored pairs counted once).
  std::size_t edge_count() const;
  int max_row_degree() const;

  /// The same matrix with every row's neighbor order reshuffled: a different
  /// black box for the same H.
  SparseHermitian with_permuted_rows(std::uint64_t seed) const;

 private:
  std::size_t n_;
  int d_;
  std::vector<std::vector<SparseEntry>> rows_;
  std::vector<double> diag_;
};

/// First violated structural requirement (self loop, duplicate neighbor,
/// zero weight, degree above d, broken conjugate symmetry), or nullopt for a
/// valid instance.
std::optional<std::string> validate(const SparseHermitian& h);

/// max_ij |H_ij|, diagonal included.
double max_entry_norm(const SparseHermitian& h);

/// max_j sqrt(sum_i |H_ij|^2), diagonal included.
double max_column_norm(const SparseHermitian& h);

/// Largest |eigenvalue| via a dense Hermitian eigensolver; supported up to
/// dim 4096, throws beyond that.
double spectral_norm(const SparseHermitian& h);

struct NormReport {
  double spectral;
  double max_entry;
  double max_column;
};

NormReport norms(const SparseHermitian& h);

}  // namespace starsim

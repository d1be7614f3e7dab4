#pragma once

#include <cstdint>

#include "starsim/sparse_hermitian.hpp"

namespace starsim {

/// Answer of one black-box query: the column index of the i-th entry of a row
/// together with its weight. Rows shorter than d answer (x, 0) past the end.
struct OracleEntry {
  Label column;
  cplx weight;
};

/// Two query ledgers kept side by side. circuit_cost charges queries the way
/// a quantum circuit would: a fixed price per exponential template,
/// independent of how the classical emulation gets at the entries.
/// classical_calls counts every actual evaluation of the black box and is
/// diagnostic only; the two are never mixed.
struct QueryCounter {
  std::uint64_t circuit_cost = 0;
  std::uint64_t classical_calls = 0;
};

/// Black-box access f(x, i) to a sparse Hermitian matrix. Everything above
/// this class sees the matrix only through (x, i) lookups, never through its
/// global structure.
class MatrixOracle {
 public:
  explicit MatrixOracle(const SparseHermitian& h) : h_(&h) {}

  std::size_t dim() const { return h_->dim(); }
  int sparsity() const { return h_->sparsity(); }

  /// f(x, i) for i in [1, d]: the i-th stored off-diagonal entry of row x, or
  /// the padding value (x, 0) when row x has fewer than i entries. Throws for
  /// i outside [1, d].
  OracleEntry query(Label x, int i) const;

  double query_diagonal(Label x) const;

  /// Add a template's worth of circuit-model queries to the ledger.
  void charge_template(std::uint64_t amount) const { counter_.circuit_cost += amount; }

  const QueryCounter& counter() const { return counter_; }
  void reset_counter() const { counter_ = QueryCounter{}; }

 private:
  const SparseHermitian* h_;
  mutable QueryCounter counter_;
};

}  // namespace starsim

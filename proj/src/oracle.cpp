#include "starsim/oracle.hpp"

#include <stdexcept>

namespace starsim {

OracleEntry MatrixOracle::query(Label x, int i) const {
  if (x >= dim()) throw std::invalid_argument("query: row label out of range");
  if (i < 1 || i > sparsity()) throw std::invalid_argument("query: index outside [1, d]");
  ++counter_.classical_calls;
  const auto& row = h_->row(x);
  if (static_cast<std::size_t>(i) > row.size()) return OracleEntry{x, cplx{}};
  const SparseEntry& e = row[static_cast<std::size_t>(i - 1)];
  return OracleEntry{e.col, e.w};
}

double MatrixOracle::query_diagonal(Label x) const {
  if (x >= dim()) throw std::invalid_argument("query_diagonal: label out of range");
  ++counter_.classical_calls;
  return h_->diagonal(x);
}

}  // namespace starsim

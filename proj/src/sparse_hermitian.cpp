#include "starsim/sparse_hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "starsim/rng.hpp"

namespace starsim {

SparseHermitian::SparseHermitian(std::size_t n, int d) : n_(n), d_(d) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (d < 1) throw std::invalid_argument("sparsity must be at least 1");
  rows_.resize(n);
  diag_.assign(n, 0.0);
}

void SparseHermitian::add_edge(Label x, Label y, cplx w) {
  append_entry_unchecked(x, y, w);
  append_entry_unchecked(y, x, std::conj(w));
}

void SparseHermitian::append_entry_unchecked(Label x, Label y, cplx w) {
  if (x >= n_ || y >= n_) throw std::invalid_argument("entry label out of range");
  rows_[x].push_back(SparseEntry{y, w});
}

void SparseHermitian::set_diagonal(Label x, double value) {
  if (x >= n_) throw std::invalid_argument("diagonal label out of range");
  diag_[x] = value;
}

cplx SparseHermitian::entry(Label x, Label y) const {
  for (const SparseEntry& e : rows_[x])
    if (e.col == y) return e.w;
  return cplx{};
}

bool SparseHermitian::has_edge(Label x, Label y) const {
  for (const SparseEntry& e : rows_[x])
    if (e.col == y) return true;
  return false;
}

std::size_t SparseHermitian::edge_count() const {
  std::size_t directed = 0;
  for (const auto& row : rows_) directed += row.size();
  return directed / 2;
}

int SparseHermitian::max_row_degree() const {
  std::size_t deg = 0;
  for (const auto& row : rows_) deg = std::max(deg, row.size());
  return static_cast<int>(deg);
}

SparseHermitian SparseHermitian::with_permuted_rows(std::uint64_t seed) const {
  SparseHermitian out(n_, d_);
  out.diag_ = diag_;
  std::mt19937_64 gen(seed);
  for (std::size_t x = 0; x < n_; ++x) {
    std::vector<SparseEntry> row = rows_[x];
    for (std::size_t i = row.size(); i > 1; --i)
      std::swap(row[i - 1], row[uniform_index(gen, i)]);
    out.rows_[x] = std::move(row);
  }
  return out;
}

std::optional<std::string> validate(const SparseHermitian& h) {
  const std::size_t n = h.dim();
  const int d = h.sparsity();
  for (Label x = 0; x < n; ++x) {
    const auto& row = h.row(x);
    if (static_cast<int>(row.size()) > d)
      return "row " + std::to_string(x) + " exceeds the declared sparsity " + std::to_string(d);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const SparseEntry& e = row[i];
      if (e.col >= n) return "row " + std::to_string(x) + " references a label out of range";
      if (e.col == x) return "self loop stored at row " + std::to_string(x);
      if (e.w == cplx{}) return "zero weight stored at (" + std::to_string(x) + ", " + std::to_string(e.col) + ")";
      for (std::size_t j = i + 1; j < row.size(); ++j)
        if (row[j].col == e.col)
          return "duplicate neighbor " + std::to_string(e.col) + " in row " + std::to_string(x);
    }
  }
  // Conjugate symmetry: every stored entry must have its exact mirror.
  for (Label x = 0; x < n; ++x) {
    for (const SparseEntry& e : h.row(x)) {
      bool mirrored = false;
      for (const SparseEntry& back : h.row(e.col)) {
        if (back.col == x) {
          if (back.w != std::conj(e.w))
            return "entries (" + std::to_string(x) + ", " + std::to_string(e.col) +
                   ") and its mirror are not conjugate";
          mirrored = true;
          break;
        }
      }
      if (!mirrored)
        return "entry (" + std::to_string(x) + ", " + std::to_string(e.col) + ") has no mirror";
    }
  }
  return std::nullopt;
}

double max_entry_norm(const SparseHermitian& h) {
  double best = 0.0;
  for (Label x = 0; x < h.dim(); ++x) {
    best = std::max(best, std::abs(h.diagonal(x)));
    for (const SparseEntry& e : h.row(x)) best = std::max(best, std::abs(e.w));
  }
  return best;
}

double max_column_norm(const SparseHermitian& h) {
  // By conjugate symmetry the column norms equal the row norms.
  double best = 0.0;
  for (Label x = 0; x < h.dim(); ++x) {
    double sq = h.diagonal(x) * h.diagonal(x);
    for (const SparseEntry& e : h.row(x)) sq += std::norm(e.w);
    best = std::max(best, std::sqrt(sq));
  }
  return best;
}

NormReport norms(const SparseHermitian& h) {
  return NormReport{spectral_norm(h), max_entry_norm(h), max_column_norm(h)};
}

}  // namespace starsim

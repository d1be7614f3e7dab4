#pragma once

#include <cstdint>
#include <string>

#include "starsim/sparse_hermitian.hpp"

namespace starsim {

/// On-disk JSON format:
///   {"n": int, "d": int, "entries": [[x, y, re, im], ...], "diagonal": [...]}
/// Each undirected edge appears once with x < y, in row order; the loader
/// mirrors the conjugate entries. "d" is optional and defaults to the largest
/// realized degree; "diagonal" is optional and defaults to zeros. Loading
/// validates the instance and throws std::invalid_argument on violations.
SparseHermitian load_matrix(const std::string& path);
void save_matrix(const SparseHermitian& h, const std::string& path);

std::string matrix_to_json(const SparseHermitian& h);
SparseHermitian matrix_from_json(const std::string& text);

struct GeneratorOptions {
  std::size_t n = 16;
  int d = 2;
  double density = 0.9;  // target edge count as a fraction of n*d/2
  std::uint64_t seed = 1;
  bool random_diagonal = false;  // uniform in [-1, 1]; zeros otherwise
  bool ring = false;             // cycle with unit weights, d = 2
};

/// Seeded random d-sparse instance (or a ring). Same options, same bytes on
/// disk: the generator draws nothing from the platform.
SparseHermitian generate_instance(const GeneratorOptions& opts);

}  // namespace starsim

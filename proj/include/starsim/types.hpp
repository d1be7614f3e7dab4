#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace starsim {

using Label = std::uint32_t;
using cplx = std::complex<double>;

/// Column vector of amplitudes indexed by vertex label.
using StateVector = std::vector<cplx>;

/// Number of bits needed to write the labels 0..n-1; at least 1.
int label_bits(std::size_t n);

/// Iterated base-2 logarithm: 0 for x <= 1, else 1 + log_star(log2(x)).
int log_star(double x);

double l2_norm(const StateVector& v);
void normalize(StateVector& v);

/// <a|b> = sum_i conj(a_i) b_i.
cplx inner_product(const StateVector& a, const StateVector& b);

StateVector basis_state(std::size_t n, Label x);

/// Haar-ish random unit vector (independent complex gaussians, normalized),
/// reproducible across platforms for a given seed.
StateVector random_state(std::size_t n, std::uint64_t seed);

}  // namespace starsim

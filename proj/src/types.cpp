#include "starsim/types.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "starsim/rng.hpp"

namespace starsim {

int label_bits(std::size_t n) {
  if (n <= 2) return 1;
  return std::bit_width(n - 1);  // ceil(log2 n) for n >= 2
}

int log_star(double x) {
  int depth = 0;
  while (x > 1.0) {
    x = std::log2(x);
    ++depth;
  }
  return depth;
}

double l2_norm(const StateVector& v) {
  double sum = 0.0;
  for (const cplx& a : v) sum += std::norm(a);
  return std::sqrt(sum);
}

void normalize(StateVector& v) {
  const double nrm = l2_norm(v);
  if (nrm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  for (cplx& a : v) a /= nrm;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner_product: size mismatch");
  cplx sum{};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

StateVector basis_state(std::size_t n, Label x) {
  if (x >= n) throw std::invalid_argument("basis_state: label out of range");
  StateVector v(n, cplx{});
  v[x] = cplx{1.0, 0.0};
  return v;
}

StateVector random_state(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_state: empty dimension");
  std::mt19937_64 gen(seed);
  StateVector v(n);
  for (cplx& a : v) a = gaussian_complex(gen);
  normalize(v);
  return v;
}

cplx disk_weight(std::mt19937_64& gen) {
  for (;;) {
    const double r = std::sqrt(uniform_unit(gen));
    const double theta = 2.0 * M_PI * uniform_unit(gen);
    const cplx w{r * std::cos(theta), r * std::sin(theta)};
    if (std::abs(w) >= 1e-6) return w;
  }
}

cplx gaussian_complex(std::mt19937_64& gen) {
  // Box-Muller on portable uniforms; 1 - u keeps the log argument positive.
  const double u1 = 1.0 - uniform_unit(gen);
  const double u2 = uniform_unit(gen);
  const double mag = std::sqrt(-2.0 * std::log(u1));
  return cplx{mag * std::cos(2.0 * M_PI * u2), mag * std::sin(2.0 * M_PI * u2)};
}

}  // namespace starsim

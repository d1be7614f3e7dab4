#include "starsim/dense_reference.hpp"

#include <cmath>
#include <stdexcept>

namespace starsim {

namespace {
constexpr std::size_t kDenseLimit = 4096;
}

DenseMatrix to_dense(const SparseHermitian& h) {
  if (h.dim() > kDenseLimit)
    throw std::runtime_error("to_dense: dimension above the supported dense limit 4096");
  const auto n = static_cast<Eigen::Index>(h.dim());
  DenseMatrix m = DenseMatrix::Zero(n, n);
  for (Label x = 0; x < h.dim(); ++x) {
    m(x, x) = h.diagonal(x);
    for (const SparseEntry& e : h.row(x)) m(x, e.col) = e.w;
  }
  return m;
}

double spectral_norm(const SparseHermitian& h) {
  const DenseMatrix m = to_dense(h);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("spectral_norm: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

DenseMatrix dense_expm(const DenseMatrix& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("dense_expm: matrix is not square");
  if (static_cast<std::size_t>(h.rows()) > kDenseLimit)
    throw std::runtime_error("dense_expm: dimension above the supported dense limit 4096");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("dense_expm: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense_expm: eigensolver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  Eigen::VectorXcd phases(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) phases(i) = std::polar(1.0, -ev(i) * t);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

DenseMatrix dense_expm(const SparseHermitian& h, double t) { return dense_expm(to_dense(h), t); }

StateVector apply_operator(const DenseMatrix& u, const StateVector& v) {
  if (static_cast<std::size_t>(u.cols()) != v.size())
    throw std::invalid_argument("apply_operator: dimension mismatch");
  const Eigen::Map<const Eigen::VectorXcd> vec(v.data(), static_cast<Eigen::Index>(v.size()));
  const Eigen::VectorXcd out = u * vec;
  return StateVector(out.data(), out.data() + out.size());
}

double operator_norm(const DenseMatrix& m) {
  // Largest singular value via the Hermitian PSD matrix M^dag M: more
  // accurate than a general SVD at this scale and much faster.
  const DenseMatrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("operator_norm: eigensolver failed");
  const double top = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, top));
}

double unitarity_defect(const DenseMatrix& u) {
  const DenseMatrix g = u.adjoint() * u;
  return (g - DenseMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

ErrorMetrics compare_states(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compare_states: size mismatch");
  // Pure-state distances are defined on rays: normalize the overlap so a
  // norm drift of 1e-13 does not masquerade as an infidelity of 1e-13 (the
  // square root would then inflate it by six orders of magnitude).
  const double na = l2_norm(a);
  const double nb = l2_norm(b);
  ErrorMetrics m{};
  const double overlap_sq =
      na > 0.0 && nb > 0.0 ? std::norm(inner_product(a, b)) / (na * na * nb * nb) : 0.0;
  m.infidelity = std::max(0.0, 1.0 - overlap_sq);
  m.trace_distance = std::sqrt(m.infidelity);
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += std::norm(a[i] - b[i]);
  m.norm_error = std::sqrt(diff);
  return m;
}

double compare_operators(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("compare_operators: shape mismatch");
  return operator_norm(a - b);
}

}  // namespace starsim

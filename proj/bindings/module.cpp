#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starsim/dense_reference.hpp"
#include "starsim/matrix_io.hpp"
#include "starsim/reports.hpp"

namespace py = pybind11;
using namespace starsim;

namespace {

StateVector state_from_array(const py::array_t<cplx>& arr, std::size_t n) {
  if (arr.ndim() != 1 || static_cast<std::size_t>(arr.shape(0)) != n)
    throw std::invalid_argument("state must be a 1-d array of length n");
  const auto view = arr.unchecked<1>();
  StateVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = view(static_cast<py::ssize_t>(i));
  return v;
}

py::array_t<cplx> state_to_array(const StateVector& v) {
  py::array_t<cplx> arr(static_cast<py::ssize_t>(v.size()));
  auto view = arr.mutable_unchecked<1>();
  for (std::size_t i = 0; i < v.size(); ++i) view(static_cast<py::ssize_t>(i)) = v[i];
  return arr;
}

py::array_t<cplx> dense_to_array(const DenseMatrix& m) {
  py::array_t<cplx> arr({m.rows(), m.cols()});
  auto view = arr.mutable_unchecked<2>();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
  return arr;
}

NormMode parse_norm(const std::string& name) {
  if (name == "spectral") return NormMode::Spectral;
  if (name == "mcn") return NormMode::MaxColumn;
  throw std::invalid_argument("norm must be 'spectral' or 'mcn'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "star-decomposition simulator for sparse Hermitian matrices";

  py::class_<SparseHermitian>(m, "SparseHermitian")
      .def_property_readonly("n", &SparseHermitian::dim)
      .def_property_readonly("d", &SparseHermitian::sparsity)
      .def_property_readonly("edge_count", &SparseHermitian::edge_count)
      .def("to_dense", [](const SparseHermitian& h) { return dense_to_array(to_dense(h)); })
      .def("to_json", &matrix_to_json)
      .def("save", &save_matrix, py::arg("path"))
      .def("norms",
           [](const SparseHermitian& h) {
             const NormReport r = norms(h);
             return py::dict(py::arg("spectral") = r.spectral,
                             py::arg("max_entry") = r.max_entry,
                             py::arg("max_column") = r.max_column);
           })
      .def("__repr__", [](const SparseHermitian& h) {
        return "<SparseHermitian n=" + std::to_string(h.dim()) +
               " d=" + std::to_string(h.sparsity()) +
               " edges=" + std::to_string(h.edge_count()) + ">";
      });

  m.def("load_matrix", &load_matrix, py::arg("path"));
  m.def("matrix_from_json", &matrix_from_json, py::arg("text"));

  m.def(
      "generate",
      [](std::size_t n, int d, double density, std::uint64_t seed, bool diagonal, bool ring) {
        GeneratorOptions opts;
        opts.n = n;
        opts.d = d;
        opts.density = density;
        opts.seed = seed;
        opts.random_diagonal = diagonal;
        opts.ring = ring;
        return generate_instance(opts);
      },
      py::arg("n"), py::arg("d") = 2, py::arg("density") = 0.9, py::arg("seed") = 1,
      py::arg("diagonal") = false, py::arg("ring") = false);

  m.def("rounds", [](std::size_t n) { return color_rounds(n); }, py::arg("n"));
  m.def("log_star", &log_star, py::arg("x"));
  m.def("unit_query_cost", &unit_query_cost, py::arg("n"), py::arg("d"));

  m.def("decompose_report",
        [](const SparseHermitian& h) { return decomposition_report(h).dump(); });
  m.def(
      "verify_report",
      [](const SparseHermitian& h, double t, double eps, int k) {
        return verification_report(h, t, eps, k).dump();
      },
      py::arg("h"), py::arg("t") = 0.5, py::arg("epsilon") = 1e-4, py::arg("k") = 1);

  m.def(
      "simulate",
      [](const SparseHermitian& h, double t, double epsilon, int k, const std::string& norm,
         py::object state, std::uint64_t state_seed) {
        SimulationOptions opts;
        opts.t = t;
        opts.epsilon = epsilon;
        opts.k = k;
        opts.norm_mode = parse_norm(norm);
        StateVector initial = state.is_none()
                                  ? random_state(h.dim(), state_seed)
                                  : state_from_array(state.cast<py::array_t<cplx>>(), h.dim());
        const SimulationResult res = simulate(h, initial, opts);
        return py::make_tuple(state_to_array(res.state), report_to_json(res.report).dump());
      },
      py::arg("h"), py::arg("t") = 1.0, py::arg("epsilon") = 1e-3, py::arg("k") = 1,
      py::arg("norm") = "spectral", py::arg("state") = py::none(), py::arg("state_seed") = 1);

  m.def(
      "reference_state",
      [](const SparseHermitian& h, double t, py::object state, std::uint64_t state_seed) {
        StateVector initial = state.is_none()
                                  ? random_state(h.dim(), state_seed)
                                  : state_from_array(state.cast<py::array_t<cplx>>(), h.dim());
        return state_to_array(apply_operator(dense_expm(h, t), initial));
      },
      py::arg("h"), py::arg("t") = 1.0, py::arg("state") = py::none(), py::arg("state_seed") = 1);

  m.def("random_state",
        [](std::size_t n, std::uint64_t seed) { return state_to_array(random_state(n, seed)); },
        py::arg("n"), py::arg("seed") = 1);

  m.def("compare", [](const py::array_t<cplx>& a, const py::array_t<cplx>& b) {
    const std::size_t n = static_cast<std::size_t>(a.shape(0));
    const ErrorMetrics err = compare_states(state_from_array(a, n), state_from_array(b, n));
    return py::dict(py::arg("trace_distance") = err.trace_distance,
                    py::arg("infidelity") = err.infidelity,
                    py::arg("norm_error") = err.norm_error);
  });
}

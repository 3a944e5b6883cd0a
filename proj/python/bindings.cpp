#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybmap/chain.hpp"
#include "ybmap/kdv.hpp"
#include "ybmap/verify.hpp"
#include "ybmap/yb_maps.hpp"

namespace py = pybind11;
using namespace ybmap;

namespace {

ProjectorState as_projector(const Matrix& m) { return ProjectorState::from_matrix(m); }

Subspace as_subspace(const Matrix& basis) { return Subspace::from_basis(basis); }

FamilyId as_family(const std::string& name) {
  const auto id = parse_family(name);
  if (!id) throw Error(ErrorKind::InvalidArgument, "unknown family '" + name + "'");
  return *id;
}

Chain as_chain(const std::vector<Matrix>& projectors, const std::vector<Complex>& lambdas) {
  if (projectors.size() != lambdas.size()) throw Error(ErrorKind::InvalidArgument, "one lambda per projector");
  Chain chain{projectors.empty() ? 1 : projectors.front().rows(), {}};
  for (std::size_t i = 0; i < projectors.size(); ++i) chain.sites.push_back({as_projector(projectors[i]), lambdas[i]});
  return chain;
}

std::vector<Matrix> projectors_of(const Chain& chain) {
  std::vector<Matrix> out;
  for (const ChainSite& s : chain.sites) out.push_back(s.projector.matrix());
  return out;
}

}  // namespace

PYBIND11_MODULE(_ybmap, m) {
  m.doc() = "Yang-Baxter maps from matrix KdV solitons";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "vector_map",
      [](const ColumnVector& xi1, const ColumnVector& eta1, Complex l1, const ColumnVector& xi2,
         const ColumnVector& eta2, Complex l2) {
        const auto [a, b] = vector_soliton_map({Vec(xi1), Covec(eta1), l1}, {Vec(xi2), Covec(eta2), l2});
        return py::make_tuple(py::make_tuple(a.xi.values(), a.eta.values()), py::make_tuple(b.xi.values(), b.eta.values()));
      },
      py::arg("xi1"), py::arg("eta1"), py::arg("lambda1"), py::arg("xi2"), py::arg("eta2"), py::arg("lambda2"));

  m.def(
      "projector_map",
      [](Complex l1, const Matrix& p1, Complex l2, const Matrix& p2) {
        const auto [q1, q2] = projector_map(l1, as_projector(p1), l2, as_projector(p2));
        return std::pair{q1.matrix(), q2.matrix()};
      },
      py::arg("lambda1"), py::arg("p1"), py::arg("lambda2"), py::arg("p2"));

  m.def(
      "grassmannian_map",
      [](double l1, const Matrix& b1, double l2, const Matrix& b2) {
        const GrassmannianImage g = grassmannian_map(l1, as_subspace(b1), l2, as_subspace(b2));
        return std::pair{g.first.basis(), g.second.basis()};
      },
      py::arg("lambda1"), py::arg("basis1"), py::arg("lambda2"), py::arg("basis2"),
      "Returns orthonormal bases of the two image subspaces.");

  m.def(
      "refactorize_numeric",
      [](Complex l1, const Matrix& p1, Complex l2, const Matrix& p2) {
        const auto [q1, q2] = refactorize_numeric(l1, as_projector(p1), l2, as_projector(p2));
        return std::pair{q1.matrix(), q2.matrix()};
      },
      py::arg("lambda1"), py::arg("p1"), py::arg("lambda2"), py::arg("p2"));

  m.def(
      "refactorization_residual",
      [](Complex l1, const Matrix& p1, Complex l2, const Matrix& p2, const Matrix& q1, const Matrix& q2,
         std::size_t samples, std::uint64_t seed) {
        const std::vector<Complex> lambdas{l1, l2};
        return verify_refactorization(l1, as_projector(p1), l2, as_projector(p2), as_projector(q1), as_projector(q2),
                                      ZetaGrid::circle(lambdas, samples, seed));
      },
      py::arg("lambda1"), py::arg("p1"), py::arg("lambda2"), py::arg("p2"), py::arg("q1"), py::arg("q2"),
      py::arg("zeta_samples") = 16, py::arg("seed") = 0);

  m.def(
      "lax_matrix", [](const Matrix& p, Complex lambda, Complex zeta) { return lax_eval({as_projector(p), lambda}, zeta); },
      py::arg("p"), py::arg("lambda_"), py::arg("zeta"));

  m.def(
      "_check_yang_baxter",
      [](const std::string& family, std::size_t trials, std::uint64_t seed, double tol) {
        py::gil_scoped_release release;
        return to_json(check_yang_baxter(as_family(family), {trials, seed, tol})).dump();
      },
      py::arg("family"), py::arg("trials"), py::arg("seed"), py::arg("tol"));

  m.def(
      "_check_reversibility",
      [](const std::string& family, std::size_t trials, std::uint64_t seed, double tol) {
        py::gil_scoped_release release;
        return to_json(check_reversibility(as_family(family), {trials, seed, tol})).dump();
      },
      py::arg("family"), py::arg("trials"), py::arg("seed"), py::arg("tol"));

  m.def(
      "transfer_map",
      [](const std::vector<Matrix>& projectors, const std::vector<Complex>& lambdas) {
        return projectors_of(transfer_map(as_chain(projectors, lambdas)));
      },
      py::arg("projectors"), py::arg("lambdas"));

  m.def(
      "iterate",
      [](const std::vector<Matrix>& projectors, const std::vector<Complex>& lambdas, std::size_t steps,
         std::size_t zeta_samples, std::uint64_t seed) {
        const Chain chain = as_chain(projectors, lambdas);
        const Trajectory t = iterate(chain, steps, ZetaGrid::circle(lambdas, zeta_samples, seed));
        std::vector<double> drift, det;
        for (const StepRecord& r : t.records) {
          drift.push_back(r.max_drift);
          det.push_back(r.det_residual);
        }
        py::dict out;
        out["drift"] = drift;
        out["det_residual"] = det;
        out["final"] = projectors_of(t.final_chain);
        return out;
      },
      py::arg("projectors"), py::arg("lambdas"), py::arg("steps"), py::arg("zeta_samples") = 8, py::arg("seed") = 0);

  m.def("soliton_field", py::overload_cast<const Matrix&, double, double, double>(&soliton_field), py::arg("amplitude"),
        py::arg("lambda_"), py::arg("x"), py::arg("t"));
  m.def("kdv_residual", py::overload_cast<const Matrix&, double, double, double>(&kdv_residual), py::arg("amplitude"),
        py::arg("lambda_"), py::arg("x"), py::arg("t"));
}

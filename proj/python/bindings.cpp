#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latdet/lattice.hpp"
#include "latdet/lommel.hpp"
#include "latdet/potentials.hpp"
#include "latdet/specfun.hpp"
#include "latdet/spectral.hpp"

namespace py = pybind11;
using namespace latdet;

namespace {

PotentialTable table(const std::vector<double>& v) { return PotentialTable(v); }

std::vector<double> values(const PotentialTable& v) { return {v.values().begin(), v.values().end()}; }

}  // namespace

PYBIND11_MODULE(_latdet, m) {
    m.doc() = "Discrete Schroedinger problems on a finite lattice: spectra, determinant ratios, "
              "Lommel polynomials and the special functions behind their continuum limits.";

    py::class_<BoundaryCondition>(m, "BoundaryCondition")
        .def_static("dirichlet", &BoundaryCondition::dirichlet)
        .def_static("neumann", &BoundaryCondition::neumann)
        .def_static("robin", &BoundaryCondition::robin, py::arg("alpha"), py::arg("beta"))
        .def_property_readonly("kind",
                               [](const BoundaryCondition& bc) {
                                   switch (bc.kind()) {
                                       case BoundaryCondition::Kind::dirichlet: return "dirichlet";
                                       case BoundaryCondition::Kind::neumann: return "neumann";
                                       case BoundaryCondition::Kind::robin: return "robin";
                                   }
                                   return "unknown";
                               })
        .def("__repr__", [](const BoundaryCondition& bc) {
            switch (bc.kind()) {
                case BoundaryCondition::Kind::dirichlet: return std::string("BoundaryCondition.dirichlet()");
                case BoundaryCondition::Kind::neumann: return std::string("BoundaryCondition.neumann()");
                default:
                    return "BoundaryCondition.robin(" + std::to_string(bc.left_factor() - 1) + ", " +
                           std::to_string(bc.right_factor() - 1) + ")";
            }
        });

    const auto dirichlet = BoundaryCondition::dirichlet();

    // lattice
    m.def(
        "solution_values",
        [](const std::vector<double>& v, double lambda, double y0, double y1) {
            return solution_values(table(v), lambda, {y0, y1});
        },
        py::arg("potential"), py::arg("lam"), py::arg("y0") = 0.0, py::arg("y1") = 1.0,
        "y(0..p+1) from the seed (y0, y1).");
    m.def(
        "characteristic",
        [](double lambda, const std::vector<double>& v, const BoundaryCondition& bc) {
            return characteristic(lambda, table(v), bc);
        },
        py::arg("lam"), py::arg("potential"), py::arg("bc") = dirichlet);
    m.def(
        "char_poly_coefficients",
        [](const std::vector<double>& v, const BoundaryCondition& bc) {
            const auto poly = char_poly_coefficients(table(v), bc);
            return std::vector<double>(poly.coefficients().begin(), poly.coefficients().end());
        },
        py::arg("potential"), py::arg("bc") = dirichlet,
        "Coefficients of the characteristic polynomial in lambda, lowest degree first (p <= 60).");

    // spectral
    m.def(
        "eigenvalues",
        [](const std::vector<double>& v, const BoundaryCondition& bc) {
            const auto s = eigenvalues(table(v), bc);
            std::vector<std::vector<double>> vectors;
            for (std::size_t n = 0; n < s.size(); ++n) {
                const auto e = s.eigenvector(n);
                vectors.emplace_back(e.begin(), e.end());
            }
            return py::make_tuple(std::vector<double>(s.eigenvalues().begin(), s.eigenvalues().end()), vectors);
        },
        py::arg("potential"), py::arg("bc") = dirichlet,
        "(eigenvalues, eigenvectors); eigenvectors are normalized to y(1) = 1.");
    m.def(
        "det_ratio", [](const std::vector<double>& v, const BoundaryCondition& bc) { return det_ratio(table(v), bc); },
        py::arg("potential"), py::arg("bc") = dirichlet);
    m.def(
        "reduced_determinant_zero_mode",
        [](const std::vector<double>& v) {
            const auto r = reduced_determinant_zero_mode(table(v));
            py::dict d;
            d["value"] = r.value;
            d["zero_mode"] = r.zero_mode;
            d["inner"] = r.inner;
            d["delta_terminal"] = r.delta_terminal;
            return d;
        },
        py::arg("potential"));
    m.def(
        "gram_matrix",
        [](const std::vector<double>& v) {
            const auto g = gram_matrix(table(v));
            std::vector<std::vector<double>> out(g.size(), std::vector<double>(g.size()));
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t j = 0; j < g.size(); ++j) out[i][j] = g(i, j);
            }
            return out;
        },
        py::arg("potential"));
    m.def(
        "sample_interpolate",
        [](const std::vector<double>& samples, const std::vector<double>& v, double lambda) {
            return sample_interpolate(samples, table(v), lambda);
        },
        py::arg("samples"), py::arg("potential"), py::arg("lam"));
    m.def(
        "christoffel_darboux_residual",
        [](const std::vector<double>& v, double lambda, double mu, std::size_t k) {
            const auto r = christoffel_darboux_residual(table(v), lambda, mu, k);
            return py::make_tuple(r.value, r.scale);
        },
        py::arg("potential"), py::arg("lam"), py::arg("mu"), py::arg("k"), "(residual, term scale)");

    // potentials
    m.def(
        "linear_lattice_potential", [](double b, std::size_t p) { return values(linear_lattice_potential({b, p})); },
        py::arg("b"), py::arg("p"));
    m.def(
        "rosen_morse_lattice_potential",
        [](double l, std::size_t p) { return values(rosen_morse_lattice_potential({l, p})); }, py::arg("l"),
        py::arg("p"));
    m.def(
        "discdet_p3_closed_form", [](const std::vector<double>& v) { return discdet_p3_closed_form(table(v)); },
        py::arg("potential"));

    // lommel
    m.def(
        "lommel", [](double nu, int p, double z) { return lommel({nu, p, z}); }, py::arg("nu"), py::arg("p"),
        py::arg("z"));
    m.def("lommel_recurrence", &lommel_recurrence, py::arg("nu"), py::arg("p_max"), py::arg("z"));
    m.def(
        "lommel_bessel_residual",
        [](double nu, int p, double z) {
            const auto r = lommel_bessel_residual(nu, p, z);
            return py::make_tuple(r.value, r.scale);
        },
        py::arg("nu"), py::arg("p"), py::arg("z"), "(residual, term scale)");
    m.def(
        "normalized_casoratian",
        [](double nu, int p, double z) { return normalized_casoratian(nu, p, z).value; }, py::arg("nu"),
        py::arg("p"), py::arg("z"));
    m.def("lommel_transitional_asymptotic", &lommel_transitional_asymptotic, py::arg("p"), py::arg("b"));

    // special functions
    m.def("gamma", &specfun::gamma, py::arg("x"));
    m.def("bessel_j", &specfun::bessel_j, py::arg("nu"), py::arg("z"));
    m.def("bessel_y", &specfun::bessel_y, py::arg("nu"), py::arg("z"));
    m.def(
        "airy",
        [](double x) {
            const auto a = specfun::airy(x);
            return py::make_tuple(a.ai, a.bi, a.ai_prime, a.bi_prime);
        },
        py::arg("x"), "(Ai, Bi, Ai', Bi')");
    m.def("hyp2f1", &specfun::hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
    m.def("legendre_p", &specfun::legendre_p, py::arg("l"), py::arg("x"));
    m.def("continuum_linear_det_ratio", &specfun::continuum_linear_det_ratio, py::arg("b"));
    m.def("continuum_rosen_morse_det_ratio", &specfun::continuum_rosen_morse_det_ratio, py::arg("l"));
}

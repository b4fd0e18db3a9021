#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lierf/parser.hpp"
#include "lierf/suites.hpp"

namespace py = pybind11;
using namespace lierf;

namespace {

RunConfig make_cfg(uint64_t seed, int grid, int dim, double du, double lambda, double c_phase,
                   int threads) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.grid_n = grid;
    cfg.dim = dim;
    cfg.du = du;
    cfg.lambda = lambda;
    cfg.c_phase = c_phase;
    cfg.threads = threads;
    cfg.validate();
    return cfg;
}

FieldBinding real_binding(double phi, double lambda, int grid_n, uint64_t seed) {
    MomentumGrid grid(2, grid_n, 0.35);
    KernelSpec k = make_symmetric_kernel(grid, phi, 0.7, 2.0, lambda);
    TestRand rng(seed);
    return FieldBinding(k, {{"f", gimel_transform(real_test_field(grid, rng), k)}});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "deformed operator algebra with numeric kernel verification";

    py::register_exception<ParseError>(m, "ParseSyntaxError", PyExc_ValueError);

    m.def("canonical", [](const std::string& s) { return print_expr(*parse_expr(s)); },
          "Parse an expression and pretty-print its canonical form.");
    m.def("normal_order", [](const std::string& s) { return normal_order(eval_op(s)).str(); },
          "Normal-order an operator expression; returns the printed form.");
    m.def("vev", [](const std::string& s) { return vev(eval_op(s)).str(); },
          "Vacuum expectation value of an operator expression, as a polynomial string.");
    m.def("parse_index", [](const std::string& s) { return parse_index(s).str(); },
          "Flatten a (possibly nested) xi index.");

    m.def("multiplicity", &multiplicity, py::arg("partition"),
          "prod n_j! (n_j - 1)! over the parts.");
    m.def("inner_product",
          [](const std::vector<std::string>& bra, const std::vector<std::string>& ket) {
              std::vector<XiIndex> b, k;
              for (const auto& s : bra) b.push_back(parse_index(s));
              for (const auto& s : ket) k.push_back(parse_index(s));
              return inner_bruteforce(ket_n(b), ket_n(k)).str();
          },
          py::arg("bra"), py::arg("ket"),
          "Symbolic <bra|ket> of orthogonal-hierarchy vectors (any levels).");
    m.def("table1", []() {
        std::vector<std::vector<std::string>> out(4, std::vector<std::string>(4));
        auto t = table1();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[i][j] = t[i][j].str();
        return out;
    });

    m.def("run_suite_json",
          [](const std::string& name, uint64_t seed, int grid, int dim, double du, double lambda,
             double c_phase, int threads) {
              return report_json(
                  run_suite(name, make_cfg(seed, grid, dim, du, lambda, c_phase, threads)));
          },
          py::arg("name"), py::arg("seed") = 1, py::arg("grid") = 32, py::arg("dim") = 2,
          py::arg("du") = 0.35, py::arg("lambda_") = 0.2, py::arg("c_phase") = 0.0,
          py::arg("threads") = 1);

    m.def("moment",
          [](int order, double phi, double lambda, int grid, uint64_t seed) {
              return moment("f", order, real_binding(phi, lambda, grid, seed));
          },
          py::arg("order"), py::arg("phi") = 0.0, py::arg("lambda_") = 0.2, py::arg("grid") = 16,
          py::arg("seed") = 1,
          "<0| phi_f^order |0> for a seeded real test function on a symmetric kernel.");

    m.def("kernel_symmetry",
          [](double phi, int grid) {
              MomentumGrid g(2, grid, 0.35);
              SymmetryCheck s = kernel_symmetry_check(make_symmetric_kernel(g, phi, 0.7, 2.0, 0.2));
              return py::make_tuple(s.c, s.residual, s.pass);
          },
          py::arg("phi") = 0.0, py::arg("grid") = 16);

    m.def("em_integrand",
          [](const std::array<Cplx, 3>& e1, const std::array<Cplx, 3>& b1,
             const std::array<Cplx, 3>& e2, const std::array<Cplx, 3>& b2,
             const std::array<double, 4>& u) {
              return em_integrand(em_bivector(e1, b1), em_bivector(e2, b2), u);
          },
          py::arg("e_bra"), py::arg("b_bra"), py::arg("e_ket"), py::arg("b_ket"), py::arg("u"));

    m.def("eigenvalues",
          [](const std::vector<std::vector<Cplx>>& rows) {
              HermitianMatrix h(rows.size());
              for (size_t i = 0; i < rows.size(); ++i) {
                  if (rows[i].size() != rows.size())
                      throw std::invalid_argument("eigenvalues: matrix must be square");
                  for (size_t j = 0; j < rows.size(); ++j) h.at(i, j) = rows[i][j];
              }
              return jacobi_eigenvalues(h);
          },
          py::arg("matrix"), "Eigenvalues of a Hermitian matrix (ascending).");

    m.attr("SUITES") = kSuiteNames;
}

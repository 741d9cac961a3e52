#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "specrad/convexity.hpp"
#include "specrad/generators.hpp"
#include "specrad/oracle.hpp"
#include "specrad/serialize.hpp"
#include "specrad/spectral.hpp"
#include "specrad/structure.hpp"

namespace py = pybind11;
using namespace specrad;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

SpectralConfig make_config(double tolerance, long max_iterations, double shift) {
    return {tolerance, max_iterations, shift};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "structure and log-convexity analysis of nonnegative matrices";

    py::class_<NonnegMatrix>(m, "NonnegMatrix")
        .def(py::init(&NonnegMatrix::from_rows), py::arg("rows"))
        .def_property_readonly("n", &NonnegMatrix::dim)
        .def("to_rows", &NonnegMatrix::to_rows)
        .def("pattern", &NonnegMatrix::pattern)
        .def("__repr__", [](const NonnegMatrix& a) {
            return "NonnegMatrix(n=" + std::to_string(a.dim()) + ")";
        });

    py::class_<SignPattern>(m, "SignPattern")
        .def(py::init(&SignPattern::from_rows), py::arg("rows"))
        .def_property_readonly("n", &SignPattern::dim)
        .def("nnz", &SignPattern::nnz)
        .def("transposed", &SignPattern::transposed)
        .def("realize", &SignPattern::realize)
        .def("to_rows",
             [](const SignPattern& p) {
                 std::vector<std::vector<int>> rows(p.dim(), std::vector<int>(p.dim()));
                 for (int i = 0; i < p.dim(); ++i)
                     for (int j = 0; j < p.dim(); ++j) rows[i][j] = p(i, j) ? 1 : 0;
                 return rows;
             })
        .def("__eq__", [](const SignPattern& a, const SignPattern& b) { return a == b; })
        .def("__repr__", [](const SignPattern& p) {
            return "SignPattern(n=" + std::to_string(p.dim()) + ", nnz=" + std::to_string(p.nnz()) + ")";
        });

    py::class_<DiagonalParams>(m, "DiagonalParams")
        .def(py::init<std::vector<double>>(), py::arg("values"))
        .def_property_readonly("values", &DiagonalParams::values)
        .def("is_scalar", &DiagonalParams::is_scalar, py::arg("tol") = 0.0);

    m.def("sign_pattern", &sign_pattern);
    m.def("scale_exp", &scale_exp);
    m.def("convex_combination", &convex_combination);
    m.def("parse_matrix", &parse_matrix);
    m.def("write_matrix_text", &write_matrix_text);

    m.def(
        "classify",
        [](const SignPattern& p) { return json_to_py(report_to_json(classify(p))); },
        py::arg("pattern"));

    m.def(
        "spectral_radius",
        [](const NonnegMatrix& a, double tolerance, long max_iterations, double shift) {
            return spectral_radius(a, make_config(tolerance, max_iterations, shift));
        },
        py::arg("matrix"), py::arg("tolerance") = 1e-12, py::arg("max_iterations") = 100000,
        py::arg("shift") = 1.0);
    m.def(
        "perron_pair",
        [](const NonnegMatrix& a, double tolerance, long max_iterations, double shift) {
            PerronPair p = perron_pair(a, make_config(tolerance, max_iterations, shift));
            return py::make_tuple(p.radius, p.vector);
        },
        py::arg("matrix"), py::arg("tolerance") = 1e-12, py::arg("max_iterations") = 100000,
        py::arg("shift") = 1.0);
    m.def(
        "holder_gap",
        [](const NonnegMatrix& a, const NonnegMatrix& b, double t) {
            HolderGaps g = holder_gap(a, b, t);
            py::dict out;
            out["row_gaps"] = g.row_gaps;
            out["radius_gap"] = g.radius_gap;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("t"));

    m.def("log_radius_scaled",
          [](const NonnegMatrix& a, const DiagonalParams& d) { return log_radius_scaled(a, d); });
    m.def("convexity_gap", [](const NonnegMatrix& a, const DiagonalParams& c, const DiagonalParams& d,
                              double t) { return convexity_gap(a, c, d, t); });
    m.def("midpoint_convexity_check",
          [](const NonnegMatrix& a, const DiagonalParams& d1, const DiagonalParams& d2) {
              return midpoint_convexity_check(a, d1, d2);
          });
    m.def("decide_property1", [](const SignPattern& p) {
        Property1Decision dec = decide_property1(p);
        py::dict out;
        out["holds"] = dec.holds;
        out["cause"] = dec.holds ? py::object(py::none()) : py::object(py::str(to_string(dec.cause)));
        return out;
    });
    m.def("certify",
          [](const NonnegMatrix& a) { return json_to_py(certificate_to_json(certify(a))); });
    m.def("construct_witness",
          [](const NonnegMatrix& a) { return json_to_py(witness_to_json(construct_witness(a))); });
    m.def("solve_equality_system", [](const SignPattern& p) {
        EqualitySystem sys = solve_equality_system(p);
        py::dict out;
        out["column_components"] = sys.column_components;
        out["component_of_column"] = sys.component_of_column;
        return out;
    });

    // structure predicates
    m.def("is_irreducible", &is_irreducible);
    m.def("period", &period);
    m.def("is_primitive", &is_primitive);
    m.def("product_pattern", &product_pattern);
    m.def("is_two_fold", &is_two_fold);
    m.def("is_chainable", &is_chainable);
    m.def("has_total_support", &has_total_support);
    m.def("is_fully_indecomposable", &is_fully_indecomposable);
    m.def("is_scrambling", &is_scrambling);
    m.def("board_move_irreducible", &board_move_irreducible, py::arg("pattern"),
          py::arg("vertical") = false);

    // generators
    m.def("wielandt", &wielandt);
    m.def("partly_decomposable_two_fold", &partly_decomposable_two_fold);
    m.def("worked_4x4", &worked_4x4);
    m.def("n_cycle", &n_cycle);
    m.def("cyclic_normal", &cyclic_normal);
    m.def("remark_2x2", &remark_2x2);
    m.def("random_pattern", &random_pattern);
    m.def("random_matrix", &random_matrix);

    // oracle
    m.def("irreducible_by_powers", &irreducible_by_powers);
    m.def("fully_indecomposable_by_konig", &fully_indecomposable_by_konig);
    m.def("pattern_has_cycle", &pattern_has_cycle);
    m.def(
        "theorem_sweep",
        [](int n, int threads) { return json_to_py(sweep_to_json(theorem_sweep(n, threads))); },
        py::arg("n"), py::arg("threads") = 0);
    m.def(
        "property1_numeric_probe",
        [](const SignPattern& p, int trials, std::uint64_t seed) {
            ProbeResult res = property1_numeric_probe(p, trials, seed);
            py::dict out;
            out["agree"] = res.agree;
            out["strict"] = res.strict;
            out["detail"] = res.detail;
            return out;
        },
        py::arg("pattern"), py::arg("trials") = 3, py::arg("seed") = 0);
}

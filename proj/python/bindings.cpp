#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dfrob/cli.hpp"
#include "dfrob/errors.hpp"
#include "dfrob/frobenius.hpp"
#include "dfrob/io.hpp"
#include "dfrob/lattice_models.hpp"
#include "dfrob/operators.hpp"
#include "dfrob/rota_series.hpp"
#include "dfrob/special_functions.hpp"

namespace py = pybind11;
using namespace dfrob;

// Rational <-> fractions.Fraction; int and str are accepted on input, float is not.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src || PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
        const auto fraction = module_::import("fractions").attr("Fraction");
        if (PyLong_Check(src.ptr()) || isinstance(src, fraction) || PyUnicode_Check(src.ptr())) {
            value = Rational::parse(py::str(src).cast<std::string>());
            return true;
        }
        return false;
    }

    static handle cast(const Rational& r, return_value_policy, handle) {
        return module_::import("fractions").attr("Fraction")(r.str()).release();
    }
};
}  // namespace pybind11::detail

namespace {

using Rats = std::vector<Rational>;

std::string basis_for(Lattice lattice, const Rational& step) { return lattice_basis_name(lattice, step); }

DeltaOperator delta_for(const std::string& name, const Rational& step, std::size_t cutoff) {
    if (step != Rational(1)) {
        if (name == "forward") return DeltaOperator::forward_step(step, cutoff);
        if (name == "backward") return DeltaOperator::backward_step(step, cutoff);
        throw InvalidDeltaOperator("a mesh step applies to forward and backward only");
    }
    return DeltaOperator::by_name(name, cutoff);
}

DifferenceEquation equation_for(const ODEProblem& p, Lattice lattice, const Rational& step, bool simplified) {
    if (step == Rational(1)) {
        const auto eq = generate(p, lattice);
        return simplified ? simplify(eq) : eq;
    }
    return rescale_mesh(p, step, lattice);
}

std::vector<std::pair<long, Rational>> terms_of(const DifferenceEquation& eq, long n) {
    std::vector<std::pair<long, Rational>> out;
    for (const auto& t : eq.terms(n)) out.emplace_back(t.offset, t.coeff);
    return out;
}

}  // namespace

PYBIND11_MODULE(_dfrob, m) {
    m.doc() = "Exact umbral discretization of linear second-order ODEs";

    auto base = py::register_exception<Error>(m, "DfrobError");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<InvalidProblem>(m, "InvalidProblem", base);
    py::register_exception<Underdetermined>(m, "Underdetermined", base);
    py::register_exception<NoAdmissibleRoot>(m, "NoAdmissibleRoot", base);
    py::register_exception<LogarithmicCaseRequired>(m, "LogarithmicCaseRequired", base);
    py::register_exception<UnsupportedCase>(m, "UnsupportedCase", base);

    py::class_<ODEProblem>(m, "Problem")
        .def_property_readonly("kind",
                               [](const ODEProblem& p) { return p.kind == ProblemKind::ordinary ? "ordinary" : "regular_singular"; })
        .def("to_json", [](const ODEProblem& p) { return to_json(p).dump(); })
        .def("__eq__", [](const ODEProblem& a, const ODEProblem& b) { return a == b; })
        .def("__repr__", [](const ODEProblem& p) { return "Problem(" + to_json(p).dump() + ")"; });

    m.def(
        "ordinary_problem",
        [](const Rats& a, const Rats& b, const Rational& zeta0, const Rational& zeta1) {
            return ordinary_problem(a, b, zeta0, zeta1);
        },
        py::arg("a"), py::arg("b"), py::arg("zeta0") = Rational(1), py::arg("zeta1") = Rational(0),
        "u'' + A u' + B u = 0 with A, B given by their Taylor coefficients.");
    m.def(
        "singular_problem",
        [](const Rats& r, const Rats& s, const std::string& normalize) {
            return singular_problem(r, s, parse_normalization(normalize));
        },
        py::arg("r"), py::arg("s"), py::arg("normalize") = "unit", "x^2 u'' + R u' + S u = 0 with R(0) = 0.");
    m.def(
        "problem_from_json", [](const std::string& text) { return problem_from_json(Json::parse(text)).problem; },
        py::arg("text"));
    m.def(
        "family_problem",
        [](const std::string& name, const std::string& lambda, const std::string& nu, const std::string& alpha,
           const std::string& beta) { return family_problem(make_family(name, lambda, nu, alpha, beta)); },
        py::arg("name"), py::arg("lam") = "", py::arg("nu") = "", py::arg("alpha") = "", py::arg("beta") = "");

    m.def(
        "basic_polynomials",
        [](const std::string& op, std::size_t n, const Rational& step) {
            const auto seq = basic_sequence_solve(delta_for(op, step, n), n);
            std::vector<Rats> out;
            for (const auto& p : seq.polys) out.push_back(p.coeffs());
            return out;
        },
        py::arg("operator"), py::arg("n"), py::arg("step") = Rational(1),
        "Monomial coefficients of p_0..p_n for the named delta operator.");
    m.def(
        "star_product",
        [](const Rats& f, const Rats& g) { return star_product({"forward", f}, {"forward", g}).zeta; }, py::arg("f"),
        py::arg("g"));
    m.def(
        "solve_series",
        [](const ODEProblem& p, std::size_t order, const std::string& lattice, const Rational& step) {
            return solve_series(p, order, basis_for(parse_lattice(lattice), step)).zeta;
        },
        py::arg("problem"), py::arg("order") = 50, py::arg("lattice") = "Lplus", py::arg("step") = Rational(1),
        "Series coefficients zeta_0..zeta_order.");
    m.def(
        "zeta_to_u",
        [](const Rats& zeta, std::size_t m, const std::string& lattice, const Rational& step) {
            const Lattice l = parse_lattice(lattice);
            return zeta_to_u({basis_for(l, step), zeta}, l, m, step).values;
        },
        py::arg("zeta"), py::arg("m"), py::arg("lattice") = "Lplus", py::arg("step") = Rational(1));
    m.def(
        "u_to_zeta",
        [](const Rats& u, const std::string& lattice, const Rational& step) {
            return u_to_zeta({parse_lattice(lattice), step, u}).zeta;
        },
        py::arg("u"), py::arg("lattice") = "Lplus", py::arg("step") = Rational(1));
    m.def(
        "discretize",
        [](const ODEProblem& p, long length, const std::string& lattice, const Rational& step, bool simplified) {
            const auto eq = equation_for(p, parse_lattice(lattice), step, simplified);
            py::dict out;
            out["valid_from"] = eq.valid_from();
            py::list rows;
            for (long n = eq.valid_from(); n <= length; ++n) rows.append(py::make_tuple(n, terms_of(eq, n)));
            out["rows"] = rows;
            return out;
        },
        py::arg("problem"), py::arg("length") = 10, py::arg("lattice") = "Lplus", py::arg("step") = Rational(1),
        py::arg("simplified") = true, "Rows (n, [(offset, coeff)]): sum coeff * u[n + offset] = 0.");
    m.def(
        "residuals",
        [](const ODEProblem& p, const Rats& u, const std::string& lattice, const Rational& step) {
            const Lattice l = parse_lattice(lattice);
            std::vector<std::pair<long, Rational>> out;
            for (const auto& row : residual_sweep(equation_for(p, l, step, true), {l, step, u})) out.emplace_back(row.n, row.value);
            return out;
        },
        py::arg("problem"), py::arg("u"), py::arg("lattice") = "Lplus", py::arg("step") = Rational(1));
    m.def(
        "family_solutions",
        [](const std::string& name, std::size_t length, const std::string& lattice, const std::string& lambda,
           const std::string& nu, const std::string& alpha, const std::string& beta) {
            py::dict out;
            for (const auto& s : family_solutions({make_family(name, lambda, nu, alpha, beta), parse_lattice(lattice), length}))
                out[py::str(s.name)] = s.values.values;
            return out;
        },
        py::arg("name"), py::arg("length") = 50, py::arg("lattice") = "Lplus", py::arg("lam") = "", py::arg("nu") = "",
        py::arg("alpha") = "", py::arg("beta") = "");
    m.def(
        "continuum_error",
        [](const ODEProblem& p, const Rational& x, long n, int digits) {
            const auto e = continuum_error(p, x, n, 0, digits);
            return py::make_tuple(e.exact, e.decimal);
        },
        py::arg("problem"), py::arg("x"), py::arg("n"), py::arg("digits") = 30,
        "(exact, decimal) distance between the lattice value at h = x/n and the series at x.");
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}

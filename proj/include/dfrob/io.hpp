#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV forms of problems, series, lattice functions and equations.
 *
 * Rationals are written as canonical "p/q" strings ("3", "-1/4"). On input a
 * JSON integer is accepted as well; JSON floating-point numbers are rejected.
 *
 * Problem files:
 *   {"kind": "ordinary", "a": [...], "b": [...], "zeta0": "1", "zeta1": "0"}
 *   {"kind": "regular_singular", "r": [...], "s": [...], "normalize": "bessel"}
 *   {"family": "hermite", "lambda": "3"}     also airy, bessel (nu), constant (alpha, beta)
 * A coefficient sequence is a list or {"exp_scaled": "c"} for c^l / l!.
 */

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dfrob/frobenius.hpp"
#include "dfrob/lattice_models.hpp"
#include "dfrob/polynomial.hpp"
#include "dfrob/rational.hpp"
#include "dfrob/rota_series.hpp"
#include "dfrob/special_functions.hpp"

namespace dfrob {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const std::vector<Rational>& values);
std::vector<Rational> rationals_from_json(const Json& j);

Json to_json(const Polynomial& p);  // coefficient list, constant term first
Json to_json(const CoefficientSequence& seq);
CoefficientSequence sequence_from_json(const Json& j);

Json to_json(const ODEProblem& p);
Json to_json(const Family& family);
Json to_json(const RotaSeries& f);  // {"operator": basis, "zeta": [...]}

const char* to_string(Normalization n);  // "unit" / "bessel"
Normalization parse_normalization(const std::string& text);  // unit|default|bessel

/// A parsed problem file; `family` is set when the file names a built-in family.
struct ProblemInput {
    ODEProblem problem;
    std::optional<Family> family;
};

ProblemInput problem_from_json(const Json& j);
ProblemInput load_problem(const std::string& path);
Json load_json(const std::string& path);

/// Family by name with its parameters given as strings (empty = default:
/// lambda 0, nu 0, alpha/beta required for constant).
Family make_family(const std::string& name, const std::string& lambda = "", const std::string& nu = "",
                   const std::string& alpha = "", const std::string& beta = "");

/// `index,x,u` table, plus a `u_decimal` column when digits > 0.
void write_lattice_csv(std::ostream& os, const LatticeFunction& u, int digits = 0);
Json to_json(const LatticeFunction& u);  // {"lattice", "step", "u"}

/// Reads the `index,x,u` table out of CSV text (text before the header row is
/// skipped, extra columns ignored). x must match the given lattice and step.
LatticeFunction lattice_from_csv(const std::string& text, Lattice lattice, const Rational& step);
LatticeFunction lattice_from_json(const Json& j);

/// Lattice values from a file holding either a solve JSON document or a CSV table.
LatticeFunction load_lattice_values(const std::string& path, Lattice lattice, const Rational& step);

/// Rows n = from..to of an equation as {"n", "terms": [{"offset", "c"}]}.
Json equation_to_json(const DifferenceEquation& eq, long from, long to);
/// `n,offset,coeff` rows.
void write_equation_csv(std::ostream& os, const DifferenceEquation& eq, long from, long to);

std::string join(const std::vector<Rational>& values, char sep = ',');

}  // namespace dfrob

#pragma once

/**
 * @file lattice_models.hpp
 * @brief Difference equations on L+ / L- generated from ODE coefficients.
 *
 * A DifferenceEquation is a rule n -> {(offset, c)} meaning
 * sum c * u[n + offset] = 0, where u[i] is the lattice value at index i
 * (x = i h on L+, x = -i h on L-). The rule is evaluated lazily because the
 * bandwidth grows with n when A, B (or R, S) are not polynomials.
 *
 * Ordinary form on L+ (step 1):
 *   u[n+2] - 2u[n+1] + u[n] + sum_{l<=n} n!/(n-l)! [a_l u[n-l+1] - (a_l - b_l) u[n-l]] = 0
 * Singular form on L+:
 *   n(n-1)(u[n] - 2u[n-1] + u[n-2]) + sum_{l<=n} n!/(n-l)! [r_l u[n-l+1] - (r_l - s_l) u[n-l]] = 0
 * On L- every l-term picks up (-1)^l and a_l -> -a_l in the first-order part.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dfrob/frobenius.hpp"
#include "dfrob/polynomial.hpp"
#include "dfrob/rational.hpp"
#include "dfrob/rota_series.hpp"

namespace dfrob {

struct Term {
    long offset;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Coefficient of u[n + offset] as a polynomial in n (exists when the
/// problem's sequences are finite lists).
struct SymbolicTerm {
    long offset;
    Polynomial coeff;

    friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
};

enum class EquationForm { ordinary, singular };

using CoeffRule = std::function<std::vector<Term>(long n)>;

class DifferenceEquation {
public:
    DifferenceEquation(Lattice lattice, EquationForm form, CoeffRule rule, long valid_from, ODEProblem source,
                       Rational step = 1, std::optional<std::vector<SymbolicTerm>> symbolic = std::nullopt);

    [[nodiscard]] Lattice lattice() const { return lattice_; }
    [[nodiscard]] EquationForm form() const { return form_; }
    [[nodiscard]] long valid_from() const { return valid_from_; }
    [[nodiscard]] const Rational& step() const { return step_; }
    [[nodiscard]] const ODEProblem& source() const { return source_; }
    [[nodiscard]] const std::optional<std::vector<SymbolicTerm>>& symbolic() const { return symbolic_; }
    /// Polynomial in n cancelled from the generated rule (1 when unsimplified).
    [[nodiscard]] const Polynomial& cancelled_factor() const { return cancelled_; }

    /// Terms at n with like offsets merged, zero coefficients dropped, sorted by descending offset.
    [[nodiscard]] std::vector<Term> terms(long n) const;

    [[nodiscard]] DifferenceEquation with_cancelled(Polynomial factor, long valid_from, CoeffRule rule,
                                                    std::vector<SymbolicTerm> symbolic) const;

private:
    Lattice lattice_;
    EquationForm form_;
    CoeffRule rule_;
    long valid_from_;
    ODEProblem source_;
    Rational step_;
    std::optional<std::vector<SymbolicTerm>> symbolic_;
    Polynomial cancelled_ = Polynomial::constant(1);
};

DifferenceEquation generate_ordinary_forward(const ODEProblem& p);
DifferenceEquation generate_ordinary_backward(const ODEProblem& p);
DifferenceEquation generate_singular_forward(const ODEProblem& p);
DifferenceEquation generate_singular_backward(const ODEProblem& p);

/// Dispatch on problem kind and lattice.
DifferenceEquation generate(const ODEProblem& p, Lattice lattice);

/// Divides out the integer-root linear factors (n - j) common to every
/// coefficient polynomial. valid_from is raised past every cancelled root and
/// far enough that each surviving offset indexes a lattice point >= 0.
/// Equations without a symbolic form, or without common factors, are returned unchanged.
DifferenceEquation simplify(const DifferenceEquation& eq);

/// Rule on a mesh of step h: ordinary form
///   (1/h^2)(u[n+2] - 2u[n+1] + u[n]) + sum_l n! h^l/(n-l)! [(a_l/h)(u[n-l+1] - u[n-l]) + b_l u[n-l]] = 0,
/// singular form
///   n(n-1)(u[n] - 2u[n-1] + u[n-2]) + sum_l n! h^l/(n-l)! [(r_l/h)(u[n-l+1] - u[n-l]) + s_l u[n-l]] = 0.
/// At h = 1 it coincides with generate().
DifferenceEquation rescale_mesh(const ODEProblem& p, const Rational& h, Lattice lattice = Lattice::plus);

/// Left-hand side at n. Throws IndexOutOfRange when n < valid_from or a
/// nonzero term reaches outside u, Error on lattice/step mismatch.
Rational residual(const DifferenceEquation& eq, const LatticeFunction& u, long n);

struct ResidualRow {
    long n;
    Rational value;
};

/// Residuals for n = valid_from .. the last n whose terms all stay inside u.
std::vector<ResidualRow> residual_sweep(const DifferenceEquation& eq, const LatticeFunction& u);

/// T_kj for the ordinary form on L+ at lattice index n (inverse factorials of
/// negative integers vanish).
Rational tkj(long n, long k, long j, const ODEProblem& p);

/// C_j = sum_{k>=j} T_kj.
Rational cj_bruteforce(long n, long j, const ODEProblem& p);

/// Singular-form analogues T^s_kj and C^s_j.
Rational tkj_singular(long n, long k, long j, const ODEProblem& p);
Rational cj_singular_bruteforce(long n, long j, const ODEProblem& p);

/// {C_j} at n as terms with offset j - n (zeros dropped, descending offset).
std::vector<Term> cj_row(long n, const ODEProblem& p);

struct ContinuumError {
    long n;
    Rational step;        // h = x / n
    Rational lattice_value;  // u_n(h) = sum_{k<=n} zeta_k h^k n!/(n-k)!
    Rational reference;      // sum_{k<=K} zeta_k x^k
    Rational exact;          // |lattice_value - reference|
    std::string decimal;     // exact rounded to the requested significant digits
};

ContinuumError continuum_error(const RotaSeries& zeta, const Rational& x, long n, int digits = 30);

/// Builds zeta from the problem's own initial data / normalization with the
/// given reference order (0 selects 4n + 64).
ContinuumError continuum_error(const ODEProblem& p, const Rational& x, long n, std::size_t reference_order = 0,
                               int digits = 30);

}  // namespace dfrob

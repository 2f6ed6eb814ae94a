#pragma once

/**
 * @file frobenius.hpp
 * @brief Series-coefficient recurrences for second-order linear ODEs.
 *
 * Ordinary point:   u'' + A(x) u' + B(x) u = 0, A = sum a_l x^l, B = sum b_l x^l.
 * Regular singular: x^2 u'' + R(x) u' + S(x) u = 0, R = sum r_l x^l with r_0 = 0.
 *
 * The recurrences are the same in every Rota algebra, so the zeta produced
 * here are reused unchanged on either lattice.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfrob/rational.hpp"
#include "dfrob/rota_series.hpp"

namespace dfrob {

/// Analytic-coefficient sequence: a finite list with an implicit zero tail,
/// or the named generator exp_scaled(c) with terms c^l / l! (coefficients of e^{cx}).
class CoefficientSequence {
public:
    CoefficientSequence() = default;
    CoefficientSequence(std::vector<Rational> values);  // NOLINT(google-explicit-constructor)
    CoefficientSequence(std::initializer_list<Rational> values);

    static CoefficientSequence exp_scaled(const Rational& c);

    [[nodiscard]] Rational operator[](std::size_t l) const;

    /// Number of stored terms for a finite list; nullopt for a generator.
    [[nodiscard]] std::optional<std::size_t> finite_length() const;
    [[nodiscard]] bool is_generator() const { return generator_.has_value(); }
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
    [[nodiscard]] const std::optional<Rational>& generator_scale() const { return generator_; }

    friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

private:
    std::vector<Rational> values_;      // trailing zeros stripped
    std::optional<Rational> generator_;
};

enum class ProblemKind { ordinary, regular_singular };

enum class Normalization { unit, bessel };

struct ODEProblem {
    ProblemKind kind = ProblemKind::ordinary;
    CoefficientSequence first;   // a_l (ordinary) or r_l (regular singular)
    CoefficientSequence second;  // b_l (ordinary) or s_l (regular singular)
    Rational zeta0 = 1;          // ordinary initial data
    Rational zeta1 = 0;
    Normalization normalize = Normalization::unit;

    [[nodiscard]] const CoefficientSequence& a() const { return first; }
    [[nodiscard]] const CoefficientSequence& b() const { return second; }
    [[nodiscard]] const CoefficientSequence& r() const { return first; }
    [[nodiscard]] const CoefficientSequence& s() const { return second; }

    friend bool operator==(const ODEProblem&, const ODEProblem&) = default;
};

/// Validates the declared form; throws InvalidProblem (e.g. r_0 != 0).
ODEProblem classify(ProblemKind kind, CoefficientSequence first, CoefficientSequence second);

ODEProblem ordinary_problem(CoefficientSequence a, CoefficientSequence b, Rational zeta0 = 1, Rational zeta1 = 0);
ODEProblem singular_problem(CoefficientSequence r, CoefficientSequence s, Normalization n = Normalization::unit);

/// zeta_0, zeta_1 given; zeta_{k+2} = -[1/((k+2)(k+1))] sum_{m<=k} [(m+1) a_{k-m} zeta_{m+1} + b_{k-m} zeta_m].
RotaSeries zeta_ordinary(const ODEProblem& p, const Rational& zeta0, const Rational& zeta1, std::size_t n,
                         const std::string& basis = "forward");

/// (k+2)(k+1) zeta_{k+2} + sum_{m<=k} [(m+1) a_{k-m} zeta_{m+1} + b_{k-m} zeta_m]; zero on solutions.
Rational ordinary_recurrence_residual(const ODEProblem& p, const RotaSeries& zeta, std::size_t k);

enum class RootKind { rational, irrational, complex };

struct IndicialData {
    Rational r1;
    Rational s0;
    RootKind root_kind = RootKind::rational;
    std::optional<std::pair<Rational, Rational>> roots;  // (larger, smaller) when rational
    std::optional<long> admissible_root;                  // larger root if it is a non-negative integer
};

/// Roots of lambda(lambda-1) + r_1 lambda + s_0.
IndicialData indicial(const ODEProblem& p);

/// k(k-1) + k r_1 + s_0.
Rational indicial_factor(const ODEProblem& p, long k);

struct SingularSolution {
    RotaSeries series;
    std::vector<std::size_t> free_indices;  // k where the leading factor vanished with a zero sum
    IndicialData indicial;
};

/// Recurrence [k(k-1) + k r_1 + s_0] zeta_k + sum_{l=1}^k [(k-l) r_{l+1} + s_l] zeta_{k-l} = 0.
/// The free coefficient at the admissible root is `leading` if given, else
/// the problem's normalization (1, or 1/(2^lambda lambda!) for bessel); other
/// free coefficients are 0 unless given in `free_values`. Throws
/// NoAdmissibleRoot / LogarithmicCaseRequired.
SingularSolution zeta_singular(const ODEProblem& p, std::size_t n, std::optional<Rational> leading = std::nullopt,
                               const std::string& basis = "forward",
                               const std::map<std::size_t, Rational>& free_values = {});

/// Left-hand side of the singular recurrence at k; zero on solutions.
Rational singular_recurrence_residual(const ODEProblem& p, const RotaSeries& zeta, std::size_t k);

/// Frobenius series of order n using the problem's own initial data / normalization.
RotaSeries solve_series(const ODEProblem& p, std::size_t n, const std::string& basis = "forward");

}  // namespace dfrob

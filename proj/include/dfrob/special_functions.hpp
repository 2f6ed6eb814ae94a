#pragma once

/**
 * @file special_functions.hpp
 * @brief Closed-form lattice solutions of the worked model families.
 *
 * Each family's series coefficients are written in closed form here, with
 * no call into the Frobenius recurrences, so they serve as independent
 * golden references:
 *
 *   constant  u'' + alpha u' + beta u = 0     zeta_k = r^k / k!, r a root of r^2 + alpha r + beta
 *   airy      u'' - x u = 0                    Ai: zeta_{3k} = 1/(3^k k! 2*5*...*(3k-1))
 *                                              Bi: zeta_{3k+1} = 1/(3^k k! 4*7*...*(3k+1))
 *   hermite   u'' - 2x u' + 2 lambda u = 0    H_N for lambda = N in N, else even/odd series
 *   bessel    x^2 u'' + x u' + (x^2 - nu^2) u = 0
 *                                              J_nu: zeta_{2k+nu} = (-1)^k / (2^{2k+nu} k! (k+nu)!)
 *
 * Ai and Bi keep the plain series normalization (zeta_0 = 1 resp. zeta_1 = 1),
 * without the Gamma-function factors of the classical Airy functions.
 */

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "dfrob/frobenius.hpp"
#include "dfrob/lattice_models.hpp"
#include "dfrob/rational.hpp"
#include "dfrob/rota_series.hpp"

namespace dfrob {

struct ConstantCoeff {
    Rational alpha;
    Rational beta;
};
struct Airy {};
struct Hermite {
    Rational lambda;
};
struct Bessel {
    long nu = 0;
};

using Family = std::variant<ConstantCoeff, Airy, Hermite, Bessel>;

struct FamilySpec {
    Family family;
    Lattice lattice = Lattice::plus;
    std::size_t length = 50;  // M: values u_0..u_M
};

std::string family_name(const Family& family);  // "constant", "airy", "hermite", "bessel"

/// The ODE written as an ODEProblem (ordinary for constant/airy/hermite,
/// regular singular with bessel normalization for bessel).
ODEProblem family_problem(const Family& family);

struct FamilySolution {
    std::string name;       // e.g. "Ai", "J_2", "H_3", "u1"
    RotaSeries zeta;        // closed-form coefficients through order M
    LatticeFunction values; // u_0..u_M on the requested lattice
    bool exact = true;      // false when sqrt(alpha^2 - 4 beta) had to be approximated
};

/// All independent solutions the family provides: Ai, Bi; u1, u2 (u1 only
/// when alpha^2 = 4 beta); H_N or the even and odd series; J_nu.
std::vector<FamilySolution> family_solutions(const FamilySpec& spec);

/// The primary solution: Ai, u1, H_N (or the even series), J_nu.
LatticeFunction lattice_values(const FamilySpec& spec);

/// The family's difference equation, written out explicitly rather than
/// generated: airy  u[n+2] - 2u[n+1] + u[n] - n u[n-1] (L+),
/// hermite u[n+2] - 2u[n+1] + (1 + 2 lambda - 2n) u[n] + 2n u[n-1] (both lattices),
/// bessel-0 n u[n] - (2n-1) u[n-1] + 2(n-1) u[n-2] from n = 2 (both lattices),
/// bessel-nu (n^2 - nu^2) u[n] - n(2n-1) u[n-1] + 2n(n-1) u[n-2] (both lattices).
DifferenceEquation family_equation(const FamilySpec& spec);

}  // namespace dfrob

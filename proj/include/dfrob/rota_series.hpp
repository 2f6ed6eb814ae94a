#pragma once

/**
 * @file rota_series.hpp
 * @brief Truncated series sum_k zeta_k p_k(x) in a basic-polynomial basis.
 *
 * The star product p_n * p_m = p_{n+m} turns coefficient lists into a ring in
 * which the delta operator acts as a derivation, (Q f)_k = (k+1) zeta_{k+1}.
 *
 * Lattice transforms: on L+ (zeros of p_k^+, points x = n h) the series
 * evaluates to the finite sum u_n = sum_{k<=n} zeta_k h^k n!/(n-k)!; on L-
 * (points x = -m h) the identity p_k^-(-x) = (-1)^k p_k^+(x) reduces the
 * transform to the L+ kernel applied to (-1)^k zeta_k.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dfrob/operators.hpp"
#include "dfrob/polynomial.hpp"
#include "dfrob/rational.hpp"

namespace dfrob {

struct RotaSeries {
    std::string basis = "forward";  // name of the delta operator whose p_k the zeta refer to
    std::vector<Rational> zeta;     // zeta_0..zeta_N; later coefficients are zero

    /// N; -1 for the empty (zero) series.
    [[nodiscard]] long order() const { return static_cast<long>(zeta.size()) - 1; }
    [[nodiscard]] Rational coeff(std::size_t k) const { return k < zeta.size() ? zeta[k] : Rational(0); }

    friend bool operator==(const RotaSeries&, const RotaSeries&) = default;
};

enum class Lattice { plus, minus };

const char* to_string(Lattice lattice);  // "Lplus" / "Lminus"
Lattice parse_lattice(const std::string& text);  // accepts Lplus/lplus/forward, Lminus/lminus/backward

struct LatticeFunction {
    Lattice lattice = Lattice::plus;
    Rational step = 1;
    std::vector<Rational> values;  // values[i] is the value at x = +i*step (L+) or -i*step (L-)

    [[nodiscard]] std::size_t size() const { return values.size(); }
    [[nodiscard]] Rational point(std::size_t i) const;

    friend bool operator==(const LatticeFunction&, const LatticeFunction&) = default;
};

/// Name of the delta operator whose zeros form the given lattice
/// ("forward", "backward", "forward_h(h)", "backward_h(h)").
std::string lattice_basis_name(Lattice lattice, const Rational& step = 1);

/// Coefficient convolution truncated at min(N_f + N_g, cap).
RotaSeries star_product(const RotaSeries& f, const RotaSeries& g, std::optional<long> cap = std::nullopt);

/// (Q f)_k = (k+1) zeta_{k+1}; the derivative of an order-0 series is empty.
RotaSeries q_derive(const RotaSeries& f);

RotaSeries operator+(const RotaSeries& f, const RotaSeries& g);
RotaSeries operator-(const RotaSeries& f, const RotaSeries& g);

/// Coefficient-wise equality treating missing coefficients as zero, up to `order`.
bool agree_up_to(const RotaSeries& f, const RotaSeries& g, long order);

/// Q(f*g) == (Qf)*g + f*(Qg) up to the common truncation order.
bool leibniz_check(const RotaSeries& f, const RotaSeries& g);

/// Exact lattice values u_0..u_M. The basic sequence picks lattice and step:
/// forward/forward_h -> L+, backward/backward_h -> L-.
LatticeFunction zeta_to_u(const RotaSeries& f, const BasicSequence& basic, std::size_t m);
LatticeFunction zeta_to_u(const RotaSeries& f, Lattice lattice, std::size_t m, const Rational& step = 1);

/// Inverse transform zeta_0..zeta_K with K = `order` (default: u.size() - 1).
/// Throws Underdetermined when u has fewer than K+1 values.
RotaSeries u_to_zeta(const LatticeFunction& u, std::optional<std::size_t> order = std::nullopt);

/// sum_k zeta_k p_k(x) in monomial form. Throws CutoffExceeded when the
/// series order exceeds the basic sequence, BasisMismatch on different bases.
Polynomial to_monomial(const RotaSeries& f, const BasicSequence& basic);

/// Expansion of p in the basic sequence (degree-triangular solve).
RotaSeries from_monomial(const Polynomial& p, const BasicSequence& basic);

}  // namespace dfrob

#pragma once

/**
 * @file operators.hpp
 * @brief Shift-invariant operators on the truncated polynomial space.
 *
 * Operators are stored extensionally: the image of every monomial x^k up to
 * a cutoff degree N. Anything that would need a degree above N raises
 * CutoffExceeded instead of truncating.
 *
 * A delta operator Q (shift-invariant, Q x = c != 0) has a unique basic
 * sequence p_0 = 1, p_n(0) = 0, Q p_n = n p_{n-1}. Two independent routes
 * build it: a degree-triangular solve of those conditions, and the
 * iteration p_n = x beta p_{n-1} with beta the inverse of the Pincherle
 * derivative Q' = [Q, x].
 */

#include <cstddef>
#include <string>
#include <vector>

#include "dfrob/polynomial.hpp"
#include "dfrob/rational.hpp"

namespace dfrob {

class LinearOperator {
public:
    /// columns[k] is the image of x^k; throws CutoffExceeded if any image
    /// has degree above columns.size() - 1.
    explicit LinearOperator(std::vector<Polynomial> columns);

    static LinearOperator identity(std::size_t cutoff);
    /// Operator given by p |-> f(p) on each monomial up to cutoff.
    template <typename F>
    static LinearOperator from_monomial_images(std::size_t cutoff, F&& image) {
        std::vector<Polynomial> cols;
        cols.reserve(cutoff + 1);
        for (std::size_t k = 0; k <= cutoff; ++k) cols.push_back(image(Polynomial::monomial(k)));
        return LinearOperator(std::move(cols));
    }

    [[nodiscard]] std::size_t cutoff() const { return columns_.size() - 1; }
    [[nodiscard]] const std::vector<Polynomial>& columns() const { return columns_; }
    [[nodiscard]] const Polynomial& column(std::size_t k) const { return columns_.at(k); }

    /// Throws CutoffExceeded when deg p > cutoff.
    [[nodiscard]] Polynomial apply(const Polynomial& p) const;
    [[nodiscard]] Polynomial operator()(const Polynomial& p) const { return apply(p); }

    /// Restriction to monomials of degree <= cutoff (which must not exceed the current one).
    [[nodiscard]] LinearOperator truncated(std::size_t cutoff) const;

    friend bool operator==(const LinearOperator&, const LinearOperator&) = default;

private:
    std::vector<Polynomial> columns_;
};

/// (a o b); both operands are restricted to the smaller cutoff.
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator*(const Rational& c, const LinearOperator& a);

enum class OperatorKind { forward, backward, symmetric, derivative, shift };

/// Delta_+ = T - 1, Delta_- = 1 - T^{-1}, Delta_s = (T - T^{-1})/2, D, or T^h.
/// `h` is only read for OperatorKind::shift.
LinearOperator make_operator(OperatorKind kind, std::size_t cutoff, const Rational& h = 1);

inline LinearOperator shift_operator(const Rational& h, std::size_t cutoff) {
    return make_operator(OperatorKind::shift, cutoff, h);
}

enum class DeltaKind { forward, backward, symmetric, derivative, custom };

const char* to_string(DeltaKind kind);

class DeltaOperator {
public:
    /// Validates the delta-operator axioms; throws InvalidDeltaOperator.
    DeltaOperator(LinearOperator op, DeltaKind kind, std::string name);

    static DeltaOperator forward(std::size_t cutoff);
    static DeltaOperator backward(std::size_t cutoff);
    static DeltaOperator symmetric(std::size_t cutoff);
    static DeltaOperator derivative(std::size_t cutoff);
    /// (T^h - 1)/h, the forward difference on a mesh of step h.
    static DeltaOperator forward_step(const Rational& h, std::size_t cutoff);
    /// (1 - T^{-h})/h.
    static DeltaOperator backward_step(const Rational& h, std::size_t cutoff);
    /// Abel operator D T^sigma (representative t e^{sigma t}); basic
    /// polynomials x (x - n sigma)^{n-1}.
    static DeltaOperator abel(const Rational& sigma, std::size_t cutoff);
    /// Gould operator T^a (T^b - 1) (representative e^{at}(e^{bt} - 1)).
    static DeltaOperator gould(const Rational& a, const Rational& b, std::size_t cutoff);

    /// Built-in operator by name: forward, backward, symmetric, derivative.
    static DeltaOperator by_name(const std::string& name, std::size_t cutoff);

    [[nodiscard]] const LinearOperator& op() const { return op_; }
    [[nodiscard]] DeltaKind kind() const { return kind_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const Rational& normalization() const { return normalization_; }
    [[nodiscard]] std::size_t cutoff() const { return op_.cutoff(); }

    [[nodiscard]] Polynomial apply(const Polynomial& p) const { return op_.apply(p); }

private:
    LinearOperator op_;
    DeltaKind kind_;
    std::string name_;
    Rational normalization_;
};

/// Q' = [Q, x], p |-> Q(x p) - x Q(p). Cutoff of the result is Q.cutoff() - 1.
LinearOperator pincherle(const DeltaOperator& q);

/// beta = (Q')^{-1} by degree-triangular back-substitution (cutoff Q.cutoff() - 1).
LinearOperator conjugate_beta(const DeltaOperator& q);

/// [Q, x beta] x^k == x^k for all k <= cutoff - 2.
bool heisenberg_weyl_holds(const DeltaOperator& q);

/// T o Q == Q o T on monomials up to cutoff - 1.
bool commutes_with_unit_shift(const LinearOperator& op);

struct BasicSequence {
    DeltaOperator delta;
    std::vector<Polynomial> polys;  // p_0..p_N

    [[nodiscard]] std::size_t order() const { return polys.size() - 1; }
    [[nodiscard]] const std::string& name() const { return delta.name(); }
    [[nodiscard]] const Polynomial& operator[](std::size_t n) const { return polys.at(n); }
};

/// Reference route: solve Q p_n = n p_{n-1}, p_n(0) = 0 degree by degree.
/// Requires N <= Q.cutoff().
BasicSequence basic_sequence_solve(const DeltaOperator& q, std::size_t n);

/// Cross-check route: p_n = (x beta)^n 1. Requires N <= Q.cutoff() - 1.
BasicSequence basic_sequence_beta(const DeltaOperator& q, std::size_t n);

/// p_0 = 1, p_n(0) = 0, deg p_n = n and Q p_n = n p_{n-1} for every stored n.
bool satisfies_basic_axioms(const BasicSequence& seq);

/// p_k^-(-x) == (-1)^k p_k^+(x) coefficient-wise for all k <= n.
bool backward_symmetry_check(std::size_t n);

}  // namespace dfrob

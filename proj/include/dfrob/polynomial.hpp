#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dfrob/rational.hpp"

namespace dfrob {

/// Dense polynomial over Rational in the monomial basis; coeffs[i] multiplies x^i.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients
/// and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& c = 1);
    /// x(x-1)...(x-k+1) (scaled by step: prod (x - j h)).
    static Polynomial falling(std::size_t k, const Rational& step = 1);
    /// x(x+1)...(x+k-1) (scaled by step: prod (x + j h)).
    static Polynomial rising(std::size_t k, const Rational& step = 1);

    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    [[nodiscard]] Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

    [[nodiscard]] Rational operator()(const Rational& x) const;

    /// p(x + h).
    [[nodiscard]] Polynomial shifted(const Rational& h) const;
    /// p(-x).
    [[nodiscard]] Polynomial reflected() const;
    /// x * p(x).
    [[nodiscard]] Polynomial times_x() const;
    /// dp/dx.
    [[nodiscard]] Polynomial derivative() const;

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    [[nodiscard]] Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace dfrob

#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Thin value type over GMP's mpq_class. Every result is kept in canonical
 * form (positive denominator, coprime parts), so structural equality is
 * numeric equality.
 *
 * Text format: optional leading '-' (U+2212 is also accepted on input),
 * decimal integer, optional '/' and a positive decimal integer.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dfrob {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& value) : v_(value) {}  // NOLINT(google-explicit-constructor)

    /// Throws DivisionByZero when den == 0.
    Rational(const Integer& num, const Integer& den);

    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return v_.get_num(); }
    [[nodiscard]] Integer denominator() const { return v_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    /// Canonical text form, e.g. "-13/8" or "42".
    [[nodiscard]] std::string str() const;

    /// Scientific notation with `significant` digits, correctly rounded
    /// (half away from zero) using integer arithmetic only.
    [[nodiscard]] std::string to_decimal(int significant = 30) const;

    [[nodiscard]] double to_double() const { return v_.get_d(); }

    /// Exact square root when both canonical parts are perfect squares.
    [[nodiscard]] std::optional<Rational> sqrt_exact() const;

    /// Rational approximation of the square root with at least `digits`
    /// correct decimal digits after the point. Requires a non-negative value.
    [[nodiscard]] Rational sqrt_approx(int digits) const;

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational pow(long exponent) const;

    [[nodiscard]] const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    struct RawTag {};
    Rational(RawTag, mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (-1)^k as a Rational.
inline Rational sign_power(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace dfrob

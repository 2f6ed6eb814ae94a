#include "dfrob/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "dfrob/errors.hpp"

namespace dfrob {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    } else if (s.size() >= 3 && s.substr(0, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
        negative = true;
        s.remove_prefix(3);
    }
    const auto slash = s.find('/');
    const std::string_view num_text = s.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    if (negative) num = -num;
    return {num, den};
}

std::string Rational::str() const { return v_.get_str(10); }

std::string Rational::to_decimal(int significant) const {
    significant = std::max(significant, 1);
    if (is_zero()) return "0";
    const Integer num = ::abs(v_.get_num());
    const Integer& den = v_.get_den();

    // Find e with 10^e <= |v| < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    auto at_least = [&](long exp10) {  // |v| >= 10^exp10
        if (exp10 >= 0) return num >= den * pow10(static_cast<unsigned long>(exp10));
        return num * pow10(static_cast<unsigned long>(-exp10)) >= den;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;

    // mantissa = round(|v| * 10^(significant-1-e))
    const long shift = significant - 1 - e;
    Integer scaled_num = num;
    Integer scaled_den = den;
    if (shift >= 0) {
        scaled_num *= pow10(static_cast<unsigned long>(shift));
    } else {
        scaled_den *= pow10(static_cast<unsigned long>(-shift));
    }
    Integer mantissa = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    if (mantissa >= pow10(static_cast<unsigned long>(significant))) {  // rounding carried into a new digit
        mantissa /= 10;
        ++e;
    }
    std::string digits = mantissa.get_str(10);
    std::string out = sign() < 0 ? "-" : "";
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
        out += '.';
        out += digits.substr(1);
    }
    out += 'e';
    out += std::to_string(e);
    return out;
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    const Integer num = v_.get_num();
    const Integer& den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

Rational Rational::sqrt_approx(int digits) const {
    if (sign() < 0) throw Error("square root of a negative rational");
    if (auto exact = sqrt_exact()) return *exact;
    // sqrt(n/d) = sqrt(n*d)/d, evaluated as isqrt(n*d*10^(2k)) / (d*10^k).
    const Integer scale = pow10(static_cast<unsigned long>(std::max(digits, 1) + 2));
    const Integer radicand = v_.get_num() * v_.get_den() * scale * scale;
    return {sqrt(radicand), v_.get_den() * scale};
}

Rational Rational::abs() const { return Rational(RawTag{}, mpq_class(::abs(v_))); }

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw DivisionByZero();
        return Rational(1) / pow(-exponent);
    }
    Integer n;
    Integer d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return {n, d};
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const { return Rational(RawTag{}, mpq_class(-v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dfrob

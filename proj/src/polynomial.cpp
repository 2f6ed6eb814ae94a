#include "dfrob/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "dfrob/combinatorics.hpp"
#include "dfrob/errors.hpp"

namespace dfrob {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial{c}; }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::falling(std::size_t k, const Rational& step) {
    Polynomial p = constant(1);
    for (std::size_t j = 0; j < k; ++j) p = p * Polynomial{-Rational(static_cast<long>(j)) * step, 1};
    return p;
}

Polynomial Polynomial::rising(std::size_t k, const Rational& step) {
    Polynomial p = constant(1);
    for (std::size_t j = 0; j < k; ++j) p = p * Polynomial{Rational(static_cast<long>(j)) * step, 1};
    return p;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shifted(const Rational& h) const {
    // p(x+h) = sum_i c_i sum_j C(i,j) h^(i-j) x^j
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Rational hp = 1;
        for (std::size_t j = i + 1; j-- > 0;) {
            out[j] += coeffs_[i] * Rational(binomial(static_cast<long>(i), static_cast<long>(j))) * hp;
            hp *= h;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reflected() const {
    std::vector<Rational> out = coeffs_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::times_x() const {
    if (is_zero()) return {};
    std::vector<Rational> out;
    out.reserve(coeffs_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree()) return {Polynomial{}, rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
    const Rational lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        const Rational q = rem.leading() / lead;
        quot[shift] = q;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= q * divisor.coeffs_[i];
        rem.normalize();
    }
    return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational mag = c.abs();
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os;
}

}  // namespace dfrob

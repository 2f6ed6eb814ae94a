#include "dfrob/special_functions.hpp"

#include "dfrob/combinatorics.hpp"
#include "dfrob/errors.hpp"

namespace dfrob {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr int kInexactDigits = 40;

Rational lattice_sign(Lattice lattice, long k) { return lattice == Lattice::minus ? sign_power(k) : Rational(1); }

// u_i = sum_{k<=i} zeta_k (+-1)^k i!/(i-k)!, written out directly.
std::vector<Rational> direct_values(const std::vector<Rational>& zeta, Lattice lattice, std::size_t m) {
    std::vector<Rational> out(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        const long n = static_cast<long>(i);
        Rational acc = 0;
        for (long k = 0; k <= n && k < static_cast<long>(zeta.size()); ++k) {
            const Rational& z = zeta[static_cast<std::size_t>(k)];
            if (!z.is_zero()) acc += z * lattice_sign(lattice, k) * falling_factorial(n, k);
        }
        out[i] = std::move(acc);
    }
    return out;
}

FamilySolution make_solution(std::string name, std::vector<Rational> zeta, const FamilySpec& spec, bool exact = true) {
    FamilySolution s;
    s.name = std::move(name);
    s.values = LatticeFunction{spec.lattice, 1, direct_values(zeta, spec.lattice, spec.length)};
    s.zeta = RotaSeries{lattice_basis_name(spec.lattice), std::move(zeta)};
    s.exact = exact;
    return s;
}

struct CharacteristicRoots {
    Rational r1;  // (sqrt(D) - alpha)/2
    Rational r2;  // -(sqrt(D) + alpha)/2
    bool repeated;
    bool exact;
};

CharacteristicRoots characteristic_roots(const ConstantCoeff& c) {
    const Rational disc = c.alpha * c.alpha - Rational(4) * c.beta;
    if (disc.sign() < 0) throw UnsupportedCase("complex characteristic roots (alpha^2 - 4 beta < 0)");
    const auto exact = disc.sqrt_exact();
    const Rational root = exact ? *exact : disc.sqrt_approx(kInexactDigits);
    return {(root - c.alpha) / Rational(2), -(root + c.alpha) / Rational(2), disc.is_zero(), exact.has_value()};
}

std::vector<Rational> exponential_zeta(const Rational& r, std::size_t m) {
    std::vector<Rational> z(m + 1);
    for (std::size_t k = 0; k <= m; ++k) z[k] = r.pow(static_cast<long>(k)) * inverse_factorial(static_cast<long>(k));
    return z;
}

// Ai: stride 3 from 0 with products 2*5*...*(3k-1); Bi: from 1 with 4*7*...*(3k+1).
std::vector<Rational> airy_zeta(std::size_t start, std::size_t m) {
    std::vector<Rational> z(m + 1);
    Integer product = 1;  // empty product for k = 0
    Integer three_pow = 1;
    for (std::size_t k = 0; 3 * k + start <= m; ++k) {
        if (k > 0) {
            product *= static_cast<unsigned long>(3 * k + 2 * start - 1);
            three_pow *= 3;
        }
        z[3 * k + start] = Rational(Integer(1), three_pow * factorial(static_cast<long>(k)) * product);
    }
    return z;
}

std::vector<Rational> hermite_polynomial_zeta(long big_n, std::size_t m) {
    std::vector<Rational> z(std::max<std::size_t>(m, static_cast<std::size_t>(big_n)) + 1);
    for (long j = 0; 2 * j <= big_n; ++j) {
        const long deg = big_n - 2 * j;
        z[static_cast<std::size_t>(deg)] = sign_power(j) * Rational(factorial(big_n)) * Rational(2).pow(deg) *
                                           inverse_factorial(j) * inverse_factorial(deg);
    }
    z.resize(m + 1);
    return z;
}

// Even (parity 0) or odd (parity 1) series: products of (4i + 2 parity - 2 lambda) over (2k + parity)!.
std::vector<Rational> hermite_series_zeta(const Rational& lambda, int parity, std::size_t m) {
    std::vector<Rational> z(m + 1);
    Rational product = 1;
    for (std::size_t k = 0; 2 * k + static_cast<std::size_t>(parity) <= m; ++k) {
        if (k > 0) product *= Rational(static_cast<long>(4 * (k - 1) + 2 * parity)) - Rational(2) * lambda;
        const long deg = static_cast<long>(2 * k) + parity;
        z[static_cast<std::size_t>(deg)] = product * inverse_factorial(deg);
    }
    return z;
}

std::vector<Rational> bessel_zeta(long nu, std::size_t m) {
    std::vector<Rational> z(m + 1);
    for (long k = 0; 2 * k + nu <= static_cast<long>(m); ++k) {
        const long deg = 2 * k + nu;
        z[static_cast<std::size_t>(deg)] =
            sign_power(k) * Rational(Integer(1), (Integer(1) << static_cast<mp_bitcnt_t>(deg)) * factorial(k) *
                                                     factorial(k + nu));
    }
    return z;
}

std::optional<long> nonnegative_integer(const Rational& x) {
    if (!x.is_integer() || x.sign() < 0) return std::nullopt;
    return x.numerator().get_si();
}

}  // namespace

std::string family_name(const Family& family) {
    return std::visit(overloaded{[](const ConstantCoeff&) { return std::string("constant"); },
                                 [](const Airy&) { return std::string("airy"); },
                                 [](const Hermite&) { return std::string("hermite"); },
                                 [](const Bessel&) { return std::string("bessel"); }},
                      family);
}

ODEProblem family_problem(const Family& family) {
    return std::visit(
        overloaded{
            [](const ConstantCoeff& c) {
                const auto roots = characteristic_roots(c);
                return ordinary_problem({c.alpha}, {c.beta}, 1, roots.r1);
            },
            [](const Airy&) { return ordinary_problem({}, {0, -1}, 1, 0); },
            [](const Hermite& h) {
                if (auto big_n = nonnegative_integer(h.lambda)) {
                    const auto z = hermite_polynomial_zeta(*big_n, 1);
                    return ordinary_problem({0, -2}, {Rational(2) * h.lambda}, z[0], z[1]);
                }
                return ordinary_problem({0, -2}, {Rational(2) * h.lambda}, 1, 0);
            },
            [](const Bessel& b) {
                if (b.nu < 0) throw InvalidProblem("Bessel order must be a non-negative integer");
                return singular_problem({0, 1}, {Rational(-b.nu * b.nu), 0, 1}, Normalization::bessel);
            }},
        family);
}

std::vector<FamilySolution> family_solutions(const FamilySpec& spec) {
    const std::size_t m = spec.length;
    return std::visit(
        overloaded{
            [&](const ConstantCoeff& c) {
                const auto roots = characteristic_roots(c);
                std::vector<FamilySolution> out;
                auto add = [&](const std::string& name, const Rational& r) {
                    auto s = make_solution(name, exponential_zeta(r, m), spec, roots.exact);
                    // Closed form: sum_k C(n,k) (+-r)^k = (1 +- r)^n.
                    const Rational base = spec.lattice == Lattice::plus ? Rational(1) + r : Rational(1) - r;
                    for (std::size_t i = 0; i <= m; ++i) s.values.values[i] = base.pow(static_cast<long>(i));
                    out.push_back(std::move(s));
                };
                add("u1", roots.r1);
                if (!roots.repeated) add("u2", roots.r2);
                return out;
            },
            [&](const Airy&) {
                return std::vector<FamilySolution>{make_solution("Ai", airy_zeta(0, m), spec),
                                                   make_solution("Bi", airy_zeta(1, m), spec)};
            },
            [&](const Hermite& h) {
                std::vector<FamilySolution> out;
                if (auto big_n = nonnegative_integer(h.lambda)) {
                    out.push_back(make_solution("H_" + std::to_string(*big_n), hermite_polynomial_zeta(*big_n, m), spec));
                    const int other = (*big_n % 2 == 0) ? 1 : 0;
                    out.push_back(make_solution(other == 0 ? "hermite_even" : "hermite_odd",
                                                hermite_series_zeta(h.lambda, other, m), spec));
                } else {
                    out.push_back(make_solution("hermite_even", hermite_series_zeta(h.lambda, 0, m), spec));
                    out.push_back(make_solution("hermite_odd", hermite_series_zeta(h.lambda, 1, m), spec));
                }
                return out;
            },
            [&](const Bessel& b) {
                if (b.nu < 0) throw InvalidProblem("Bessel order must be a non-negative integer");
                return std::vector<FamilySolution>{
                    make_solution("J_" + std::to_string(b.nu), bessel_zeta(b.nu, m), spec)};
            }},
        spec.family);
}

LatticeFunction lattice_values(const FamilySpec& spec) { return family_solutions(spec).front().values; }

DifferenceEquation family_equation(const FamilySpec& spec) {
    const bool minus = spec.lattice == Lattice::minus;
    const ODEProblem source = family_problem(spec.family);
    auto make = [&](EquationForm form, long valid_from, CoeffRule rule) {
        return DifferenceEquation(spec.lattice, form, std::move(rule), valid_from, source);
    };
    return std::visit(
        overloaded{
            [&](const ConstantCoeff& c) {
                // L+: u[n+2] + (alpha-2) u[n+1] - (alpha-beta-1) u[n]
                // L-: u[m+2] - (2+alpha) u[m+1] + (1+alpha+beta) u[m]
                const Rational c1 = minus ? -(Rational(2) + c.alpha) : c.alpha - Rational(2);
                const Rational c0 = minus ? Rational(1) + c.alpha + c.beta : Rational(1) - c.alpha + c.beta;
                return make(EquationForm::ordinary, 0, [c1, c0](long) {
                    return std::vector<Term>{{2, 1}, {1, c1}, {0, c0}};
                });
            },
            [&](const Airy&) {
                // u[n+2] - 2u[n+1] + u[n] -+ n u[n-1]
                const long sign = minus ? 1 : -1;
                return make(EquationForm::ordinary, 0, [sign](long n) {
                    return std::vector<Term>{{2, 1}, {1, -2}, {0, 1}, {-1, Rational(sign * n)}};
                });
            },
            [&](const Hermite& h) {
                const Rational lam = h.lambda;
                return make(EquationForm::ordinary, 0, [lam](long n) {
                    return std::vector<Term>{
                        {2, 1}, {1, -2}, {0, Rational(1 - 2 * n) + Rational(2) * lam}, {-1, Rational(2 * n)}};
                });
            },
            [&](const Bessel& b) {
                if (b.nu == 0) {
                    return make(EquationForm::singular, 2, [](long n) {
                        return std::vector<Term>{{0, n}, {-1, -(2 * n - 1)}, {-2, 2 * (n - 1)}};
                    });
                }
                const long nu2 = b.nu * b.nu;
                return make(EquationForm::singular, 0, [nu2](long n) {
                    return std::vector<Term>{{0, n * n - nu2}, {-1, -n * (2 * n - 1)}, {-2, 2 * n * (n - 1)}};
                });
            }},
        spec.family);
}

}  // namespace dfrob

#include "dfrob/lattice_models.hpp"

#include <algorithm>
#include <map>

#include "dfrob/combinatorics.hpp"
#include "dfrob/errors.hpp"

namespace dfrob {

DifferenceEquation::DifferenceEquation(Lattice lattice, EquationForm form, CoeffRule rule, long valid_from,
                                       ODEProblem source, Rational step,
                                       std::optional<std::vector<SymbolicTerm>> symbolic)
    : lattice_(lattice),
      form_(form),
      rule_(std::move(rule)),
      valid_from_(valid_from),
      source_(std::move(source)),
      step_(std::move(step)),
      symbolic_(std::move(symbolic)) {
    if (valid_from_ < 0) throw InternalInconsistency("valid_from must be non-negative");
}

std::vector<Term> DifferenceEquation::terms(long n) const {
    if (n < 0) throw IndexOutOfRange("lattice index must be non-negative");
    std::map<long, Rational, std::greater<>> merged;
    for (auto& t : rule_(n)) merged[t.offset] += t.coeff;
    std::vector<Term> out;
    for (auto& [offset, c] : merged) {
        if (!c.is_zero()) out.push_back({offset, c});
    }
    return out;
}

DifferenceEquation DifferenceEquation::with_cancelled(Polynomial factor, long valid_from, CoeffRule rule,
                                                      std::vector<SymbolicTerm> symbolic) const {
    DifferenceEquation eq(lattice_, form_, std::move(rule), valid_from, source_, step_, std::move(symbolic));
    eq.cancelled_ = std::move(factor);
    return eq;
}

namespace {

// Accumulates coefficient per offset. T is Rational (numeric rule at fixed n)
// or Polynomial (symbolic rule in n); `falling(l)` yields n!/(n-l)! in T and
// `second_order()` yields n(n-1) in T.
template <typename T, typename Falling>
std::map<long, T> assemble(const ODEProblem& p, Lattice lattice, const Rational& h, std::size_t l_count,
                           Falling falling, const T& one, const T& second_order) {
    std::map<long, T> acc;
    auto add = [&acc](long offset, const T& value) {
        auto it = acc.find(offset);
        if (it == acc.end()) acc.emplace(offset, value);
        else it->second += value;
    };
    if (p.kind == ProblemKind::ordinary) {
        const Rational inv_h2 = Rational(1) / (h * h);
        add(2, one * inv_h2);
        add(1, one * (Rational(-2) * inv_h2));
        add(0, one * inv_h2);
    } else {
        // p_2 * Q^2 u: the h^2 of p_2(nh) cancels the 1/h^2 of the second difference.
        add(0, second_order);
        add(-1, second_order * Rational(-2));
        add(-2, second_order);
    }
    const Rational inv_h = Rational(1) / h;
    Rational hp = 1;
    for (std::size_t l = 0; l < l_count; ++l, hp *= h) {
        const Rational first = p.first[l];
        const Rational second = p.second[l];
        if (first.is_zero() && second.is_zero()) continue;
        Rational scale = hp;
        if (lattice == Lattice::minus && l % 2 == 1) scale = -scale;
        const T c = falling(l) * scale;
        const long lo = -static_cast<long>(l);
        if (lattice == Lattice::plus) {
            if (!first.is_zero()) add(lo + 1, c * (first * inv_h));
            add(lo, c * (second - first * inv_h));
        } else {
            if (!first.is_zero()) add(lo + 1, c * (-first * inv_h));
            add(lo, c * (first * inv_h + second));
        }
    }
    return acc;
}

CoeffRule numeric_rule(const ODEProblem& p, Lattice lattice, const Rational& h) {
    return [p, lattice, h](long n) {
        const auto finite = std::max(p.first.finite_length().value_or(static_cast<std::size_t>(n) + 1),
                                     p.second.finite_length().value_or(static_cast<std::size_t>(n) + 1));
        const std::size_t l_count = std::min(finite, static_cast<std::size_t>(n) + 1);
        const auto acc = assemble<Rational>(
            p, lattice, h, l_count, [n](std::size_t l) { return falling_factorial(n, static_cast<long>(l)); },
            Rational(1), Rational(n * (n - 1)));
        std::vector<Term> out;
        out.reserve(acc.size());
        for (const auto& [offset, c] : acc) out.push_back({offset, c});
        return out;
    };
}

std::optional<std::vector<SymbolicTerm>> symbolic_rule(const ODEProblem& p, Lattice lattice, const Rational& h) {
    const auto la = p.first.finite_length();
    const auto lb = p.second.finite_length();
    if (!la || !lb) return std::nullopt;
    const auto acc = assemble<Polynomial>(
        p, lattice, h, std::max(*la, *lb), [](std::size_t l) { return Polynomial::falling(l); },
        Polynomial::constant(1), Polynomial{0, -1, 1});
    std::vector<SymbolicTerm> out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (!it->second.is_zero()) out.push_back({it->first, it->second});
    }
    return out;
}

DifferenceEquation build(const ODEProblem& p, Lattice lattice, const Rational& h) {
    const EquationForm form = p.kind == ProblemKind::ordinary ? EquationForm::ordinary : EquationForm::singular;
    // Every l-term has l <= n and the n(n-1) factor kills the u[n-2] term at
    // n < 2, so no nonzero coefficient ever indexes below 0.
    return {lattice, form, numeric_rule(p, lattice, h), 0, p, h, symbolic_rule(p, lattice, h)};
}

void require(const ODEProblem& p, ProblemKind kind) {
    if (p.kind != kind) {
        throw InvalidProblem(kind == ProblemKind::ordinary ? "expected an ordinary-point problem"
                                                           : "expected a regular-singular problem");
    }
}

// Integer roots of a nonzero rational polynomial, each listed once.
std::vector<long> integer_roots(const Polynomial& poly) {
    std::vector<long> roots;
    if (poly.degree() < 1) return roots;
    // Cauchy bound: |root| <= 1 + max |c_i / c_lead|.
    Rational bound = 0;
    for (const auto& c : poly.coeffs()) bound = std::max(bound, (c / poly.leading()).abs());
    const long limit = Integer(bound.numerator() / bound.denominator()).get_si() + 1;
    for (long j = -limit; j <= limit; ++j) {
        if (poly(Rational(j)).is_zero()) roots.push_back(j);
    }
    return roots;
}

}  // namespace

DifferenceEquation generate_ordinary_forward(const ODEProblem& p) {
    require(p, ProblemKind::ordinary);
    return build(p, Lattice::plus, 1);
}

DifferenceEquation generate_ordinary_backward(const ODEProblem& p) {
    require(p, ProblemKind::ordinary);
    return build(p, Lattice::minus, 1);
}

DifferenceEquation generate_singular_forward(const ODEProblem& p) {
    require(p, ProblemKind::regular_singular);
    return build(p, Lattice::plus, 1);
}

DifferenceEquation generate_singular_backward(const ODEProblem& p) {
    require(p, ProblemKind::regular_singular);
    return build(p, Lattice::minus, 1);
}

DifferenceEquation generate(const ODEProblem& p, Lattice lattice) { return build(p, lattice, 1); }

DifferenceEquation rescale_mesh(const ODEProblem& p, const Rational& h, Lattice lattice) {
    if (h.sign() <= 0) throw InvalidProblem("mesh step must be positive");
    return build(p, lattice, h);
}

DifferenceEquation simplify(const DifferenceEquation& eq) {
    if (!eq.symbolic() || eq.symbolic()->empty()) return eq;
    const auto& sym = *eq.symbolic();
    Polynomial g;
    for (const auto& t : sym) g = gcd(g, t.coeff);

    Polynomial factor = Polynomial::constant(1);
    long valid_from = eq.valid_from();
    Polynomial rest = g;
    for (long j : integer_roots(g)) {
        const Polynomial linear{Rational(-j), 1};
        while (true) {
            auto [q, r] = rest.divmod(linear);
            if (!r.is_zero()) break;
            rest = std::move(q);
            factor = factor * linear;
            valid_from = std::max(valid_from, j + 1);
        }
    }
    if (factor.degree() == 0) return eq;

    std::vector<SymbolicTerm> reduced;
    for (const auto& t : sym) {
        auto [q, r] = t.coeff.divmod(factor);
        if (!r.is_zero()) throw InternalInconsistency("common factor does not divide a coefficient");
        valid_from = std::max(valid_from, -t.offset);
        reduced.push_back({t.offset, std::move(q)});
    }
    CoeffRule rule = [reduced](long n) {
        std::vector<Term> out;
        for (const auto& t : reduced) out.push_back({t.offset, t.coeff(Rational(n))});
        return out;
    };
    return eq.with_cancelled(std::move(factor), valid_from, std::move(rule), std::move(reduced));
}

Rational residual(const DifferenceEquation& eq, const LatticeFunction& u, long n) {
    if (u.lattice != eq.lattice()) throw Error("lattice function lives on a different lattice than the equation");
    if (u.step != eq.step()) throw Error("lattice function step differs from the equation step");
    if (n < eq.valid_from()) {
        throw IndexOutOfRange("n = " + std::to_string(n) + " is below valid_from = " + std::to_string(eq.valid_from()));
    }
    Rational acc = 0;
    for (const auto& t : eq.terms(n)) {
        const long idx = n + t.offset;
        if (idx < 0 || idx >= static_cast<long>(u.size())) {
            throw IndexOutOfRange("term u[" + std::to_string(idx) + "] at n = " + std::to_string(n) +
                                  " is outside the " + std::to_string(u.size()) + " available values");
        }
        acc += t.coeff * u.values[static_cast<std::size_t>(idx)];
    }
    return acc;
}

std::vector<ResidualRow> residual_sweep(const DifferenceEquation& eq, const LatticeFunction& u) {
    std::vector<ResidualRow> rows;
    for (long n = eq.valid_from(); n < static_cast<long>(u.size()); ++n) {
        const auto terms = eq.terms(n);
        const bool inside = std::all_of(terms.begin(), terms.end(), [&](const Term& t) {
            return n + t.offset >= 0 && n + t.offset < static_cast<long>(u.size());
        });
        if (!inside) break;
        rows.push_back({n, residual(eq, u, n)});
    }
    return rows;
}

namespace {

Rational tkj_bracket(long n, long k, const ODEProblem& p, long second_order_den) {
    const Integer nf = factorial(n);
    Rational acc = Rational(nf * (k * (k - 1))) * inverse_factorial(second_order_den);
    for (long l = 0; n - k - l + 1 >= 0; ++l) {
        const Rational a = p.first[static_cast<std::size_t>(l)];
        const Rational b = p.second[static_cast<std::size_t>(l)];
        if (!a.is_zero()) acc += Rational(nf * k) * a * inverse_factorial(n - k - l + 1);
        if (!b.is_zero()) acc += Rational(nf) * b * inverse_factorial(n - k - l);
    }
    return acc;
}

Rational inversion_weight(long k, long j) {
    return sign_power(k - j) * inverse_factorial(j) * inverse_factorial(k - j);
}

}  // namespace

Rational tkj(long n, long k, long j, const ODEProblem& p) {
    require(p, ProblemKind::ordinary);
    if (j < 0 || j > k) return 0;
    return tkj_bracket(n, k, p, n + 2 - k) * inversion_weight(k, j);
}

Rational cj_bruteforce(long n, long j, const ODEProblem& p) {
    Rational acc = 0;
    for (long k = j; k <= n + 2; ++k) acc += tkj(n, k, j, p);
    return acc;
}

Rational tkj_singular(long n, long k, long j, const ODEProblem& p) {
    require(p, ProblemKind::regular_singular);
    if (j < 0 || j > k) return 0;
    return tkj_bracket(n, k, p, n - k) * inversion_weight(k, j);
}

Rational cj_singular_bruteforce(long n, long j, const ODEProblem& p) {
    Rational acc = 0;
    for (long k = j; k <= n + 1; ++k) acc += tkj_singular(n, k, j, p);
    return acc;
}

std::vector<Term> cj_row(long n, const ODEProblem& p) {
    std::vector<Term> out;
    const bool ordinary = p.kind == ProblemKind::ordinary;
    for (long j = n + 2; j >= 0; --j) {
        const Rational c = ordinary ? cj_bruteforce(n, j, p) : cj_singular_bruteforce(n, j, p);
        if (!c.is_zero()) out.push_back({j - n, c});
    }
    return out;
}

ContinuumError continuum_error(const RotaSeries& zeta, const Rational& x, long n, int digits) {
    if (n < 1) throw Error("continuum_error needs n >= 1");
    ContinuumError out;
    out.n = n;
    out.step = x / Rational(n);
    Integer falling = 1;
    Rational hp = 1;
    Rational xp = 1;
    for (std::size_t k = 0; k < zeta.zeta.size(); ++k) {
        if (k > 0) {
            hp *= out.step;
            xp *= x;
            if (static_cast<long>(k) <= n) falling *= static_cast<unsigned long>(n - static_cast<long>(k) + 1);
        }
        const Rational& z = zeta.zeta[k];
        if (z.is_zero()) continue;
        if (static_cast<long>(k) <= n) out.lattice_value += z * hp * Rational(falling);
        out.reference += z * xp;
    }
    out.exact = (out.lattice_value - out.reference).abs();
    out.decimal = out.exact.to_decimal(digits);
    return out;
}

ContinuumError continuum_error(const ODEProblem& p, const Rational& x, long n, std::size_t reference_order,
                               int digits) {
    const std::size_t order = reference_order == 0 ? static_cast<std::size_t>(4 * n + 64) : reference_order;
    return continuum_error(solve_series(p, order), x, n, digits);
}

}  // namespace dfrob

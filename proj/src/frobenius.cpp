#include "dfrob/frobenius.hpp"

#include "dfrob/combinatorics.hpp"
#include "dfrob/errors.hpp"

namespace dfrob {

CoefficientSequence::CoefficientSequence(std::vector<Rational> values) : values_(std::move(values)) {
    while (!values_.empty() && values_.back().is_zero()) values_.pop_back();
}

CoefficientSequence::CoefficientSequence(std::initializer_list<Rational> values)
    : CoefficientSequence(std::vector<Rational>(values)) {}

CoefficientSequence CoefficientSequence::exp_scaled(const Rational& c) {
    CoefficientSequence seq;
    seq.generator_ = c;
    return seq;
}

Rational CoefficientSequence::operator[](std::size_t l) const {
    if (generator_) return generator_->pow(static_cast<long>(l)) * inverse_factorial(static_cast<long>(l));
    return l < values_.size() ? values_[l] : Rational(0);
}

std::optional<std::size_t> CoefficientSequence::finite_length() const {
    if (generator_) return std::nullopt;
    return values_.size();
}

ODEProblem classify(ProblemKind kind, CoefficientSequence first, CoefficientSequence second) {
    ODEProblem p;
    p.kind = kind;
    p.first = std::move(first);
    p.second = std::move(second);
    if (kind == ProblemKind::regular_singular && !p.first[0].is_zero()) {
        throw InvalidProblem("regular singular form requires r_0 = 0 (R(0) = 0), got r_0 = " + p.first[0].str());
    }
    return p;
}

ODEProblem ordinary_problem(CoefficientSequence a, CoefficientSequence b, Rational zeta0, Rational zeta1) {
    ODEProblem p = classify(ProblemKind::ordinary, std::move(a), std::move(b));
    p.zeta0 = std::move(zeta0);
    p.zeta1 = std::move(zeta1);
    return p;
}

ODEProblem singular_problem(CoefficientSequence r, CoefficientSequence s, Normalization n) {
    ODEProblem p = classify(ProblemKind::regular_singular, std::move(r), std::move(s));
    p.normalize = n;
    return p;
}

namespace {

void require_kind(const ODEProblem& p, ProblemKind kind, const char* what) {
    if (p.kind != kind) throw InvalidProblem(std::string(what) + " called with the wrong problem kind");
}

Rational ordinary_sum(const ODEProblem& p, const std::vector<Rational>& z, std::size_t k) {
    Rational acc = 0;
    for (std::size_t m = 0; m <= k; ++m) {
        const Rational a = p.a()[k - m];
        const Rational b = p.b()[k - m];
        if (!a.is_zero()) acc += Rational(static_cast<long>(m + 1)) * a * z[m + 1];
        if (!b.is_zero()) acc += b * z[m];
    }
    return acc;
}

Rational singular_sum(const ODEProblem& p, const std::vector<Rational>& z, std::size_t k) {
    Rational acc = 0;
    for (std::size_t l = 1; l <= k; ++l) {
        const Rational c = Rational(static_cast<long>(k - l)) * p.r()[l + 1] + p.s()[l];
        if (!c.is_zero()) acc += c * z[k - l];
    }
    return acc;
}

}  // namespace

RotaSeries zeta_ordinary(const ODEProblem& p, const Rational& zeta0, const Rational& zeta1, std::size_t n,
                         const std::string& basis) {
    require_kind(p, ProblemKind::ordinary, "zeta_ordinary");
    if (n < 1) throw InvalidProblem("zeta_ordinary needs order >= 1");
    std::vector<Rational> z{zeta0, zeta1};
    z.reserve(n + 1);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        const long denom = static_cast<long>((k + 2) * (k + 1));
        z.push_back(-ordinary_sum(p, z, k) / Rational(denom));
    }
    return {basis, std::move(z)};
}

Rational ordinary_recurrence_residual(const ODEProblem& p, const RotaSeries& zeta, std::size_t k) {
    require_kind(p, ProblemKind::ordinary, "ordinary_recurrence_residual");
    if (static_cast<long>(k) + 2 > zeta.order()) throw IndexOutOfRange("recurrence at k needs zeta_{k+2}");
    return Rational(static_cast<long>((k + 2) * (k + 1))) * zeta.zeta[k + 2] + ordinary_sum(p, zeta.zeta, k);
}

Rational indicial_factor(const ODEProblem& p, long k) {
    return Rational(k * (k - 1)) + Rational(k) * p.r()[1] + p.s()[0];
}

IndicialData indicial(const ODEProblem& p) {
    require_kind(p, ProblemKind::regular_singular, "indicial");
    IndicialData d;
    d.r1 = p.r()[1];
    d.s0 = p.s()[0];
    // lambda^2 + (r1 - 1) lambda + s0 = 0
    const Rational b = d.r1 - Rational(1);
    const Rational disc = b * b - Rational(4) * d.s0;
    if (disc.sign() < 0) {
        d.root_kind = RootKind::complex;
        return d;
    }
    const auto root = disc.sqrt_exact();
    if (!root) {
        d.root_kind = RootKind::irrational;
        return d;
    }
    const Rational hi = (-b + *root) / Rational(2);
    const Rational lo = (-b - *root) / Rational(2);
    d.roots = std::make_pair(hi, lo);
    if (hi.is_integer() && hi.sign() >= 0) d.admissible_root = hi.numerator().get_si();
    return d;
}

SingularSolution zeta_singular(const ODEProblem& p, std::size_t n, std::optional<Rational> leading,
                               const std::string& basis, const std::map<std::size_t, Rational>& free_values) {
    require_kind(p, ProblemKind::regular_singular, "zeta_singular");
    SingularSolution out;
    out.indicial = indicial(p);
    if (!out.indicial.admissible_root) {
        throw NoAdmissibleRoot(out.indicial.roots
                                   ? "largest indicial root " + out.indicial.roots->first.str() +
                                         " is not a non-negative integer"
                                   : std::string("indicial roots are not rational"));
    }
    const long lambda = *out.indicial.admissible_root;
    Rational norm = 1;
    if (leading) {
        norm = *leading;
    } else if (p.normalize == Normalization::bessel) {
        norm = Rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(lambda)) * inverse_factorial(lambda);
    }

    std::vector<Rational> z;
    z.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational factor = indicial_factor(p, static_cast<long>(k));
        const Rational sum = singular_sum(p, z, k);
        if (!factor.is_zero()) {
            z.push_back(-sum / factor);
        } else if (sum.is_zero()) {
            out.free_indices.push_back(k);
            if (static_cast<long>(k) == lambda) {
                z.push_back(norm);
            } else {
                const auto it = free_values.find(k);
                z.push_back(it == free_values.end() ? Rational(0) : it->second);
            }
        } else {
            throw LogarithmicCaseRequired("indicial factor vanishes at k = " + std::to_string(k) +
                                          " with nonzero remainder " + sum.str());
        }
    }
    out.series = RotaSeries{basis, std::move(z)};
    return out;
}

Rational singular_recurrence_residual(const ODEProblem& p, const RotaSeries& zeta, std::size_t k) {
    require_kind(p, ProblemKind::regular_singular, "singular_recurrence_residual");
    if (static_cast<long>(k) > zeta.order()) throw IndexOutOfRange("recurrence at k needs zeta_k");
    return indicial_factor(p, static_cast<long>(k)) * zeta.zeta[k] + singular_sum(p, zeta.zeta, k);
}

RotaSeries solve_series(const ODEProblem& p, std::size_t n, const std::string& basis) {
    if (p.kind == ProblemKind::ordinary) return zeta_ordinary(p, p.zeta0, p.zeta1, std::max<std::size_t>(n, 1), basis);
    return zeta_singular(p, n, std::nullopt, basis).series;
}

}  // namespace dfrob

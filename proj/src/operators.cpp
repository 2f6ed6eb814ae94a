#include "dfrob/operators.hpp"

#include <algorithm>

#include "dfrob/errors.hpp"

namespace dfrob {

LinearOperator::LinearOperator(std::vector<Polynomial> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw CutoffExceeded("operator needs at least one column");
    const long cut = static_cast<long>(columns_.size()) - 1;
    for (std::size_t k = 0; k < columns_.size(); ++k) {
        if (columns_[k].degree() > cut) {
            throw CutoffExceeded("image of x^" + std::to_string(k) + " has degree " +
                                 std::to_string(columns_[k].degree()) + " > cutoff " + std::to_string(cut));
        }
    }
}

LinearOperator LinearOperator::identity(std::size_t cutoff) {
    return from_monomial_images(cutoff, [](const Polynomial& p) { return p; });
}

Polynomial LinearOperator::apply(const Polynomial& p) const {
    if (p.degree() > static_cast<long>(cutoff())) {
        throw CutoffExceeded("polynomial of degree " + std::to_string(p.degree()) + " exceeds operator cutoff " +
                             std::to_string(cutoff()));
    }
    Polynomial out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (!p.coeffs()[k].is_zero()) out += columns_[k] * p.coeffs()[k];
    }
    return out;
}

LinearOperator LinearOperator::truncated(std::size_t cutoff) const {
    if (cutoff > this->cutoff()) throw CutoffExceeded("cannot extend an operator beyond its cutoff");
    return LinearOperator(std::vector<Polynomial>(columns_.begin(), columns_.begin() + static_cast<long>(cutoff) + 1));
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    const std::size_t cut = std::min(a.cutoff(), b.cutoff());
    std::vector<Polynomial> cols;
    cols.reserve(cut + 1);
    for (std::size_t k = 0; k <= cut; ++k) cols.push_back(a.apply(b.column(k)));
    return LinearOperator(std::move(cols));
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
    const std::size_t cut = std::min(a.cutoff(), b.cutoff());
    std::vector<Polynomial> cols;
    for (std::size_t k = 0; k <= cut; ++k) cols.push_back(a.column(k) + b.column(k));
    return LinearOperator(std::move(cols));
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) { return a + Rational(-1) * b; }

LinearOperator operator*(const Rational& c, const LinearOperator& a) {
    std::vector<Polynomial> cols;
    for (const auto& col : a.columns()) cols.push_back(col * c);
    return LinearOperator(std::move(cols));
}

LinearOperator make_operator(OperatorKind kind, std::size_t cutoff, const Rational& h) {
    switch (kind) {
        case OperatorKind::forward:
            return LinearOperator::from_monomial_images(cutoff, [](const Polynomial& m) { return m.shifted(1) - m; });
        case OperatorKind::backward:
            return LinearOperator::from_monomial_images(cutoff, [](const Polynomial& m) { return m - m.shifted(-1); });
        case OperatorKind::symmetric:
            return LinearOperator::from_monomial_images(
                cutoff, [](const Polynomial& m) { return (m.shifted(1) - m.shifted(-1)) * Rational(1, 2); });
        case OperatorKind::derivative:
            return LinearOperator::from_monomial_images(cutoff, [](const Polynomial& m) { return m.derivative(); });
        case OperatorKind::shift:
            return LinearOperator::from_monomial_images(cutoff, [&h](const Polynomial& m) { return m.shifted(h); });
    }
    throw InternalInconsistency("unknown operator kind");
}

const char* to_string(DeltaKind kind) {
    switch (kind) {
        case DeltaKind::forward: return "forward";
        case DeltaKind::backward: return "backward";
        case DeltaKind::symmetric: return "symmetric";
        case DeltaKind::derivative: return "derivative";
        case DeltaKind::custom: return "custom";
    }
    return "custom";
}

bool commutes_with_unit_shift(const LinearOperator& op) {
    if (op.cutoff() == 0) return true;
    const LinearOperator t = shift_operator(1, op.cutoff());
    for (std::size_t k = 0; k + 1 <= op.cutoff(); ++k) {
        const Polynomial m = Polynomial::monomial(k);
        if (t.apply(op.apply(m)) != op.apply(t.apply(m))) return false;
    }
    return true;
}

DeltaOperator::DeltaOperator(LinearOperator op, DeltaKind kind, std::string name)
    : op_(std::move(op)), kind_(kind), name_(std::move(name)) {
    if (op_.cutoff() < 1) throw InvalidDeltaOperator(name_ + ": cutoff must be at least 1");
    if (!op_.column(0).is_zero()) throw InvalidDeltaOperator(name_ + ": Q applied to a constant is not zero");
    const Polynomial& qx = op_.column(1);
    if (qx.degree() != 0) throw InvalidDeltaOperator(name_ + ": Q x is not a nonzero constant");
    normalization_ = qx.coeff(0);
    for (std::size_t k = 1; k <= op_.cutoff(); ++k) {
        if (op_.column(k).degree() != static_cast<long>(k) - 1) {
            throw InvalidDeltaOperator(name_ + ": Q does not lower the degree of x^" + std::to_string(k) + " by one");
        }
    }
    if (!commutes_with_unit_shift(op_)) throw InvalidDeltaOperator(name_ + ": Q is not shift-invariant");
}

DeltaOperator DeltaOperator::forward(std::size_t cutoff) {
    return {make_operator(OperatorKind::forward, cutoff), DeltaKind::forward, "forward"};
}

DeltaOperator DeltaOperator::backward(std::size_t cutoff) {
    return {make_operator(OperatorKind::backward, cutoff), DeltaKind::backward, "backward"};
}

DeltaOperator DeltaOperator::symmetric(std::size_t cutoff) {
    return {make_operator(OperatorKind::symmetric, cutoff), DeltaKind::symmetric, "symmetric"};
}

DeltaOperator DeltaOperator::derivative(std::size_t cutoff) {
    return {make_operator(OperatorKind::derivative, cutoff), DeltaKind::derivative, "derivative"};
}

DeltaOperator DeltaOperator::forward_step(const Rational& h, std::size_t cutoff) {
    if (h.sign() <= 0) throw InvalidDeltaOperator("mesh step must be positive");
    if (h == 1) return forward(cutoff);
    auto op = LinearOperator::from_monomial_images(
        cutoff, [&h](const Polynomial& m) { return (m.shifted(h) - m) * (Rational(1) / h); });
    return {std::move(op), DeltaKind::custom, "forward_h(" + h.str() + ")"};
}

DeltaOperator DeltaOperator::backward_step(const Rational& h, std::size_t cutoff) {
    if (h.sign() <= 0) throw InvalidDeltaOperator("mesh step must be positive");
    if (h == 1) return backward(cutoff);
    auto op = LinearOperator::from_monomial_images(
        cutoff, [&h](const Polynomial& m) { return (m - m.shifted(-h)) * (Rational(1) / h); });
    return {std::move(op), DeltaKind::custom, "backward_h(" + h.str() + ")"};
}

DeltaOperator DeltaOperator::abel(const Rational& sigma, std::size_t cutoff) {
    auto op = LinearOperator::from_monomial_images(
        cutoff, [&sigma](const Polynomial& m) { return m.derivative().shifted(sigma); });
    return {std::move(op), DeltaKind::custom, "abel(" + sigma.str() + ")"};
}

DeltaOperator DeltaOperator::gould(const Rational& a, const Rational& b, std::size_t cutoff) {
    auto op = LinearOperator::from_monomial_images(
        cutoff, [&](const Polynomial& m) { return m.shifted(a + b) - m.shifted(a); });
    return {std::move(op), DeltaKind::custom, "gould(" + a.str() + "," + b.str() + ")"};
}

DeltaOperator DeltaOperator::by_name(const std::string& name, std::size_t cutoff) {
    if (name == "forward") return forward(cutoff);
    if (name == "backward") return backward(cutoff);
    if (name == "symmetric") return symmetric(cutoff);
    if (name == "derivative") return derivative(cutoff);
    throw InvalidDeltaOperator("unknown delta operator '" + name + "'");
}

LinearOperator pincherle(const DeltaOperator& q) {
    const std::size_t cut = q.cutoff() - 1;
    std::vector<Polynomial> cols;
    cols.reserve(cut + 1);
    for (std::size_t k = 0; k <= cut; ++k) cols.push_back(q.op().column(k + 1) - q.op().column(k).times_x());
    return LinearOperator(std::move(cols));
}

LinearOperator conjugate_beta(const DeltaOperator& q) {
    const LinearOperator qp = pincherle(q);
    const std::size_t cut = qp.cutoff();
    for (std::size_t k = 0; k <= cut; ++k) {
        if (qp.column(k).degree() != static_cast<long>(k)) {
            throw InternalInconsistency("Pincherle derivative of " + q.name() + " is not degree-preserving");
        }
    }
    std::vector<Polynomial> cols;
    cols.reserve(cut + 1);
    for (std::size_t j = 0; j <= cut; ++j) {
        // Solve Q' y = x^j with deg y <= j, from the top degree down.
        std::vector<Rational> y(j + 1);
        for (std::size_t i = j + 1; i-- > 0;) {
            Rational rhs = (i == j) ? Rational(1) : Rational(0);
            for (std::size_t m = i + 1; m <= j; ++m) rhs -= qp.column(m).coeff(i) * y[m];
            y[i] = rhs / qp.column(i).coeff(i);
        }
        cols.emplace_back(std::move(y));
    }
    return LinearOperator(std::move(cols));
}

bool heisenberg_weyl_holds(const DeltaOperator& q) {
    const LinearOperator beta = conjugate_beta(q);
    if (q.cutoff() < 2) return true;
    for (std::size_t k = 0; k + 2 <= q.cutoff(); ++k) {
        const Polynomial m = Polynomial::monomial(k);
        const Polynomial lhs = q.apply(beta.apply(m).times_x()) - beta.apply(q.apply(m)).times_x();
        if (lhs != m) return false;
    }
    return true;
}

BasicSequence basic_sequence_solve(const DeltaOperator& q, std::size_t n) {
    if (n > q.cutoff()) {
        throw CutoffExceeded("basic sequence order " + std::to_string(n) + " exceeds operator cutoff " +
                             std::to_string(q.cutoff()));
    }
    const LinearOperator& op = q.op();
    std::vector<Polynomial> polys{Polynomial::constant(1)};
    for (std::size_t deg = 1; deg <= n; ++deg) {
        const Polynomial rhs = polys.back() * Rational(static_cast<long>(deg));
        // c_1..c_deg with sum_j c_j Q(x^j) = rhs; Q(x^j) has degree j-1.
        std::vector<Rational> c(deg + 1);
        for (std::size_t i = deg; i-- > 0;) {
            Rational acc = rhs.coeff(i);
            for (std::size_t j = i + 2; j <= deg; ++j) acc -= c[j] * op.column(j).coeff(i);
            const Rational diag = op.column(i + 1).coeff(i);
            if (diag.is_zero()) throw InvalidDeltaOperator(q.name() + ": singular basic-polynomial system");
            c[i + 1] = acc / diag;
        }
        Polynomial p(std::move(c));
        if (op.apply(p) != rhs) throw InvalidDeltaOperator(q.name() + ": inconsistent basic-polynomial system");
        polys.push_back(std::move(p));
    }
    return {q, std::move(polys)};
}

BasicSequence basic_sequence_beta(const DeltaOperator& q, std::size_t n) {
    if (n + 1 > q.cutoff()) {
        throw CutoffExceeded("conjugate-operator route needs order <= cutoff - 1 (order " + std::to_string(n) +
                             ", cutoff " + std::to_string(q.cutoff()) + ")");
    }
    const LinearOperator beta = conjugate_beta(q);
    std::vector<Polynomial> polys{Polynomial::constant(1)};
    for (std::size_t deg = 1; deg <= n; ++deg) polys.push_back(beta.apply(polys.back()).times_x());
    return {q, std::move(polys)};
}

bool satisfies_basic_axioms(const BasicSequence& seq) {
    if (seq.polys.empty() || seq.polys[0] != Polynomial::constant(1)) return false;
    for (std::size_t n = 1; n < seq.polys.size(); ++n) {
        const Polynomial& p = seq.polys[n];
        if (p.degree() != static_cast<long>(n) || !p.coeff(0).is_zero()) return false;
        if (seq.delta.apply(p) != seq.polys[n - 1] * Rational(static_cast<long>(n))) return false;
    }
    return true;
}

bool backward_symmetry_check(std::size_t n) {
    const auto plus = basic_sequence_solve(DeltaOperator::forward(n + 1), n);
    const auto minus = basic_sequence_solve(DeltaOperator::backward(n + 1), n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (minus[k].reflected() != plus[k] * sign_power(static_cast<long>(k))) return false;
    }
    return true;
}

}  // namespace dfrob

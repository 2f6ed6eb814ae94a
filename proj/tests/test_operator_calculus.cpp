#include "doctest.h"

#include "dfrob/errors.hpp"
#include "dfrob/operators.hpp"
#include "support.hpp"

using namespace dfrob;

namespace {

Polynomial x_poly() { return Polynomial{0, 1}; }

// prod_{j in roots} (x - j)
Polynomial product_of_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::constant(1);
    for (const auto& r : roots) p = p * Polynomial{-r, 1};
    return p;
}

// Closed forms of the basic sequences, built from their zeros.
Polynomial forward_basic(long n, const Rational& h = 1) {
    std::vector<Rational> roots;
    for (long j = 0; j < n; ++j) roots.push_back(Rational(j) * h);
    return product_of_roots(roots);
}

Polynomial backward_basic(long n) {
    std::vector<Rational> roots;
    for (long j = 0; j < n; ++j) roots.push_back(Rational(-j));
    return product_of_roots(roots);
}

// x * prod_{j=1}^{n-1} (x + n - 2j)
Polynomial symmetric_basic(long n) {
    if (n == 0) return Polynomial::constant(1);
    std::vector<Rational> roots{0};
    for (long j = 1; j < n; ++j) roots.push_back(Rational(2 * j - n));
    return product_of_roots(roots);
}

// x (x - n sigma)^{n-1}
Polynomial abel_basic(long n, const Rational& sigma) {
    if (n == 0) return Polynomial::constant(1);
    std::vector<Rational> roots{0};
    for (long j = 1; j < n; ++j) roots.push_back(Rational(n) * sigma);
    return product_of_roots(roots);
}

// x prod_{j=1}^{n-1} (x - a n - j b) / b^n
Polynomial gould_basic(long n, const Rational& a, const Rational& b) {
    if (n == 0) return Polynomial::constant(1);
    std::vector<Rational> roots{0};
    for (long j = 1; j < n; ++j) roots.push_back(a * Rational(n) + Rational(j) * b);
    return product_of_roots(roots) * (Rational(1) / b.pow(n));
}

}  // namespace

TEST_CASE("make_operator images") {
    const auto fwd = make_operator(OperatorKind::forward, 4);
    CHECK(fwd(Polynomial{0, 0, 1}) == (Polynomial{1, 2}));
    for (auto kind : {OperatorKind::forward, OperatorKind::backward, OperatorKind::symmetric, OperatorKind::derivative}) {
        CHECK(make_operator(kind, 4)(Polynomial::constant(5)).is_zero());
    }
    CHECK(shift_operator(1, 3)(x_poly()) == (Polynomial{1, 1}));
    CHECK(shift_operator(Rational::parse("1/2"), 3)(Polynomial{0, 0, 1}) ==
          (Polynomial{Rational::parse("1/4"), 1, 1}));
}

TEST_CASE("apply") {
    CHECK(make_operator(OperatorKind::backward, 4)(Polynomial{0, 0, 1}) == (Polynomial{-1, 2}));
    CHECK(make_operator(OperatorKind::symmetric, 4)(x_poly()) == Polynomial::constant(1));
    CHECK(make_operator(OperatorKind::derivative, 4)(Polynomial::monomial(3)) == Polynomial::monomial(2, 3));
    CHECK_THROWS_AS(make_operator(OperatorKind::forward, 2)(Polynomial::monomial(3)), CutoffExceeded);
    CHECK_THROWS_AS(LinearOperator({Polynomial::constant(1), Polynomial::monomial(2)}), CutoffExceeded);

    testing::Gen gen(3);
    const auto op = make_operator(OperatorKind::symmetric, 8);
    for (int i = 0; i < 30; ++i) {
        const Polynomial p = gen.polynomial(8);
        const Polynomial q = gen.polynomial(8);
        const Rational c = gen.rational();
        CHECK(op(p + c * q) == op(p) + c * op(q));
    }
}

TEST_CASE("pincherle derivative") {
    const auto fwd = DeltaOperator::forward(6);
    CHECK(pincherle(fwd)(Polynomial{0, 0, 1}) == (Polynomial{1, 2, 1}));
    CHECK(pincherle(fwd) == shift_operator(1, 5));
    CHECK(pincherle(DeltaOperator::derivative(6)) == LinearOperator::identity(5));
    const auto bwd_p = pincherle(DeltaOperator::backward(6));
    CHECK(bwd_p(x_poly()) == (Polynomial{-1, 1}));
    CHECK(bwd_p == shift_operator(-1, 5));
    CHECK(pincherle(fwd).cutoff() == 5);
}

TEST_CASE("conjugate operator beta") {
    CHECK(conjugate_beta(DeltaOperator::forward(8)) == shift_operator(-1, 7));
    CHECK(conjugate_beta(DeltaOperator::derivative(8)) == LinearOperator::identity(7));
    CHECK(conjugate_beta(DeltaOperator::backward(8)) == shift_operator(1, 7));

    for (const char* name : {"forward", "backward", "symmetric", "derivative"}) {
        const auto q = DeltaOperator::by_name(name, 10);
        const auto qp = pincherle(q);
        const auto beta = conjugate_beta(q);
        CHECK(compose(qp, beta) == LinearOperator::identity(9));
        CHECK(compose(beta, qp) == LinearOperator::identity(9));
        CHECK(heisenberg_weyl_holds(q));
    }
}

TEST_CASE("delta operator validation") {
    CHECK_THROWS_AS(DeltaOperator(LinearOperator::identity(4), DeltaKind::custom, "id"), InvalidDeltaOperator);
    const auto d = make_operator(OperatorKind::derivative, 4);
    CHECK_THROWS_AS(DeltaOperator(compose(d, d), DeltaKind::custom, "D2"), InvalidDeltaOperator);
    // x^2 d/dx lowers degree by -1 and is not shift-invariant
    const auto xd = LinearOperator::from_monomial_images(4, [](const Polynomial& p) {
        return p.degree() >= 1 ? p.derivative().times_x() : Polynomial{};
    });
    CHECK_THROWS_AS(DeltaOperator(xd, DeltaKind::custom, "xD"), InvalidDeltaOperator);
    // D + x * D^2 kills 1 and sends x to 1 but is not shift-invariant
    const auto bent = LinearOperator::from_monomial_images(5, [](const Polynomial& p) {
        return p.derivative() + p.derivative().derivative().times_x();
    });
    CHECK_THROWS_AS(DeltaOperator(bent, DeltaKind::custom, "bent"), InvalidDeltaOperator);

    const auto two_d = DeltaOperator(Rational(2) * d, DeltaKind::custom, "2D");
    CHECK(two_d.normalization() == Rational(2));
    CHECK(DeltaOperator::forward(4).normalization() == Rational(1));
    CHECK_THROWS_AS(DeltaOperator::by_name("nope", 4), InvalidDeltaOperator);
}

TEST_CASE("basic sequence examples") {
    CHECK(basic_sequence_solve(DeltaOperator::forward(2), 2)[2] == (Polynomial{0, -1, 1}));
    CHECK(basic_sequence_solve(DeltaOperator::backward(2), 2)[2] == (Polynomial{0, 1, 1}));
    CHECK(basic_sequence_solve(DeltaOperator::derivative(3), 3)[3] == Polynomial::monomial(3));
    CHECK(basic_sequence_beta(DeltaOperator::forward(4), 3)[3] == (Polynomial{0, 2, -3, 1}));
    CHECK(basic_sequence_beta(DeltaOperator::derivative(3), 2)[2] == Polynomial::monomial(2));
    const auto sym = DeltaOperator::symmetric(4);
    CHECK(basic_sequence_beta(sym, 3).polys == basic_sequence_solve(sym, 3).polys);
    CHECK_THROWS_AS(basic_sequence_solve(DeltaOperator::forward(3), 4), CutoffExceeded);
    CHECK_THROWS_AS(basic_sequence_beta(DeltaOperator::forward(3), 3), CutoffExceeded);
}

TEST_CASE("basic sequences match closed forms for n <= 20") {
    const std::size_t n = 20;
    const auto fwd = basic_sequence_solve(DeltaOperator::forward(n), n);
    const auto bwd = basic_sequence_solve(DeltaOperator::backward(n), n);
    const auto sym = basic_sequence_solve(DeltaOperator::symmetric(n), n);
    const auto der = basic_sequence_solve(DeltaOperator::derivative(n), n);
    for (long k = 0; k <= static_cast<long>(n); ++k) {
        CHECK(fwd[k] == forward_basic(k));
        CHECK(bwd[k] == backward_basic(k));
        CHECK(sym[k] == symmetric_basic(k));
        CHECK(der[k] == Polynomial::monomial(static_cast<std::size_t>(k)));
    }
}

TEST_CASE("basic sequence axioms and cross-method agreement") {
    const std::size_t n = 20;
    for (const char* name : {"forward", "backward", "symmetric", "derivative"}) {
        CAPTURE(name);
        const auto q = DeltaOperator::by_name(name, n + 1);
        const auto a = basic_sequence_solve(q, n);
        const auto b = basic_sequence_beta(q, n);
        CHECK(satisfies_basic_axioms(a));
        CHECK(a.polys == b.polys);
        CHECK(commutes_with_unit_shift(q.op()));
        // Checked here directly rather than through satisfies_basic_axioms.
        CHECK(a[0] == Polynomial::constant(1));
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(a[k].degree() == static_cast<long>(k));
            CHECK(a[k](0).is_zero());
            CHECK(q.apply(a[k]) == Rational(static_cast<long>(k)) * a[k - 1]);
        }
    }
}

TEST_CASE("lattice zeros of the forward and backward sequences") {
    const std::size_t n = 12;
    const auto fwd = basic_sequence_solve(DeltaOperator::forward(n), n);
    const auto bwd = basic_sequence_solve(DeltaOperator::backward(n), n);
    for (std::size_t k = 0; k <= n; ++k) {
        for (long m = 0; m < static_cast<long>(k); ++m) {
            CHECK(fwd[k](Rational(m)).is_zero());
            CHECK(bwd[k](Rational(-m)).is_zero());
        }
        CHECK_FALSE(fwd[k](Rational(static_cast<long>(k))).is_zero());
    }
}

TEST_CASE("mesh, Abel and Gould operators") {
    const Rational h = Rational::parse("1/3");
    const auto fh = DeltaOperator::forward_step(h, 8);
    const auto seq = basic_sequence_solve(fh, 8);
    for (long k = 0; k <= 8; ++k) CHECK(seq[k] == forward_basic(k, h));
    CHECK(basic_sequence_beta(fh, 7).polys == basic_sequence_solve(fh, 7).polys);
    CHECK(DeltaOperator::forward_step(1, 4).name() == "forward");

    const auto bh = DeltaOperator::backward_step(h, 6);
    const auto bseq = basic_sequence_solve(bh, 6);
    for (long k = 0; k <= 6; ++k) CHECK(bseq[k] == forward_basic(k, -h));

    for (const Rational& sigma : {Rational(1), Rational::parse("-2/5")}) {
        const auto abel = DeltaOperator::abel(sigma, 10);
        const auto s = basic_sequence_solve(abel, 9);
        for (long k = 0; k <= 9; ++k) CHECK(s[k] == abel_basic(k, sigma));
        CHECK(basic_sequence_beta(abel, 9).polys == s.polys);
        CHECK(commutes_with_unit_shift(abel.op()));
    }

    const Rational a = Rational::parse("1/2"), b = 3;
    const auto gould = DeltaOperator::gould(a, b, 9);
    const auto g = basic_sequence_solve(gould, 9);
    for (long k = 0; k <= 9; ++k) CHECK(g[k] == gould_basic(k, a, b));
    CHECK(heisenberg_weyl_holds(gould));
}

TEST_CASE("backward symmetry") {
    CHECK(backward_symmetry_check(1));
    CHECK(backward_symmetry_check(2));
    CHECK(backward_symmetry_check(20));
    const auto fwd = basic_sequence_solve(DeltaOperator::forward(20), 20);
    const auto bwd = basic_sequence_solve(DeltaOperator::backward(20), 20);
    for (std::size_t k = 0; k <= 20; ++k) {
        CHECK(bwd[k].reflected() == sign_power(static_cast<long>(k)) * fwd[k]);
    }
}

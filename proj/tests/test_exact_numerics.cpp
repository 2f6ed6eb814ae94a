#include <thread>

#include "doctest.h"

#include "dfrob/combinatorics.hpp"
#include "dfrob/errors.hpp"
#include "dfrob/rational.hpp"
#include "support.hpp"

using namespace dfrob;

namespace {

// Pascal's triangle, independent of the library's binomial.
std::vector<std::vector<Integer>> pascal(long n) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, Integer(1));
        for (long k = 1; k < i; ++k) {
            row[static_cast<std::size_t>(k)] =
                rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] +
                rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
        }
    }
    return rows;
}

Integer ipow(long base, long e) {
    Integer out = 1;
    for (long i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(Integer(1), Integer(2)) + Rational(Integer(1), Integer(3)) == Rational(Integer(5), Integer(6)));
    CHECK(Rational::parse("-3/4") * Rational::parse("-4/3") == Rational(1));
    CHECK(Rational(7) - Rational(7) == Rational(0));
    CHECK(-Rational::parse("2/5") == Rational::parse("-2/5"));
    CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
    CHECK(Rational::parse("-1/2") < Rational(0));
    CHECK_THROWS_AS(Rational(7) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZero);
}

TEST_CASE("canonical form") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(Integer(10), Integer(5)).str() == "2");
    CHECK(Rational(Integer(0), Integer(-9)).str() == "0");
    CHECK(Rational(Integer(0), Integer(-9)).denominator() == 1);

    testing::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = gen.rational(50, 40);
        const Rational b = gen.rational(50, 40);
        for (const Rational& v : {a + b, a - b, a * b}) {
            CHECK(v.denominator() > 0);
            CHECK(gcd(v.numerator(), v.denominator()) == 1);
            CHECK(Rational::parse(v.str()) == v);
        }
    }
}

TEST_CASE("rational text format") {
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-13/8") == Rational(Integer(-13), Integer(8)));
    CHECK(Rational::parse("−13/8") == Rational(Integer(-13), Integer(8)));
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("--1"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("decimal rendering") {
    CHECK(Rational(Integer(1), Integer(3)).to_decimal(5) == "3.3333e-1");
    CHECK(Rational(Integer(2), Integer(3)).to_decimal(3) == "6.67e-1");
    CHECK(Rational(-1234).to_decimal(2) == "-1.2e3");
    CHECK(Rational(Integer(999), Integer(1000)).to_decimal(2) == "1.0e0");
    CHECK(Rational(0).to_decimal(4) == "0");
}

TEST_CASE("square roots") {
    CHECK(Rational::parse("9/4").sqrt_exact() == Rational::parse("3/2"));
    CHECK_FALSE(Rational(2).sqrt_exact().has_value());
    CHECK_FALSE(Rational(-4).sqrt_exact().has_value());
    const Rational s = Rational(2).sqrt_approx(30);
    CHECK((s * s - Rational(2)).abs() < Rational::parse("1/1000000000000000000000000000"));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(3, 2) == Rational(6));
    CHECK(falling_factorial(3, 4) == Rational(0));
    CHECK(falling_factorial(5, 0) == Rational(1));
    CHECK(falling_factorial(Rational::parse("1/2"), 2) == Rational::parse("-1/4"));
    CHECK(rising_factorial(Rational(3), 3) == Rational(60));

    const auto tri = pascal(40);
    for (long n = 0; n <= 40; ++n) {
        Integer kfact = 1;
        for (long k = 0; k <= n; ++k) {
            if (k > 0) kfact *= k;
            CHECK(falling_factorial(n, k) == Rational(tri[n][k] * kfact));
            CHECK(binomial(n, k) == tri[n][k]);
        }
    }
}

TEST_CASE("alternating binomial identities") {
    const auto tri = pascal(30);
    for (long n = 0; n <= 30; ++n) {
        Integer s0 = 0, s1 = 0, s2 = 0;
        for (long k = 0; k <= n; ++k) {
            const Integer term = (k % 2 == 0 ? 1 : -1) * tri[n][k];
            s0 += term;
            s1 += k * term;
            s2 += k * k * term;
        }
        CHECK(s0 == (n == 0 ? 1 : 0));
        CHECK(s1 == (n == 1 ? -1 : 0));
        CHECK(s2 == Integer(2 * (n == 2 ? 1 : 0) - (n == 1 ? 1 : 0)));
    }
}

TEST_CASE("factorial table") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorials().cap() == kDefaultFactorialCap);

    Integer expect = 1;
    for (long i = 1; i <= 600; ++i) expect *= i;
    CHECK(factorial(600) == expect);

    const FactorialTable small(5);
    CHECK(small(5) == 120);
    CHECK(small(7) == 5040);

    CHECK(inverse_factorial(-1) == Rational(0));
    CHECK(inverse_factorial(4) == Rational(Integer(1), Integer(24)));
}

TEST_CASE("factorial table concurrent readers") {
    std::vector<std::thread> pool;
    std::vector<int> ok(8, 0);
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([t, &ok] {
            bool good = true;
            for (long n = 0; n < 400; ++n) good = good && factorial(n + 1) == factorial(n) * (n + 1);
            ok[static_cast<std::size_t>(t)] = good ? 1 : 0;
        });
    }
    for (auto& th : pool) th.join();
    for (int v : ok) CHECK(v == 1);
}

TEST_CASE("stirling numbers") {
    // S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n
    const auto tri = pascal(20);
    for (long n = 0; n <= 15; ++n) {
        for (long k = 0; k <= n; ++k) {
            Integer acc = 0;
            for (long j = 0; j <= k; ++j) acc += (j % 2 == 0 ? 1 : -1) * tri[k][j] * ipow(k - j, n);
            Integer kf = 1;
            for (long i = 2; i <= k; ++i) kf *= i;
            CHECK(stirling2(n, k) == acc / kf);
        }
    }
    // sum_k c(n,k) = n!, and row 4 of the unsigned first kind: 0 6 11 6 1
    for (long n = 0; n <= 15; ++n) {
        Integer total = 0;
        for (long k = 0; k <= n; ++k) total += stirling1_unsigned(n, k);
        CHECK(total == factorial(n));
    }
    CHECK(stirling1_unsigned(4, 1) == 6);
    CHECK(stirling1_unsigned(4, 2) == 11);
    CHECK(stirling1_unsigned(4, 3) == 6);
}

#include "dfrob/combinatorics.hpp"

#include <stdexcept>

namespace dfrob {

FactorialTable::FactorialTable(std::size_t cap) : table_(cap + 1) {
    table_[0] = 1;
    for (std::size_t i = 1; i <= cap; ++i) table_[i] = table_[i - 1] * static_cast<unsigned long>(i);
}

Integer FactorialTable::operator()(std::size_t n) const {
    if (n < table_.size()) return table_[n];
    Integer r = table_.back();
    for (std::size_t i = table_.size(); i <= n; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

const FactorialTable& factorials() {
    static const FactorialTable table;
    return table;
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    return factorials()(static_cast<std::size_t>(n));
}

Rational falling_factorial(long n, long k) {
    if (n < 0 || k < 0) throw std::domain_error("falling_factorial expects n, k >= 0");
    if (k > n) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) r *= n - i;
    return r;
}

Rational falling_factorial(const Rational& x, long k) {
    if (k < 0) throw std::domain_error("falling_factorial expects k >= 0");
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= x - Rational(i);
    return r;
}

Rational rising_factorial(const Rational& x, long k) {
    if (k < 0) throw std::domain_error("rising_factorial expects k >= 0");
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= x + Rational(i);
    return r;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational inverse_factorial(long n) {
    if (n < 0) return 0;
    return Rational(Integer(1), factorial(n));
}

namespace {

// Row-by-row triangle; small n only, used for basis-conversion checks.
template <typename Step>
Integer stirling_triangle(long n, long k, Step step) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Integer> row{1};  // row n = 0
    for (long m = 1; m <= n; ++m) {
        std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
        for (long j = 1; j <= m; ++j) {
            const Integer up_left = row[static_cast<std::size_t>(j - 1)];
            const Integer up = j < m ? row[static_cast<std::size_t>(j)] : Integer(0);
            next[static_cast<std::size_t>(j)] = up_left + step(m, j) * up;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace

Integer stirling1_unsigned(long n, long k) {
    return stirling_triangle(n, k, [](long m, long) { return Integer(m - 1); });
}

Integer stirling2(long n, long k) {
    return stirling_triangle(n, k, [](long, long j) { return Integer(j); });
}

}  // namespace dfrob

#pragma once

#include <cstddef>
#include <vector>

#include "dfrob/rational.hpp"

namespace dfrob {

inline constexpr std::size_t kDefaultFactorialCap = 512;

/// Iteratively built table 0!..cap!. Immutable after construction, so
/// concurrent readers need no locking; values past the cap are computed on
/// demand without being stored.
class FactorialTable {
public:
    explicit FactorialTable(std::size_t cap = kDefaultFactorialCap);

    [[nodiscard]] Integer operator()(std::size_t n) const;
    [[nodiscard]] std::size_t cap() const { return table_.size() - 1; }

private:
    std::vector<Integer> table_;
};

/// Shared process-wide table with the default cap.
const FactorialTable& factorials();

Integer factorial(long n);

/// n(n-1)...(n-k+1); 1 when k == 0 and 0 when k > n.
Rational falling_factorial(long n, long k);

/// x(x-1)...(x-k+1) for a rational argument.
Rational falling_factorial(const Rational& x, long k);

/// x(x+1)...(x+k-1).
Rational rising_factorial(const Rational& x, long k);

/// C(n, k); 0 outside 0 <= k <= n.
Integer binomial(long n, long k);

/// 1/n! with the convention 1/n! = 0 for negative n (factorials of negative
/// integers in a denominator make the addend vanish).
Rational inverse_factorial(long n);

/// Unsigned Stirling numbers of the first kind c(n, k).
Integer stirling1_unsigned(long n, long k);

/// Stirling numbers of the second kind S(n, k).
Integer stirling2(long n, long k);

}  // namespace dfrob

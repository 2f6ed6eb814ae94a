#pragma once

// Seeded generators for the property tests.

#include <random>
#include <string>
#include <vector>

#include "dfrob/polynomial.hpp"
#include "dfrob/rational.hpp"
#include "dfrob/rota_series.hpp"

namespace dfrob::testing {

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // Small numerators and denominators, zero about one time in six.
    Rational rational(long span = 9, long max_den = 7) {
        if (integer(0, 5) == 0) return 0;
        return Rational(Integer(integer(-span, span)), Integer(integer(1, max_den)));
    }

    std::vector<Rational> rationals(std::size_t n) {
        std::vector<Rational> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(rational());
        return out;
    }

    Polynomial polynomial(std::size_t degree) { return Polynomial(rationals(degree + 1)); }

    RotaSeries series(const std::string& basis, std::size_t order) { return RotaSeries{basis, rationals(order + 1)}; }

private:
    std::mt19937 rng_;
};

inline std::vector<Rational> rats(std::initializer_list<const char*> texts) {
    std::vector<Rational> out;
    for (const char* t : texts) out.push_back(Rational::parse(t));
    return out;
}

}  // namespace dfrob::testing

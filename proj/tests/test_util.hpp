#pragma once

// Shared helpers for property-style tests: small random polynomials with
// coefficients in [-9,9] and exponents up to 6, from a fixed seed.

#include <random>

#include "lucas/polynomial.hpp"
#include "lucas/rational.hpp"

namespace test_util {

inline lucas::polynomial random_polynomial(std::mt19937& rng) {
    std::uniform_int_distribution<int> term_count(0, 6);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> exponent(0, 6);
    lucas::polynomial p;
    const int terms = term_count(rng);
    for (int i = 0; i < terms; ++i) {
        int c = coeff(rng);
        if (c == 0) continue;
        p += lucas::polynomial::term(c, unsigned(exponent(rng)), unsigned(exponent(rng)));
    }
    return p;
}

inline lucas::polynomial random_nonzero_polynomial(std::mt19937& rng) {
    for (;;) {
        lucas::polynomial p = random_polynomial(rng);
        if (!p.is_zero()) return p;
    }
}

inline lucas::rational_function random_rational(std::mt19937& rng) {
    return lucas::rational_function(random_polynomial(rng), random_nonzero_polynomial(rng));
}

}  // namespace test_util

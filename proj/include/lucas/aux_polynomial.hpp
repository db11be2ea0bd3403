#pragma once

/// @file aux_polynomial.hpp
/// Polynomials in one auxiliary variable x whose coefficients live in the
/// bivariate ring. Hosts the geometric-sum polynomials phi_n(x) and the
/// x*(d/dx) operator.

#include <cstddef>
#include <utility>
#include <vector>

#include "lucas/polynomial.hpp"

namespace lucas {

template <class Int = integer>
class basic_aux_polynomial {
public:
    using poly = basic_polynomial<Int>;

    basic_aux_polynomial() = default;
    explicit basic_aux_polynomial(std::vector<poly> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of x^i; zero beyond the stored degree.
    const poly& coeff(std::size_t i) const {
        static const poly zero{};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    friend bool operator==(const basic_aux_polynomial& a, const basic_aux_polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// The operator x*(d/dx): coefficient at index i is scaled by i.
    friend basic_aux_polynomial x_ddx(const basic_aux_polynomial& p) {
        std::vector<poly> out(p.coeffs_.size());
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            out[i] = poly(Int(i)) * p.coeffs_[i];
        return basic_aux_polynomial(std::move(out));
    }

    /// Horner evaluation at x = value, in the bivariate ring.
    poly eval_at(const poly& value) const {
        poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * value + *it;
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<poly> coeffs_;
};

using aux_polynomial = basic_aux_polynomial<>;

/// phi_n(x) = 1 + x + ... + x^n; the cyclotomic polynomial Phi_{n+1}(x)
/// whenever n+1 is prime.
inline aux_polynomial phi(unsigned n) {
    return aux_polynomial(std::vector<polynomial>(n + 1, polynomial(1)));
}

}  // namespace lucas

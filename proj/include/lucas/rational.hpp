#pragma once

/**
 * @file rational.hpp
 * @brief Quotients of bivariate polynomials with lightweight normalization.
 *
 * Normalization deliberately stops short of multivariate GCD: common
 * monomial factors and integer content are cancelled, the denominator sign
 * is fixed, and the quotient collapses to a polynomial when the denominator
 * divides the numerator exactly. Equality is decided by cross-multiplication
 * and is independent of reduction state.
 */

#include <limits>
#include <string>
#include <utility>

#include "lucas/polynomial.hpp"

namespace lucas {

/// Exact rational number num/den with den > 0 and gcd(num, den) = 1.
struct exact_ratio {
    integer num;
    integer den;

    bool is_integer() const { return den == 1; }
    std::string str() const { return den == 1 ? num.str() : num.str() + "/" + den.str(); }
    friend bool operator==(const exact_ratio&, const exact_ratio&) = default;
};

template <class Int = integer>
class basic_rational {
public:
    using poly = basic_polynomial<Int>;

    basic_rational() : num_(), den_(1) {}
    basic_rational(poly numerator) : num_(std::move(numerator)), den_(1) {}
    basic_rational(int c) : num_(c), den_(1) {}
    basic_rational(poly numerator, poly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    const poly& num() const { return num_; }
    const poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// Cross-multiplication equality: a.num*b.den == b.num*a.den.
    friend bool operator==(const basic_rational& a, const basic_rational& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    friend basic_rational operator+(const basic_rational& a, const basic_rational& b) {
        return basic_rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend basic_rational operator-(const basic_rational& a, const basic_rational& b) {
        return basic_rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend basic_rational operator*(const basic_rational& a, const basic_rational& b) {
        return basic_rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend basic_rational operator/(const basic_rational& a, const basic_rational& b) {
        if (b.num_.is_zero()) throw division_by_zero{};
        return basic_rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    basic_rational operator-() const { return basic_rational(-num_, den_); }

    /// Exact value at (s0, t0); throws division_by_zero when the denominator
    /// vanishes there.
    exact_ratio eval(const Int& s0, const Int& t0) const {
        Int dv = den_.eval(s0, t0);
        if (dv == 0) throw division_by_zero{};
        Int nv = num_.eval(s0, t0);
        if (dv < 0) {
            nv = -nv;
            dv = -dv;
        }
        Int g = boost::multiprecision::gcd(nv < 0 ? Int(-nv) : nv, dv);
        if (g > 1) {
            nv /= g;
            dv /= g;
        }
        return exact_ratio{nv, dv};
    }

    /// "num" when the denominator is 1, "(num)/(den)" otherwise.
    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const basic_rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw division_by_zero{};
        if (num_.is_zero()) {
            den_ = poly(1);
            return;
        }
        cancel_monomial_content();
        if (auto q = div_exact(num_, den_)) {
            num_ = std::move(*q);
            den_ = poly(1);
            return;
        }
        cancel_integer_content();
        if (den_.terms().begin()->second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    void cancel_monomial_content() {
        auto min_exps = [](const poly& p) {
            unsigned ms = std::numeric_limits<unsigned>::max(), mt = ms;
            for (const auto& [m, c] : p.terms()) {
                ms = std::min(ms, m.s_exp);
                mt = std::min(mt, m.t_exp);
            }
            return std::pair{ms, mt};
        };
        auto [ns, nt] = min_exps(num_);
        auto [ds, dt] = min_exps(den_);
        unsigned cs = std::min(ns, ds), ct = std::min(nt, dt);
        if (cs == 0 && ct == 0) return;
        auto strip = [&](const poly& p) {
            poly out;
            for (const auto& [m, c] : p.terms())
                out += poly::term(c, m.s_exp - cs, m.t_exp - ct);
            return out;
        };
        num_ = strip(num_);
        den_ = strip(den_);
    }

    void cancel_integer_content() {
        Int g = 0;
        for (const auto& [m, c] : num_.terms()) g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
        for (const auto& [m, c] : den_.terms()) g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
        if (g <= 1) return;
        auto scale = [&](const poly& p) {
            poly out;
            for (const auto& [m, c] : p.terms()) out += poly::term(c / g, m.s_exp, m.t_exp);
            return out;
        };
        num_ = scale(num_);
        den_ = scale(den_);
    }

    poly num_;
    poly den_;
};

using rational_function = basic_rational<>;

}  // namespace lucas

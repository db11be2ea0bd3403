#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse exact bivariate polynomials in s and t over arbitrary-precision integers.
 *
 * The term map is ordered so that iteration yields the canonical display
 * order: strictly decreasing exponent of s, ties broken by increasing
 * exponent of t. The first term under this order is the leading term used
 * by exact division.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lucas {

using integer = boost::multiprecision::cpp_int;

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero") {}
};

/// Exponent pair of a term c * s^s_exp * t^t_exp. Both exponents are
/// nonnegative; Laurent behavior lives only in basic_rational.
struct monomial {
    unsigned s_exp = 0;
    unsigned t_exp = 0;

    friend bool operator==(const monomial&, const monomial&) = default;
};

/// Canonical order: decreasing s_exp, ties by increasing t_exp.
struct canonical_term_less {
    bool operator()(const monomial& a, const monomial& b) const {
        if (a.s_exp != b.s_exp) return a.s_exp > b.s_exp;
        return a.t_exp < b.t_exp;
    }
};

/// Term orderings supported by str(). `canonical` is the library-wide
/// display contract; `ascending` (increasing t_exp, then increasing s_exp)
/// exists for table transcriptions that print low-degree terms first.
enum class term_order { canonical, ascending };

template <class Int = integer>
class basic_polynomial {
public:
    using coeff_type = Int;
    using term_map = std::map<monomial, Int, canonical_term_less>;

    struct term_init {
        long long coeff;
        unsigned s_exp;
        unsigned t_exp;
    };

    basic_polynomial() = default;
    basic_polynomial(int c) { insert_term(monomial{}, Int(c)); }
    basic_polynomial(Int c) { insert_term(monomial{}, std::move(c)); }
    basic_polynomial(std::initializer_list<term_init> ts) {
        for (const auto& t : ts) insert_term(monomial{t.s_exp, t.t_exp}, Int(t.coeff));
    }

    static basic_polynomial s() { return basic_polynomial({{1, 1, 0}}); }
    static basic_polynomial t() { return basic_polynomial({{1, 0, 1}}); }
    static basic_polynomial term(Int coeff, unsigned s_exp, unsigned t_exp) {
        basic_polynomial p;
        p.insert_term(monomial{s_exp, t_exp}, std::move(coeff));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == monomial{} &&
               terms_.begin()->second == 1;
    }
    std::size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    /// Coefficient of s^a t^b, zero when the term is absent.
    Int coeff(unsigned a, unsigned b) const {
        auto it = terms_.find(monomial{a, b});
        return it == terms_.end() ? Int(0) : it->second;
    }

    bool nonnegative_coefficients() const {
        for (const auto& [m, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    unsigned degree_s() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_)
            if (m.s_exp > d) d = m.s_exp;
        return d;
    }
    unsigned degree_t() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_)
            if (m.t_exp > d) d = m.t_exp;
        return d;
    }

    friend bool operator==(const basic_polynomial& a, const basic_polynomial& b) {
        return a.terms_ == b.terms_;
    }

    basic_polynomial& operator+=(const basic_polynomial& rhs) {
        for (const auto& [m, c] : rhs.terms_) insert_term(m, c);
        return *this;
    }
    basic_polynomial& operator-=(const basic_polynomial& rhs) {
        for (const auto& [m, c] : rhs.terms_) insert_term(m, -c);
        return *this;
    }
    basic_polynomial operator-() const {
        basic_polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend basic_polynomial operator+(basic_polynomial a, const basic_polynomial& b) {
        a += b;
        return a;
    }
    friend basic_polynomial operator-(basic_polynomial a, const basic_polynomial& b) {
        a -= b;
        return a;
    }
    friend basic_polynomial operator*(const basic_polynomial& a, const basic_polynomial& b) {
        basic_polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.insert_term(monomial{ma.s_exp + mb.s_exp, ma.t_exp + mb.t_exp}, ca * cb);
        return r;
    }
    basic_polynomial& operator*=(const basic_polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    basic_polynomial pow(unsigned e) const {
        basic_polynomial r(1);
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Exact integer value at (s0, t0).
    Int eval(const Int& s0, const Int& t0) const {
        std::vector<Int> sp{Int(1)}, tp{Int(1)};
        sp.reserve(degree_s() + 1);
        tp.reserve(degree_t() + 1);
        for (unsigned i = 1; i <= degree_s(); ++i) sp.push_back(sp.back() * s0);
        for (unsigned i = 1; i <= degree_t(); ++i) tp.push_back(tp.back() * t0);
        Int acc = 0;
        for (const auto& [m, c] : terms_) acc += c * sp[m.s_exp] * tp[m.t_exp];
        return acc;
    }

    /// Renders the polynomial; "0" for the zero polynomial, coefficient 1
    /// and exponent 1 suppressed, no whitespace ("10s^6+25s^4t+16s^2t^2+2t^3").
    std::string str(term_order order = term_order::canonical) const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<monomial, Int>> ts(terms_.begin(), terms_.end());
        if (order == term_order::ascending) {
            std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
                if (a.first.t_exp != b.first.t_exp) return a.first.t_exp < b.first.t_exp;
                return a.first.s_exp < b.first.s_exp;
            });
        }
        std::string out;
        bool first = true;
        for (const auto& [m, c] : ts) {
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) out += '-';
                first = false;
            } else {
                out += c < 0 ? '-' : '+';
            }
            bool constant = m == monomial{};
            if (mag != 1 || constant) out += mag.str();
            if (m.s_exp > 0) {
                out += 's';
                if (m.s_exp > 1) out += '^' + std::to_string(m.s_exp);
            }
            if (m.t_exp > 0) {
                out += 't';
                if (m.t_exp > 1) out += '^' + std::to_string(m.t_exp);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const basic_polynomial& p) {
        return os << p.str();
    }

private:
    void insert_term(const monomial& m, Int c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    term_map terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a in Z[s,t].
/// Repeated cancellation of the leading term of the remainder against the
/// leading term of b; quotient exponents are bounded by the degree
/// differences, so exceeding them proves non-divisibility.
template <class Int>
std::optional<basic_polynomial<Int>> div_exact(const basic_polynomial<Int>& a,
                                               const basic_polynomial<Int>& b) {
    if (b.is_zero()) throw division_by_zero{};
    basic_polynomial<Int> q;
    if (a.is_zero()) return q;
    if (a.degree_s() < b.degree_s() || a.degree_t() < b.degree_t()) return std::nullopt;
    const unsigned qs_max = a.degree_s() - b.degree_s();
    const unsigned qt_max = a.degree_t() - b.degree_t();
    const auto& [lt_b, lc_b] = *b.terms().begin();
    basic_polynomial<Int> r = a;
    while (!r.is_zero()) {
        const auto& [lt_r, lc_r] = *r.terms().begin();
        if (lt_r.s_exp < lt_b.s_exp || lt_r.t_exp < lt_b.t_exp) return std::nullopt;
        monomial qm{lt_r.s_exp - lt_b.s_exp, lt_r.t_exp - lt_b.t_exp};
        if (qm.s_exp > qs_max || qm.t_exp > qt_max) return std::nullopt;
        if (lc_r % lc_b != 0) return std::nullopt;
        auto step = basic_polynomial<Int>::term(lc_r / lc_b, qm.s_exp, qm.t_exp);
        q += step;
        r -= step * b;
    }
    return q;
}

template <class Int>
std::string to_string(const basic_polynomial<Int>& p,
                      term_order order = term_order::canonical) {
    return p.str(order);
}

using polynomial = basic_polynomial<>;

}  // namespace lucas

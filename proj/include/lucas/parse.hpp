#pragma once

/// @file parse.hpp
/// Parser for the canonical string grammar: terms `[coef][s[^e]][t[^e]]`
/// joined by `+`/`-`, with two extensions used by golden-table
/// transcriptions and tests: a trailing `/t[^e]` on a term (Laurent in t)
/// and the `(num)/(den)` quotient form. Term order is not significant.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "lucas/polynomial.hpp"
#include "lucas/rational.hpp"

namespace lucas {

struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline unsigned parse_uint(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error("expected digits at position " + std::to_string(pos) + " in '" +
                          std::string(text) + "'");
    unsigned value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + unsigned(text[pos++] - '0');
    return value;
}

}  // namespace detail

/// Parses a sum of possibly-Laurent terms into num/den with den a power of t.
inline rational_function parse_rational(std::string_view text) {
    if (text.empty()) throw parse_error("empty input");
    if (text.front() == '(') {
        auto sep = text.find(")/(");
        if (sep == std::string_view::npos || text.back() != ')')
            throw parse_error("malformed quotient '" + std::string(text) + "'");
        rational_function num = parse_rational(text.substr(1, sep - 1));
        rational_function den = parse_rational(text.substr(sep + 3, text.size() - sep - 4));
        return num / den;
    }

    // exponent pair with signed t exponent; collected before clearing
    // denominators so that s^3/t and t-free terms can mix
    std::map<std::pair<unsigned, int>, integer> terms;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        integer sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw parse_error("expected '+' or '-' at position " + std::to_string(pos) +
                              " in '" + std::string(text) + "'");
        }
        first = false;
        std::size_t term_start = pos;
        integer coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            coeff = integer(detail::parse_uint(text, pos));
        unsigned s_exp = 0;
        int t_exp = 0;
        if (pos < text.size() && text[pos] == 's') {
            ++pos;
            s_exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                s_exp = detail::parse_uint(text, pos);
            }
        }
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            t_exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                t_exp = int(detail::parse_uint(text, pos));
            }
        }
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            if (pos >= text.size() || text[pos] != 't')
                throw parse_error("only t may appear in a term denominator: '" +
                                  std::string(text) + "'");
            ++pos;
            unsigned down = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                down = detail::parse_uint(text, pos);
            }
            t_exp -= int(down);
        }
        if (pos == term_start)
            throw parse_error("empty term at position " + std::to_string(pos) + " in '" +
                              std::string(text) + "'");
        auto key = std::pair{s_exp, t_exp};
        terms[key] += sign * coeff;
        if (terms[key] == 0) terms.erase(key);
    }

    int min_t = 0;
    for (const auto& [m, c] : terms) min_t = std::min(min_t, m.second);
    polynomial num;
    for (const auto& [m, c] : terms)
        num += polynomial::term(c, m.first, unsigned(m.second - min_t));
    if (min_t == 0) return rational_function(std::move(num));
    return rational_function(std::move(num), polynomial::term(1, 0, unsigned(-min_t)));
}

/// Parses the polynomial grammar; rejects Laurent terms and quotients.
inline polynomial parse_polynomial(std::string_view text) {
    rational_function r = parse_rational(text);
    if (!r.is_polynomial())
        throw parse_error("not a polynomial: '" + std::string(text) + "'");
    return r.num();
}

}  // namespace lucas

#pragma once

/**
 * @file sequences.hpp
 * @brief Memoized generators for the Lucas-analogue sequences and triangles.
 *
 * Every generator is pure: a cell is fully determined by (sequence, n, k),
 * so memo caches can be rebuilt at will. A `sequences` instance owns its
 * caches and is meant to be confined to one execution context; the values
 * it hands out are immutable and freely shareable.
 */

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lucas/aux_polynomial.hpp"
#include "lucas/polynomial.hpp"
#include "lucas/rational.hpp"

namespace lucas {

/// Raised when a value the underlying theory guarantees to be polynomial
/// fails to collapse; signals an implementation bug, never a math failure.
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

enum class sequence_id {
    lucas,
    lucastorial,
    lucasnomial_closed,
    lucasnomial_rec,
    catalan,
    narayana_closed,
    narayana_gk,
    narayana_rec,
    eulerian,
    eulerian_prime,
    eulerian_dblprime,
    stirling2,
    motzkin_rec,
    motzkin_sum,
};

namespace detail {
inline constexpr std::array<std::pair<sequence_id, std::string_view>, 14> sequence_names{{
    {sequence_id::lucas, "lucas"},
    {sequence_id::lucastorial, "lucastorial"},
    {sequence_id::lucasnomial_closed, "lucasnomial_closed"},
    {sequence_id::lucasnomial_rec, "lucasnomial_rec"},
    {sequence_id::catalan, "catalan"},
    {sequence_id::narayana_closed, "narayana_closed"},
    {sequence_id::narayana_gk, "narayana_gk"},
    {sequence_id::narayana_rec, "narayana_rec"},
    {sequence_id::eulerian, "eulerian"},
    {sequence_id::eulerian_prime, "eulerian_prime"},
    {sequence_id::eulerian_dblprime, "eulerian_dblprime"},
    {sequence_id::stirling2, "stirling2"},
    {sequence_id::motzkin_rec, "motzkin_rec"},
    {sequence_id::motzkin_sum, "motzkin_sum"},
}};
}  // namespace detail

inline std::string_view to_string(sequence_id id) {
    for (const auto& [sid, name] : detail::sequence_names)
        if (sid == id) return name;
    return "?";
}

inline std::optional<sequence_id> sequence_from_string(std::string_view name) {
    for (const auto& [sid, name_] : detail::sequence_names)
        if (name_ == name) return sid;
    return std::nullopt;
}

inline std::vector<std::string> sequence_name_list() {
    std::vector<std::string> out;
    for (const auto& [sid, name] : detail::sequence_names) out.emplace_back(name);
    return out;
}

/// One-line defining formula, for help text and table captions.
inline std::string_view sequence_description(sequence_id id) {
    switch (id) {
        case sequence_id::lucas: return "{n} = s{n-1} + t{n-2}, {0}=0, {1}=1";
        case sequence_id::lucastorial: return "{n}! = {n}{n-1}...{1}";
        case sequence_id::lucasnomial_closed: return "{n}!/({k}!{n-k}!)";
        case sequence_id::lucasnomial_rec:
            return "B(n,k) = {k+1}B(n-1,k) + t{n-k-1}B(n-1,k-1)";
        case sequence_id::catalan: return "C{k} = {2k choose k}/{k+1}";
        case sequence_id::narayana_closed: return "N(n,k) = {n choose k}{n choose k-1}/{n}";
        case sequence_id::narayana_gk:
            return "N(n,k) = {n-1 choose k-1}^2 + t{n-1 choose k}{n-1 choose k-2}";
        case sequence_id::narayana_rec:
            return "N(n,k) = ({k}{n-1}/{n-k})N(n-1,k) + t({n-k}{n-1}/{k})N(n-1,k-1)";
        case sequence_id::eulerian: return "E(n,k) = {k+1}E(n-1,k) + {n-k+1}E(n-1,k-1)";
        case sequence_id::eulerian_prime:
            return "E'(n,k) = sum t^(k+1-j) {n+2 choose k+1-j} {j}^(n+1)";
        case sequence_id::eulerian_dblprime:
            return "E''(n,k) = sum (1/t)^(k+1-j) {n+2 choose k+1-j} {j}^(n+1)";
        case sequence_id::stirling2: return "St2(n,k) = {k}St2(n-1,k) + St2(n-1,k-1)";
        case sequence_id::motzkin_rec:
            return "M(n) = ({2n+1}M(n-1) + {3n-3}M(n-2))/{n+2}";
        case sequence_id::motzkin_sum: return "M(n) = sum {n choose 2k} C{k}";
    }
    return "?";
}

/// True for two-index (triangle) sequences, false for single-index ones.
inline bool is_triangle(sequence_id id) {
    switch (id) {
        case sequence_id::lucas:
        case sequence_id::lucastorial:
        case sequence_id::catalan:
        case sequence_id::motzkin_rec:
        case sequence_id::motzkin_sum:
            return false;
        default:
            return true;
    }
}

class sequences {
public:
    /// {n} for n >= 0: {0}=0, {1}=1, {n} = s{n-1} + t{n-2}.
    /// Returned by value: the memo vector grows on demand, so references
    /// into it would not survive later calls.
    polynomial lucas_poly(int n) {
        if (n < 0) throw std::domain_error("lucas_poly requires n >= 0");
        if (lucas_.empty()) {
            lucas_.push_back(polynomial{});
            lucas_.push_back(polynomial(1));
        }
        const auto s = polynomial::s();
        const auto t = polynomial::t();
        while (int(lucas_.size()) <= n)
            lucas_.push_back(s * lucas_[lucas_.size() - 1] + t * lucas_[lucas_.size() - 2]);
        return lucas_[std::size_t(n)];
    }

    /// {n} for any integer n; negative indices come from running the
    /// recurrence backwards, {n-2} = ({n} - s{n-1})/t, and are rational.
    rational_function lucas(int n) {
        if (n >= 0) return rational_function(lucas_poly(n));
        if (auto it = lucas_neg_.find(n); it != lucas_neg_.end()) return it->second;
        rational_function hi = lucas(n + 2);
        rational_function mid = lucas(n + 1);
        rational_function value =
            (hi - rational_function(polynomial::s()) * mid) / rational_function(polynomial::t());
        lucas_neg_.emplace(n, value);
        return value;
    }

    /// {n}! = {n}{n-1}...{1}, with {0}! = 1.
    polynomial lucastorial(int n) {
        if (n < 0) throw std::domain_error("lucastorial requires n >= 0");
        if (lucastorial_.empty()) lucastorial_.push_back(polynomial(1));
        while (int(lucastorial_.size()) <= n)
            lucastorial_.push_back(lucas_poly(int(lucastorial_.size())) *
                                   lucastorial_[lucastorial_.size() - 1]);
        return lucastorial_[std::size_t(n)];
    }

    /// Lucasnomial {n}!/({k}!{n-k}!) via exact division.
    polynomial lucasnomial(int n, int k) {
        if (k < 0 || k > n) return polynomial{};
        if (k == 0 || k == n) return polynomial(1);
        auto key = std::pair{n, k};
        if (auto it = lucasnomial_.find(key); it != lucasnomial_.end()) return it->second;
        auto q = div_exact(lucastorial(n), lucastorial(k) * lucastorial(n - k));
        if (!q)
            throw internal_inconsistency("lucasnomial(" + std::to_string(n) + "," +
                                         std::to_string(k) + "): division not exact");
        lucasnomial_.emplace(key, *q);
        return *q;
    }

    /// Lucasnomial from the recursion B(n,k) = {k+1}B(n-1,k) + t{n-k-1}B(n-1,k-1).
    polynomial lucasnomial_rec(int n, int k) {
        if (k < 0 || n < k) return polynomial{};
        if (k == 0 || k == n) return polynomial(1);
        auto key = std::pair{n, k};
        if (auto it = lucasnomial_rec_.find(key); it != lucasnomial_rec_.end())
            return it->second;
        polynomial value = lucas_poly(k + 1) * lucasnomial_rec(n - 1, k) +
                           polynomial::t() * lucas_poly(n - k - 1) * lucasnomial_rec(n - 1, k - 1);
        lucasnomial_rec_.emplace(key, value);
        return value;
    }

    /// Lucas-Catalan {2k choose k}/{k+1}, exact.
    polynomial catalan(int k) {
        if (k < 0) throw std::domain_error("catalan requires k >= 0");
        auto q = div_exact(lucasnomial(2 * k, k), lucas_poly(k + 1));
        if (!q)
            throw internal_inconsistency("catalan(" + std::to_string(k) +
                                         "): division not exact");
        return *q;
    }

    /// Lucas-Narayana, closed form {n choose k}{n choose k-1}/{n}.
    polynomial narayana(int n, int k) {
        if (n == 0 && k == 0) return polynomial(1);
        if (k < 1 || k > n) return polynomial{};
        auto q = div_exact(lucasnomial(n, k) * lucasnomial(n, k - 1), lucas_poly(n));
        if (!q)
            throw internal_inconsistency("narayana(" + std::to_string(n) + "," +
                                         std::to_string(k) + "): division not exact");
        return *q;
    }

    /// Lucas-Narayana via the Lucasnomial-square formula
    /// {n-1 choose k-1}^2 + t{n-1 choose k}{n-1 choose k-2}; boundary cells
    /// outside 2 <= k <= n-1 defer to the closed-form values.
    polynomial narayana_gk(int n, int k) {
        if (n == 0 && k == 0) return polynomial(1);
        if (k < 1 || k > n) return polynomial{};
        if (k == 1 || k == n) return polynomial(1);
        return lucasnomial(n - 1, k - 1) * lucasnomial(n - 1, k - 1) +
               polynomial::t() * lucasnomial(n - 1, k) * lucasnomial(n - 1, k - 2);
    }

    /// Lucas-Narayana from the recursion
    /// N(n,k) = ({k}{n-1}/{n-k}) N(n-1,k) + t({n-k}{n-1}/{k}) N(n-1,k-1).
    /// Each step runs in rational arithmetic and must collapse back to a
    /// polynomial; failure to collapse is an implementation bug.
    polynomial narayana_rec(int n, int k) {
        if (n == 0 && k == 0) return polynomial(1);
        if (k < 1 || k > n) return polynomial{};
        if (k == 1 || k == n) return polynomial(1);
        auto key = std::pair{n, k};
        if (auto it = narayana_rec_.find(key); it != narayana_rec_.end()) return it->second;
        rational_function t_rf{polynomial::t()};
        rational_function lhs =
            rational_function(lucas_poly(k) * lucas_poly(n - 1) * narayana_rec(n - 1, k)) /
            rational_function(lucas_poly(n - k));
        rational_function rhs =
            t_rf *
            rational_function(lucas_poly(n - k) * lucas_poly(n - 1) * narayana_rec(n - 1, k - 1)) /
            rational_function(lucas_poly(k));
        rational_function value = lhs + rhs;
        if (!value.is_polynomial())
            throw internal_inconsistency("narayana_rec(" + std::to_string(n) + "," +
                                         std::to_string(k) + "): no polynomial collapse");
        narayana_rec_.emplace(key, value.num());
        return value.num();
    }

    /// Lucas-Eulerian: E(n,k) = {k+1}E(n-1,k) + {n-k+1}E(n-1,k-1),
    /// E(n,0) = E(n,n) = 1.
    polynomial eulerian(int n, int k) {
        if (k < 0 || n < k) return polynomial{};
        if (k == 0 || k == n) return polynomial(1);
        auto key = std::pair{n, k};
        if (auto it = eulerian_.find(key); it != eulerian_.end()) return it->second;
        polynomial value = lucas_poly(k + 1) * eulerian(n - 1, k) +
                           lucas_poly(n - k + 1) * eulerian(n - 1, k - 1);
        eulerian_.emplace(key, value);
        return value;
    }

    /// First-column sum form E(n,1) = sum_{j=0}^{n} {n-j}{2}^j.
    polynomial eulerian_first_column(int n) {
        if (n < 0) throw std::domain_error("eulerian_first_column requires n >= 0");
        polynomial acc;
        polynomial power(1);
        const polynomial two = lucas_poly(2);
        for (int j = 0; j <= n; ++j) {
            acc += lucas_poly(n - j) * power;
            power *= two;
        }
        return acc;
    }

    /// {A(n,1)}(x) = {n} + {n-1}x + ... + {0}x^n; evaluating at x = {2}
    /// recovers E(n,1).
    aux_polynomial a_n1_poly(int n) {
        if (n < 0) throw std::domain_error("a_n1_poly requires n >= 0");
        std::vector<polynomial> coeffs;
        coeffs.reserve(std::size_t(n) + 1);
        for (int j = 0; j <= n; ++j) coeffs.push_back(lucas_poly(n - j));
        return aux_polynomial(std::move(coeffs));
    }

    /// E'(n,k) = sum_{j=0}^{k+1} t^{k+1-j} {n+2 choose k+1-j} {j}^{n+1} for
    /// 0 <= k < n, with E'(n,n) = 1 and E'(n,k) = 0 for n < k.
    polynomial eulerian_prime(int n, int k) {
        if (k < 0 || n < k) return polynomial{};
        if (n == k) return polynomial(1);
        polynomial acc;
        for (int j = 0; j <= k + 1; ++j)
            acc += polynomial::term(1, 0, unsigned(k + 1 - j)) * lucasnomial(n + 2, k + 1 - j) *
                   lucas_poly(j).pow(unsigned(n + 1));
        return acc;
    }

    /// E''(n,k): as E' but with (1/t)^{k+1-j}, using the negative-index
    /// extension of the recurrence; denominators are powers of t.
    rational_function eulerian_dblprime(int n, int k) {
        if (k < 0 || n < k) return rational_function{};
        if (n == k) return rational_function(polynomial(1));
        rational_function acc;
        for (int j = 0; j <= k + 1; ++j) {
            rational_function inv_t_pow(polynomial(1), polynomial::term(1, 0, unsigned(k + 1 - j)));
            acc = acc + inv_t_pow * rational_function(lucasnomial(n + 2, k + 1 - j) *
                                                      lucas_poly(j).pow(unsigned(n + 1)));
        }
        return acc;
    }

    /// Lucas-Stirling of the second kind: St2(n,k) = {k}St2(n-1,k) + St2(n-1,k-1),
    /// with St2(0,0) = 1, St2(n,k) = 1 for n = k or k = 1, 0 for k = 0 < n or n < k.
    polynomial stirling2(int n, int k) {
        if (k < 0 || n < k) return polynomial{};
        if (n == 0 && k == 0) return polynomial(1);
        if (k == 0) return polynomial{};
        if (n == k || k == 1) return polynomial(1);
        auto key = std::pair{n, k};
        if (auto it = stirling2_.find(key); it != stirling2_.end()) return it->second;
        polynomial value = lucas_poly(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
        stirling2_.emplace(key, value);
        return value;
    }

    /// Lucas-Motzkin from the recursion
    /// M(n) = ({2n+1}/{n+2}) M(n-1) + ({3n-3}/{n+2}) M(n-2), M(0) = M(1) = 1.
    /// Generally a proper rational function.
    rational_function motzkin_rec(int n) {
        if (n < 0) throw std::domain_error("motzkin_rec requires n >= 0");
        if (motzkin_rec_.empty()) {
            motzkin_rec_.push_back(rational_function(polynomial(1)));
            motzkin_rec_.push_back(rational_function(polynomial(1)));
        }
        while (int(motzkin_rec_.size()) <= n) {
            int m = int(motzkin_rec_.size());
            // both terms share the denominator {m+2}; dividing the combined
            // numerator keeps the fractions as small as no-GCD arithmetic allows
            rational_function value =
                (rational_function(lucas_poly(2 * m + 1)) * motzkin_rec_[std::size_t(m - 1)] +
                 rational_function(lucas_poly(3 * m - 3)) * motzkin_rec_[std::size_t(m - 2)]) /
                rational_function(lucas_poly(m + 2));
            motzkin_rec_.push_back(value);
        }
        return motzkin_rec_[std::size_t(n)];
    }

    /// Lucas-Motzkin from the binomial-Catalan sum
    /// M(n) = sum_{k=0}^{floor(n/2)} {n choose 2k} C{k}; always polynomial.
    polynomial motzkin_sum(int n) {
        if (n < 0) throw std::domain_error("motzkin_sum requires n >= 0");
        polynomial acc;
        for (int k = 0; 2 * k <= n; ++k) acc += lucasnomial(n, 2 * k) * catalan(k);
        return acc;
    }

    /// Uniform dispatch used by the CLI and the table builder. Single-index
    /// sequences ignore k.
    rational_function value(sequence_id id, int n, int k = 0) {
        switch (id) {
            case sequence_id::lucas: return lucas(n);
            case sequence_id::lucastorial: return rational_function(lucastorial(n));
            case sequence_id::lucasnomial_closed: return rational_function(lucasnomial(n, k));
            case sequence_id::lucasnomial_rec: return rational_function(lucasnomial_rec(n, k));
            case sequence_id::catalan: return rational_function(catalan(n));
            case sequence_id::narayana_closed: return rational_function(narayana(n, k));
            case sequence_id::narayana_gk: return rational_function(narayana_gk(n, k));
            case sequence_id::narayana_rec: return rational_function(narayana_rec(n, k));
            case sequence_id::eulerian: return rational_function(eulerian(n, k));
            case sequence_id::eulerian_prime: return rational_function(eulerian_prime(n, k));
            case sequence_id::eulerian_dblprime: return eulerian_dblprime(n, k);
            case sequence_id::stirling2: return rational_function(stirling2(n, k));
            case sequence_id::motzkin_rec: return motzkin_rec(n);
            case sequence_id::motzkin_sum: return rational_function(motzkin_sum(n));
        }
        throw std::domain_error("unknown sequence");
    }

private:
    std::vector<polynomial> lucas_;
    std::map<int, rational_function> lucas_neg_;
    std::vector<polynomial> lucastorial_;
    std::map<std::pair<int, int>, polynomial> lucasnomial_;
    std::map<std::pair<int, int>, polynomial> lucasnomial_rec_;
    std::map<std::pair<int, int>, polynomial> narayana_rec_;
    std::map<std::pair<int, int>, polynomial> eulerian_;
    std::map<std::pair<int, int>, polynomial> stirling2_;
    std::vector<rational_function> motzkin_rec_;
};

/// Materialized table of one sequence: all cells with 0 <= n <= rows
/// (columns 0..n for triangles, the single column 0 otherwise).
struct triangle_table {
    sequence_id id = sequence_id::lucas;
    int rows = 0;
    std::map<std::pair<int, int>, rational_function> cells;
};

inline triangle_table triangle(sequences& gen, sequence_id id, int rows) {
    if (rows < 0) throw std::domain_error("triangle requires rows >= 0");
    triangle_table table{id, rows, {}};
    for (int n = 0; n <= rows; ++n) {
        int k_max = is_triangle(id) ? n : 0;
        for (int k = 0; k <= k_max; ++k) table.cells.emplace(std::pair{n, k}, gen.value(id, n, k));
    }
    return table;
}

}  // namespace lucas

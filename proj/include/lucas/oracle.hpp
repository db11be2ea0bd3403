#pragma once

/**
 * @file oracle.hpp
 * @brief Independent ground truth by direct enumeration.
 *
 * Everything here counts explicit combinatorial objects (tilings,
 * permutations, set partitions, lattice paths) one by one. No recurrence
 * or formula is shared with the generators under test, so a bug there
 * cannot be mirrored here.
 */

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lucas/polynomial.hpp"

namespace lucas::oracle {

struct tiling_enumeration {
    polynomial weight_sum;
    integer count = 0;
};

/// Enumerates every monomino/domino tiling of a 1 x n row and sums the
/// weights s^(#monominoes) t^(#dominoes). The empty row has one tiling of
/// weight 1.
inline tiling_enumeration tiling_weight_sum(int n) {
    if (n < 0) throw std::domain_error("tiling_weight_sum requires n >= 0");
    tiling_enumeration out;
    std::vector<int> pieces;
    auto visit = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            unsigned monominoes = 0, dominoes = 0;
            for (int p : pieces) (p == 1 ? monominoes : dominoes) += 1;
            out.weight_sum += polynomial::term(1, monominoes, dominoes);
            ++out.count;
            return;
        }
        pieces.push_back(1);
        self(self, remaining - 1);
        pieces.pop_back();
        if (remaining >= 2) {
            pieces.push_back(2);
            self(self, remaining - 2);
            pieces.pop_back();
        }
    };
    visit(visit, n);
    return out;
}

/// Weight of all tilings of the staircase (n-1, n-2, ..., 1): the product
/// of the row weights.
inline polynomial staircase_weight(int n) {
    if (n < 0) throw std::domain_error("staircase_weight requires n >= 0");
    polynomial acc(1);
    for (int row = n - 1; row >= 1; --row) acc *= tiling_weight_sum(row).weight_sum;
    return acc;
}

/// Permutations of {1..n+1} grouped by descent count, by full enumeration.
inline std::vector<integer> eulerian_row(int n) {
    if (n < 0) throw std::domain_error("eulerian_row requires n >= 0");
    std::vector<int> perm(std::size_t(n) + 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<integer> row(std::size_t(n) + 1, integer(0));
    do {
        int descents = 0;
        for (std::size_t i = 0; i + 1 < perm.size(); ++i)
            if (perm[i] > perm[i + 1]) ++descents;
        ++row[std::size_t(descents)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return row;
}

inline integer classical_eulerian(int n, int k) {
    if (k < 0 || k > n) return 0;
    return eulerian_row(n)[std::size_t(k)];
}

/// Set partitions of {1..n} grouped by block count, enumerated as
/// restricted growth strings.
inline std::vector<integer> stirling2_row(int n) {
    if (n < 0) throw std::domain_error("stirling2_row requires n >= 0");
    std::vector<integer> row(std::size_t(n) + 1, integer(0));
    if (n == 0) {
        row[0] = 1;
        return row;
    }
    std::vector<int> rgs(std::size_t(n), 0);
    auto visit = [&](auto&& self, std::size_t i, int max_block) -> void {
        if (i == rgs.size()) {
            ++row[std::size_t(max_block) + 1];
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(max_block, b));
        }
    };
    visit(visit, 1, 0);
    return row;
}

inline integer classical_stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    return stirling2_row(n)[std::size_t(k)];
}

/// Motzkin paths of length n (up/down/flat steps, never below the axis,
/// ending on it), counted one path at a time.
inline integer classical_motzkin(int n) {
    if (n < 0) throw std::domain_error("classical_motzkin requires n >= 0");
    integer count = 0;
    auto visit = [&](auto&& self, int remaining, int height) -> void {
        if (height > remaining) return;  // cannot return to the axis
        if (remaining == 0) {
            ++count;
            return;
        }
        self(self, remaining - 1, height);      // flat
        self(self, remaining - 1, height + 1);  // up
        if (height > 0) self(self, remaining - 1, height - 1);  // down
    };
    visit(visit, n, 0);
    return count;
}

inline integer fibonacci(int n) {
    if (n < 0) throw std::domain_error("fibonacci requires n >= 0");
    integer a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        integer next = a + b;
        a = b;
        b = next;
    }
    return a;
}

}  // namespace lucas::oracle

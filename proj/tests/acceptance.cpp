// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line each. Exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lucas/lucas.hpp"

namespace {

using lucas::aux_polynomial;
using lucas::integer;
using lucas::parse_rational;
using lucas::polynomial;
using lucas::rational_function;
using lucas::sequences;
using namespace lucas::verify;

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

bool suite_check_passes(sequences& gen, const std::string& id, int max_n,
                        std::size_t* cells = nullptr) {
    std::vector<std::string> only{id};
    auto report = run_suite(gen, max_n, &only);
    if (report.checks.size() != 1) return false;
    if (cells) *cells = report.checks.front().cells_checked;
    return report.checks.front().status == check_status::pass;
}

}  // namespace

int main() {
    sequences gen;

    criterion("Table 1 reproduction (21 cells, byte-for-byte)", [&](std::string& detail) {
        std::vector<std::string> only{"table1"};
        auto report = golden_tables(gen, 5, &only);
        bool ok = report.checks.size() == 21 && report.passed == 21;
        ok = ok && gen.eulerian(5, 2).str() == "10s^6+25s^4t+16s^2t^2+2t^3";
        detail = std::to_string(report.passed) + "/21 cells";
        return ok;
    });

    criterion("Tables 2-3 reproduction (E' and E'', k=1, rows 0-5)", [&](std::string& detail) {
        std::vector<std::string> only{"table2", "table3"};
        auto report = golden_tables(gen, 5, &only);
        if (report.checks.size() != 12 || report.passed != 12) return false;
        // the documented doubled-'+' typo in Table 2 row 2, with the recomputed cell
        for (const auto& check : report.checks) {
            if (check.id == "table2" && check.index_range == "(2,1)") {
                if (check.witnesses.empty()) return false;
                if (check.witnesses.front().lhs != "s^3+s^3t+2st^2") return false;
                detail = "row 2 recomputed as " + check.witnesses.front().lhs;
            }
        }
        return gen.eulerian_prime(2, 1).str() == "s^3+s^3t+2st^2";
    });

    criterion("Table 4 reproduction with errata on column k=2", [&](std::string& detail) {
        std::vector<std::string> only{"table4"};
        auto report = golden_tables(gen, 5, &only);
        if (report.checks.size() != 21 || report.failed != 0) return false;
        std::set<std::string> errata_cells;
        const check_witness* cell42 = nullptr;
        for (const auto& check : report.checks) {
            if (check.status == check_status::errata) {
                errata_cells.insert(check.index_range);
                if (check.index_range == "(4,2)" && !check.witnesses.empty())
                    cell42 = &check.witnesses.front();
            }
        }
        if (errata_cells != std::set<std::string>{"(2,2)", "(3,2)", "(4,2)", "(5,2)"})
            return false;
        if (!cell42 || cell42->lhs != "1+s+s^2" || cell42->rhs != "1+s+s^2+s^3") return false;
        integer classical = lucas::oracle::classical_stirling2(4, 2);
        detail = "generated " + cell42->lhs + " vs printed " + cell42->rhs +
                 ", set-partition count " + classical.str();
        return classical == 7 && gen.stirling2(4, 2).eval(2, -1) == classical;
    });

    criterion("Lucasnomial recursive/closed agreement, 0<=k<=n<=20", [&](std::string& detail) {
        std::size_t cells = 0;
        bool ok = suite_check_passes(gen, "lucasnomial_consistency", 20, &cells);
        detail = std::to_string(cells) + " cells";
        return ok && cells == 231;
    });

    criterion("Narayana three-way agreement, 1<=k<=n<=15", [&](std::string& detail) {
        std::size_t cells = 0;
        bool ok = suite_check_passes(gen, "narayana_three_way", 15, &cells);
        detail = std::to_string(cells) + " cells, rational steps collapsed";
        return ok && cells == 120;
    });

    criterion("Palindromicity: E (n<=15), B (n<=20), N (n<=15)", [&](std::string&) {
        return suite_check_passes(gen, "palindromicity", 15) &&
               suite_check_passes(gen, "lucasnomial_palindromicity", 20) &&
               suite_check_passes(gen, "narayana_palindromicity", 15);
    });

    criterion("Specialization battery at (2,-1), (1,1), (3,-2), n<=30", [&](std::string&) {
        if (!suite_check_passes(gen, "lucas_specializations", 30)) return false;
        for (int n = 0; n <= 30; ++n) {
            integer two_pow = integer(1) << n;
            if (gen.lucas_poly(n).eval(3, -2) != two_pow - 1) return false;
        }
        return true;
    });

    criterion("Eulerian descent oracle, n<=8, row sums (n+1)!", [&](std::string& detail) {
        std::size_t cells = 0;
        bool ok = suite_check_passes(gen, "eulerian_oracle", 8, &cells);
        detail = std::to_string(cells) + " cells";
        return ok;
    });

    criterion("Extra-term identity E''(n,1)-E(n,1), 2<=n<=10", [&](std::string&) {
        if (!suite_check_passes(gen, "extra_term_identity", 10)) return false;
        rational_function diff =
            gen.eulerian_dblprime(4, 1) - rational_function(gen.eulerian(4, 1));
        return diff == parse_rational("s^5+s^5/t");
    });

    criterion("Motzkin dichotomy and path oracle, n<=12", [&](std::string& detail) {
        if (!suite_check_passes(gen, "motzkin_dichotomy", 12)) return false;
        if (!suite_check_passes(gen, "motzkin_oracle", 12)) return false;
        rational_function m2 = gen.motzkin_rec(2);
        detail = "M(2) = " + m2.str();
        return !m2.is_polynomial() &&
               m2 == parse_rational("(s^4+3s^2t+t^2+s^2+t)/(s^3+2st)");
    });

    criterion("Tiling oracle (n<=15) and staircase weights (n<=10)", [&](std::string&) {
        return suite_check_passes(gen, "tiling_oracle", 15) &&
               suite_check_passes(gen, "staircase_oracle", 10);
    });

    criterion("First-column formula and x d/dx on phi_3, n<=15", [&](std::string&) {
        if (!suite_check_passes(gen, "first_column_formula", 15)) return false;
        aux_polynomial expected(std::vector<polynomial>{
            polynomial{}, polynomial(1), polynomial(2), polynomial(3)});
        return x_ddx(lucas::phi(3)) == expected;
    });

    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}

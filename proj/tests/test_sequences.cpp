#include <catch2/catch_amalgamated.hpp>

#include "lucas/parse.hpp"
#include "lucas/sequences.hpp"

using lucas::parse_polynomial;
using lucas::parse_rational;
using lucas::polynomial;
using lucas::rational_function;
using lucas::sequence_id;
using lucas::sequences;

TEST_CASE("generalized Lucas numbers") {
    sequences gen;
    CHECK(gen.lucas_poly(0).is_zero());
    CHECK(gen.lucas_poly(1).str() == "1");
    CHECK(gen.lucas_poly(2).str() == "s");
    CHECK(gen.lucas_poly(3).str() == "s^2+t");
    CHECK(gen.lucas_poly(4).str() == "s^3+2st");
    CHECK(gen.lucas_poly(5).str() == "s^4+3s^2t+t^2");
    CHECK(gen.lucas_poly(6).str() == "s^5+4s^3t+3st^2");
}

TEST_CASE("negative indices extend the recurrence") {
    sequences gen;
    CHECK(gen.lucas(-1) == parse_rational("1/t"));
    CHECK(gen.lucas(-2).str() == "(-s)/(t^2)");
    // running the recurrence forward from the extension recovers {0} and {1}
    rational_function s{polynomial::s()}, t{polynomial::t()};
    CHECK(s * gen.lucas(-1) + t * gen.lucas(-2) == gen.lucas(0));
    CHECK(s * gen.lucas(0) + t * gen.lucas(-1) == gen.lucas(1));
    CHECK(gen.lucas(7) == rational_function(parse_polynomial("s^6+5s^4t+6s^2t^2+t^3")));
}

TEST_CASE("lucastorial") {
    sequences gen;
    CHECK(gen.lucastorial(0).str() == "1");
    CHECK(gen.lucastorial(3).str() == "s^3+st");
    CHECK(gen.lucastorial(4) == gen.lucas_poly(4) * gen.lucastorial(3));
}

TEST_CASE("lucasnomials") {
    sequences gen;
    CHECK(gen.lucasnomial(4, 2).str() == "s^4+3s^2t+2t^2");
    CHECK(gen.lucasnomial(9, 0).str() == "1");
    CHECK(gen.lucasnomial(5, 2).str() == "s^6+5s^4t+7s^2t^2+2t^3");
    CHECK(gen.lucasnomial(3, 5).is_zero());
    CHECK(gen.lucasnomial(3, -1).is_zero());
    CHECK(gen.lucasnomial(5, 2).eval(2, -1) == 10);

    CHECK(gen.lucasnomial_rec(2, 1).str() == "s");
    CHECK(gen.lucasnomial_rec(3, 5).is_zero());
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(gen.lucasnomial_rec(n, k) == gen.lucasnomial(n, k));
}

TEST_CASE("lucas-catalan") {
    sequences gen;
    CHECK(gen.catalan(0).str() == "1");
    CHECK(gen.catalan(1).str() == "1");
    CHECK(gen.catalan(2).str() == "s^2+2t");
    CHECK(gen.catalan(2).eval(2, -1) == 2);
}

TEST_CASE("lucas-narayana three ways") {
    sequences gen;
    CHECK(gen.narayana(4, 2).str() == "s^4+3s^2t+2t^2");
    CHECK(gen.narayana(7, 1).str() == "1");
    CHECK(gen.narayana(3, 2).str() == "s^2+t");
    CHECK(gen.narayana(0, 0).str() == "1");
    CHECK(gen.narayana(4, 0).is_zero());

    CHECK(gen.narayana_gk(4, 2) == gen.narayana(4, 2));
    CHECK(gen.narayana_gk(5, 1).str() == "1");
    CHECK(gen.narayana_gk(4, 3) == gen.narayana(4, 2));  // palindromic partner

    CHECK(gen.narayana_rec(4, 2) == gen.narayana(4, 2));
    CHECK(gen.narayana_rec(3, 3).str() == "1");
    CHECK(gen.narayana_rec(5, 3).eval(2, -1) == 20);

    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(gen.narayana_gk(n, k) == gen.narayana(n, k));
            CHECK(gen.narayana_rec(n, k) == gen.narayana(n, k));
        }
}

TEST_CASE("lucas-eulerian recursion") {
    sequences gen;
    CHECK(gen.eulerian(2, 1).str() == "2s");
    CHECK(gen.eulerian(4, 2).str() == "6s^4+8s^2t+2t^2");
    CHECK(gen.eulerian(5, 1).str() == "5s^4+6s^2t+t^2");
    CHECK(gen.eulerian(5, 2).str() == "10s^6+25s^4t+16s^2t^2+2t^3");
    CHECK(gen.eulerian(9, 0).str() == "1");
    CHECK(gen.eulerian(3, 7).is_zero());
}

TEST_CASE("first-column formula and auxiliary polynomial") {
    sequences gen;
    CHECK(gen.eulerian_first_column(3).str() == "3s^2+t");
    CHECK(gen.eulerian_first_column(0).is_zero());
    CHECK(gen.eulerian_first_column(4).str() == "4s^3+3st");
    for (int n = 0; n <= 10; ++n) {
        CHECK(gen.eulerian_first_column(n) == gen.eulerian(n, 1));
        CHECK(gen.a_n1_poly(n).eval_at(gen.lucas_poly(2)) == gen.eulerian(n, 1));
    }
    // coefficients run {n}, {n-1}, ..., {1}; the trailing {0} is trimmed
    CHECK(gen.a_n1_poly(3).size() == 3);
    CHECK(gen.a_n1_poly(3).coeff(0) == gen.lucas_poly(3));
}

TEST_CASE("alternating-sum analogue with t") {
    sequences gen;
    CHECK(gen.eulerian_prime(2, 1).str() == "s^3+s^3t+2st^2");
    CHECK(gen.eulerian_prime(1, 1).str() == "1");
    CHECK(gen.eulerian_prime(0, 1).is_zero());
    CHECK(gen.eulerian_prime(3, 1).str() == "s^4+s^4t+3s^2t^2+t^3");
    CHECK(gen.eulerian_prime(4, 0).str() == "1");
}

TEST_CASE("alternating-sum analogue with 1/t") {
    sequences gen;
    CHECK(gen.eulerian_dblprime(2, 1) == parse_rational("2s+s^3+s^3/t"));
    CHECK(gen.eulerian_dblprime(5, 1) == parse_rational("5s^4+6s^2t+t^2+s^6+s^6/t"));
    CHECK(gen.eulerian_dblprime(1, 1) == rational_function(polynomial(1)));
    CHECK(gen.eulerian_dblprime(0, 1).is_zero());

    for (int n = 2; n <= 8; ++n) {
        rational_function diff =
            gen.eulerian_dblprime(n, 1) - rational_function(gen.eulerian(n, 1));
        rational_function extra(polynomial::term(1, unsigned(n + 1), 1) +
                                    polynomial::term(1, unsigned(n + 1), 0),
                                polynomial::t());
        CHECK(diff == extra);
        CHECK_FALSE(gen.eulerian_dblprime(n, 1) == rational_function(gen.eulerian(n, 1)));
        CHECK_FALSE(rational_function(gen.eulerian_prime(n, 1)) ==
                    rational_function(gen.eulerian(n, 1)));
    }
}

TEST_CASE("lucas-stirling of the second kind") {
    sequences gen;
    CHECK(gen.stirling2(4, 3) == parse_polynomial("1+s+s^2+t"));
    CHECK(gen.stirling2(5, 4) == parse_polynomial("1+s+s^2+s^3+t+2st"));
    CHECK(gen.stirling2(4, 2) == parse_polynomial("1+s+s^2"));
    CHECK(gen.stirling2(4, 2).eval(2, -1) == 7);  // B(4,2) of set partitions, not 15
    CHECK(gen.stirling2(2, 2).str() == "1");
    CHECK(gen.stirling2(6, 1).str() == "1");
    CHECK(gen.stirling2(3, 0).is_zero());
    CHECK(gen.stirling2(2, 5).is_zero());
}

TEST_CASE("lucas-motzkin recursion stays rational") {
    sequences gen;
    CHECK(gen.motzkin_rec(0) == rational_function(polynomial(1)));
    CHECK(gen.motzkin_rec(1) == rational_function(polynomial(1)));
    rational_function m2 = gen.motzkin_rec(2);
    CHECK_FALSE(m2.is_polynomial());
    CHECK(m2 == parse_rational("(s^4+3s^2t+t^2+s^2+t)/(s^3+2st)"));
    CHECK(m2.eval(2, -1) == lucas::exact_ratio{2, 1});
}

TEST_CASE("lucas-motzkin binomial-catalan sum") {
    sequences gen;
    CHECK(gen.motzkin_sum(0).str() == "1");
    CHECK(gen.motzkin_sum(2).str() == "2");
    CHECK(gen.motzkin_sum(3) == parse_polynomial("1+s^2+t"));
    CHECK(gen.motzkin_sum(3).eval(2, -1) == 4);
    CHECK_FALSE(rational_function(gen.motzkin_sum(2)) == gen.motzkin_rec(2));
}

TEST_CASE("sequence name round-trip") {
    using lucas::sequence_from_string;
    for (const auto& name : lucas::sequence_name_list()) {
        auto id = sequence_from_string(name);
        REQUIRE(id.has_value());
        CHECK(lucas::to_string(*id) == name);
    }
    CHECK_FALSE(sequence_from_string("eulerian2").has_value());
    CHECK(lucas::is_triangle(sequence_id::eulerian));
    CHECK_FALSE(lucas::is_triangle(sequence_id::motzkin_rec));
}

TEST_CASE("triangle tables are reproducible") {
    sequences gen_a, gen_b;
    auto ta = lucas::triangle(gen_a, sequence_id::eulerian, 6);
    auto tb = lucas::triangle(gen_b, sequence_id::eulerian, 6);
    REQUIRE(ta.cells.size() == tb.cells.size());
    for (const auto& [key, value] : ta.cells) {
        REQUIRE(tb.cells.count(key) == 1);
        CHECK(value == tb.cells.at(key));
        // boundary cells match the initial conditions
        if (key.second == 0 || key.second == key.first) CHECK(value.str() == "1");
    }

    auto single = lucas::triangle(gen_a, sequence_id::eulerian, 0);
    REQUIRE(single.cells.size() == 1);
    CHECK(single.cells.at({0, 0}).str() == "1");

    auto column = lucas::triangle(gen_a, sequence_id::motzkin_sum, 4);
    CHECK(column.cells.size() == 5);
    CHECK(column.cells.at({4, 0}).num().eval(2, -1) == 9);
}

TEST_CASE("domain errors") {
    sequences gen;
    CHECK_THROWS_AS(gen.lucastorial(-1), std::domain_error);
    CHECK_THROWS_AS(gen.motzkin_rec(-2), std::domain_error);
    CHECK_THROWS_AS(gen.catalan(-1), std::domain_error);
    CHECK_THROWS_AS(lucas::triangle(gen, sequence_id::eulerian, -1), std::domain_error);
}

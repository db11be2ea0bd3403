#include <catch2/catch_amalgamated.hpp>

#include "lucas/oracle.hpp"
#include "lucas/sequences.hpp"

using lucas::integer;
using lucas::polynomial;
using namespace lucas::oracle;

TEST_CASE("tiling enumeration") {
    auto empty = tiling_weight_sum(0);
    CHECK(empty.weight_sum.str() == "1");
    CHECK(empty.count == 1);

    auto three = tiling_weight_sum(3);  // mmm, md, dm
    CHECK(three.weight_sum.str() == "s^3+2st");
    CHECK(three.count == 3);

    auto four = tiling_weight_sum(4);
    CHECK(four.weight_sum.str() == "s^4+3s^2t+t^2");
    CHECK(four.count == 5);
}

TEST_CASE("tiling weights match the Lucas sequence") {
    lucas::sequences gen;
    for (int n = 0; n <= 12; ++n) {
        auto e = tiling_weight_sum(n);
        CHECK(e.weight_sum == gen.lucas_poly(n + 1));
        CHECK(e.count == fibonacci(n + 1));
    }
}

TEST_CASE("staircase weights match the lucastorial") {
    lucas::sequences gen;
    CHECK(staircase_weight(0).str() == "1");
    CHECK(staircase_weight(3).str() == "s^3+st");
    for (int n = 0; n <= 8; ++n) CHECK(staircase_weight(n) == gen.lucastorial(n));
}

TEST_CASE("descent counts") {
    CHECK(classical_eulerian(2, 1) == 4);
    CHECK(classical_eulerian(7, 0) == 1);
    auto row = eulerian_row(3);  // S_4 by descents
    REQUIRE(row.size() == 4);
    CHECK(row[0] == 1);
    CHECK(row[1] == 11);
    CHECK(row[2] == 11);
    CHECK(row[3] == 1);
    integer sum = 0;
    for (const auto& v : row) sum += v;
    CHECK(sum == 24);
}

TEST_CASE("descent counts specialize the Lucas-Eulerian triangle") {
    lucas::sequences gen;
    for (int n = 0; n <= 6; ++n) {
        auto row = eulerian_row(n);
        for (int k = 0; k <= n; ++k)
            CHECK(gen.eulerian(n, k).eval(2, -1) == row[std::size_t(k)]);
    }
}

TEST_CASE("set partition counts") {
    CHECK(classical_stirling2(4, 2) == 7);
    CHECK(classical_stirling2(5, 3) == 25);
    CHECK(classical_stirling2(6, 6) == 1);
    CHECK(classical_stirling2(9, 1) == 1);
    CHECK(classical_stirling2(3, 5) == 0);
    auto row = stirling2_row(0);
    CHECK(row[0] == 1);  // the empty partition
}

TEST_CASE("motzkin path counts") {
    const integer known[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511};
    for (int n = 0; n <= 12; ++n) CHECK(classical_motzkin(n) == known[n]);
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(6) == 8);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(16) == 987);
}

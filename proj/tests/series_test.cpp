#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <numeric>

#include "cwilf/oracle.hpp"
#include "cwilf/series.hpp"

using namespace cwilf;

TEST_CASE("cluster series coefficients") {
    auto R = cluster_gf(Permutation::parse("2143"), 8);
    // A single occurrence is its own cluster.
    REQUIRE(R.coeff[4].size() == 2);
    CHECK(R.coeff[4][1] == 1);
    CHECK(R.coeff[4][0] == 0);
    CHECK(R.coeff[3].empty());
    CHECK(R.coeff[6].size() == 3);  // two overlapping occurrences at gap 2
    CHECK(R.coeff[6][2] == 1);

    auto zero = cluster_gf(Permutation::parse("123456"), 4);
    for (const auto& poly : zero.coeff) CHECK(poly.empty());
}

TEST_CASE("pattern series with no clusters in range is 1/(1-z)") {
    auto F = pattern_gf(Permutation::parse("123456"), 5);
    for (int n = 0; n <= 5; ++n) {
        CHECK(extract_a(F, n, 0) == factorial(n));
        CHECK(extract_a(F, n, 1) == 0);
    }
}

TEST_CASE("coefficients sum to n! for every degree") {
    for (const char* text : {"1423", "2143", "321"}) {
        auto F = pattern_gf(Permutation::parse(text), 9);
        for (int n = 0; n <= 9; ++n) {
            BigCount total = 0;
            for (size_t k = 0; k < F.coeff[n].size(); ++k)
                total += extract_a(F, n, static_cast<int>(k));
            CHECK(total == factorial(n));
        }
    }
}

TEST_CASE("series agrees with the oracle for 1423") {
    OracleOptions opt;
    opt.jobs = 2;
    auto pat = Permutation::parse("1423");
    auto F = pattern_gf(pat, 9);
    for (int n = 4; n <= 9; ++n) {
        auto stats = enumerate_stats(pat, n, opt);
        for (int k = 0; k <= n - 3; ++k)
            CHECK(extract_a(F, n, k) == stats.by_count[k]);
    }
}

TEST_CASE("extraction bounds") {
    auto F = pattern_gf(Permutation::parse("321"), 6);
    CHECK(extract_a(F, 6, 4) == 1);  // the strictly decreasing word
    CHECK(extract_a(F, 6, 5) == 0);
    CHECK(extract_a(F, 6, 100) == 0);
    CHECK_THROWS_AS(extract_a(F, 7, 0), InvalidInputError);
}

TEST_CASE("avoider equality for the known pair") {
    auto F1 = pattern_gf(Permutation::parse("1342"), 10);
    auto F2 = pattern_gf(Permutation::parse("1432"), 10);
    for (int n = 0; n <= 10; ++n) CHECK(extract_a(F1, n, 0) == extract_a(F2, n, 0));
    // Full coefficient lists coincide as well.
    CHECK(F1.coeff == F2.coeff);
    // A non-equivalent pair separates in both series.
    auto G1 = cluster_gf(Permutation::parse("123"), 6);
    auto G2 = cluster_gf(Permutation::parse("132"), 6);
    CHECK(G1.coeff != G2.coeff);
}

TEST_CASE("series JSON shape") {
    auto R = cluster_gf(Permutation::parse("21"), 3);
    auto j = nlohmann::json::parse(series_json(R));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    CHECK(j[2]["n"] == 2);
    CHECK(j[2]["coeffs"][1] == "1");
}

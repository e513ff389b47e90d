#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "cwilf/cluster.hpp"
#include "cwilf/oracle.hpp"

using namespace cwilf;

TEST_CASE("full enumeration histograms") {
    auto stats = enumerate_stats(Permutation::parse("123"), 3);
    CHECK(stats.by_count[0] == 5);
    CHECK(stats.by_count[1] == 1);
    CHECK(stats.a_for({1}) == 1);
    CHECK(stats.a_for({}) == 5);

    BigCount total = 0;
    for (const auto& [s, c] : stats.by_set) total += c;
    CHECK(total == factorial(3));
}

TEST_CASE("descent statistics of the pattern 21") {
    auto stats = enumerate_stats(Permutation::parse("21"), 4);
    // Eulerian distribution over descent counts.
    CHECK(stats.by_count[0] == 1);
    CHECK(stats.by_count[1] == 11);
    CHECK(stats.by_count[2] == 11);
    CHECK(stats.by_count[3] == 1);
}

TEST_CASE("worker count does not change the table") {
    auto pat = Permutation::parse("1324");
    OracleOptions serial;
    serial.jobs = 1;
    OracleOptions parallel;
    parallel.jobs = 4;
    auto a = enumerate_stats(pat, 7, serial);
    auto b = enumerate_stats(pat, 7, parallel);
    CHECK(a.by_set == b.by_set);
    CHECK(a.by_count == b.by_count);
}

TEST_CASE("size limit is a resource error") {
    OracleOptions opt;
    opt.max_n = 6;
    CHECK_THROWS_AS(enumerate_stats(Permutation::parse("123"), 7, opt),
                    ResourceError);
}

TEST_CASE("containment brute force") {
    CHECK(brute_b(Permutation::parse("321"), 5, {}) == factorial(5));
    CHECK(brute_b(Permutation::parse("321"), 5, {1, 2}) == 5);
    CHECK(brute_r(Permutation::parse("2143"), 5, {1, 2}) == 0);
    CHECK(brute_r(Permutation::parse("2143"), 6, {1, 3}) == 1);
}

TEST_CASE("brute refined counts agree with the poset route on S_3") {
    std::vector<int> w{1, 2, 3};
    do {
        Permutation pat(w);
        for (int n = 3; n <= 7; ++n)
            for (const auto& ms : feasible_marks(pat, n))
                CHECK(brute_r(pat, n, ms.marks) ==
                      refined_cluster_number(pat, n, ms.marks));
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("block reversal example") {
    auto pat = Permutation::parse("132");
    auto sigma = Permutation::parse("13254");
    auto image = block_reverse_bijection(sigma, pat, {1, 3});
    CHECK(image.str() == "45231");
    auto occ = occurrences(pat.reversed(), image);
    CHECK(std::binary_search(occ.positions.begin(), occ.positions.end(), 1));
    CHECK(std::binary_search(occ.positions.begin(), occ.positions.end(), 3));
    // Applying the reversed-pattern map with the same marks undoes it.
    CHECK(block_reverse_bijection(image, pat.reversed(), {1, 3}) == sigma);
}

TEST_CASE("block reversal input validation") {
    CHECK_THROWS_AS(block_reverse_bijection(Permutation::parse("12345"),
                                            Permutation::parse("2143"), {1}),
                    InvalidInputError);
    CHECK_THROWS_AS(block_reverse_bijection(Permutation::parse("12345"),
                                            Permutation::parse("132"), {2}),
                    InvalidInputError);
}

TEST_CASE("block reversal is an exhaustive pairwise involution at n=6") {
    auto pat = Permutation::parse("132");
    auto rev = pat.reversed();
    std::vector<int> w{1, 2, 3, 4, 5, 6};
    std::map<std::vector<int>, BigCount> forward, backward;
    do {
        Permutation sigma(w);
        auto em = occurrences(pat, sigma).positions;
        size_t subsets = size_t{1} << em.size();
        for (size_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> marks;
            for (size_t i = 0; i < em.size(); ++i)
                if (mask & (size_t{1} << i)) marks.push_back(em[i]);
            auto image = block_reverse_bijection(sigma, pat, marks);
            auto image_occ = occurrences(rev, image).positions;
            for (int p : marks)
                CHECK(std::binary_search(image_occ.begin(), image_occ.end(), p));
            CHECK(block_reverse_bijection(image, rev, marks) == sigma);
            ++forward[marks];
        }
        auto em_rev = occurrences(rev, sigma).positions;
        size_t subsets_rev = size_t{1} << em_rev.size();
        for (size_t mask = 0; mask < subsets_rev; ++mask) {
            std::vector<int> marks;
            for (size_t i = 0; i < em_rev.size(); ++i)
                if (mask & (size_t{1} << i)) marks.push_back(em_rev[i]);
            ++backward[marks];
        }
    } while (std::next_permutation(w.begin(), w.end()));
    // |{sigma : S in Em(pi,sigma)}| = |{sigma : S in Em(pi^R,sigma)}|.
    CHECK(forward == backward);
}

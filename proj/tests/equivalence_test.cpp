#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cwilf/equivalence.hpp"
#include "cwilf/reference.hpp"

using namespace cwilf;

namespace {

std::vector<std::vector<std::string>> members_of(const EquivalenceReport& r) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : r.classes) out.push_back(c.members);
    return out;
}

std::vector<std::vector<std::string>> normalized(
    std::vector<std::vector<std::string>> classes) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

}  // namespace

TEST_CASE("profiles separate and unite correctly") {
    CHECK(profile(Permutation::parse("1342"), Level::strong, 10) ==
          profile(Permutation::parse("1432"), Level::strong, 10));
    CHECK(profile(Permutation::parse("1342"), Level::cwilf, 10) ==
          profile(Permutation::parse("1432"), Level::cwilf, 10));

    // RC-symmetric pair: strongly equal, refined profiles split.
    CHECK(profile(Permutation::parse("1423"), Level::strong, 12) ==
          profile(Permutation::parse("3241"), Level::strong, 12));
    CHECK(profile(Permutation::parse("1423"), Level::superstrong, 12) !=
          profile(Permutation::parse("3241"), Level::superstrong, 12));

    CHECK(profile(Permutation::parse("123"), Level::cwilf, 7) !=
          profile(Permutation::parse("132"), Level::cwilf, 7));
}

TEST_CASE("complement never separates at any level") {
    for (const char* text : {"1423", "2143", "23514"}) {
        auto p = Permutation::parse(text);
        for (Level level : {Level::cwilf, Level::strong, Level::superstrong})
            CHECK(profile(p, level, 10) == profile(p.complemented(), level, 10));
    }
}

TEST_CASE("sufficient-condition hypothesis check") {
    std::vector<std::string> list = {"1734526", "1735426", "1743526",
                                     "1745326", "1753426", "1754326"};
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = 0; j < list.size(); ++j)
            CHECK(check_ks_hypothesis(Permutation::parse(list[i]),
                                      Permutation::parse(list[j])));
    CHECK_FALSE(check_ks_hypothesis(Permutation::parse("123546"),
                                    Permutation::parse("124536")));
    CHECK(check_ks_hypothesis(Permutation::parse("2143"),
                              Permutation::parse("2143")));
}

TEST_CASE("necessary-condition report") {
    auto r = check_necessary(Permutation::parse("23567184"),
                             Permutation::parse("35671284"));
    CHECK(r.overlap_equal);
    CHECK_FALSE(r.difference_equal);
    CHECK(r.certified_not_equivalent());

    r = check_necessary(Permutation::parse("1342"), Permutation::parse("1432"));
    CHECK(r.overlap_equal);
    CHECK(r.difference_equal);
    CHECK_FALSE(r.certified_not_equivalent());

    r = check_necessary(Permutation::parse("2413"), Permutation::parse("2413"));
    CHECK(r.overlap_equal);
    CHECK(r.difference_equal);
}

TEST_CASE("max-min hypothesis") {
    CHECK(check_maxmin_hypothesis(Permutation::parse("13425")));
    CHECK(check_maxmin_hypothesis(Permutation::parse("12435")));
    CHECK_FALSE(check_maxmin_hypothesis(Permutation::parse("2413")));
    CHECK_FALSE(check_maxmin_hypothesis(Permutation::parse("12345")));
}

TEST_CASE("classification of short patterns") {
    ClassifyOptions opt;
    opt.jobs = 2;
    auto strong3 = classify(3, Level::strong, 7, opt);
    CHECK(strong3.classes.size() == 2);
    CHECK(normalized(members_of(strong3)) ==
          normalized(reference::classification_fixture(3).strong));

    auto strong4 = classify(4, Level::strong, 13, opt);
    CHECK(strong4.classes.size() == 7);
    CHECK(normalized(members_of(strong4)) ==
          normalized(reference::classification_fixture(4).strong));

    auto super4 = classify(4, Level::superstrong, 13, opt);
    CHECK(super4.classes.size() == 8);
    CHECK(normalized(members_of(super4)) ==
          normalized(reference::classification_fixture(4).superstrong));

    CHECK(classify(4, Level::cwilf, 13, opt).classes.size() == 7);
}

TEST_CASE("class flags") {
    ClassifyOptions opt;
    opt.jobs = 2;
    auto super4 = classify(4, Level::superstrong, 13, opt);
    std::map<std::string, const ClassInfo*> by_least;
    for (const auto& c : super4.classes) by_least[c.members.front()] = &c;
    // The eight-member non-overlapping class carries the non-overlap flag;
    // its linkage needs the non-overlap theorem, not the value-set pairs.
    REQUIRE(by_least.count("1342"));
    CHECK(by_least["1342"]->all_nonoverlapping);
    CHECK_FALSE(by_least["1342"]->satisfies_ks_hypothesis);
    REQUIRE(by_least.count("1423"));
    CHECK_FALSE(by_least["1423"]->all_nonoverlapping);
    // Complement pairs are linked trivially.
    REQUIRE(by_least.count("1234"));
    CHECK(by_least["1234"]->satisfies_ks_hypothesis);
    CHECK(by_least["1423"]->satisfies_ks_hypothesis);
    CHECK_FALSE(by_least["1234"]->satisfies_maxmin_hypothesis);
    // 1324 starts at 1, ends at m, and has exactly two overlap indices.
    REQUIRE(by_least.count("1324"));
    CHECK(by_least["1324"]->satisfies_maxmin_hypothesis);
}

TEST_CASE("levels refine downward") {
    ClassifyOptions opt;
    opt.jobs = 2;
    auto cw = classify(4, Level::cwilf, 13, opt);
    auto st = classify(4, Level::strong, 13, opt);
    auto ss = classify(4, Level::superstrong, 13, opt);
    auto class_of = [](const EquivalenceReport& r) {
        std::map<std::string, size_t> out;
        for (size_t i = 0; i < r.classes.size(); ++i)
            for (const auto& p : r.classes[i].members) out[p] = i;
        return out;
    };
    auto cw_of = class_of(cw);
    auto st_of = class_of(st);
    auto ss_of = class_of(ss);
    for (const auto& [p, ci] : ss_of) {
        for (const auto& [q, cj] : ss_of) {
            if (ci == cj) {
                CHECK(st_of[p] == st_of[q]);
                CHECK(cw_of[p] == cw_of[q]);
            }
        }
    }
    for (const auto& [p, ci] : st_of)
        for (const auto& [q, cj] : st_of)
            if (ci == cj) CHECK(cw_of[p] == cw_of[q]);
}

TEST_CASE("classes close under the valid symmetries") {
    ClassifyOptions opt;
    opt.jobs = 2;
    auto st = classify(4, Level::strong, 13, opt);
    for (const auto& c : st.classes) {
        std::set<std::string> members(c.members.begin(), c.members.end());
        for (const auto& text : c.members) {
            auto p = Permutation::parse(text);
            CHECK(members.count(p.reversed().str()));
            CHECK(members.count(p.complemented().str()));
            CHECK(members.count(p.reverse_complemented().str()));
        }
    }
    auto ss = classify(4, Level::superstrong, 13, opt);
    for (const auto& c : ss.classes) {
        std::set<std::string> members(c.members.begin(), c.members.end());
        for (const auto& text : c.members)
            CHECK(members.count(
                Permutation::parse(text).complemented().str()));
    }
}

TEST_CASE("classification limits") {
    ClassifyOptions opt;
    opt.max_m = 5;
    CHECK_THROWS_AS(classify(6, Level::strong, 16, opt), ResourceError);
    CHECK_THROWS_AS(classify(4, Level::strong, 3, opt), InvalidInputError);
}

TEST_CASE("probe of the diagonal crossing") {
    auto report = conjecture_probe(8, 3);
    bool found = false;
    for (const auto& pair : report.pairs) {
        if (pair.a == 2 && pair.b == 4 && pair.a2 == 3 && pair.b2 == 5) {
            found = true;
            CHECK(pair.rep == "23567184");
            CHECK(pair.rep2 == "34671285");
            CHECK(pair.equal_ks == std::vector<int>{2});
            CHECK(pair.witness_found);
            CHECK(pair.witness_k == 3);
        }
        CHECK(pair.b - pair.a >= 2);
        CHECK(pair.a < pair.a2);
    }
    CHECK(found);
    // Deterministic output.
    CHECK(probe_json(report) == probe_json(conjecture_probe(8, 3)));
}

TEST_CASE("table render shows splits") {
    ClassifyOptions opt;
    opt.jobs = 2;
    auto table = render_class_table(4, 13, opt);
    CHECK(table.find("1423,4132 | 2314,3241") != std::string::npos);
    CHECK(table.find("2413,3142") != std::string::npos);
}

#include "cwilf/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "cwilf/asymptotics.hpp"
#include "cwilf/cluster.hpp"
#include "cwilf/equivalence.hpp"
#include "cwilf/oracle.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/poset.hpp"
#include "cwilf/reference.hpp"
#include "cwilf/series.hpp"

namespace cwilf {

namespace {

struct Check {
    std::string name;
    bool slow = false;
    std::function<std::string()> run;  // empty string on success
};

std::string expect_eq(const std::string& what, const std::string& got,
                      const std::string& want) {
    if (got == want) return "";
    return what + ": got " + got + ", want " + want;
}

std::string expect_true(const std::string& what, bool ok) {
    return ok ? "" : what + ": expected true";
}

std::string expect_count(const std::string& what, const BigCount& got,
                         const std::string& want) {
    return expect_eq(what, to_decimal(got), want);
}

bool same_partition(const std::vector<std::vector<std::string>>& got,
                    const std::vector<std::vector<std::string>>& want) {
    auto norm = [](std::vector<std::vector<std::string>> classes) {
        for (auto& c : classes) std::sort(c.begin(), c.end());
        std::sort(classes.begin(), classes.end());
        return classes;
    };
    return norm(got) == norm(want);
}

std::vector<std::vector<std::string>> class_members(
    const EquivalenceReport& report) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : report.classes) out.push_back(c.members);
    return out;
}

std::string check_classification(int m, int N, unsigned jobs) {
    const auto& fixture = reference::classification_fixture(m);
    ClassifyOptions opt;
    opt.jobs = jobs;
    auto strong = classify(m, Level::strong, N, opt);
    if (!same_partition(class_members(strong), fixture.strong))
        return "strong classes for m=" + std::to_string(m) +
               " do not match the reference table";
    auto super = classify(m, Level::superstrong, N, opt);
    if (!same_partition(class_members(super), fixture.superstrong))
        return "super-strong classes for m=" + std::to_string(m) +
               " do not match the reference table";
    return "";
}

std::vector<Check> build_checks(unsigned jobs) {
    std::vector<Check> checks;
    auto add = [&](std::string name, std::function<std::string()> fn,
                   bool slow = false) {
        checks.push_back({std::move(name), slow, std::move(fn)});
    };

    add("standardize-81567", [] {
        return expect_eq("st(8,1,5,6,7)",
                         standardize({8, 1, 5, 6, 7}).str(), "51234");
    });

    add("occurrences-231-in-245361", [] {
        auto occ = occurrences(Permutation::parse("231"),
                               Permutation::parse("245361"));
        std::ostringstream got;
        for (int p : occ.positions) got << p << ' ';
        return expect_eq("Em(231,245361)", got.str(), "2 4 ");
    });

    add("inverse-513624", [] {
        return expect_eq("inverse", Permutation::parse("513624").inverse().str(),
                         "253614");
    });

    add("reverse-1423", [] {
        return expect_eq("reversal", Permutation::parse("1423").reversed().str(),
                         "3241");
    });

    add("overlap-2143", [] {
        auto o = overlap_set(Permutation::parse("2143"));
        return expect_true("overlap set {2,3}",
                           o.indices == std::vector<int>{2, 3});
    });

    add("overlap-16358472-nonoverlapping", [] {
        auto p = Permutation::parse("16358472");
        auto o = overlap_set(p);
        std::string err = expect_true("overlap set {7}",
                                      o.indices == std::vector<int>{7});
        if (!err.empty()) return err;
        return expect_true("non-overlapping", is_nonoverlapping(p));
    });

    add("chain-closure-513624", [] {
        // Relations read off the three explicit rank chains at marks 1,4,7.
        auto poset = build_poset(Permutation::parse("513624"),
                                 MarkSet{12, 6, {1, 4, 7}});
        ClusterPoset expected(12);
        expected.add_chain({2, 5, 3, 6, 1, 4});
        expected.add_chain({5, 8, 6, 9, 4, 7});
        expected.add_chain({8, 11, 9, 12, 7, 10});
        return expect_true("poset equals the closure of the quoted chains",
                           poset == expected);
    });

    add("diagonal-pair-k2-840", [] {
        std::string err = expect_count(
            "two-occurrence count of 23567184 at n=15",
            refined_cluster_number(Permutation::parse("23567184"), 15, {1, 8}),
            "840");
        if (!err.empty()) return err;
        return expect_count(
            "two-occurrence count of 34671285 at n=15",
            refined_cluster_number(Permutation::parse("34671285"), 15, {1, 8}),
            "840");
    });

    add("diagonal-pair-k3", [] {
        std::string err = expect_count(
            "k=3 cluster number of 23567184",
            cluster_number(Permutation::parse("23567184"), 22, 3), "11642400");
        if (!err.empty()) return err;
        return expect_count(
            "k=3 cluster number of 34671285",
            cluster_number(Permutation::parse("34671285"), 22, 3), "12153960");
    });

    add("refined-148-180", [] {
        std::string err = expect_count(
            "refined count of 23514 at (12,{1,4,8})",
            refined_cluster_number(Permutation::parse("23514"), 12, {1, 4, 8}),
            "148");
        if (!err.empty()) return err;
        return expect_count(
            "refined count of 25134 at (12,{1,4,8})",
            refined_cluster_number(Permutation::parse("25134"), 12, {1, 4, 8}),
            "180");
    });

    add("nonoverlapping-mark-support", [] {
        auto p = Permutation::parse("16358472");
        for (int n = 8; n <= 22; ++n) {
            auto sets = feasible_marks(p, n);
            bool diagonal = (n - 8) % 7 == 0;
            if (diagonal != (sets.size() == 1))
                return std::string("unexpected mark sets at n=") +
                       std::to_string(n);
            if (diagonal) {
                int k = (n - 8) / 7 + 1;
                std::vector<int> want;
                for (int j = 0; j < k; ++j) want.push_back(1 + 7 * j);
                if (sets[0].marks != want)
                    return std::string("wrong diagonal mark set at n=") +
                           std::to_string(n);
            }
        }
        return std::string();
    });

    add("overlap-index-vs-two-marks", [] {
        auto p = Permutation::parse("2143");
        std::string err = expect_count("r_{6,2} of 2143",
                                       cluster_number(p, 6, 2), "1");
        if (!err.empty()) return err;
        return expect_count("r_{5,2} of 2143", cluster_number(p, 5, 2), "0");
    });

    add("exact-set-10-6", [] {
        std::string err = expect_count(
            "exact-set count of 1423 at (9,{1,3,6})",
            a_refined(Permutation::parse("1423"), 9, {1, 3, 6}), "10");
        if (!err.empty()) return err;
        return expect_count(
            "exact-set count of 3241 at (9,{1,3,6})",
            a_refined(Permutation::parse("3241"), 9, {1, 3, 6}), "6");
    });

    add("oracle-exact-set-10-6", [jobs] {
        OracleOptions opt;
        opt.jobs = jobs;
        auto t1423 = enumerate_stats(Permutation::parse("1423"), 9, opt);
        std::string err =
            expect_count("oracle a at (9,{1,3,6}) for 1423",
                         t1423.a_for({1, 3, 6}), "10");
        if (!err.empty()) return err;
        auto t3241 = enumerate_stats(Permutation::parse("3241"), 9, opt);
        return expect_count("oracle a at (9,{1,3,6}) for 3241",
                            t3241.a_for({1, 3, 6}), "6");
    });

    add("avoiders-1342-1432", [] {
        auto F1 = pattern_gf(Permutation::parse("1342"), 10);
        auto F2 = pattern_gf(Permutation::parse("1432"), 10);
        for (int n = 0; n <= 10; ++n)
            if (extract_a(F1, n, 0) != extract_a(F2, n, 0))
                return "avoider counts differ at n=" + std::to_string(n);
        return std::string();
    });

    add("sufficient-pair-list-s7", [] {
        std::vector<std::string> list = {"1734526", "1735426", "1743526",
                                         "1745326", "1753426", "1754326"};
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j)
                if (!check_ks_hypothesis(Permutation::parse(list[i]),
                                         Permutation::parse(list[j])))
                    return "pair " + list[i] + "," + list[j] +
                           " fails the hypothesis";
        return std::string();
    });

    add("sufficient-condition-not-necessary", [] {
        auto pi = Permutation::parse("123546");
        auto tau = Permutation::parse("124536");
        if (check_ks_hypothesis(pi, tau))
            return std::string("hypothesis unexpectedly holds");
        std::string err = expect_true(
            "equal refined profiles up to N=12",
            profile(pi, Level::superstrong, 12) ==
                profile(tau, Level::superstrong, 12));
        if (!err.empty()) return err;
        // Their mark posets are total orders, so each count is 1.
        return expect_count("chain poset count at (10,{1,5})",
                            refined_cluster_number(pi, 10, {1, 5}), "1");
    });

    add("maxmin-13425-reversal", [] {
        auto pi = Permutation::parse("13425");
        auto rev = Permutation::parse("52431");
        std::string err =
            expect_true("maxmin hypothesis for 13425",
                        check_maxmin_hypothesis(pi));
        if (!err.empty()) return err;
        err = expect_true("equal refined profiles up to N=12",
                          profile(pi, Level::superstrong, 12) ==
                              profile(rev, Level::superstrong, 12));
        if (!err.empty()) return err;
        auto p = build_poset(pi, MarkSet{12, 5, {1, 4, 8}});
        auto q = build_poset(rev, MarkSet{12, 5, {1, 4, 8}});
        if (poset_isomorphic(p, q))
            return std::string("posets unexpectedly isomorphic");
        if (poset_isomorphic(p, q.dual()))
            return std::string("posets unexpectedly dual");
        return expect_true("equal counts despite non-isomorphism",
                           count_linear_extensions(p) ==
                               count_linear_extensions(q));
    });

    add("maxmin-12435", [] {
        return expect_true("maxmin hypothesis for 12435",
                           check_maxmin_hypothesis(Permutation::parse("12435")));
    });

    add("nonoverlap-reversal-superstrong", [] {
        auto pi = Permutation::parse("34671285");
        auto rev = Permutation::parse("58217643");
        return expect_true("equal refined profiles up to N=15",
                           profile(pi, Level::superstrong, 15) ==
                               profile(rev, Level::superstrong, 15));
    });

    add("isomorphic-chain-pairs-s6", [] {
        std::vector<std::pair<std::string, std::string>> pairs = {
            {"123645", "124635"}, {"132465", "142365"}, {"154263", "165243"}};
        for (const auto& [a, b] : pairs) {
            auto pa = Permutation::parse(a);
            auto pb = Permutation::parse(b);
            if (profile(pa, Level::superstrong, 12) !=
                profile(pb, Level::superstrong, 12))
                return "refined profiles differ for " + a + "," + b;
        }
        return std::string();
    });

    add("necessary-condition-difference", [] {
        auto r = check_necessary(Permutation::parse("23567184"),
                                 Permutation::parse("35671284"));
        std::string err = expect_true("overlap sets equal", r.overlap_equal);
        if (!err.empty()) return err;
        err = expect_true("difference differs", !r.difference_equal);
        if (!err.empty()) return err;
        return expect_true("certified not equivalent",
                           r.certified_not_equivalent());
    });

    add("construct-34671285", [] {
        std::string err = expect_eq("construct(8,3,5)",
                                    nonoverlap_construct(8, 3, 5).str(),
                                    "34671285");
        if (!err.empty()) return err;
        return expect_true("non-overlapping",
                           is_nonoverlapping(nonoverlap_construct(8, 3, 5)));
    });

    add("construct-23567184", [] {
        std::string err = expect_eq("construct(8,2,4)",
                                    nonoverlap_construct(8, 2, 4).str(),
                                    "23567184");
        if (!err.empty()) return err;
        return expect_true("non-overlapping",
                           is_nonoverlapping(nonoverlap_construct(8, 2, 4)));
    });

    add("probe-m8-crossing", [] {
        auto report = conjecture_probe(8, 3);
        for (const auto& pair : report.pairs) {
            if (pair.a == 2 && pair.b == 4 && pair.a2 == 3 && pair.b2 == 5) {
                if (pair.equal_ks != std::vector<int>{2})
                    return std::string("expected a tie exactly at k=2");
                if (!pair.witness_found || pair.witness_k != 3)
                    return std::string("expected the witness at k=3");
                return std::string();
            }
        }
        return std::string("pair (2,4) vs (3,5) missing from the probe");
    });

    add("block-factorization-3142", [] {
        auto p = Permutation::parse("3142");
        BigCount lhs = b_count(p, 30, {2, 4, 7, 12, 14, 19, 22});
        BigCount rhs = factorial(30);
        rhs *= refined_cluster_number(p, 9, {1, 3, 6});
        rhs *= refined_cluster_number(p, 6, {1, 3});
        rhs *= refined_cluster_number(p, 7, {1, 4});
        rhs /= factorial(9);
        rhs /= factorial(6);
        rhs /= factorial(7);
        std::string err = expect_true("factorization matches", lhs == rhs);
        if (!err.empty()) return err;
        return expect_count("value", lhs, "195794403560349834240000");
    });

    add("classes-m3", [jobs] { return check_classification(3, 7, jobs); });
    add("classes-m4", [jobs] { return check_classification(4, 13, jobs); });
    add("classes-m5", [jobs] { return check_classification(5, 13, jobs); });

    add("brute-refined-148", [jobs] {
        OracleOptions opt;
        opt.max_n = 12;
        opt.jobs = jobs;
        return expect_count(
            "brute-force refined count of 23514",
            brute_r(Permutation::parse("23514"), 12, {1, 4, 8}, opt), "148");
    }, /*slow=*/true);

    add("brute-refined-180", [jobs] {
        OracleOptions opt;
        opt.max_n = 12;
        opt.jobs = jobs;
        return expect_count(
            "brute-force refined count of 25134",
            brute_r(Permutation::parse("25134"), 12, {1, 4, 8}, opt), "180");
    }, /*slow=*/true);

    return checks;
}

}  // namespace

std::vector<CheckResult> run_verification(bool slow, unsigned jobs) {
    std::vector<CheckResult> results;
    for (auto& check : build_checks(jobs)) {
        if (check.slow && !slow) continue;
        CheckResult r;
        r.name = check.name;
        try {
            r.detail = check.run();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace cwilf

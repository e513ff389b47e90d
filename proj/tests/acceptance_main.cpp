// Acceptance suite: one check per release criterion, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cwilf/asymptotics.hpp"
#include "cwilf/cluster.hpp"
#include "cwilf/equivalence.hpp"
#include "cwilf/oracle.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/poset.hpp"
#include "cwilf/reference.hpp"
#include "cwilf/series.hpp"

using namespace cwilf;

namespace {

struct Criterion {
    std::string label;
    std::function<std::string()> run;  // empty on success
};

#define REQUIRE_MSG(cond, msg)                         \
    do {                                               \
        if (!(cond)) return std::string(msg);          \
    } while (0)

std::vector<Permutation> all_patterns(int m) {
    std::vector<Permutation> out;
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::string criterion_basics() {
    auto occ = occurrences(Permutation::parse("231"), Permutation::parse("245361"));
    REQUIRE_MSG(occ.positions == (std::vector<int>{2, 4}), "occurrence set wrong");
    REQUIRE_MSG(overlap_set(Permutation::parse("2143")).indices ==
                    (std::vector<int>{2, 3}),
                "overlap set of 2143 wrong");
    REQUIRE_MSG(overlap_set(Permutation::parse("16358472")).indices ==
                    (std::vector<int>{7}),
                "overlap set of 16358472 wrong");
    REQUIRE_MSG(standardize({8, 1, 5, 6, 7}).str() == "51234",
                "standardization wrong");
    return "";
}

std::string criterion_refined() {
    REQUIRE_MSG(refined_cluster_number(Permutation::parse("23514"), 12,
                                       {1, 4, 8}) == 148,
                "count for 23514 at (12,{1,4,8}) is not 148");
    REQUIRE_MSG(refined_cluster_number(Permutation::parse("25134"), 12,
                                       {1, 4, 8}) == 180,
                "count for 25134 at (12,{1,4,8}) is not 180");
    return "";
}

std::string criterion_cluster_numbers() {
    REQUIRE_MSG(cluster_number(Permutation::parse("23567184"), 15, 2) == 840,
                "k=2 cluster number of 23567184 is not 840");
    REQUIRE_MSG(cluster_number(Permutation::parse("34671285"), 15, 2) == 840,
                "k=2 cluster number of 34671285 is not 840");
    // k=3 chained occurrences occupy 1+3(m-1) = 22 letters.
    REQUIRE_MSG(cluster_number(Permutation::parse("23567184"), 22, 3) ==
                    11642400,
                "k=3 cluster number of 23567184 is not 11642400");
    REQUIRE_MSG(cluster_number(Permutation::parse("34671285"), 22, 3) ==
                    12153960,
                "k=3 cluster number of 34671285 is not 12153960");
    return "";
}

std::string criterion_exact_sets() {
    OracleOptions opt;
    opt.jobs = default_jobs();
    for (auto [text, want] :
         std::vector<std::pair<const char*, int>>{{"1423", 10}, {"3241", 6}}) {
        auto pat = Permutation::parse(text);
        BigCount via_inversion = a_refined(pat, 9, {1, 3, 6});
        BigCount via_oracle = enumerate_stats(pat, 9, opt).a_for({1, 3, 6});
        REQUIRE_MSG(via_inversion == want,
                    std::string(text) + ": inclusion-exclusion value wrong");
        REQUIRE_MSG(via_oracle == via_inversion,
                    std::string(text) + ": oracle disagrees with inversion");
    }
    return "";
}

std::string criterion_classification() {
    ClassifyOptions opt;
    opt.jobs = 1;  // single-threaded per the stated budget
    auto normalized = [](std::vector<std::vector<std::string>> classes) {
        for (auto& c : classes) std::sort(c.begin(), c.end());
        std::sort(classes.begin(), classes.end());
        return classes;
    };
    auto members = [](const EquivalenceReport& r) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : r.classes) out.push_back(c.members);
        return out;
    };
    struct Expect {
        int m;
        size_t strong, superstrong;
    };
    for (auto [m, strong_n, super_n] :
         std::vector<std::tuple<int, size_t, size_t>>{
             {3, 2, 2}, {4, 7, 8}, {5, 25, 39}}) {
        const auto& fixture = reference::classification_fixture(m);
        auto strong = classify(m, Level::strong, 13, opt);
        REQUIRE_MSG(strong.classes.size() == strong_n,
                    "strong class count wrong for m=" + std::to_string(m));
        REQUIRE_MSG(normalized(members(strong)) == normalized(fixture.strong),
                    "strong memberships differ for m=" + std::to_string(m));
        auto super = classify(m, Level::superstrong, 13, opt);
        REQUIRE_MSG(super.classes.size() == super_n,
                    "super-strong class count wrong for m=" +
                        std::to_string(m));
        REQUIRE_MSG(normalized(members(super)) ==
                        normalized(fixture.superstrong),
                    "super-strong memberships differ for m=" +
                        std::to_string(m));
    }
    // m=4: the split class divides exactly as {1423,4132} | {2314,3241}.
    auto super4 = classify(4, Level::superstrong, 13, opt);
    std::set<std::vector<std::string>> classes4;
    for (const auto& c : super4.classes) classes4.insert(c.members);
    REQUIRE_MSG(classes4.count({"1423", "4132"}) == 1,
                "missing super-strong class {1423,4132}");
    REQUIRE_MSG(classes4.count({"2314", "3241"}) == 1,
                "missing super-strong class {2314,3241}");
    // m=5: exactly 14 strong classes split in two.
    auto strong5 = classify(5, Level::strong, 13, opt);
    auto super5 = classify(5, Level::superstrong, 13, opt);
    std::map<std::string, size_t> super_of;
    for (size_t i = 0; i < super5.classes.size(); ++i)
        for (const auto& p : super5.classes[i].members) super_of[p] = i;
    int splits = 0;
    for (const auto& c : strong5.classes) {
        std::set<size_t> parts;
        for (const auto& p : c.members) parts.insert(super_of[p]);
        if (parts.size() == 2) ++splits;
        if (parts.size() > 2) return "a strong class split into 3+ parts";
    }
    REQUIRE_MSG(splits == 14, "expected exactly 14 split classes at m=5");
    return "";
}

std::string criterion_cluster_method_identity() {
    std::vector<Permutation> patterns = all_patterns(3);
    auto p4 = all_patterns(4);
    patterns.insert(patterns.end(), p4.begin(), p4.end());
    OracleOptions opt;
    opt.jobs = default_jobs();
    std::vector<std::string> failures(patterns.size());
    parallel_for(default_jobs(), patterns.size(), [&](size_t i) {
        const auto& pat = patterns[i];
        auto F = pattern_gf(pat, 9);
        OracleOptions serial;  // outer loop already saturates the workers
        serial.jobs = 1;
        for (int n = 1; n <= 9; ++n) {
            auto stats = enumerate_stats(pat, n, serial);
            BigCount total = 0;
            int kmax = std::max(0, n - pat.size() + 1);
            for (int k = 0; k <= kmax; ++k) {
                BigCount want =
                    k < static_cast<int>(stats.by_count.size())
                        ? stats.by_count[k]
                        : BigCount(0);
                if (extract_a(F, n, k) != want) {
                    failures[i] = pat.str() + ": coefficient mismatch at n=" +
                                  std::to_string(n) + ",k=" + std::to_string(k);
                    return;
                }
                total += want;
            }
            if (total != factorial(n)) {
                failures[i] = pat.str() + ": counts do not sum to n! at n=" +
                              std::to_string(n);
                return;
            }
        }
    });
    for (const auto& f : failures)
        if (!f.empty()) return f;
    return "";
}

std::string criterion_sandwich() {
    std::vector<std::tuple<int, int, int>> triples;
    for (int m = 5; m <= 8; ++m)
        for (int a = 1; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (a + b <= m + 1) triples.emplace_back(m, a, b);
    std::vector<std::string> failures(triples.size());
    parallel_for(default_jobs(), triples.size(), [&](size_t i) {
        auto [m, a, b] = triples[i];
        std::vector<BoundTriple> rows;
        try {
            rows = sandwich_check(m, a, b, 10);
        } catch (const std::exception& e) {
            failures[i] = e.what();
            return;
        }
        for (const auto& row : rows) {
            if (!(row.lower <= row.actual && row.actual <= row.upper)) {
                failures[i] = "sandwich violated";
                return;
            }
            if (row.k <= 4) {
                BigCount generic = count_linear_extensions(
                    nonoverlapping_poset(m, a, b, row.k));
                if (generic != row.actual) {
                    failures[i] = "spine and downset counts disagree at m=" +
                                  std::to_string(m) + ",a=" +
                                  std::to_string(a) + ",b=" +
                                  std::to_string(b) + ",k=" +
                                  std::to_string(row.k);
                    return;
                }
            }
        }
    });
    for (const auto& f : failures)
        if (!f.empty()) return f;
    return "";
}

std::string criterion_symmetry_duality() {
    // Complement: equal refined counts, dual posets (S_4, n <= 10).
    for (const auto& pat : all_patterns(4)) {
        auto comp = pat.complemented();
        for (int n = 4; n <= 10; ++n) {
            for (const auto& ms : feasible_marks(pat, n)) {
                auto p = build_poset(pat, ms);
                auto q = build_poset(comp, ms);
                if (!(p == q.dual()))
                    return "complement poset is not the dual for " + pat.str();
                if (refined_cluster_number(pat, n, ms.marks) !=
                    refined_cluster_number(comp, n, ms.marks))
                    return "refined counts differ under complement for " +
                           pat.str();
            }
        }
    }
    // Reversal of non-overlapping patterns: equal exact-set counts
    // (S_5, n <= 9, every S).
    for (const auto& pat : all_patterns(5)) {
        if (!is_nonoverlapping(pat)) continue;
        auto rev = pat.reversed();
        for (int n = 5; n <= 9; ++n) {
            auto ta = exact_count_table(pat, n);
            auto tb = exact_count_table(rev, n);
            if (ta.a != tb.a)
                return "exact-set counts differ between " + pat.str() +
                       " and its reversal at n=" + std::to_string(n);
        }
    }
    // Block reversal: exhaustive involution-pair bijection at n <= 8.
    for (const char* text : {"132", "1342"}) {
        auto pat = Permutation::parse(text);
        auto rev = pat.reversed();
        for (int n = pat.size(); n <= 8; ++n) {
            std::map<std::vector<int>, long> forward, backward;
            std::vector<int> w(n);
            std::iota(w.begin(), w.end(), 1);
            do {
                Permutation sigma(w);
                auto em = occurrences(pat, sigma).positions;
                for (size_t mask = 0; mask < (size_t{1} << em.size()); ++mask) {
                    std::vector<int> marks;
                    for (size_t i = 0; i < em.size(); ++i)
                        if (mask & (size_t{1} << i)) marks.push_back(em[i]);
                    auto image = block_reverse_bijection(sigma, pat, marks);
                    auto image_occ = occurrences(rev, image).positions;
                    for (int p : marks)
                        if (!std::binary_search(image_occ.begin(),
                                                image_occ.end(), p))
                            return "image loses a marked occurrence";
                    if (block_reverse_bijection(image, rev, marks) != sigma)
                        return "block reversal is not an involution pair";
                    ++forward[marks];
                }
                auto em_rev = occurrences(rev, sigma).positions;
                for (size_t mask = 0; mask < (size_t{1} << em_rev.size());
                     ++mask) {
                    std::vector<int> marks;
                    for (size_t i = 0; i < em_rev.size(); ++i)
                        if (mask & (size_t{1} << i)) marks.push_back(em_rev[i]);
                    ++backward[marks];
                }
            } while (std::next_permutation(w.begin(), w.end()));
            if (forward != backward)
                return std::string(text) +
                       ": containment counts differ from the reversal's at n=" +
                       std::to_string(n);
        }
    }
    return "";
}

std::string criterion_construction() {
    auto p = nonoverlap_construct(8, 3, 5);
    REQUIRE_MSG(p.str() == "34671285", "construct(8,3,5) wrong");
    REQUIRE_MSG(is_nonoverlapping(p), "construct(8,3,5) overlaps");
    auto q = nonoverlap_construct(8, 2, 4);
    REQUIRE_MSG(q.str() == "23567184", "construct(8,2,4) wrong");
    REQUIRE_MSG(is_nonoverlapping(q), "construct(8,2,4) overlaps");
    return "";
}

std::string criterion_recovery() {
    auto report = recover_difference(nonoverlap_construct(8, 3, 5), 30);
    REQUIRE_MSG(report.bracket_contains_actual,
                "log bracket misses the exact count");
    REQUIRE_MSG(report.diff_lo <= 2 && 2 <= report.diff_hi,
                "integer bracket misses the true difference 2");
    return "";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"occurrence/overlap basics", criterion_basics},
        {"refined cluster numbers", criterion_refined},
        {"cluster numbers", criterion_cluster_numbers},
        {"exact-set counts, two routes", criterion_exact_sets},
        {"classification matches the reference table",
         criterion_classification},
        {"cluster-method identity vs oracle", criterion_cluster_method_identity},
        {"sandwich bounds", criterion_sandwich},
        {"symmetry and duality", criterion_symmetry_duality},
        {"construction fidelity", criterion_construction},
        {"asymptotic recovery bracket", criterion_recovery},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        bool pass = detail.empty();
        if (!pass) ++failures;
        std::printf("criterion %2zu [%s]: %s (%.2fs)%s%s\n", i + 1,
                    criteria[i].label.c_str(), pass ? "PASS" : "FAIL", secs,
                    pass ? "" : " — ", detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}

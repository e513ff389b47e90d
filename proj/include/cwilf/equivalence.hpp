#pragma once

#include <string>
#include <vector>

#include "cwilf/bigcount.hpp"
#include "cwilf/permutation.hpp"
#include "cwilf/poset.hpp"

namespace cwilf {

enum class Level { cwilf, strong, superstrong };

const char* level_name(Level level);
Level parse_level(const std::string& text);

// Canonical profile of the pattern up to ambient length N:
//   cwilf       -> the avoider counts a_{n,0},
//   strong      -> all cluster numbers r_{n,k},
//   superstrong -> all refined cluster numbers r_{n,S}.
// Two patterns compare equal at the level up to N iff their profiles match.
std::string profile(const Permutation& pattern, Level level, int N);

struct ClassInfo {
    std::vector<std::string> members;  // lexicographically sorted
    std::string standard_form_rep;
    // Certified relations (the level's symmetries plus prefix/suffix
    // value-set pairs) already connect every member.
    bool satisfies_ks_hypothesis = false;
    // Some member has first letter 1, last letter m, two overlap indices.
    bool satisfies_maxmin_hypothesis = false;
    bool all_nonoverlapping = false;
};

struct EquivalenceReport {
    int m = 0;
    Level level = Level::strong;
    int horizon = 0;
    std::vector<ClassInfo> classes;  // sorted by least member
    std::string certification;
};

struct ClassifyOptions {
    unsigned jobs = 1;
    int max_m = 6;
};

EquivalenceReport classify(int m, Level level, int N,
                           const ClassifyOptions& opt = {});

std::string report_json(const EquivalenceReport& report);

// Strong classes with their super-strong subdivisions, one strong class per
// line, " | " between subdivisions.
std::string render_class_table(int m, int N, const ClassifyOptions& opt = {});

// Equal overlap sets plus equal prefix/suffix value sets at every overlap
// index; a passing pair is certified super-strongly equivalent.
bool check_ks_hypothesis(const Permutation& pi, const Permutation& tau);

struct NecessaryReport {
    bool overlap_equal = false;
    bool difference_equal = false;  // last-minus-first on standard forms
    std::string standard_form_a;
    std::string standard_form_b;

    bool certified_not_equivalent() const {
        return !overlap_equal || !difference_equal;
    }
};

NecessaryReport check_necessary(const Permutation& pi, const Permutation& tau);

// first letter 1, last letter m, exactly two overlap indices; a passing
// pattern is certified super-strongly equivalent to its reversal.
bool check_maxmin_hypothesis(const Permutation& pi);

// One probed pair of standard-form boundary classes (a,b) vs (a2,b2) with
// the same last-minus-first difference >= 2 and a < a2.
struct ProbePair {
    int a = 0, b = 0, a2 = 0, b2 = 0;
    std::string rep;    // a non-overlapping representative of (a,b)
    std::string rep2;
    int witness_k = 0;            // least k with r_k(a,b) < r_k(a2,b2); 0 if none
    std::vector<int> equal_ks;    // k values where the two sequences tie
    bool witness_found = false;
};

struct ProbeReport {
    int m = 0;
    int kmax = 0;
    std::vector<ProbePair> pairs;
};

// Searches k <= kmax for a strict crossing of the diagonal cluster numbers,
// pair by pair. Reports observations only; never asserts the conjecture.
ProbeReport conjecture_probe(int m, int kmax);

std::string probe_json(const ProbeReport& report);

}  // namespace cwilf

#include "cwilf/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cwilf/asymptotics.hpp"
#include "cwilf/cluster.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/series.hpp"

namespace cwilf {

const char* level_name(Level level) {
    switch (level) {
        case Level::cwilf: return "cwilf";
        case Level::strong: return "strong";
        case Level::superstrong: return "superstrong";
    }
    return "?";
}

Level parse_level(const std::string& text) {
    if (text == "cwilf") return Level::cwilf;
    if (text == "strong") return Level::strong;
    if (text == "superstrong") return Level::superstrong;
    throw InvalidInputError("unknown level '" + text +
                            "' (expected cwilf|strong|superstrong)");
}

std::string profile(const Permutation& pattern, Level level, int N) {
    int m = pattern.size();
    if (m < 2) throw InvalidInputError("profiles require length >= 2");
    std::ostringstream out;
    switch (level) {
        case Level::cwilf: {
            TruncatedSeries F = pattern_gf(pattern, N);
            for (int n = 0; n <= N; ++n)
                out << n << '=' << to_decimal(extract_a(F, n, 0)) << ';';
            break;
        }
        case Level::strong: {
            for (int n = m; n <= N; ++n) {
                std::map<size_t, BigCount> by_k;
                for (const auto& ms : feasible_marks(pattern, n))
                    by_k[ms.marks.size()] +=
                        count_linear_extensions(build_poset(pattern, ms));
                for (const auto& [k, r] : by_k)
                    out << n << ':' << k << '=' << to_decimal(r) << ';';
            }
            break;
        }
        case Level::superstrong: {
            for (int n = m; n <= N; ++n) {
                for (const auto& ms : feasible_marks(pattern, n)) {
                    out << n << ':';
                    for (int p : ms.marks) out << p << ',';
                    out << '='
                        << to_decimal(count_linear_extensions(
                               build_poset(pattern, ms)))
                        << ';';
                }
            }
            break;
        }
    }
    return out.str();
}

bool check_ks_hypothesis(const Permutation& pi, const Permutation& tau) {
    int m = pi.size();
    if (tau.size() != m) return false;
    auto opi = overlap_set(pi);
    auto otau = overlap_set(tau);
    if (opi.indices != otau.indices) return false;
    for (int i : opi.indices) {
        std::set<int> pre_pi(pi.word().begin(), pi.word().begin() + (m - i));
        std::set<int> pre_tau(tau.word().begin(), tau.word().begin() + (m - i));
        if (pre_pi != pre_tau) return false;
        std::set<int> suf_pi(pi.word().begin() + i, pi.word().end());
        std::set<int> suf_tau(tau.word().begin() + i, tau.word().end());
        if (suf_pi != suf_tau) return false;
    }
    return true;
}

NecessaryReport check_necessary(const Permutation& pi, const Permutation& tau) {
    NecessaryReport report;
    auto opi = overlap_set(pi);
    auto otau = overlap_set(tau);
    report.overlap_equal =
        pi.size() == tau.size() && opi.indices == otau.indices;
    auto sp = to_standard_form(pi);
    auto st = to_standard_form(tau);
    report.standard_form_a = sp.pattern.str();
    report.standard_form_b = st.pattern.str();
    int dp = sp.pattern.at(sp.pattern.size()) - sp.pattern.at(1);
    int dt = st.pattern.at(st.pattern.size()) - st.pattern.at(1);
    report.difference_equal = dp == dt;
    return report;
}

bool check_maxmin_hypothesis(const Permutation& pi) {
    int m = pi.size();
    if (m < 2) return false;
    if (pi.at(1) != 1 || pi.at(m) != m) return false;
    return overlap_set(pi).indices.size() == 2;
}

EquivalenceReport classify(int m, Level level, int N,
                           const ClassifyOptions& opt) {
    if (m < 2) throw InvalidInputError("classification requires m >= 2");
    if (m > opt.max_m)
        throw ResourceError("classification limited to m <= " +
                            std::to_string(opt.max_m));
    if (N < m) throw InvalidInputError("horizon below pattern length");

    std::vector<Permutation> patterns;
    {
        std::vector<int> w(m);
        std::iota(w.begin(), w.end(), 1);
        do {
            patterns.emplace_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    std::vector<std::string> profiles(patterns.size());
    parallel_for(opt.jobs, patterns.size(), [&](size_t i) {
        profiles[i] = profile(patterns[i], level, N);
    });

    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < patterns.size(); ++i)
        groups[profiles[i]].push_back(i);

    EquivalenceReport report;
    report.m = m;
    report.level = level;
    report.horizon = N;
    report.certification =
        "profiles equal up to N=" + std::to_string(N) +
        "; no separation found up to N=" + std::to_string(N) +
        " for members of a class; distinct classes are certified inequivalent";
    for (const auto& [key, idx] : groups) {
        ClassInfo info;
        for (size_t i : idx) info.members.push_back(patterns[i].str());
        std::sort(info.members.begin(), info.members.end());
        info.standard_form_rep =
            to_standard_form(patterns[idx.front()]).pattern.str();
        info.all_nonoverlapping = true;
        for (size_t i : idx)
            if (!is_nonoverlapping(patterns[i])) {
                info.all_nonoverlapping = false;
                break;
            }
        // The class is flagged when the certified relations alone link every
        // member: the symmetries valid at this level plus pairs passing the
        // prefix/suffix value-set hypothesis.
        {
            std::vector<size_t> comp(idx.size());
            std::iota(comp.begin(), comp.end(), size_t{0});
            std::function<size_t(size_t)> find = [&](size_t x) {
                while (comp[x] != x) x = comp[x] = comp[comp[x]];
                return x;
            };
            auto unite = [&](size_t x, size_t y) { comp[find(x)] = find(y); };
            for (size_t x = 0; x < idx.size(); ++x) {
                for (size_t y = x + 1; y < idx.size(); ++y) {
                    const auto& px = patterns[idx[x]];
                    const auto& py = patterns[idx[y]];
                    bool linked = py == px.complemented() ||
                                  check_ks_hypothesis(px, py);
                    if (level != Level::superstrong)
                        linked = linked || py == px.reversed() ||
                                 py == px.reverse_complemented();
                    if (linked) unite(x, y);
                }
            }
            info.satisfies_ks_hypothesis = true;
            for (size_t x = 0; x < idx.size(); ++x)
                if (find(x) != find(0)) {
                    info.satisfies_ks_hypothesis = false;
                    break;
                }
        }
        info.satisfies_maxmin_hypothesis = false;
        for (size_t i : idx)
            if (check_maxmin_hypothesis(patterns[i])) {
                info.satisfies_maxmin_hypothesis = true;
                break;
            }
        report.classes.push_back(std::move(info));
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const ClassInfo& a, const ClassInfo& b) {
                  return a.members.front() < b.members.front();
              });
    return report;
}

std::string report_json(const EquivalenceReport& report) {
    nlohmann::json j;
    j["m"] = report.m;
    j["level"] = level_name(report.level);
    j["horizon"] = report.horizon;
    j["certification"] = report.certification;
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : report.classes) {
        nlohmann::json jc;
        jc["members"] = c.members;
        jc["standard_form_representative"] = c.standard_form_rep;
        jc["satisfies_ks_hypothesis"] = c.satisfies_ks_hypothesis;
        jc["satisfies_maxmin_hypothesis"] = c.satisfies_maxmin_hypothesis;
        jc["all_nonoverlapping"] = c.all_nonoverlapping;
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    return j.dump(2);
}

std::string render_class_table(int m, int N, const ClassifyOptions& opt) {
    auto strong = classify(m, Level::strong, N, opt);
    auto super = classify(m, Level::superstrong, N, opt);
    // Map each pattern to its super-strong class index.
    std::map<std::string, size_t> super_of;
    for (size_t ci = 0; ci < super.classes.size(); ++ci)
        for (const auto& p : super.classes[ci].members) super_of[p] = ci;
    std::ostringstream out;
    out << "strong classes for m=" << m << " (equal up to N=" << N
        << "); ' | ' separates super-strong subclasses\n";
    for (const auto& c : strong.classes) {
        std::map<size_t, std::vector<std::string>> parts;
        for (const auto& p : c.members) parts[super_of[p]].push_back(p);
        bool first_part = true;
        for (const auto& [ci, members] : parts) {
            if (!first_part) out << " | ";
            first_part = false;
            for (size_t i = 0; i < members.size(); ++i) {
                if (i) out << ",";
                out << members[i];
            }
        }
        out << "\n";
    }
    return out.str();
}

ProbeReport conjecture_probe(int m, int kmax) {
    if (m < 3) throw InvalidInputError("probe requires m >= 3");
    if (kmax < 2) throw InvalidInputError("probe requires kmax >= 2");
    ProbeReport report;
    report.m = m;
    report.kmax = kmax;
    // Diagonal cluster numbers depend only on the boundary letters, so the
    // probe walks standard-form boundary pairs (a,b) with equal difference.
    struct Boundary {
        int a, b;
        std::vector<BigCount> r;  // index k-2
    };
    std::vector<Boundary> boundaries;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            if (a + b > m + 1) continue;
            Boundary bd{a, b, {}};
            for (int k = 2; k <= kmax; ++k)
                bd.r.push_back(glued_chain_extensions(m, a, b, k));
            boundaries.push_back(std::move(bd));
        }
    for (size_t i = 0; i < boundaries.size(); ++i) {
        for (size_t j = 0; j < boundaries.size(); ++j) {
            const auto& lo = boundaries[i];
            const auto& hi = boundaries[j];
            if (lo.b - lo.a != hi.b - hi.a) continue;
            if (lo.b - lo.a < 2) continue;
            if (lo.a >= hi.a) continue;
            ProbePair pair;
            pair.a = lo.a;
            pair.b = lo.b;
            pair.a2 = hi.a;
            pair.b2 = hi.b;
            pair.rep = nonoverlap_construct(m, lo.a, lo.b).str();
            pair.rep2 = nonoverlap_construct(m, hi.a, hi.b).str();
            for (int k = 2; k <= kmax; ++k) {
                const BigCount& rl = lo.r[k - 2];
                const BigCount& rh = hi.r[k - 2];
                if (rl == rh) pair.equal_ks.push_back(k);
                if (rl < rh && !pair.witness_found) {
                    pair.witness_found = true;
                    pair.witness_k = k;
                }
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    std::sort(report.pairs.begin(), report.pairs.end(),
              [](const ProbePair& x, const ProbePair& y) {
                  return std::tie(x.b, x.a, x.a2) < std::tie(y.b, y.a, y.a2);
              });
    return report;
}

std::string probe_json(const ProbeReport& report) {
    nlohmann::json j;
    j["m"] = report.m;
    j["kmax"] = report.kmax;
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : report.pairs) {
        nlohmann::json jp;
        jp["a"] = p.a;
        jp["b"] = p.b;
        jp["a2"] = p.a2;
        jp["b2"] = p.b2;
        jp["representative"] = p.rep;
        jp["representative2"] = p.rep2;
        jp["witness_k"] = p.witness_found ? nlohmann::json(p.witness_k)
                                          : nlohmann::json(nullptr);
        jp["equal_ks"] = p.equal_ks;
        jp["witness_found"] = p.witness_found;
        pairs.push_back(std::move(jp));
    }
    j["pairs"] = std::move(pairs);
    return j.dump(2);
}

}  // namespace cwilf

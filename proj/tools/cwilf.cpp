#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwilf/asymptotics.hpp"
#include "cwilf/cluster.hpp"
#include "cwilf/equivalence.hpp"
#include "cwilf/errors.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/permutation.hpp"
#include "cwilf/poset.hpp"
#include "cwilf/series.hpp"
#include "cwilf/verify.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_marks(const std::string& text) {
    std::vector<int> marks;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            marks.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw cwilf::InvalidInputError("unparseable mark '" + item + "'");
        }
    }
    if (marks.empty()) throw cwilf::InvalidInputError("empty mark list");
    return marks;
}

std::unique_ptr<cwilf::CountCache> open_cache(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        const char* env = std::getenv("CWILF_CACHE");
        if (env) path = env;
    }
    if (path.empty()) return nullptr;
    return std::make_unique<cwilf::CountCache>(path);
}

int run(int argc, char** argv) {
    CLI::App app{"exact enumeration of consecutive permutation patterns"};
    app.require_subcommand(1);
    unsigned jobs = cwilf::default_jobs();
    std::string cache_path;
    app.add_option("--jobs", jobs, "worker threads for parallel tasks");
    app.add_option("--cache", cache_path,
                   "count cache file (also via CWILF_CACHE)");

    // occ
    auto* occ = app.add_subcommand("occ", "occurrence positions as JSON");
    std::string occ_pattern, occ_perm;
    occ->add_option("--pattern", occ_pattern, "pattern")->required();
    occ->add_option("--perm", occ_perm, "host permutation")->required();
    occ->callback([&] {
        auto result = cwilf::occurrences(cwilf::Permutation::parse(occ_pattern),
                                         cwilf::Permutation::parse(occ_perm));
        json j;
        j["positions"] = result.positions;
        std::cout << j.dump() << "\n";
    });

    // overlap
    auto* overlap = app.add_subcommand(
        "overlap", "overlap set, non-overlapping flag, standard form");
    std::string ov_pattern;
    overlap->add_option("--pattern", ov_pattern, "pattern")->required();
    overlap->callback([&] {
        auto p = cwilf::Permutation::parse(ov_pattern);
        auto o = cwilf::overlap_set(p);
        auto sf = cwilf::to_standard_form(p);
        json j;
        j["overlap_set"] = o.indices;
        j["nonoverlapping"] = o.indices.size() == 1;
        j["standard_form"] = sf.pattern.str();
        j["symmetry"] = cwilf::symmetry_name(sf.applied);
        std::cout << j.dump() << "\n";
    });

    // cluster
    auto* cluster = app.add_subcommand(
        "cluster", "cluster / refined cluster numbers");
    std::string cl_pattern, cl_marks;
    int cl_n = 0, cl_k = -1;
    cluster->add_option("--pattern", cl_pattern, "pattern")->required();
    cluster->add_option("--n", cl_n, "ambient length")->required();
    cluster->add_option("--k", cl_k, "number of marked occurrences");
    cluster->add_option("--marks", cl_marks, "marked positions, e.g. 1,4,8");
    cluster->callback([&] {
        if ((cl_k < 0) == cl_marks.empty())
            throw cwilf::InvalidInputError(
                "cluster needs exactly one of --k or --marks");
        auto p = cwilf::Permutation::parse(cl_pattern);
        auto cache = open_cache(cache_path);
        json j;
        j["pattern"] = p.str();
        j["n"] = cl_n;
        cwilf::BigCount value;
        if (!cl_marks.empty()) {
            auto marks = parse_marks(cl_marks);
            j["marks"] = marks;
            std::optional<cwilf::BigCount> hit;
            if (cache) hit = cache->get_marks(p, cl_n, marks);
            value = hit ? *hit
                        : cwilf::refined_cluster_number(p, cl_n, marks);
            if (cache && !hit) cache->put_marks(p, cl_n, marks, value);
        } else {
            j["k"] = cl_k;
            std::optional<cwilf::BigCount> hit;
            if (cache) hit = cache->get_k(p, cl_n, cl_k);
            value = hit ? *hit : cwilf::cluster_number(p, cl_n, cl_k);
            if (cache && !hit) cache->put_k(p, cl_n, cl_k, value);
        }
        j["count"] = cwilf::to_decimal(value);
        std::cout << j.dump() << "\n";
    });

    // gf
    auto* gf = app.add_subcommand("gf", "truncated generating function JSON");
    std::string gf_pattern, gf_kind = "pattern";
    int gf_nmax = 0;
    gf->add_option("--pattern", gf_pattern, "pattern")->required();
    gf->add_option("--nmax", gf_nmax, "truncation order")->required();
    gf->add_option("--kind", gf_kind, "pattern (occurrence gf) or cluster")
        ->check(CLI::IsMember({"pattern", "cluster"}));
    gf->callback([&] {
        auto p = cwilf::Permutation::parse(gf_pattern);
        auto series = gf_kind == "cluster" ? cwilf::cluster_gf(p, gf_nmax)
                                           : cwilf::pattern_gf(p, gf_nmax);
        json j;
        j["pattern"] = p.str();
        j["nmax"] = gf_nmax;
        j["kind"] = gf_kind;
        j["series"] = json::parse(cwilf::series_json(series));
        std::cout << j.dump() << "\n";
    });

    // classify
    auto* classify = app.add_subcommand(
        "classify", "equivalence classes up to a horizon");
    int cls_m = 0, cls_nmax = -1;
    std::string cls_level = "strong", cls_format = "json";
    classify->add_option("--m", cls_m, "pattern length")->required();
    classify->add_option("--level", cls_level, "cwilf|strong|superstrong");
    classify->add_option("--nmax", cls_nmax,
                         "horizon (default 3(m-1)+1)");
    classify->add_option("--format", cls_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    classify->callback([&] {
        int N = cls_nmax > 0 ? cls_nmax : 3 * (cls_m - 1) + 1;
        cwilf::ClassifyOptions opt;
        opt.jobs = jobs;
        if (cls_format == "table") {
            std::cout << cwilf::render_class_table(cls_m, N, opt);
        } else {
            auto report =
                cwilf::classify(cls_m, cwilf::parse_level(cls_level), N, opt);
            std::cout << cwilf::report_json(report) << "\n";
        }
    });

    // asym
    auto* asym = app.add_subcommand(
        "asym", "growth data for diagonal cluster numbers");
    std::string as_pattern, as_out;
    int as_m = 0, as_a = 0, as_b = 0, as_kmax = 30;
    asym->add_option("--pattern", as_pattern, "non-overlapping pattern");
    asym->add_option("--m", as_m, "pattern length (with --a/--b)");
    asym->add_option("--a", as_a, "first letter");
    asym->add_option("--b", as_b, "last letter");
    asym->add_option("--kmax", as_kmax, "largest k");
    asym->add_option("--out", as_out, "CSV output path");
    asym->callback([&] {
        cwilf::Permutation p = [&] {
            if (!as_pattern.empty()) return cwilf::Permutation::parse(as_pattern);
            if (as_m > 0) return cwilf::nonoverlap_construct(as_m, as_a, as_b);
            throw cwilf::InvalidInputError(
                "asym needs --pattern or --m/--a/--b");
        }();
        if (!as_out.empty()) {
            std::ofstream out(as_out);
            if (!out)
                throw cwilf::InvalidInputError("cannot open " + as_out);
            cwilf::write_nk_csv(out, p, as_kmax);
        }
        auto recovery = cwilf::recover_difference(p, as_kmax);
        json j;
        j["pattern"] = p.str();
        j["a"] = recovery.a;
        j["b"] = recovery.b;
        j["kmax"] = as_kmax;
        if (!as_out.empty()) j["csv"] = as_out;
        json jr;
        jr["k"] = recovery.k;
        jr["log_lower_over_klogk"] = recovery.log_lower;
        jr["log_actual_over_klogk"] = recovery.log_actual;
        jr["log_upper_over_klogk"] = recovery.log_upper;
        jr["difference_bracket"] = {recovery.diff_lo, recovery.diff_hi};
        jr["bracket_contains_actual"] = recovery.bracket_contains_actual;
        jr["midpoint_rounds_to_difference"] = recovery.midpoint_rounds_to_diff;
        j["recovery"] = std::move(jr);
        if (as_out.empty()) j["nk"] = cwilf::nk_sequence(p, as_kmax);
        std::cout << j.dump() << "\n";
    });

    // verify-paper
    auto* verify = app.add_subcommand(
        "verify-paper", "run the built-in regression checks");
    std::string tier = "fast";
    verify->add_option("--tier", tier, "fast or slow")
        ->check(CLI::IsMember({"fast", "slow"}));
    verify->callback([&] {
        auto results = cwilf::run_verification(tier == "slow", jobs);
        int failures = 0;
        for (const auto& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.pass) std::cout << " — " << r.detail;
            std::cout << "\n";
        }
        for (const auto& r : results)
            if (!r.pass) ++failures;
        std::cout << (failures == 0 ? "all checks passed"
                                    : std::to_string(failures) +
                                          " check(s) failed")
                  << " (" << results.size() << " run)\n";
        if (failures > 0) std::exit(1);
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cwilf::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const cwilf::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

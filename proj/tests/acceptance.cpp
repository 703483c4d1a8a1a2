// Acceptance suite: one pass/fail line per criterion.
//
//  1 main equivalence (census vs generation) for 2 <= |w| <= 18, under 120 s
//  2 palindrome components and split point at |u| for every pair to 18
//  3 descent soundness and trace replay for every pair to 18
//  4 all-word lemma suites, exhaustive to n = 14, both orders
//  5 pair lemma suites and family properties to length 18
//  6 fast border machinery vs naive oracles (exhaustive 12 + 10000 random)
//  7 census regression at 18: row arithmetic, anchors, blessed golden file
//  8 byte-identical reports with 1 thread and with all cores

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fbw/harness.hpp"

using namespace fbw;
using namespace fbw::harness;

namespace {

struct Outcome {
    int id;
    std::string title;
    bool passed;
    std::string detail;
};

std::string describe(const VerificationReport& r) {
    return "items=" + std::to_string(r.items_checked) +
           " failures=" + std::to_string(r.failure_count);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main() {
    std::vector<Outcome> outcomes;
    std::vector<VerificationReport> failing;

    // 1 — main equivalence at 18, timed
    {
        const auto start = std::chrono::steady_clock::now();
        const VerificationReport r = verify_theorem_main(18);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        const bool ok = r.passed() && secs < 120.0;
        if (!r.passed()) failing.push_back(r);
        std::ostringstream d;
        d << describe(r) << " elapsed=" << secs << "s (limit 120s)";
        outcomes.push_back({1, "main equivalence to length 18", ok, d.str()});
    }

    // 2 — palindrome theorem at 18
    {
        const VerificationReport r = verify_palindrome_theorem(18);
        if (!r.passed()) failing.push_back(r);
        outcomes.push_back({2, "palindromic pairs and split at |u| to 18", r.passed(),
                            describe(r)});
    }

    // 3 — descent and trace replay at 18
    {
        const VerificationReport r = verify_descent(18);
        if (!r.passed()) failing.push_back(r);
        std::string d = describe(r);
        for (const auto& n : r.notes)
            if (n.rfind("case_", 0) == 0) d += " " + n;
        outcomes.push_back({3, "descent soundness and replay to 18", r.passed(), d});
    }

    // 4 and 5 — lemma suites (all-word at 14, pair suites at 18)
    {
        const auto reports = verify_lemma_suites(14, 18);
        bool words_ok = true;
        bool pairs_ok = true;
        std::string words_detail;
        std::string pairs_detail;
        for (const auto& r : reports) {
            const bool word_suite = r.bound == 14;
            (word_suite ? words_ok : pairs_ok) &= r.passed();
            std::string& d = word_suite ? words_detail : pairs_detail;
            if (!d.empty()) d += ", ";
            d += r.suite + ":" + std::to_string(r.failure_count);
            if (!r.passed()) failing.push_back(r);
        }
        outcomes.push_back({4, "all-word lemma suites at 14", words_ok,
                            "failures per suite: " + words_detail});
        outcomes.push_back({5, "pair lemma and family suites at 18", pairs_ok,
                            "failures per suite: " + pairs_detail});
    }

    // 6 — oracle equivalence
    {
        const VerificationReport r = verify_oracle_equivalence(12, 10000, 64);
        if (!r.passed()) failing.push_back(r);
        outcomes.push_back({6, "fast vs naive border oracles", r.passed(), describe(r)});
    }

    // 7 — census regression at 18
    {
        const auto rows = census_table(18);
        bool ok = true;
        std::string detail;
        for (const auto& r : rows) {
            if (r.fb_words != r.n * r.fb_classes || r.f_pairs != 2 * r.fb_classes ||
                r.fb_words != r.unbordered_histogram.at(2)) {
                ok = false;
                detail = "row arithmetic broken at n=" + std::to_string(r.n);
                break;
            }
        }
        if (ok && (rows[0].fb_words != 2 || rows[1].fb_words != 6)) {
            ok = false;
            detail = "anchors fb_words(2)=2 / fb_words(3)=6 violated";
        }
        if (ok) {
            const std::string golden = slurp(FBW_GOLDEN_CENSUS);
            if (golden.empty()) {
                ok = false;
                detail = "golden file missing: " FBW_GOLDEN_CENSUS;
            } else if (golden != format_census_rows(rows)) {
                ok = false;
                detail = "census drifted from blessed golden file";
            } else {
                detail = "rows=17, arithmetic + anchors + golden replay exact";
            }
        }
        outcomes.push_back({7, "census regression at 18", ok, detail});
    }

    // 8 — determinism across thread counts
    {
        const std::string one = format_report(verify_theorem_main(18, 1));
        const std::string all = format_report(verify_theorem_main(18, 0));
        const bool ok = one == all;
        outcomes.push_back({8, "byte-identical reports for 1 thread vs all cores", ok,
                            ok ? "reports identical" : "reports differ"});
    }

    bool all_ok = true;
    for (const Outcome& o : outcomes) {
        all_ok &= o.passed;
        std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << o.id << ": "
                  << o.title << " — " << o.detail << "\n";
    }
    for (const auto& r : failing) std::cout << format_report(r);
    return all_ok ? 0 : 1;
}

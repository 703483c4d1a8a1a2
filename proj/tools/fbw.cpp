// fbw — analyze binary words with exactly two unbordered conjugates.
//
// Subcommands: analyze, census, verify, generate-f, descend. Every command
// renders to text, CSV or JSON and is deterministic: identical inputs give
// byte-identical output regardless of --threads.
//
// Exit codes: 0 success, 1 verification or golden-file failure, 2 usage or
// parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fbw/fully_bordered.hpp"
#include "fbw/harness.hpp"
#include "fbw/word.hpp"

using nlohmann::json;
using namespace fbw;

namespace {

enum class Format { text, csv, json };

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return Format::text;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> word_strings(const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const Word& w : words) out.push_back(w.str());
    return out;
}

std::vector<std::string> size_strings(const std::vector<std::size_t>& xs) {
    std::vector<std::string> out;
    for (std::size_t x : xs) out.push_back(std::to_string(x));
    return out;
}

void emit_json(const std::string& command, const json& params, const json& result) {
    json doc;
    doc["command"] = command;
    doc["params"] = params;
    doc["result"] = result;
    std::cout << doc.dump(2) << "\n";
}

std::string trace_string_list_sep(const DerivationTrace& t, const char* sep) {
    std::string out = "base(" + t.start.first.str() + "," + t.start.second.str() + ")";
    for (const DerivationStep& s : t.steps) {
        out += sep;
        out += s.to_string();
    }
    return out;
}

std::vector<std::string> trace_strings(const DerivationTrace& t) {
    std::vector<std::string> out;
    out.push_back("base(" + t.start.first.str() + "," + t.start.second.str() + ")");
    for (const DerivationStep& s : t.steps) out.push_back(s.to_string());
    return out;
}

json report_to_json(const harness::VerificationReport& r) {
    json j;
    j["suite"] = r.suite;
    j["bound"] = r.bound;
    j["items_checked"] = r.items_checked;
    j["failures"] = r.failure_count;
    j["passed"] = r.passed();
    j["notes"] = r.notes;
    json samples = json::array();
    for (const auto& f : r.sample_failures)
        samples.push_back({{"input", f.input},
                           {"observed", f.observed},
                           {"expected", f.expected}});
    j["sample_failures"] = samples;
    return j;
}

std::string report_csv_row(const harness::VerificationReport& r) {
    std::vector<std::string> failures;
    for (const auto& f : r.sample_failures)
        failures.push_back(f.input + "|" + f.observed + "|" + f.expected);
    std::ostringstream os;
    os << csv_quote(r.suite) << ',' << r.bound << ',' << r.items_checked << ','
       << r.failure_count << ',' << (r.passed() ? "true" : "false") << ','
       << csv_quote(join(r.notes, "; ")) << ',' << csv_quote(join(failures, "; "));
    return os.str();
}

int emit_reports(const std::vector<harness::VerificationReport>& reports,
                 Format format, const json& params) {
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed();
    switch (format) {
        case Format::text:
            std::cout << harness::format_reports(reports);
            break;
        case Format::csv: {
            std::cout << "suite,bound,items_checked,failures,passed,notes,sample_failures\n";
            for (const auto& r : reports) std::cout << report_csv_row(r) << "\n";
            break;
        }
        case Format::json: {
            json result = json::array();
            for (const auto& r : reports) result.push_back(report_to_json(r));
            emit_json("verify", params, result);
            break;
        }
    }
    return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& text, Format format) {
    const Word w = Word::parse(text);
    if (w.empty()) throw std::invalid_argument("analyze: empty word");

    const auto border_words = borders(w);
    const RootDecomposition rd = root_decomposition(w);
    const ConjugateCensus c = census(w);
    const auto pair = fb_pair_of(w);
    const auto splits = two_palindrome_splits(w);
    std::vector<LocalRoot> roots;
    for (std::size_t m = 0; m < w.size(); ++m) roots.push_back(local_root(w, m));

    const bool lyndon01 = is_lyndon(w, Order::zero_first);
    const bool lyndon10 = is_lyndon(w, Order::one_first);

    std::vector<std::string> root_fields;
    for (const LocalRoot& lr : roots)
        root_fields.push_back(std::to_string(lr.point) + ":" + lr.root.str() + ":" +
                              (lr.trivial ? "trivial" : "short"));

    switch (format) {
        case Format::text: {
            std::cout << "word           " << w.str() << "\n"
                      << "length         " << w.size() << "\n"
                      << "borders        " << (border_words.empty() ? "-" : join(word_strings(border_words), " ")) << "\n"
                      << "period         " << period(w) << "\n"
                      << "root (s,t,k)   (" << rd.s.str() << "," << rd.t.str() << "," << rd.k << ")\n"
                      << "primitive      " << (is_primitive(w) ? "yes" : "no") << "\n"
                      << "palindrome     " << (is_palindrome(w) ? "yes" : "no") << "\n"
                      << "lyndon 0<1     " << (lyndon01 ? "yes" : "no") << "\n"
                      << "lyndon 1<0     " << (lyndon10 ? "yes" : "no") << "\n"
                      << "local roots    " << join(root_fields, " ") << "\n"
                      << "census points  " << (c.unbordered_points.empty() ? "-" : join(size_strings(c.unbordered_points), " ")) << "\n"
                      << "fully bordered " << (pair ? "yes" : "no") << "\n";
            if (pair)
                std::cout << "fb pair        (" << pair->u.str() << "," << pair->v.str() << ")\n";
            std::cout << "pal. splits    " << (splits.empty() ? "-" : join(size_strings(splits), " ")) << "\n";
            break;
        }
        case Format::csv: {
            std::cout << "word,length,period,root_s,root_t,root_k,primitive,palindrome,"
                         "lyndon_01,lyndon_10,borders,local_roots,census_points,"
                         "fully_bordered,fb_u,fb_v,two_palindrome_splits\n";
            std::cout << csv_quote(w.str()) << ',' << w.size() << ',' << period(w) << ','
                      << csv_quote(rd.s.str()) << ',' << csv_quote(rd.t.str()) << ','
                      << rd.k << ',' << (is_primitive(w) ? "true" : "false") << ','
                      << (is_palindrome(w) ? "true" : "false") << ','
                      << (lyndon01 ? "true" : "false") << ','
                      << (lyndon10 ? "true" : "false") << ','
                      << csv_quote(join(word_strings(border_words), ";")) << ','
                      << csv_quote(join(root_fields, ";")) << ','
                      << csv_quote(join(size_strings(c.unbordered_points), ";")) << ','
                      << (pair ? "true" : "false") << ','
                      << csv_quote(pair ? pair->u.str() : "") << ','
                      << csv_quote(pair ? pair->v.str() : "") << ','
                      << csv_quote(join(size_strings(splits), ";")) << "\n";
            break;
        }
        case Format::json: {
            json result;
            result["word"] = w.str();
            result["length"] = w.size();
            result["borders"] = word_strings(border_words);
            result["period"] = period(w);
            result["root"] = {{"s", rd.s.str()}, {"t", rd.t.str()}, {"k", rd.k}};
            result["primitive"] = is_primitive(w);
            result["palindrome"] = is_palindrome(w);
            result["lyndon"] = {{"0<1", lyndon01}, {"1<0", lyndon10}};
            json lr = json::array();
            for (const LocalRoot& r : roots)
                lr.push_back({{"point", r.point}, {"root", r.root.str()}, {"trivial", r.trivial}});
            result["local_roots"] = lr;
            result["census_points"] = c.unbordered_points;
            result["fully_bordered"] = pair.has_value();
            if (pair)
                result["fb_pair"] = {pair->u.str(), pair->v.str()};
            else
                result["fb_pair"] = nullptr;
            result["two_palindrome_splits"] = splits;
            emit_json("analyze", {{"word", text}}, result);
            break;
        }
    }
    return 0;
}

// ----------------------------------------------------------------- census

std::string histogram_field(const harness::CensusRow& r, const char* sep) {
    std::vector<std::string> parts;
    for (const auto& [count, words] : r.unbordered_histogram)
        parts.push_back(std::to_string(count) + ":" + std::to_string(words));
    return join(parts, sep);
}

int cmd_census(std::size_t max_n, Format format, bool bless, const std::string& out_path,
               unsigned threads) {
    const auto rows = harness::census_table(max_n, threads);

    switch (format) {
        case Format::text:
            std::cout << harness::format_census_rows(rows);
            break;
        case Format::csv:
            std::cout << "n,fb_words,fb_classes,f_pairs,histogram\n";
            for (const auto& r : rows)
                std::cout << r.n << ',' << r.fb_words << ',' << r.fb_classes << ','
                          << r.f_pairs << ',' << csv_quote(histogram_field(r, ";"))
                          << "\n";
            break;
        case Format::json: {
            json result = json::array();
            for (const auto& r : rows) {
                json hist;
                for (const auto& [count, words] : r.unbordered_histogram)
                    hist[std::to_string(count)] = words;
                result.push_back({{"n", r.n},
                                  {"fb_words", r.fb_words},
                                  {"fb_classes", r.fb_classes},
                                  {"f_pairs", r.f_pairs},
                                  {"histogram", hist}});
            }
            emit_json("census", {{"max_len", max_n}}, result);
            break;
        }
    }

    const std::string rendered = harness::format_census_rows(rows);
    if (bless) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("census: cannot write golden file " + out_path);
        out << rendered;
        return 0;
    }
    std::ifstream in(out_path, std::ios::binary);
    if (in) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        if (buffer.str() != rendered) {
            std::cerr << "census: drift against golden file " << out_path << "\n";
            return 1;
        }
    }
    return 0;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, std::size_t max_n, Format format,
               unsigned threads) {
    // defaults: all-word suites stop at 14, pair suites at 18
    const std::size_t words_bound = max_n ? max_n : 14;
    const std::size_t pairs_bound = max_n ? max_n : 18;

    std::vector<harness::VerificationReport> reports;
    if (suite == "main" || suite == "all")
        reports.push_back(harness::verify_theorem_main(pairs_bound, threads));
    if (suite == "palindromes" || suite == "all")
        reports.push_back(harness::verify_palindrome_theorem(pairs_bound, threads));
    if (suite == "descent" || suite == "all")
        reports.push_back(harness::verify_descent(pairs_bound, threads));
    if (suite == "lemmas" || suite == "all") {
        for (auto& r : harness::verify_lemma_suites(words_bound, pairs_bound, threads))
            reports.push_back(std::move(r));
    }
    if (suite == "all")
        reports.push_back(harness::verify_oracle_equivalence(12, 10000, 64, threads));

    json params{{"suite", suite}, {"max_len", max_n}};
    return emit_reports(reports, format, params);
}

// ------------------------------------------------------------- generate-f

int cmd_generate(std::size_t max_len, Format format, bool with_trace) {
    const auto members = generate_f(max_len);

    switch (format) {
        case Format::text:
            for (const auto& m : members) {
                std::cout << m.u.str() << ' ' << m.v.str();
                if (with_trace) std::cout << "  " << trace_string_list_sep(m.trace, ",");
                std::cout << "\n";
            }
            break;
        case Format::csv:
            std::cout << (with_trace ? "u,v,total_length,trace\n" : "u,v,total_length\n");
            for (const auto& m : members) {
                std::cout << csv_quote(m.u.str()) << ',' << csv_quote(m.v.str()) << ','
                          << m.u.size() + m.v.size();
                if (with_trace) std::cout << ',' << csv_quote(trace_string_list_sep(m.trace, ";"));
                std::cout << "\n";
            }
            break;
        case Format::json: {
            json result = json::array();
            for (const auto& m : members) {
                json item{{"u", m.u.str()},
                          {"v", m.v.str()},
                          {"total_length", m.u.size() + m.v.size()}};
                if (with_trace) item["trace"] = trace_strings(m.trace);
                result.push_back(item);
            }
            emit_json("generate-f", {{"max_len", max_len}, {"with_trace", with_trace}},
                      result);
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- descend

struct ChainStep {
    Word u, v;
    std::string action;
    Word next_u, next_v;
    std::string witness;
};

int cmd_descend(const std::string& utext, const std::string& vtext, Format format) {
    const Word u = Word::parse(utext);
    const Word v = Word::parse(vtext);
    if (u.empty() || v.empty()) throw std::invalid_argument("descend: empty component");

    const json params{{"u", utext}, {"v", vtext}};
    if (!is_fb_pair(u, v)) {
        const ConjugateCensus c = census(u + v);
        switch (format) {
            case Format::text:
                std::cout << "not a fully bordered pair: census of " << (u + v).str()
                          << " has unbordered points ["
                          << join(size_strings(c.unbordered_points), " ") << "]\n";
                break;
            case Format::csv:
                std::cout << "fully_bordered_pair,census_points\n";
                std::cout << "false," << csv_quote(join(size_strings(c.unbordered_points), ";"))
                          << "\n";
                break;
            case Format::json:
                emit_json("descend", params,
                          {{"fully_bordered_pair", false},
                           {"census_points", c.unbordered_points}});
                break;
        }
        return 1;
    }

    std::vector<ChainStep> chain;
    Word cu = u, cv = v;
    while (cu.size() + cv.size() > 2) {
        if (cv.size() > cu.size()) {
            chain.push_back({cu, cv, "swap", cv, cu, ""});
            std::swap(cu, cv);
            continue;
        }
        const DescentResult d = descend(cu, cv);
        const bool second = d.kind == DescentResult::Case::shrink_v;
        chain.push_back({cu, cv, second ? "shrink_v" : "shrink_u", d.next_u, d.next_v,
                         second ? d.witness.str() : ""});
        cu = d.next_u;
        cv = d.next_v;
    }

    switch (format) {
        case Format::text:
            for (const auto& s : chain) {
                std::cout << "(" << s.u.str() << "," << s.v.str() << ") " << s.action
                          << " -> (" << s.next_u.str() << "," << s.next_v.str() << ")";
                if (!s.witness.empty()) std::cout << "  v'=" << s.witness;
                std::cout << "\n";
            }
            std::cout << "base (" << cu.str() << "," << cv.str() << ")\n";
            break;
        case Format::csv:
            std::cout << "step,u,v,action,next_u,next_v,witness\n";
            for (std::size_t i = 0; i < chain.size(); ++i) {
                const auto& s = chain[i];
                std::cout << i << ',' << csv_quote(s.u.str()) << ',' << csv_quote(s.v.str())
                          << ',' << s.action << ',' << csv_quote(s.next_u.str()) << ','
                          << csv_quote(s.next_v.str()) << ',' << csv_quote(s.witness)
                          << "\n";
            }
            std::cout << chain.size() << ',' << csv_quote(cu.str()) << ','
                      << csv_quote(cv.str()) << ",base,,,\n";
            break;
        case Format::json: {
            json steps = json::array();
            for (const auto& s : chain) {
                json item{{"u", s.u.str()},
                          {"v", s.v.str()},
                          {"action", s.action},
                          {"next_u", s.next_u.str()},
                          {"next_v", s.next_v.str()}};
                if (!s.witness.empty()) item["witness"] = s.witness;
                steps.push_back(item);
            }
            emit_json("descend", params,
                      {{"fully_bordered_pair", true},
                       {"steps", steps},
                       {"base", {cu.str(), cv.str()}}});
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fbw: structure and census of binary words with exactly two unbordered conjugates"};
    app.require_subcommand(1);

    std::string format_name = "text";
    unsigned threads = 0;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for the suites (0 = all cores)")
        ->capture_default_str();

    std::string analyze_word;
    auto* analyze = app.add_subcommand("analyze", "Borders, periods, census and pair of one word");
    analyze->fallthrough();
    analyze->add_option("word", analyze_word, "Word over {0,1}")->required();

    std::size_t census_max = 12;
    bool census_bless = false;
    std::string census_out = "census.golden";
    auto* census_cmd = app.add_subcommand("census", "Census table over all words up to a length");
    census_cmd->fallthrough();
    census_cmd->add_option("--max-len", census_max, "Largest word length (2..22)")
        ->capture_default_str();
    census_cmd->add_flag("--bless", census_bless, "Write the golden file instead of comparing");
    census_cmd->add_option("--out", census_out, "Golden file path")->capture_default_str();

    std::string verify_suite = "all";
    std::size_t verify_max = 0;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->fallthrough();
    verify->add_option("--suite", verify_suite, "Suite to run")
        ->check(CLI::IsMember({"main", "palindromes", "descent", "lemmas", "all"}))
        ->capture_default_str();
    verify->add_option("--max-len", verify_max, "Bound override (0 = per-suite defaults)")
        ->capture_default_str();

    std::size_t generate_max = 10;
    bool with_trace = false;
    auto* generate = app.add_subcommand("generate-f", "List the pair family up to a total length");
    generate->fallthrough();
    generate->add_option("--max-len", generate_max, "Largest |uv| (>= 2)")
        ->capture_default_str();
    generate->add_flag("--with-trace", with_trace, "Append each derivation trace");

    std::string descend_u, descend_v;
    auto* descend_cmd = app.add_subcommand("descend", "Reduce a fully bordered pair to the base pair");
    descend_cmd->fallthrough();
    descend_cmd->add_option("u", descend_u, "First component")->required();
    descend_cmd->add_option("v", descend_v, "Second component")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format format = parse_format(format_name);
    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(analyze_word, format);
        if (app.got_subcommand(census_cmd))
            return cmd_census(census_max, format, census_bless, census_out, threads);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_suite, verify_max, format, threads);
        if (app.got_subcommand(generate)) return cmd_generate(generate_max, format, with_trace);
        if (app.got_subcommand(descend_cmd)) return cmd_descend(descend_u, descend_v, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "fbw: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "fbw: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fbw: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

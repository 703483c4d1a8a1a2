#include "fbw/harness.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "scan.hpp"

namespace fbw::harness {

Word word_at_index(std::size_t n, std::uint64_t index) {
    if (n == 0) throw std::invalid_argument("word_at_index: length must be positive");
    if (n > 63 || (index >> n) != 0)
        throw std::invalid_argument("word_at_index: index out of range");
    std::string bits(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if ((index >> (n - 1 - i)) & 1) bits[i] = '1';
    return Word::parse(bits);
}

std::vector<Word> enumerate_words(std::size_t n) {
    if (n == 0) throw std::invalid_argument("enumerate_words: length must be positive");
    if (n > 22) throw std::invalid_argument("enumerate_words: refusing to materialize beyond n=22");
    std::vector<Word> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx)
        out.push_back(word_at_index(n, idx));
    return out;
}

bool naive_is_unbordered(const Word& w) {
    if (w.empty()) throw std::invalid_argument("naive_is_unbordered: empty word");
    const std::string& s = w.str();
    for (std::size_t len = 1; len < s.size(); ++len)
        if (s.compare(0, len, s, s.size() - len, len) == 0) return false;
    return true;
}

std::vector<Word> naive_borders(const Word& w) {
    if (w.empty()) throw std::invalid_argument("naive_borders: empty word");
    const std::string& s = w.str();
    std::vector<Word> out;
    for (std::size_t len = 1; len < s.size(); ++len)
        if (s.compare(0, len, s, s.size() - len, len) == 0)
            out.push_back(w.prefix(len));
    return out;
}

std::size_t naive_period(const Word& w) {
    if (w.empty()) throw std::invalid_argument("naive_period: empty word");
    const std::string& s = w.str();
    for (std::size_t p = 1; p < s.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < s.size(); ++i) {
            if (s[i] != s[i + p]) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return s.size();
}

namespace {

std::string pair_text(const Word& u, const Word& v) {
    return "(" + u.str() + "," + v.str() + ")";
}

struct Tally {
    std::size_t items = 0;
    std::size_t failures = 0;
    std::vector<Failure> samples;

    void fail(Failure f) {
        ++failures;
        if (samples.size() < kFailureSampleCap) samples.push_back(std::move(f));
    }
    void merge(Tally&& o) {
        items += o.items;
        failures += o.failures;
        for (auto& s : o.samples) {
            if (samples.size() >= kFailureSampleCap) break;
            samples.push_back(std::move(s));
        }
    }
};

VerificationReport make_report(std::string suite, std::size_t bound, Tally tally,
                               std::vector<std::string> notes = {}) {
    VerificationReport r;
    r.suite = std::move(suite);
    r.bound = bound;
    r.items_checked = tally.items;
    r.failure_count = tally.failures;
    r.sample_failures = std::move(tally.samples);
    r.notes = std::move(notes);
    return r;
}

// Scans every word of length n, accumulating into per-shard Acc instances
// merged in shard order.
template <class Acc, class PerWord>
Acc scan_length(std::size_t n, unsigned threads, const PerWord& per_word) {
    auto parts = detail::run_shards(
        detail::shard_count_for(n), threads, [&](std::size_t shard) {
            Acc acc{};
            const auto range = detail::shard_range(n, shard);
            for (std::uint64_t idx = range.begin; idx < range.end; ++idx)
                per_word(word_at_index(n, idx), acc);
            return acc;
        });
    Acc total{};
    for (auto& part : parts) total.merge(std::move(part));
    return total;
}

// Generation order on pairs: |uv|, then uv, then u.
bool pair_order(const FBPair& a, const FBPair& b) {
    return std::tuple(a.u.size() + a.v.size(), a.u.str() + a.v.str(), a.u.str()) <
           std::tuple(b.u.size() + b.v.size(), b.u.str() + b.v.str(), b.u.str());
}

}  // namespace

std::vector<CensusRow> census_table(std::size_t max_n, unsigned threads) {
    if (max_n < 2 || max_n > 22)
        throw std::invalid_argument("census_table: bound must be in [2, 22]");

    struct Part {
        std::map<std::size_t, std::size_t> hist;
        std::size_t fb = 0;
        std::size_t classes = 0;
        std::vector<FBPair> pairs;

        void merge(Part&& o) {
            for (auto& [k, v] : o.hist) hist[k] += v;
            fb += o.fb;
            classes += o.classes;
            pairs.insert(pairs.end(), std::make_move_iterator(o.pairs.begin()),
                         std::make_move_iterator(o.pairs.end()));
        }
    };

    std::vector<CensusRow> rows;
    for (std::size_t n = 2; n <= max_n; ++n) {
        Part part = scan_length<Part>(n, threads, [](const Word& w, Part& acc) {
            const std::size_t count = unbordered_conjugate_count(w);
            ++acc.hist[count];
            if (count == 2) {
                ++acc.fb;
                if (is_lyndon(w, Order::zero_first)) ++acc.classes;
                acc.pairs.push_back(*fb_pair_of(w));
            }
        });
        std::set<FBPair> distinct(part.pairs.begin(), part.pairs.end());
        rows.push_back(CensusRow{n, part.fb, part.classes, distinct.size(),
                                 std::move(part.hist)});
    }
    return rows;
}

std::string format_census_rows(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    for (const CensusRow& r : rows) {
        os << r.n << ' ' << r.fb_words << ' ' << r.fb_classes << ' ' << r.f_pairs;
        for (const auto& [count, words] : r.unbordered_histogram)
            os << ' ' << count << ':' << words;
        os << '\n';
    }
    return os.str();
}

std::vector<FBPair> all_fb_pairs(std::size_t max_total_length, unsigned threads) {
    if (max_total_length < 2)
        throw std::invalid_argument("all_fb_pairs: bound must be at least 2");

    struct Bag {
        std::vector<FBPair> pairs;
        void merge(Bag&& o) {
            pairs.insert(pairs.end(), std::make_move_iterator(o.pairs.begin()),
                         std::make_move_iterator(o.pairs.end()));
        }
    };

    std::set<FBPair> distinct;
    for (std::size_t n = 2; n <= max_total_length; ++n) {
        Bag bag = scan_length<Bag>(n, threads, [](const Word& w, Bag& acc) {
            if (auto p = fb_pair_of(w)) acc.pairs.push_back(std::move(*p));
        });
        distinct.insert(bag.pairs.begin(), bag.pairs.end());
    }
    std::vector<FBPair> out(distinct.begin(), distinct.end());
    std::sort(out.begin(), out.end(), pair_order);
    return out;
}

std::string format_report(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite=" << r.suite << " bound=" << r.bound
       << " items_checked=" << r.items_checked << " failures=" << r.failure_count
       << " status=" << (r.passed() ? "pass" : "FAIL") << '\n';
    for (const std::string& n : r.notes) os << "  note: " << n << '\n';
    for (const Failure& f : r.sample_failures)
        os << "  counterexample: input=" << f.input << " observed=" << f.observed
           << " expected=" << f.expected << '\n';
    return os.str();
}

std::string format_reports(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += format_report(r);
    return out;
}

VerificationReport verify_theorem_main(std::size_t max_n, unsigned threads) {
    if (max_n < 2)
        throw std::invalid_argument("verify_theorem_main: bound must be at least 2");

    const std::vector<FMember> members = generate_f(max_n);
    std::set<std::pair<std::string, std::string>> generated;
    for (const FMember& m : members) generated.insert({m.u.str(), m.v.str()});

    Tally tally;
    for (std::size_t n = 2; n <= max_n; ++n) {
        tally.merge(scan_length<Tally>(n, threads, [&](const Word& w, Tally& t) {
            ++t.items;
            if (!is_fully_bordered(w)) return;
            const FBPair p = *fb_pair_of(w);
            if (!generated.contains({p.u.str(), p.v.str()}))
                t.fail({w.str(),
                        "fully bordered, pair " + pair_text(p.u, p.v) + " not generated",
                        "pair generated in F"});
        }));
    }
    for (const FMember& m : members) {
        if (!is_fb_pair(m.u, m.v))
            tally.fail({pair_text(m.u, m.v), "generated pair fails the census",
                        "fully bordered pair"});
    }
    std::vector<std::string> notes{"generated_members=" + std::to_string(members.size())};
    return make_report("theorem_main", max_n, std::move(tally), std::move(notes));
}

VerificationReport verify_palindrome_theorem(std::size_t max_n, unsigned threads) {
    if (max_n < 2)
        throw std::invalid_argument("verify_palindrome_theorem: bound must be at least 2");

    const std::vector<FBPair> pairs = all_fb_pairs(max_n, threads);
    Tally tally;
    for (const FBPair& p : pairs) {
        ++tally.items;
        if (!is_palindrome(p.u))
            tally.fail({pair_text(p.u, p.v), "u is not a palindrome", "palindromic u"});
        if (!is_palindrome(p.v))
            tally.fail({pair_text(p.u, p.v), "v is not a palindrome", "palindromic v"});
        const auto splits = two_palindrome_splits(p.u + p.v);
        if (!std::binary_search(splits.begin(), splits.end(), p.u.size()))
            tally.fail({pair_text(p.u, p.v), "|u| is not a two-palindrome split of uv",
                        "split at |u|"});
    }

    // Measured, never asserted: how many conjugates of fully bordered words
    // (beyond uv and vu themselves) fail to split into two palindromes.
    std::size_t rotations = 0;
    std::size_t without_split = 0;
    for (const FBPair& p : pairs) {
        const Word w = p.u + p.v;
        if (!is_lyndon(w, Order::zero_first)) continue;  // one representative per class
        for (std::size_t m = 0; m < w.size(); ++m) {
            ++rotations;
            if (two_palindrome_splits(conjugate_at(w, m)).empty()) ++without_split;
        }
    }
    std::vector<std::string> notes{
        "conjugates_without_two_palindrome_split=" + std::to_string(without_split) +
        " of " + std::to_string(rotations) + " (measured, not asserted)"};
    return make_report("palindrome_theorem", max_n, std::move(tally), std::move(notes));
}

namespace {

VerificationReport suite_lyndon_unbordered(std::size_t max_n, unsigned threads) {
    Tally tally;
    for (std::size_t n = 1; n <= max_n; ++n) {
        tally.merge(scan_length<Tally>(n, threads, [](const Word& w, Tally& t) {
            for (Order o : {Order::zero_first, Order::one_first}) {
                if (!is_lyndon(w, o)) continue;
                ++t.items;
                if (!border_lengths(w).empty())
                    t.fail({w.str(), "Lyndon under " + std::string(order_name(o)) +
                                         " but bordered",
                            "unbordered"});
            }
        }));
    }
    return make_report("lyndon_unbordered", max_n, std::move(tally));
}

VerificationReport suite_lyndon_prefix_root(std::size_t max_n, unsigned threads) {
    Tally tally;
    for (std::size_t n = 1; n <= max_n; ++n) {
        tally.merge(scan_length<Tally>(n, threads, [](const Word& w, Tally& t) {
            for (Order o : {Order::zero_first, Order::one_first}) {
                if (!is_lyndon(w, o)) continue;
                for (std::size_t len = 1; len <= w.size(); ++len) {
                    ++t.items;
                    const Word root = periodic_root(w.prefix(len));
                    if (!is_lyndon(root, o))
                        t.fail({w.str() + " prefix=" + w.prefix(len).str(),
                                "periodic root " + root.str() + " not Lyndon under " +
                                    std::string(order_name(o)),
                                "Lyndon periodic root"});
                }
            }
        }));
    }
    return make_report("lyndon_prefix_root", max_n, std::move(tally));
}

VerificationReport suite_lyndon_extension(std::size_t max_n, unsigned threads) {
    Tally tally;
    for (std::size_t n = 2; n <= max_n; ++n) {
        tally.merge(scan_length<Tally>(n, threads, [](const Word& w, Tally& t) {
            for (Order o : {Order::zero_first, Order::one_first}) {
                if (!is_lyndon(w, o)) continue;
                const char big = o == Order::zero_first ? '1' : '0';
                const char small = o == Order::zero_first ? '0' : '1';
                for (std::size_t len = 2; len <= w.size(); ++len) {
                    if (w[len - 1] != big) continue;
                    const Word head = w.prefix(len - 1);  // z^k z'
                    const Word z = periodic_root(head);
                    const std::size_t rest = head.size() % z.size();
                    // premise: z' followed by the small letter is a prefix of z
                    if (z[rest] != small) continue;
                    ++t.items;
                    if (!is_lyndon(w.prefix(len), o))
                        t.fail({w.str() + " prefix_len=" + std::to_string(len),
                                "extension not Lyndon under " +
                                    std::string(order_name(o)),
                                "Lyndon extension"});
                }
            }
        }));
    }
    return make_report("lyndon_extension", max_n, std::move(tally));
}

VerificationReport suite_unique_cyclic_occurrence(std::size_t max_n, unsigned threads) {
    Tally tally;
    for (std::size_t n = 2; n <= max_n; ++n) {
        tally.merge(scan_length<Tally>(n, threads, [](const Word& w, Tally& t) {
            for (std::size_t cut = 1; cut < w.size(); ++cut) {
                const Word u = w.prefix(cut);
                const Word vu = conjugate_at(w, cut);
                const bool opposite =
                    (is_lyndon(w, Order::zero_first) && is_lyndon(vu, Order::one_first)) ||
                    (is_lyndon(w, Order::one_first) && is_lyndon(vu, Order::zero_first));
                if (!opposite) continue;
                ++t.items;
                const auto occs = cyclic_occurrences(u, w);
                if (occs.size() != 1 || occs[0] != 0)
                    t.fail({"u=" + u.str() + " uv=" + w.str(),
                            std::to_string(occs.size()) + " cyclic occurrences",
                            "only the occurrence at 0"});
            }
        }));
    }
    return make_report("unique_cyclic_occurrence", max_n, std::move(tally));
}

VerificationReport suite_two_unbordered_minimum(std::size_t max_n, unsigned threads) {
    Tally tally;
    for (std::size_t n = 2; n <= max_n; ++n) {
        tally.merge(scan_length<Tally>(n, threads, [](const Word& w, Tally& t) {
            if (!w.has_both_letters() || !is_primitive(w)) return;
            ++t.items;
            if (unbordered_conjugate_count(w) < 2)
                t.fail({w.str(), "fewer than two unbordered conjugates", "at least two"});
            for (Order o : {Order::zero_first, Order::one_first}) {
                if (!is_unbordered(lyndon_conjugate(w, o)))
                    t.fail({w.str(), "Lyndon conjugate under " +
                                         std::string(order_name(o)) + " is bordered",
                            "unbordered Lyndon conjugate"});
            }
        }));
    }
    return make_report("two_unbordered_minimum", max_n, std::move(tally));
}

// Lemma: the four words built from a fully bordered pair are Lyndon words,
// each under exactly one order.
VerificationReport suite_pair_lyndon(const std::vector<FBPair>& pairs, std::size_t bound) {
    Tally tally;
    for (const FBPair& p : pairs) {
        ++tally.items;
        const Word words[4] = {p.u + p.v, p.v + p.u, p.u.reversed() + p.v.reversed(),
                               p.v.reversed() + p.u.reversed()};
        for (const Word& w : words) {
            const int orders = int(is_lyndon(w, Order::zero_first)) +
                               int(is_lyndon(w, Order::one_first));
            if (orders != 1)
                tally.fail({pair_text(p.u, p.v) + " word=" + w.str(),
                            "Lyndon under " + std::to_string(orders) + " orders",
                            "Lyndon under exactly one order"});
        }
    }
    return make_report("pair_lyndon", bound, std::move(tally));
}

VerificationReport suite_pair_root_lyndon(const std::vector<FBPair>& pairs,
                                          std::size_t bound) {
    Tally tally;
    for (const FBPair& p : pairs) {
        ++tally.items;
        const Word uv = p.u + p.v;
        const Order o = is_lyndon(uv, Order::zero_first) ? Order::zero_first
                                                         : Order::one_first;
        const RootDecomposition rd = root_decomposition(p.u);
        if (!is_lyndon(rd.s + rd.t, o))
            tally.fail({pair_text(p.u, p.v),
                        "s_u t_u = " + (rd.s + rd.t).str() + " not Lyndon under uv's order",
                        "Lyndon s_u t_u"});
        const Word rev = (rd.t + rd.s).reversed();
        if (!is_lyndon(rev, Order::zero_first) && !is_lyndon(rev, Order::one_first))
            tally.fail({pair_text(p.u, p.v),
                        "(t_u s_u)^R = " + rev.str() + " not Lyndon under either order",
                        "Lyndon (t_u s_u)^R"});
    }
    return make_report("pair_root_lyndon", bound, std::move(tally));
}

// Lemma: dropping one period from a power keeps s and t.
VerificationReport suite_pair_power_root(const std::vector<FBPair>& pairs,
                                         std::size_t bound) {
    Tally tally;
    for (const FBPair& p : pairs) {
        const RootDecomposition rd = root_decomposition(p.u);
        if (rd.k <= 1) continue;
        ++tally.items;
        const Word shorter = p.u.suffix(p.u.size() - rd.s.size() - rd.t.size());
        const RootDecomposition rd2 = root_decomposition(shorter);
        if (rd2.s != rd.s || rd2.t != rd.t)
            tally.fail({pair_text(p.u, p.v),
                        "u' = " + shorter.str() + " decomposes as (" + rd2.s.str() + "," +
                            rd2.t.str() + ")",
                        "(" + rd.s.str() + "," + rd.t.str() + ")"});
    }
    return make_report("pair_power_root", bound, std::move(tally));
}

VerificationReport suite_f_properties(std::size_t bound) {
    Tally tally;
    for (const FMember& m : generate_f(bound)) {
        ++tally.items;
        const std::string text = pair_text(m.u, m.v);
        if (!is_unbordered(m.u + m.v) || !is_unbordered(m.v + m.u))
            tally.fail({text, "uv or vu bordered", "both unbordered"});
        const RootDecomposition ru = root_decomposition(m.u);
        if (!ru.t.empty() && !(m.v.starts_with(ru.t) && m.v.ends_with(ru.t)))
            tally.fail({text, "t_u not a prefix and suffix of v", "t_u bordering v"});
        const std::size_t tv = root_decomposition(m.v).t.size();
        for (std::size_t len : border_lengths(m.u)) {
            if (len <= tv) continue;
            const Word y = m.u.prefix(len);
            if (!is_fb_pair(y, m.v))
                tally.fail({text + " y=" + y.str(), "(y,v) fails the census",
                            "(y,v) fully bordered"});
        }
        if (ru.t.empty()) {
            if (ru.s.size() != 1)
                tally.fail({text, "t_u empty but |s_u| = " + std::to_string(ru.s.size()),
                            "|s_u| = 1"});
        } else if (!is_fb_pair(ru.s, ru.t)) {
            tally.fail({text, "(s_u,t_u) fails the census", "(s_u,t_u) fully bordered"});
        }
    }
    return make_report("f_properties", bound, std::move(tally));
}

}  // namespace

std::vector<VerificationReport> verify_lemma_suites(std::size_t words_max_n,
                                                    std::size_t pairs_max_n,
                                                    unsigned threads) {
    if (words_max_n < 2 || pairs_max_n < 2)
        throw std::invalid_argument("verify_lemma_suites: bounds must be at least 2");

    std::vector<VerificationReport> out;
    out.push_back(suite_lyndon_unbordered(words_max_n, threads));
    out.push_back(suite_lyndon_prefix_root(words_max_n, threads));
    out.push_back(suite_lyndon_extension(words_max_n, threads));
    out.push_back(suite_unique_cyclic_occurrence(words_max_n, threads));
    out.push_back(suite_two_unbordered_minimum(words_max_n, threads));

    const std::vector<FBPair> pairs = all_fb_pairs(pairs_max_n, threads);
    out.push_back(suite_pair_lyndon(pairs, pairs_max_n));
    out.push_back(suite_pair_root_lyndon(pairs, pairs_max_n));
    out.push_back(suite_pair_power_root(pairs, pairs_max_n));
    out.push_back(suite_f_properties(pairs_max_n));
    return out;
}

VerificationReport verify_descent(std::size_t max_n, unsigned threads) {
    if (max_n <= 2)
        throw std::invalid_argument("verify_descent: bound must exceed 2");

    const std::vector<FBPair> pairs = all_fb_pairs(max_n, threads);
    std::set<FBPair> oriented;
    for (const FBPair& p : pairs)
        oriented.insert(p.v.size() > p.u.size() ? FBPair{p.v, p.u} : p);

    Tally tally;
    std::size_t shrink_u_count = 0;
    std::size_t shrink_v_count = 0;
    std::size_t base_pairs = 0;
    std::vector<FBPair> shrink_v_pairs;

    for (const FBPair& p : oriented) {
        if (p.u.size() + p.v.size() <= 2) {
            ++base_pairs;
            continue;
        }
        ++tally.items;
        try {
            const DescentResult d = descend(p.u, p.v);
            if (d.kind == DescentResult::Case::shrink_v) {
                ++shrink_v_count;
                shrink_v_pairs.push_back(p);
            } else {
                ++shrink_u_count;
            }
            if (d.next_u.size() + d.next_v.size() >= p.u.size() + p.v.size())
                tally.fail({pair_text(p.u, p.v), "descent did not shorten the pair",
                            "strictly shorter pair"});
            else if (!is_fb_pair(d.next_u, d.next_v))
                tally.fail({pair_text(p.u, p.v),
                            "descended pair " + pair_text(d.next_u, d.next_v) +
                                " fails the census",
                            "fully bordered pair"});
        } catch (const std::exception& e) {
            tally.fail({pair_text(p.u, p.v), std::string("descend threw: ") + e.what(),
                        "successful descent"});
        }
    }

    // Trace replay over every pair, both orientations.
    for (const FBPair& p : pairs) {
        ++tally.items;
        try {
            const DerivationTrace t = derive_trace(p.u, p.v);
            if (t.replay() != WordPair{p.u, p.v})
                tally.fail({pair_text(p.u, p.v), "trace replay diverged",
                            "replay reproduces the pair"});
        } catch (const std::exception& e) {
            tally.fail({pair_text(p.u, p.v), std::string("derive_trace threw: ") + e.what(),
                        "replayable trace"});
        }
    }

    std::vector<std::string> notes;
    notes.push_back("case_shrink_u=" + std::to_string(shrink_u_count));
    notes.push_back("case_shrink_v=" + std::to_string(shrink_v_count));
    notes.push_back("base_pairs_skipped=" + std::to_string(base_pairs));
    if (shrink_v_pairs.empty()) {
        notes.push_back("no shrink_v instance within bound (reported, not failed)");
    } else {
        const FBPair first = *std::min_element(shrink_v_pairs.begin(),
                                               shrink_v_pairs.end(), pair_order);
        notes.push_back("first_shrink_v_pair=" + pair_text(first.u, first.v));
    }
    return make_report("descent", max_n, std::move(tally), std::move(notes));
}

VerificationReport verify_oracle_equivalence(std::size_t exhaustive_max_n,
                                             std::size_t random_count,
                                             std::size_t random_max_len,
                                             unsigned threads) {
    Tally tally;
    auto check = [](const Word& w, Tally& t) {
        ++t.items;
        if (borders(w) != naive_borders(w))
            t.fail({w.str(), "border-chain borders disagree", "naive border list"});
        if (period(w) != naive_period(w))
            t.fail({w.str(), "period " + std::to_string(period(w)),
                    std::to_string(naive_period(w))});
        if (is_unbordered(w) != naive_is_unbordered(w))
            t.fail({w.str(), "unborderedness disagrees", "naive scan"});
    };

    for (std::size_t n = 1; n <= exhaustive_max_n; ++n)
        tally.merge(scan_length<Tally>(n, threads, check));

    // Fixed-seed pseudorandom words; mt19937's output sequence is pinned by
    // the standard, so this set is identical everywhere.
    std::mt19937 rng(0x5eedu);
    for (std::size_t i = 0; i < random_count; ++i) {
        const std::size_t len = 1 + rng() % random_max_len;
        std::string bits(len, '0');
        for (auto& c : bits)
            if (rng() & 1) c = '1';
        check(Word::parse(bits), tally);
    }

    std::vector<std::string> notes{"random_words=" + std::to_string(random_count) +
                                   " max_len=" + std::to_string(random_max_len)};
    return make_report("oracle_equivalence", exhaustive_max_n, std::move(tally),
                       std::move(notes));
}

}  // namespace fbw::harness

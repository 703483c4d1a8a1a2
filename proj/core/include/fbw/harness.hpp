// Exhaustive verification harness: naive oracles independent of the fast
// border machinery, census tables over all binary words up to a bound, and
// the verification suites for every structural statement the library
// implements. Suites fan out over fixed word-space shards and merge results
// in shard order, so reports are byte-identical for any thread count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fbw/fully_bordered.hpp"
#include "fbw/word.hpp"

namespace fbw::harness {

// The word of length n whose letters are the binary digits of index,
// most significant first; index runs over [0, 2^n).
Word word_at_index(std::size_t n, std::uint64_t index);

// All 2^n words of length n in ascending order (the 0<1 lexicographic
// order). Materializes the list; bounded to n <= 22.
std::vector<Word> enumerate_words(std::size_t n);

// Direct quadratic definitions, kept independent of the border-chain
// implementations they cross-check.
bool naive_is_unbordered(const Word& w);
std::vector<Word> naive_borders(const Word& w);
std::size_t naive_period(const Word& w);

// Aggregate facts about all words of one length.
struct CensusRow {
    std::size_t n = 0;
    std::size_t fb_words = 0;    // words with exactly two unbordered conjugates
    std::size_t fb_classes = 0;  // conjugacy classes of such words
    std::size_t f_pairs = 0;     // distinct pairs (u, v) with |uv| = n
    std::map<std::size_t, std::size_t> unbordered_histogram;  // count -> words
};

// One row per length in [2, max_n], each computed by full enumeration.
// Requires 2 <= max_n <= 22. threads = 0 means all available.
std::vector<CensusRow> census_table(std::size_t max_n, unsigned threads = 0);

// Golden-file rendering: one line per row,
//   "n fb_words fb_classes f_pairs k:v k:v ..."
// with histogram keys ascending and only nonzero counts listed.
std::string format_census_rows(const std::vector<CensusRow>& rows);

// Every fully bordered pair with |uv| <= max_total_length, found by running
// the census over all words and deduplicating; sorted by |uv|, then uv,
// then u (the generation order).
std::vector<FBPair> all_fb_pairs(std::size_t max_total_length, unsigned threads = 0);

struct Failure {
    std::string input;
    std::string observed;
    std::string expected;
};

struct VerificationReport {
    std::string suite;
    std::size_t bound = 0;
    std::size_t items_checked = 0;
    std::size_t failure_count = 0;
    std::vector<Failure> sample_failures;  // at most kFailureSampleCap kept
    std::vector<std::string> notes;

    bool passed() const { return failure_count == 0; }
};

inline constexpr std::size_t kFailureSampleCap = 10;

// Stable one-record-per-line rendering used by the CLI and the golden
// comparisons; contains no timing or host information.
std::string format_report(const VerificationReport& report);
std::string format_reports(const std::vector<VerificationReport>& reports);

// Main equivalence: a word with 2 <= |w| <= max_n is fully bordered exactly
// when its pair is generated, and every generated pair passes the census.
VerificationReport verify_theorem_main(std::size_t max_n, unsigned threads = 0);

// Every fully bordered pair with |uv| <= max_n has palindromic components
// and |u| is a two-palindrome split point of uv.
VerificationReport verify_palindrome_theorem(std::size_t max_n, unsigned threads = 0);

// The per-lemma suites. words_max_n bounds the all-word suites, pairs_max_n
// the suites quantified over fully bordered pairs / generated members.
std::vector<VerificationReport> verify_lemma_suites(std::size_t words_max_n = 14,
                                                    std::size_t pairs_max_n = 18,
                                                    unsigned threads = 0);

// Every fully bordered pair with 2 < |uv| <= max_n, oriented |v| <= |u|,
// descends to a strictly shorter census-certified pair, and every pair's
// derivation trace replays to the pair itself. Case counts are reported.
VerificationReport verify_descent(std::size_t max_n, unsigned threads = 0);

// Fast border/period/unborderedness agree with the naive quadratic oracles
// on all words up to exhaustive_max_n and on random_count pseudorandom words
// of length <= random_max_len (fixed seed).
VerificationReport verify_oracle_equivalence(std::size_t exhaustive_max_n = 12,
                                             std::size_t random_count = 10000,
                                             std::size_t random_max_len = 64,
                                             unsigned threads = 0);

}  // namespace fbw::harness

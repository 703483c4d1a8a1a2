#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fbw/harness.hpp"
#include "fbw/word.hpp"

using namespace fbw;
using harness::enumerate_words;

namespace {

Word W(const char* text) { return Word::parse(text); }

std::vector<std::size_t> lengths_of(const std::vector<Word>& words) {
    std::vector<std::size_t> out;
    for (const Word& w : words) out.push_back(w.size());
    return out;
}

// direct-definition oracle: primitive iff no divisor length repeats
bool naive_is_primitive(const Word& w) {
    for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < w.size() && repeats; ++i)
            repeats = w[i] == w[i - d];
        if (repeats) return false;
    }
    return true;
}

// direct-definition oracle: minimal among materialized conjugates
bool naive_is_lyndon(const Word& w, Order o) {
    if (!naive_is_primitive(w)) return false;
    for (std::size_t m = 1; m < w.size(); ++m)
        if (!lex_less(w, conjugate_at(w, m), o)) return false;
    return true;
}

}  // namespace

TEST_CASE("parse and textual form") {
    CHECK(W("00101").str() == "00101");
    CHECK(W("").empty());
    CHECK(W("0").size() == 1);
    CHECK_THROWS_AS(Word::parse("00x1"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("2"), std::invalid_argument);
    CHECK(W("01") + W("10") == W("0110"));
    CHECK(W("0110").reversed() == W("0110"));
    CHECK(W("001").reversed() == W("100"));
}

TEST_CASE("word accessors and bounds") {
    const Word w = W("0110");
    CHECK(w.prefix(2) == W("01"));
    CHECK(w.suffix(3) == W("110"));
    CHECK(w.factor(1, 2) == W("11"));
    CHECK(w.at(0) == '0');
    CHECK_THROWS_AS(w.at(4), std::out_of_range);
    CHECK_THROWS_AS(w.prefix(5), std::out_of_range);
    CHECK_THROWS_AS(w.factor(3, 2), std::out_of_range);
    CHECK(w.starts_with(W("011")));
    CHECK(w.ends_with(W("10")));
    CHECK(w.contains(W("11")));
    CHECK_FALSE(w.contains(W("00")));
    CHECK(w.has_both_letters());
    CHECK_FALSE(W("000").has_both_letters());
}

TEST_CASE("lexicographic orders") {
    CHECK(lex_less(W("0"), W("1"), Order::zero_first));
    CHECK(lex_less(W("1"), W("0"), Order::one_first));
    CHECK(lex_less(W("01"), W("011"), Order::zero_first));  // proper prefix
    CHECK(lex_less(W("11"), W("110"), Order::one_first));
    CHECK_FALSE(lex_less(W("10"), W("01"), Order::zero_first));
    CHECK(lex_less(W("10"), W("01"), Order::one_first));
}

TEST_CASE("borders") {
    CHECK(borders(W("0")).empty());
    CHECK(borders(W("0101")) == std::vector<Word>{W("01")});
    CHECK(borders(W("00100")) == std::vector<Word>{W("0"), W("00")});
    CHECK_THROWS_AS(borders(W("")), std::invalid_argument);
    // borders longer than |w|/2 are included
    CHECK(borders(W("00000")) == std::vector<Word>{W("0"), W("00"), W("000"), W("0000")});
}

TEST_CASE("shortest border") {
    CHECK_FALSE(shortest_border(W("001")).has_value());
    CHECK(shortest_border(W("010")) == W("0"));
    CHECK_FALSE(shortest_border(W("1100")).has_value());
    CHECK_THROWS_AS(shortest_border(W("")), std::invalid_argument);
}

TEST_CASE("period") {
    CHECK(period(W("0101")) == 2);
    CHECK(period(W("001")) == 3);
    CHECK(period(W("010010")) == 3);
    CHECK_THROWS_AS(period(W("")), std::invalid_argument);
}

TEST_CASE("period equals length minus longest border, exhaustively") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const Word& w : enumerate_words(n)) {
            const auto bl = border_lengths(w);
            const std::size_t longest = bl.empty() ? 0 : bl.back();
            CHECK(period(w) == w.size() - longest);
            CHECK(is_unbordered(w) == bl.empty());
            CHECK((period(w) == w.size()) == bl.empty());
        }
    }
}

TEST_CASE("root decomposition examples") {
    const RootDecomposition a = root_decomposition(W("0010"));
    CHECK(a.s == W("0"));
    CHECK(a.t == W("01"));
    CHECK(a.k == 1);

    const RootDecomposition b = root_decomposition(W("010010"));
    CHECK(b.s == W("010"));
    CHECK(b.t == W(""));
    CHECK(b.k == 1);

    const RootDecomposition c = root_decomposition(W("001"));
    CHECK(c.s == W("001"));
    CHECK(c.t == W(""));
    CHECK(c.k == 0);

    CHECK_THROWS_AS(root_decomposition(W("")), std::invalid_argument);
}

TEST_CASE("root decomposition invariants up to length 16") {
    for (std::size_t n = 1; n <= 16; ++n) {
        for (const Word& w : enumerate_words(n)) {
            const RootDecomposition rd = root_decomposition(w);
            REQUIRE_FALSE(rd.s.empty());
            REQUIRE(rd.reassemble() == w);
            const Word st = rd.root();
            REQUIRE((rd.s + rd.t).starts_with(rd.s));
            REQUIRE(st.size() == period(w));
            REQUIRE(is_primitive(st));
            REQUIRE((rd.k == 0) == is_unbordered(w));
        }
    }
}

TEST_CASE("primitivity") {
    CHECK_FALSE(is_primitive(W("0101")));
    CHECK(is_primitive(W("00101")));
    CHECK(is_primitive(W("0")));
    CHECK_THROWS_AS(is_primitive(W("")), std::invalid_argument);
    for (std::size_t n = 1; n <= 12; ++n)
        for (const Word& w : enumerate_words(n))
            CHECK(is_primitive(w) == naive_is_primitive(w));
}

TEST_CASE("conjugation") {
    CHECK(conjugate_at(W("00101"), 2) == W("10100"));
    CHECK(conjugate_at(W("01"), 1) == W("10"));
    CHECK(conjugate_at(W("0011"), 2) == W("1100"));
    CHECK(conjugate_at(W("0011"), 0) == W("0011"));
    CHECK_THROWS_AS(conjugate_at(W("01"), 2), std::out_of_range);
    CHECK_THROWS_AS(conjugate_at(W(""), 0), std::out_of_range);
}

TEST_CASE("conjugate unborderedness matches the materialized rotation") {
    for (std::size_t n = 1; n <= 10; ++n)
        for (const Word& w : enumerate_words(n))
            for (std::size_t m = 0; m < n; ++m)
                CHECK(conjugate_is_unbordered(w, m) ==
                      harness::naive_is_unbordered(conjugate_at(w, m)));
}

TEST_CASE("lyndon tests") {
    CHECK(is_lyndon(W("001"), Order::zero_first));
    CHECK(is_lyndon(W("110"), Order::one_first));
    CHECK_FALSE(is_lyndon(W("0101"), Order::zero_first));
    CHECK_THROWS_AS(is_lyndon(W(""), Order::zero_first), std::invalid_argument);
    for (std::size_t n = 1; n <= 10; ++n)
        for (const Word& w : enumerate_words(n))
            for (Order o : {Order::zero_first, Order::one_first})
                CHECK(is_lyndon(w, o) == naive_is_lyndon(w, o));
}

TEST_CASE("lyndon conjugate") {
    CHECK(lyndon_conjugate(W("100"), Order::zero_first) == W("001"));
    CHECK(lyndon_conjugate(W("100"), Order::one_first) == W("100"));
    CHECK(lyndon_conjugate(W("0"), Order::zero_first) == W("0"));
    CHECK_THROWS_AS(lyndon_conjugate(W("0101"), Order::zero_first), std::invalid_argument);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const Word& w : enumerate_words(n)) {
            if (!is_primitive(w)) continue;
            for (Order o : {Order::zero_first, Order::one_first}) {
                const Word lc = lyndon_conjugate(w, o);
                CHECK(is_lyndon(lc, o));
            }
        }
    }
}

TEST_CASE("local roots") {
    const LocalRoot a = local_root(W("0011"), 1);
    CHECK(a.root == W("0"));
    CHECK_FALSE(a.trivial);

    const LocalRoot b = local_root(W("0011"), 2);
    CHECK(b.root == W("1100"));
    CHECK(b.trivial);

    const LocalRoot c = local_root(W("00101"), 0);
    CHECK(c.root == W("00101"));
    CHECK(c.trivial);

    CHECK_THROWS_AS(local_root(W("01"), 2), std::out_of_range);
}

TEST_CASE("local root invariants up to length 16") {
    for (std::size_t n = 1; n <= 16; ++n) {
        for (const Word& w : enumerate_words(n)) {
            const bool primitive = is_primitive(w);
            for (std::size_t m = 0; m < n; ++m) {
                const LocalRoot lr = local_root(w, m);
                REQUIRE(is_unbordered(lr.root));
                REQUIRE(lr.trivial == (lr.root.size() == n));
                if (primitive)
                    REQUIRE((2 * lr.root.size() < n || lr.root.size() == n));
            }
        }
    }
}

TEST_CASE("palindromes") {
    CHECK(is_palindrome(W("")));
    CHECK(is_palindrome(W("00100")));
    CHECK_FALSE(is_palindrome(W("001")));
}

TEST_CASE("cyclic occurrences") {
    CHECK(cyclic_occurrences(W("0"), W("0010")) == std::vector<std::size_t>{0, 1, 3});
    CHECK(cyclic_occurrences(W("01"), W("01")) == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(cyclic_occurrences(W(""), W("01")), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_occurrences(W("010"), W("01")), std::invalid_argument);

    // resolved against the rotation-scan oracle: only the rotation at 0 of
    // 0011 starts with 00
    std::vector<std::size_t> oracle;
    const Word w = W("0011");
    for (std::size_t m = 0; m < w.size(); ++m)
        if (conjugate_at(w, m).starts_with(W("00"))) oracle.push_back(m);
    CHECK(cyclic_occurrences(W("00"), w) == oracle);
    CHECK(oracle == std::vector<std::size_t>{0});
}

TEST_CASE("two-palindrome splits") {
    const auto splits = two_palindrome_splits(W("00101"));
    CHECK(std::find(splits.begin(), splits.end(), 2) != splits.end());

    // resolved against the split-scan oracle: 0|1 is the only split of 01
    CHECK(two_palindrome_splits(W("01")) == std::vector<std::size_t>{1});
    CHECK(two_palindrome_splits(W("0")) == std::vector<std::size_t>{0, 1});
    CHECK(two_palindrome_splits(W("")) == std::vector<std::size_t>{0});
}

TEST_CASE("spot-check border machinery against the naive oracles") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const Word& w : enumerate_words(n)) {
            CHECK(borders(w) == harness::naive_borders(w));
            CHECK(period(w) == harness::naive_period(w));
            CHECK(lengths_of(borders(w)) == border_lengths(w));
        }
    }
}

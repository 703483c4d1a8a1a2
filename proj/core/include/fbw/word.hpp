// Binary words and the basic border/period machinery: borders, periods,
// periodic roots, primitivity, conjugation, the two lexicographic orders,
// Lyndon tests, local periodic roots, palindromes and cyclic occurrences.
//
// All types are immutable values and all operations are pure; everything here
// is safe to use from concurrent workers without coordination.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fbw {

// The two lexicographic orders on binary words: zero_first compares with
// 0 < 1, one_first with 1 < 0.
enum class Order { zero_first, one_first };

std::string_view order_name(Order o);

// An immutable word over the alphabet {0,1}. Textual form is a string of the
// ASCII characters '0' and '1'; the empty string denotes the empty word.
class Word {
public:
    Word() = default;

    // Parses a textual word. Any character other than '0' or '1' is a parse
    // error (std::invalid_argument).
    static Word parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    // Letter at position i as '0' or '1'. Bounds-checked.
    char at(std::size_t i) const;
    char operator[](std::size_t i) const { return bits_[i]; }

    const std::string& str() const { return bits_; }

    Word reversed() const;
    Word prefix(std::size_t len) const;
    Word suffix(std::size_t len) const;
    Word factor(std::size_t pos, std::size_t len) const;

    bool starts_with(const Word& p) const;
    bool ends_with(const Word& s) const;
    bool contains(const Word& f) const;  // factor (contiguous) containment
    bool has_both_letters() const;

    friend Word operator+(const Word& a, const Word& b);

    // Representational order (plain string comparison); use lex_less for the
    // two word orders.
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    explicit Word(std::string bits) : bits_(std::move(bits)) {}
    std::string bits_;
};

// a < b in the lexicographic order o.
bool lex_less(const Word& a, const Word& b, Order o);

// Lengths of all borders of w (nonempty proper prefixes that are also
// suffixes), ascending. Empty iff w is unbordered. Computed by following the
// longest-border chain; the naive all-pairs scan lives in the harness as the
// test oracle. Rejects the empty word.
std::vector<std::size_t> border_lengths(const Word& w);

// All borders of w as words, sorted by increasing length.
std::vector<Word> borders(const Word& w);

// The shortest border of w, or nullopt when w is unbordered.
std::optional<Word> shortest_border(const Word& w);

bool is_unbordered(const Word& w);

// The smallest period of w; equals |w| - |longest border|, and equals |w|
// exactly when w is unbordered.
std::size_t period(const Word& w);

// The prefix of w whose length is the period of w. Always primitive.
Word periodic_root(const Word& w);

// w = (s t)^k s with s nonempty, s a prefix of s·t, and s·t the periodic
// root of w. k = 0 exactly when w is unbordered.
struct RootDecomposition {
    Word s;
    Word t;  // may be empty
    std::size_t k = 0;

    Word root() const { return s + t; }
    Word reassemble() const;
};

RootDecomposition root_decomposition(const Word& w);

// True iff w is not a proper integer power of a shorter word.
bool is_primitive(const Word& w);

// The conjugate z^{-1} w z where z is the prefix of w of length m, i.e. the
// rotation moving the length-m prefix to the end. Requires 0 <= m < |w|.
Word conjugate_at(const Word& w, std::size_t m);

// Equivalent to is_unbordered(conjugate_at(w, m)) without materializing the
// rotation; this is the hot primitive behind the conjugate census.
bool conjugate_is_unbordered(const Word& w, std::size_t m);

// True iff w is primitive and strictly minimal under o among its conjugates.
bool is_lyndon(const Word& w, Order o);

// The unique conjugate of w that is Lyndon under o. Requires w primitive.
Word lyndon_conjugate(const Word& w, Order o);

// The local periodic root of w at point m: the shortest border of the
// conjugate at m, or that conjugate itself when it is unbordered (then the
// local period is trivial). The root is always unbordered, and for primitive
// w its length is either less than |w|/2 or exactly |w|.
struct LocalRoot {
    std::size_t point = 0;
    Word root;
    bool trivial = false;
};

LocalRoot local_root(const Word& w, std::size_t m);

// True iff w equals its reversal. The empty word is a palindrome.
bool is_palindrome(const Word& w);

// All points m with 0 <= m < |w| such that u is a prefix of the conjugate of
// w at m, ascending. Requires u nonempty and |u| <= |w|.
std::vector<std::size_t> cyclic_occurrences(const Word& u, const Word& w);

// All split indices i with 0 <= i <= |w| such that both the prefix of length
// i and the remaining suffix are palindromes (the empty factor counts).
std::vector<std::size_t> two_palindrome_splits(const Word& w);

}  // namespace fbw

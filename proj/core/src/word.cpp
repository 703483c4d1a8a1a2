#include "fbw/word.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace fbw {

namespace {

// Prefix function (longest proper border of every prefix).
std::vector<std::uint32_t> prefix_function(std::string_view s) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::uint32_t k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) k = pi[k - 1];
        if (s[i] == s[k]) ++k;
        pi[i] = k;
    }
    return pi;
}

void require_nonempty(const Word& w, const char* op) {
    if (w.empty()) throw std::invalid_argument(std::string(op) + ": empty word");
}

bool palindrome_range(std::string_view s, std::size_t lo, std::size_t hi) {
    while (lo + 1 < hi) {
        if (s[lo] != s[hi - 1]) return false;
        ++lo;
        --hi;
    }
    return true;
}

}  // namespace

std::string_view order_name(Order o) {
    return o == Order::zero_first ? "0<1" : "1<0";
}

Word Word::parse(std::string_view text) {
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("word may contain only '0' and '1'");
    }
    return Word(std::string(text));
}

char Word::at(std::size_t i) const {
    if (i >= bits_.size()) throw std::out_of_range("letter index out of range");
    return bits_[i];
}

Word Word::reversed() const {
    return Word(std::string(bits_.rbegin(), bits_.rend()));
}

Word Word::prefix(std::size_t len) const {
    if (len > bits_.size()) throw std::out_of_range("prefix longer than word");
    return Word(bits_.substr(0, len));
}

Word Word::suffix(std::size_t len) const {
    if (len > bits_.size()) throw std::out_of_range("suffix longer than word");
    return Word(bits_.substr(bits_.size() - len));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
    if (pos > bits_.size() || len > bits_.size() - pos)
        throw std::out_of_range("factor out of range");
    return Word(bits_.substr(pos, len));
}

bool Word::starts_with(const Word& p) const {
    return bits_.size() >= p.bits_.size() &&
           bits_.compare(0, p.bits_.size(), p.bits_) == 0;
}

bool Word::ends_with(const Word& s) const {
    return bits_.size() >= s.bits_.size() &&
           bits_.compare(bits_.size() - s.bits_.size(), s.bits_.size(), s.bits_) == 0;
}

bool Word::contains(const Word& f) const {
    return bits_.find(f.bits_) != std::string::npos;
}

bool Word::has_both_letters() const {
    return bits_.find('0') != std::string::npos && bits_.find('1') != std::string::npos;
}

Word operator+(const Word& a, const Word& b) {
    return Word(a.bits_ + b.bits_);
}

bool lex_less(const Word& a, const Word& b, Order o) {
    if (o == Order::zero_first) return a.str() < b.str();
    return std::lexicographical_compare(a.str().begin(), a.str().end(),
                                        b.str().begin(), b.str().end(),
                                        [](char x, char y) { return x > y; });
}

std::vector<std::size_t> border_lengths(const Word& w) {
    require_nonempty(w, "border_lengths");
    const auto pi = prefix_function(w.str());
    std::vector<std::size_t> lengths;
    for (std::size_t len = pi.back(); len > 0; len = pi[len - 1])
        lengths.push_back(len);
    std::reverse(lengths.begin(), lengths.end());
    return lengths;
}

std::vector<Word> borders(const Word& w) {
    std::vector<Word> out;
    for (std::size_t len : border_lengths(w)) out.push_back(w.prefix(len));
    return out;
}

std::optional<Word> shortest_border(const Word& w) {
    require_nonempty(w, "shortest_border");
    const auto pi = prefix_function(w.str());
    std::size_t len = pi.back();
    if (len == 0) return std::nullopt;
    while (pi[len - 1] > 0) len = pi[len - 1];
    return w.prefix(len);
}

bool is_unbordered(const Word& w) {
    require_nonempty(w, "is_unbordered");
    return prefix_function(w.str()).back() == 0;
}

std::size_t period(const Word& w) {
    require_nonempty(w, "period");
    return w.size() - prefix_function(w.str()).back();
}

Word periodic_root(const Word& w) {
    return w.prefix(period(w));
}

Word RootDecomposition::reassemble() const {
    Word st = s + t;
    Word out;
    for (std::size_t i = 0; i < k; ++i) out = out + st;
    return out + s;
}

RootDecomposition root_decomposition(const Word& w) {
    require_nonempty(w, "root_decomposition");
    const std::size_t n = w.size();
    const std::size_t p = period(w);
    const Word z = w.prefix(p);
    if (n % p == 0) {
        // w is an exact power z^k: s = z, t empty, exponent dropped by one so
        // that s stays nonempty.
        return RootDecomposition{z, Word(), n / p - 1};
    }
    const std::size_t rest = n % p;
    return RootDecomposition{w.prefix(rest), z.factor(rest, p - rest), n / p};
}

bool is_primitive(const Word& w) {
    require_nonempty(w, "is_primitive");
    const std::size_t p = period(w);
    return p == w.size() || w.size() % p != 0;
}

Word conjugate_at(const Word& w, std::size_t m) {
    if (m >= w.size()) throw std::out_of_range("rotation point out of range");
    if (m == 0) return w;
    return w.suffix(w.size() - m) + w.prefix(m);
}

bool conjugate_is_unbordered(const Word& w, std::size_t m) {
    if (m >= w.size()) throw std::out_of_range("rotation point out of range");
    const std::string_view bits = w.str();
    const std::size_t n = bits.size();
    thread_local std::string rot;
    rot.assign(bits.data() + m, n - m);
    rot.append(bits.data(), m);
    thread_local std::vector<std::uint32_t> pi;
    pi.assign(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::uint32_t k = pi[i - 1];
        while (k > 0 && rot[i] != rot[k]) k = pi[k - 1];
        if (rot[i] == rot[k]) ++k;
        pi[i] = k;
    }
    return pi[n - 1] == 0;
}

namespace {

// rotation a of w strictly precedes rotation b under o
bool rotation_less(const Word& w, std::size_t a, std::size_t b, Order o) {
    const std::string_view s = w.str();
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        const char x = s[(a + i) % n];
        const char y = s[(b + i) % n];
        if (x != y) return o == Order::zero_first ? x < y : x > y;
    }
    return false;
}

}  // namespace

bool is_lyndon(const Word& w, Order o) {
    require_nonempty(w, "is_lyndon");
    // Strict minimality among all conjugates implies primitivity: an
    // imprimitive word equals one of its nontrivial rotations.
    for (std::size_t m = 1; m < w.size(); ++m)
        if (!rotation_less(w, 0, m, o)) return false;
    return true;
}

Word lyndon_conjugate(const Word& w, Order o) {
    require_nonempty(w, "lyndon_conjugate");
    if (!is_primitive(w))
        throw std::invalid_argument("lyndon_conjugate: word is not primitive");
    std::size_t best = 0;
    for (std::size_t m = 1; m < w.size(); ++m)
        if (rotation_less(w, m, best, o)) best = m;
    return conjugate_at(w, best);
}

LocalRoot local_root(const Word& w, std::size_t m) {
    Word conj = conjugate_at(w, m);
    if (auto sb = shortest_border(conj)) return LocalRoot{m, *sb, false};
    return LocalRoot{m, std::move(conj), true};
}

bool is_palindrome(const Word& w) {
    return palindrome_range(w.str(), 0, w.size());
}

std::vector<std::size_t> cyclic_occurrences(const Word& u, const Word& w) {
    if (u.empty()) throw std::invalid_argument("cyclic_occurrences: empty pattern");
    if (u.size() > w.size())
        throw std::invalid_argument("cyclic_occurrences: pattern longer than word");
    const std::string_view p = u.str();
    const std::string_view s = w.str();
    const std::size_t n = s.size();
    std::vector<std::size_t> points;
    for (std::size_t m = 0; m < n; ++m) {
        bool match = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (s[(m + i) % n] != p[i]) {
                match = false;
                break;
            }
        }
        if (match) points.push_back(m);
    }
    return points;
}

std::vector<std::size_t> two_palindrome_splits(const Word& w) {
    const std::string_view s = w.str();
    std::vector<std::size_t> splits;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (palindrome_range(s, 0, i) && palindrome_range(s, i, s.size()))
            splits.push_back(i);
    return splits;
}

}  // namespace fbw

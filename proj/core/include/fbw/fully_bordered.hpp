// Fully bordered words: binary words of length > 1 with exactly two
// unbordered conjugates. This header carries the conjugate census, the fully
// bordered predicate and pair extraction, the inductive pair family F with
// its closure rules (swap, extend_u, extend_v), bounded generation with
// derivation traces, and the descent step that reduces a fully bordered pair
// to a strictly shorter one.
//
// The census (brute force over all conjugates) is the authoritative test;
// everything F- and descent-shaped is validated against it in the harness.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fbw/word.hpp"

namespace fbw {

// A word together with the sorted rotation points whose conjugates are
// unbordered. Imprimitive words (and single-letter powers) have none.
struct ConjugateCensus {
    Word word;
    std::vector<std::size_t> unbordered_points;
};

ConjugateCensus census(const Word& w);

// Number of unbordered conjugates of w; the allocation-free core of census.
std::size_t unbordered_conjugate_count(const Word& w);

// True iff |w| > 1 and w has exactly two unbordered conjugates.
bool is_fully_bordered(const Word& w);

// An ordered pair (u, v) such that uv and vu are the two unbordered
// conjugates of the fully bordered word uv.
struct FBPair {
    Word u;
    Word v;

    bool operator==(const FBPair&) const = default;
    auto operator<=>(const FBPair&) const = default;
};

// The pair carried by a fully bordered word: with m1 < m2 the two unbordered
// points, u and v split the conjugate at m1 so that |u| = m2 - m1. Returns
// nullopt when w is not fully bordered.
std::optional<FBPair> fb_pair_of(const Word& w);

// True iff uv is fully bordered with unbordered points exactly 0 and |u|.
bool is_fb_pair(const Word& u, const Word& v);

using WordPair = std::pair<Word, Word>;

WordPair swap_pair(const WordPair& p);

// (u, v) -> (s_u t_u u, v) where (s_u, t_u, k_u) = root_decomposition(u).
WordPair extend_u(const Word& u, const Word& v);

// (u, v) -> (u, v y v) for a border y of u with |t_v| < |y|.
// Violations of either side condition are rejected.
WordPair extend_v(const Word& u, const Word& v, const Word& y);

// One application of a closure rule. extend_v carries the border y it used.
struct DerivationStep {
    enum class Rule { base, swap, extend_u, extend_v };

    Rule rule = Rule::base;
    Word y;  // only meaningful for extend_v

    std::string to_string() const;
};

// A replayable derivation: applying steps in order to start yields end.
struct DerivationTrace {
    WordPair start;  // (0,1) or (1,0)
    std::vector<DerivationStep> steps;
    WordPair end;

    // Applies the steps to start and returns the resulting pair.
    WordPair replay() const;
};

struct FMember {
    Word u;
    Word v;
    DerivationTrace trace;
};

// All members (u, v) of the family F with |uv| <= max_total_length, computed
// by breadth-first closure from (0,1) and (1,0) under swap, extend_u and
// extend_v. Every rule preserves or strictly increases |uv|, so pruning at
// the bound keeps the closure complete. Members are sorted by |uv|, then by
// uv, then by u, and each carries the first derivation found in that order.
// Requires max_total_length >= 2.
std::vector<FMember> generate_f(std::size_t max_total_length);

// The reduction step: for a fully bordered pair (u, v) with |v| <= |u| and
// |uv| > 2, let u' = (s_u t_u)^{-1} u. Either (u', v) is fully bordered
// (shrink_u), or v splits exactly as v' u' v' and (u, v') is fully bordered
// (shrink_v, with witness = v').
struct DescentResult {
    enum class Case { shrink_u, shrink_v };

    Case kind = Case::shrink_u;
    Word next_u;
    Word next_v;
    Word stripped_u;  // u' = (s_u t_u)^{-1} u
    Word witness;     // v' for shrink_v, empty otherwise
};

DescentResult descend(const Word& u, const Word& v);

// A derivation of the fully bordered pair (u, v) from a base pair, obtained
// by iterating descend (swapping first whenever |v| > |u|) down to total
// length 2 and inverting each step into the closure rule it came from.
// Non fully bordered input is rejected.
DerivationTrace derive_trace(const Word& u, const Word& v);

// Decides membership of (u, v) in F for |uv| <= max_oracle_length via the
// census predicate, which the main equivalence makes authoritative.
bool f_membership(const Word& u, const Word& v, std::size_t max_oracle_length);

}  // namespace fbw

#include "fbw/fully_bordered.hpp"

#include <map>
#include <stdexcept>

namespace fbw {

ConjugateCensus census(const Word& w) {
    if (w.empty()) throw std::invalid_argument("census: empty word");
    ConjugateCensus out{w, {}};
    for (std::size_t m = 0; m < w.size(); ++m)
        if (conjugate_is_unbordered(w, m)) out.unbordered_points.push_back(m);
    return out;
}

std::size_t unbordered_conjugate_count(const Word& w) {
    if (w.empty()) throw std::invalid_argument("unbordered_conjugate_count: empty word");
    std::size_t count = 0;
    for (std::size_t m = 0; m < w.size(); ++m)
        if (conjugate_is_unbordered(w, m)) ++count;
    return count;
}

bool is_fully_bordered(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_fully_bordered: empty word");
    return w.size() > 1 && unbordered_conjugate_count(w) == 2;
}

std::optional<FBPair> fb_pair_of(const Word& w) {
    ConjugateCensus c = census(w);
    if (w.size() <= 1 || c.unbordered_points.size() != 2) return std::nullopt;
    const std::size_t m1 = c.unbordered_points[0];
    const std::size_t m2 = c.unbordered_points[1];
    const Word first = conjugate_at(w, m1);
    const std::size_t ulen = m2 - m1;
    return FBPair{first.prefix(ulen), first.suffix(w.size() - ulen)};
}

bool is_fb_pair(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("is_fb_pair: empty component");
    ConjugateCensus c = census(u + v);
    return c.unbordered_points.size() == 2 && c.unbordered_points[0] == 0 &&
           c.unbordered_points[1] == u.size();
}

WordPair swap_pair(const WordPair& p) {
    return {p.second, p.first};
}

WordPair extend_u(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("extend_u: empty component");
    const RootDecomposition rd = root_decomposition(u);
    return {rd.s + rd.t + u, v};
}

WordPair extend_v(const Word& u, const Word& v, const Word& y) {
    if (u.empty() || v.empty()) throw std::invalid_argument("extend_v: empty component");
    if (y.empty() || y.size() >= u.size() || !u.starts_with(y) || !u.ends_with(y))
        throw std::invalid_argument("extend_v: y is not a border of u");
    if (root_decomposition(v).t.size() >= y.size())
        throw std::invalid_argument("extend_v: |y| must exceed |t_v|");
    return {u, v + y + v};
}

std::string DerivationStep::to_string() const {
    switch (rule) {
        case Rule::base: return "base";
        case Rule::swap: return "swap";
        case Rule::extend_u: return "extend_u";
        case Rule::extend_v: return "extend_v(" + y.str() + ")";
    }
    return "?";
}

WordPair DerivationTrace::replay() const {
    WordPair p = start;
    for (const DerivationStep& step : steps) {
        switch (step.rule) {
            case DerivationStep::Rule::base:
                break;
            case DerivationStep::Rule::swap:
                p = swap_pair(p);
                break;
            case DerivationStep::Rule::extend_u:
                p = fbw::extend_u(p.first, p.second);
                break;
            case DerivationStep::Rule::extend_v:
                p = fbw::extend_v(p.first, p.second, step.y);
                break;
        }
    }
    return p;
}

namespace {

std::size_t pair_length(const WordPair& p) {
    return p.first.size() + p.second.size();
}

char concat_at(const WordPair& p, std::size_t i) {
    return i < p.first.size() ? p.first[i] : p.second[i - p.first.size()];
}

// Generation order: total length, then the concatenation uv, then u.
struct PairOrder {
    bool operator()(const WordPair& a, const WordPair& b) const {
        const std::size_t la = pair_length(a);
        const std::size_t lb = pair_length(b);
        if (la != lb) return la < lb;
        for (std::size_t i = 0; i < la; ++i) {
            const char x = concat_at(a, i);
            const char y = concat_at(b, i);
            if (x != y) return x < y;
        }
        return a.first.str() < b.first.str();
    }
};

}  // namespace

std::vector<FMember> generate_f(std::size_t max_total_length) {
    if (max_total_length < 2)
        throw std::invalid_argument("generate_f: bound must be at least 2");

    using Memo = std::map<WordPair, DerivationTrace, PairOrder>;
    Memo done;
    Memo pending;

    const Word zero = Word::parse("0");
    const Word one = Word::parse("1");
    pending.emplace(WordPair{zero, one}, DerivationTrace{{zero, one}, {}, {zero, one}});
    pending.emplace(WordPair{one, zero}, DerivationTrace{{one, zero}, {}, {one, zero}});

    auto discover = [&](WordPair next, const DerivationTrace& parent, DerivationStep step) {
        if (pair_length(next) > max_total_length) return;
        if (done.contains(next) || pending.contains(next)) return;
        DerivationTrace t{parent.start, parent.steps, next};
        t.steps.push_back(std::move(step));
        pending.emplace(std::move(next), std::move(t));
    };

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const WordPair& p = node.key();
        const DerivationTrace& trace = node.mapped();

        discover(swap_pair(p), trace, {DerivationStep::Rule::swap, {}});
        discover(extend_u(p.first, p.second), trace, {DerivationStep::Rule::extend_u, {}});
        const std::size_t tv = root_decomposition(p.second).t.size();
        for (std::size_t len : border_lengths(p.first)) {
            if (len <= tv) continue;
            // prune before building the (possibly long) extended pair
            if (pair_length(p) + len + p.second.size() > max_total_length) continue;
            Word y = p.first.prefix(len);
            WordPair extended = extend_v(p.first, p.second, y);
            discover(std::move(extended), trace,
                     {DerivationStep::Rule::extend_v, std::move(y)});
        }

        done.insert(std::move(node));
    }

    std::vector<FMember> out;
    out.reserve(done.size());
    for (auto& [pair, trace] : done)
        out.push_back(FMember{pair.first, pair.second, std::move(trace)});
    return out;
}

DescentResult descend(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("descend: empty component");
    if (!is_fb_pair(u, v))
        throw std::invalid_argument("descend: not a fully bordered pair");
    if (v.size() > u.size())
        throw std::invalid_argument("descend: requires |v| <= |u|");
    if (u.size() + v.size() <= 2)
        throw std::invalid_argument("descend: total length must exceed 2");

    const RootDecomposition rd = root_decomposition(u);
    if (rd.k == 0)
        throw std::logic_error("descend: first component of a fully bordered pair is unbordered");
    const std::size_t p = rd.s.size() + rd.t.size();
    const Word stripped = u.suffix(u.size() - p);  // u' = (s_u t_u)^{-1} u
    const Word power = u.prefix(rd.k * p);         // (s_u t_u)^{k_u}

    if (!v.contains(power))
        return DescentResult{DescentResult::Case::shrink_u, stripped, v, stripped, Word()};

    if (v.size() < stripped.size() || (v.size() - stripped.size()) % 2 != 0)
        throw std::logic_error("descend: no admissible v' length for the second case");
    const Word vp = v.prefix((v.size() - stripped.size()) / 2);
    if (vp.empty() || !(vp + stripped + vp == v))
        throw std::logic_error("descend: second case split v = v' u' v' failed to verify");
    return DescentResult{DescentResult::Case::shrink_v, u, vp, stripped, vp};
}

namespace {

void build_trace(const Word& u, const Word& v, WordPair& start,
                 std::vector<DerivationStep>& steps) {
    using Rule = DerivationStep::Rule;
    if (u.size() + v.size() == 2) {
        start = {u, v};
        return;
    }
    if (v.size() > u.size()) {
        build_trace(v, u, start, steps);
        steps.push_back({Rule::swap, {}});
        return;
    }
    const DescentResult d = descend(u, v);
    build_trace(d.next_u, d.next_v, start, steps);
    if (d.kind == DescentResult::Case::shrink_u) {
        const RootDecomposition rd = root_decomposition(u);
        if (rd.k > 1 || rd.t.empty()) {
            // s and t of the shortened word match those of u, so one
            // extend_u application rebuilds it.
            steps.push_back({Rule::extend_u, {}});
        } else {
            // k_u = 1 with nonempty t_u: u = s_u t_u s_u is rebuilt on the
            // swapped pair, appending t_u as the border: (v, u') -> (v, u).
            steps.push_back({Rule::swap, {}});
            steps.push_back({Rule::extend_v, rd.t});
            steps.push_back({Rule::swap, {}});
        }
    } else {
        // v = v' u' v' is one extend_v application with y = u'.
        steps.push_back({Rule::extend_v, d.stripped_u});
    }
}

}  // namespace

DerivationTrace derive_trace(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("derive_trace: empty component");
    if (!is_fb_pair(u, v))
        throw std::invalid_argument("derive_trace: not a fully bordered pair");
    DerivationTrace trace;
    trace.end = {u, v};
    build_trace(u, v, trace.start, trace.steps);
    // adjacent swaps cancel; the construction emits them at case boundaries
    std::vector<DerivationStep> steps;
    for (DerivationStep& step : trace.steps) {
        if (step.rule == DerivationStep::Rule::swap && !steps.empty() &&
            steps.back().rule == DerivationStep::Rule::swap) {
            steps.pop_back();
        } else {
            steps.push_back(std::move(step));
        }
    }
    trace.steps = std::move(steps);
    if (trace.replay() != trace.end)
        throw std::logic_error("derive_trace: replay does not reproduce the input pair");
    return trace;
}

bool f_membership(const Word& u, const Word& v, std::size_t max_oracle_length) {
    if (u.size() + v.size() > max_oracle_length)
        throw std::invalid_argument("f_membership: pair exceeds the oracle bound");
    return is_fb_pair(u, v);
}

}  // namespace fbw

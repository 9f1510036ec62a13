#pragma once
// Brute-force admissible sets, parabolic saturations and LS paths.  Built from
// words, subwords and explicit group products only.

#include <functional>
#include <set>
#include <vector>

#include "oracles/weyl_oracles.hpp"
#include "twloop/paths.hpp"

namespace oracle {

using twl::i64;
using twl::NodeSet;
using twl::Rational;
using twl::Vec;

// Conjugates w t_lambda w^-1 over the finite Weyl group, by closing under s_i (i not special).
inline std::set<Element> translation_orbit(const WeylGroup& g, const Vec& lambda)
{
    std::set<Element> out{g.translation(lambda)};
    std::vector<Element> todo(out.begin(), out.end());
    while (!todo.empty()) {
        Element x = todo.back();
        todo.pop_back();
        for (int i = 0; i < g.nodes(); ++i) {
            if (i == g.finite().special) continue;
            Element y = g.mul(g.simple(i), g.mul(x, g.simple(i)));
            if (out.insert(y).second) todo.push_back(y);
        }
    }
    return out;
}

// Every element of length <= max_len lying below some conjugate translation.
inline std::set<Element> adm_brute(const WeylGroup& g, const Vec& lambda, int max_len)
{
    std::set<Element> out;
    auto tops = translation_orbit(g, lambda);
    for (const auto& [v, len] : word_ball(g, max_len))
        for (const Element& t : tops) {
            twl::ReducedWord rw = g.reduced_word(t);
            if (subword_leq(g, v, rw.word, rw.omega)) {
                out.insert(v);
                break;
            }
        }
    return out;
}

// W_J for a set J generating a finite group.
inline std::set<Element> parabolic(const WeylGroup& g, NodeSet j)
{
    std::set<Element> out{g.identity()};
    std::vector<Element> todo{g.identity()};
    while (!todo.empty()) {
        Element x = todo.back();
        todo.pop_back();
        for (int i = 0; i < g.nodes(); ++i)
            if (j >> i & 1) {
                Element y = g.mul(x, g.simple(i));
                if (out.insert(y).second) todo.push_back(y);
            }
    }
    return out;
}

inline std::set<Element> triple_products(const WeylGroup& g, const std::set<Element>& left,
                                         const std::vector<Element>& mid, const std::set<Element>& right)
{
    std::set<Element> out;
    for (const Element& l : left)
        for (const Element& m : mid)
            for (const Element& r : right) out.insert(g.mul(l, g.mul(m, r)));
    return out;
}

// Plain depth-first search for an a-chain from `from` down to `to`.
inline bool chain_dfs(const twl::BruhatGraph& bg, const Vec& shape, int from, int to, Rational a)
{
    if (from == to) return true;
    for (int e : bg.down[from]) {
        const auto& edge = bg.edges[e];
        i64 p = 0;
        for (std::size_t i = 0; i < shape.size(); ++i) p += shape[i] * edge.pull[i];
        Rational x = a * Rational(p < 0 ? -p : p);
        if (x.denominator() != 1) continue;
        if (chain_dfs(bg, shape, edge.lower, to, a)) return true;
    }
    return false;
}

// LS paths with initial direction in `allowed`, cuts drawn from p/d with d <= max_den.
inline i64 ls_brute(const WeylGroup& g, const twl::BruhatGraph& bg, const Vec& shape,
                    const std::vector<int>& allowed, i64 max_den)
{
    std::set<Rational> cuts;
    for (i64 d = 1; d <= max_den; ++d)
        for (i64 p = 1; p < d; ++p) cuts.insert(Rational(p, d));
    std::vector<Rational> cv(cuts.begin(), cuts.end());
    const int n = static_cast<int>(bg.elements.size());
    std::function<i64(int, int)> go = [&](int sigma, int first_cut) -> i64 {
        i64 total = 1;  // stop here: last cut is 1
        for (int c = first_cut; c < static_cast<int>(cv.size()); ++c)
            for (int next = 0; next < n; ++next) {
                if (next == sigma || !g.bruhat_leq(bg.elements[next], bg.elements[sigma])) continue;
                if (chain_dfs(bg, shape, sigma, next, cv[c])) total += go(next, c + 1);
            }
        return total;
    };
    i64 sum = 0;
    for (int s : allowed) sum += go(s, 0);
    return sum;
}

}  // namespace oracle

#pragma once
// Brute-force references for the Weyl group engine.  They only use group
// multiplication and words, never the closed length formula or the lifting
// recursion.

#include <map>
#include <set>
#include <vector>

#include "twloop/weyl.hpp"

namespace oracle {

using twl::Element;
using twl::WeylGroup;

// Minimal word length of every element reachable by words of length <= max_len,
// starting from each length-zero element.
inline std::map<Element, int> word_ball(const WeylGroup& g, int max_len)
{
    std::map<Element, int> dist;
    std::vector<Element> layer;
    for (const Element& t : g.omega_elements()) {
        dist[t] = 0;
        layer.push_back(t);
    }
    for (int d = 1; d <= max_len; ++d) {
        std::vector<Element> next;
        for (const Element& w : layer)
            for (int i = 0; i < g.nodes(); ++i) {
                Element v = g.mul(g.simple(i), w);
                if (dist.emplace(v, d).second) next.push_back(v);
            }
        layer = std::move(next);
    }
    return dist;
}

// v <= w iff v is the product of a subword of a reduced word of w, times the
// same length-zero part.
inline bool subword_leq(const WeylGroup& g, const Element& v, const std::vector<int>& word, const Element& tau)
{
    const int k = static_cast<int>(word.size());
    std::set<Element> reach{g.identity()};
    for (int p = 0; p < k; ++p) {
        std::set<Element> next = reach;
        for (const Element& x : reach) next.insert(g.mul(x, g.simple(word[p])));
        reach = std::move(next);
    }
    for (const Element& x : reach)
        if (g.mul(x, tau) == v) return true;
    return false;
}

// Number of affine root hyperplanes {beta = k} crossed by the segment from the
// barycentric interior point p of the base alcove to p + lambda.
inline long hyperplanes_crossed(const WeylGroup& g, const twl::Vec& lambda)
{
    const auto& f = g.finite();
    twl::i64 denom = 1;
    for (auto c : f.highest_root) denom += c;
    long count = 0;
    for (const auto& r : f.positive_roots) {
        // beta(p) = height(r)/denom, beta(p + lambda) = that + beta(lambda)
        twl::i64 a = 0, b = 0;
        for (int i = 0; i < g.rank(); ++i) {
            a += r[i];
            b += r[i] * lambda[i];
        }
        twl::Rational lo(a, denom), hi = lo + b;
        if (hi < lo) std::swap(lo, hi);
        for (twl::i64 k = -1000; k <= 1000; ++k)
            if (lo < twl::Rational(k) && twl::Rational(k) < hi) ++count;
    }
    return count;
}

}  // namespace oracle

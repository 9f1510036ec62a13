#include "twloop/paths.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace twl {

namespace {

i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("LS path count overflows 64 bits");
    return r;
}

}  // namespace

Vec shape_weight(const AffineRootDatum& d, NodeSet y_circ, i64 a)
{
    if (y_circ == 0) throw DomainError("Y must be nonempty");
    if (a < 1) throw DomainError("a must be positive");
    Vec out(d.size(), 0);
    for (int i : node_list(y_circ)) {
        if (i >= d.size()) throw DomainError("node outside the diagram");
        out[i] = a * d.kappa[i];
    }
    return out;
}

NodeSet stabilizer_nodes(const Vec& shape)
{
    NodeSet j = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 0) throw DomainError("shape is not dominant");
        if (shape[i] == 0) j |= node_bit(static_cast<int>(i));
    }
    return j;
}

LSPathCounter::LSPathCounter(const BruhatGraph& graph, const Vec& shape) : g_(graph), shape_(shape)
{
    if (stabilizer_nodes(shape) != graph.generators)
        throw DomainError("Bruhat graph is not built modulo the stabilizer of the shape");
    std::set<i64> divisors;
    for (const auto& e : g_.edges) {
        i64 p = pairing(shape_, e.pull);
        if (p < 0) p = -p;
        if (p == 0) throw DomainError("cover with zero pairing; graph and shape disagree");
        pair_.push_back(p);
        for (i64 d = 2; d <= p; ++d)
            if (p % d == 0) divisors.insert(d);
    }
    for (i64 d : divisors)
        for (i64 b = 1; b < d; ++b)
            if (std::gcd(b, d) == 1) cuts_.push_back(Rational(b, d));
    std::sort(cuts_.begin(), cuts_.end());
    order_.resize(g_.elements.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g_.lengths[a] < g_.lengths[b]; });
}

const std::vector<std::vector<std::uint64_t>>& LSPathCounter::reach(i64 d) const
{
    for (const auto& [k, r] : reach_)
        if (k == d) return r;
    const std::size_t n = g_.elements.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> r(n, std::vector<std::uint64_t>(words, 0));
    for (int s : order_)
        for (int ei : g_.down[s]) {
            if (pair_[ei] % d) continue;
            int t = g_.edges[ei].lower;
            r[s][t / 64] |= std::uint64_t(1) << (t % 64);
            for (std::size_t w = 0; w < words; ++w) r[s][w] |= r[t][w];
        }
    reach_.emplace_back(d, std::move(r));
    return reach_.back().second;
}

i64 LSPathCounter::count(const std::vector<int>& allowed) const
{
    const std::size_t n = g_.elements.size();
    std::vector<i64> tail(n, 0), cnt(n);
    for (auto it = cuts_.rbegin(); it != cuts_.rend(); ++it) {
        const auto& r = reach(it->denominator());
        for (std::size_t s = 0; s < n; ++s) cnt[s] = checked_add(1, tail[s]);
        for (std::size_t s = 0; s < n; ++s) {
            i64 acc = 0;
            for (std::size_t w = 0; w < r[s].size(); ++w) {
                std::uint64_t bits = r[s][w];
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    acc = checked_add(acc, cnt[w * 64 + b]);
                }
            }
            tail[s] = checked_add(tail[s], acc);
        }
    }
    i64 total = 0;
    for (int s : allowed) total = checked_add(total, checked_add(1, tail[s]));
    return total;
}

i64 LSPathCounter::enumerate(const std::vector<int>& allowed, const std::function<void(const LSPath&)>& sink) const
{
    i64 emitted = 0;
    LSPath p;
    p.shape = shape_;
    std::function<void(int, std::size_t)> dfs = [&](int s, std::size_t next_cut) {
        p.directions.push_back(s);
        p.cuts.push_back(Rational(1));
        sink(p);
        ++emitted;
        p.cuts.pop_back();
        for (std::size_t c = next_cut; c < cuts_.size(); ++c) {
            const auto& r = reach(cuts_[c].denominator());
            for (std::size_t t = 0; t < g_.elements.size(); ++t)
                if ((r[s][t / 64] >> (t % 64)) & 1) {
                    p.cuts.push_back(cuts_[c]);
                    dfs(static_cast<int>(t), c + 1);
                    p.cuts.pop_back();
                }
        }
        p.directions.pop_back();
    };
    p.cuts = {Rational(0)};
    for (int s : allowed) dfs(s, 0);
    return emitted;
}

bool LSPathCounter::chain_exists(int from, int to, i64 d) const
{
    std::vector<char> seen(g_.elements.size(), 0);
    std::deque<int> q{from};
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        for (int ei : g_.down[s]) {
            if (pair_[ei] % d) continue;
            int t = g_.edges[ei].lower;
            if (t == to) return true;
            if (!seen[t]) {
                seen[t] = 1;
                q.push_back(t);
            }
        }
    }
    return false;
}

bool LSPathCounter::is_ls_path(const LSPath& p) const
{
    const std::size_t s = p.directions.size();
    if (s == 0 || p.cuts.size() != s + 1) return false;
    if (p.cuts.front() != Rational(0) || p.cuts.back() != Rational(1)) return false;
    for (std::size_t j = 0; j + 1 < p.cuts.size(); ++j)
        if (!(p.cuts[j] < p.cuts[j + 1])) return false;
    for (int d : p.directions)
        if (d < 0 || d >= static_cast<int>(g_.elements.size())) return false;
    for (std::size_t j = 0; j + 1 < s; ++j)
        if (!chain_exists(p.directions[j], p.directions[j + 1], p.cuts[j + 1].denominator())) return false;
    return true;
}

std::string format_path(const WeylGroup& g, const BruhatGraph& graph, const LSPath& p)
{
    std::string out = "(";
    for (std::size_t j = 0; j < p.directions.size(); ++j) {
        if (j) out += " > ";
        out += g.format_word(g.reduced_word(graph.elements[p.directions[j]]));
    }
    out += " / W{";
    std::vector<int> gens = node_list(graph.generators);
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + std::to_string(gens[i]);
    out += "}; ";
    for (std::size_t j = 1; j < p.cuts.size(); ++j) out += (j > 1 ? "," : "") + to_string(p.cuts[j]);
    return out + ")";
}

HCount count_h_Y(const WeylGroup& g, const Vec& lambda, NodeSet y, i64 a, std::size_t cap,
                 const std::function<void(const LSPath&, const BruhatGraph&)>& sink)
{
    AdmissibleSet A = adm(g, lambda, cap);
    AdmissibleY AY = adm_Y(g, A, y, cap);
    Vec shape = shape_weight(g.affine(), AY.y_circ, a);
    BruhatGraph graph = bruhat_interval(g, AY.mod_right, stabilizer_nodes(shape), cap);
    std::vector<int> allowed;
    for (const Element& w : AY.mod_right) allowed.push_back(graph.find(w));
    LSPathCounter counter(graph, shape);
    HCount out;
    out.y_circ = AY.y_circ;
    out.allowed = allowed.size();
    out.graph_size = graph.elements.size();
    out.value = counter.count(allowed);
    if (sink) {
        i64 emitted = counter.enumerate(allowed, [&](const LSPath& p) { sink(p, graph); });
        if (emitted != out.value) throw DomainError("path enumeration disagrees with the count");
    }
    return out;
}

i64 finite_ls_count(const WeylGroup& g, const Vec& shape, std::size_t cap)
{
    const int x = g.finite().special;
    if (static_cast<int>(shape.size()) != g.nodes() || shape[x] != 0)
        throw DomainError("finite shape must vanish on the special node");
    NodeSet j = stabilizer_nodes(shape);
    Element top = g.longest(g.all() & ~node_bit(x));
    BruhatGraph graph = bruhat_interval(g, {top}, j, cap);
    std::vector<int> all(graph.elements.size());
    std::iota(all.begin(), all.end(), 0);
    return LSPathCounter(graph, shape).count(all);
}

}  // namespace twl

#include "twloop/admissible.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace twl {

namespace {

void sort_by_length(const WeylGroup& g, std::vector<Element>& v)
{
    std::vector<std::pair<int, Element>> keyed;
    keyed.reserve(v.size());
    for (auto& e : v) keyed.emplace_back(g.length(e), std::move(e));
    std::sort(keyed.begin(), keyed.end());
    v.clear();
    for (auto& [l, e] : keyed) v.push_back(std::move(e));
}

}  // namespace

std::vector<Vec> coweight_orbit(const WeylGroup& g, const Vec& lambda)
{
    std::set<Vec> seen{lambda};
    std::vector<Vec> todo{lambda};
    const auto& fin = g.finite();
    while (!todo.empty()) {
        Vec v = todo.back();
        todo.pop_back();
        for (int node : fin.nodes) {
            Vec u = mat_vec(g.simple(node).w, v);
            if (seen.insert(u).second) todo.push_back(u);
        }
    }
    return {seen.begin(), seen.end()};
}

AdmissibleSet adm(const WeylGroup& g, const Vec& lambda, std::size_t cap)
{
    if (static_cast<int>(lambda.size()) != g.rank())
        throw DomainError("coweight needs " + std::to_string(g.rank()) + " coordinates");
    AdmissibleSet out;
    out.lambda = lambda;
    out.tau = g.reduced_word(g.translation(lambda)).omega;
    for (const Vec& v : coweight_orbit(g, lambda)) out.maximal.push_back(g.translation(v));
    BruhatGraph bg = bruhat_interval(g, out.maximal, 0, cap);
    out.elements = bg.elements;
    sort_by_length(g, out.elements);
    return out;
}

std::vector<Element> adm_neutral(const WeylGroup& g, const AdmissibleSet& a)
{
    Element ti = g.inv(a.tau);
    std::vector<Element> out;
    out.reserve(a.elements.size());
    for (const Element& w : a.elements) out.push_back(g.mul(w, ti));
    return out;
}

NodeSet y_circ(const WeylGroup& g, const Element& tau, NodeSet y)
{
    std::vector<int> pi = g.node_permutation(tau);
    NodeSet out = 0;
    for (int i : node_list(y)) out |= node_bit(pi[i]);
    return out;
}

AdmissibleY adm_Y(const WeylGroup& g, const AdmissibleSet& a, NodeSet y, std::size_t cap)
{
    if (y == 0) throw DomainError("Y must be nonempty");
    if ((y & ~g.all()) != 0) throw DomainError("Y contains a node outside the diagram");
    AdmissibleY out;
    out.y = y;
    out.y_circ = y_circ(g, a.tau, y);
    const NodeSet jl = g.all() & ~y, jr = g.all() & ~out.y_circ;

    std::unordered_set<Element, ElementHash> seen;
    std::vector<Element> todo = adm_neutral(g, a);
    for (const Element& w : todo) seen.insert(w);
    while (!todo.empty()) {
        Element x = std::move(todo.back());
        todo.pop_back();
        for (int i = 0; i < g.nodes(); ++i) {
            for (int side = 0; side < 2; ++side) {
                if (!has_node(side ? jr : jl, i)) continue;
                Element z = side ? g.mul(x, g.simple(i)) : g.mul(g.simple(i), x);
                if (seen.insert(z).second) {
                    if (seen.size() > cap) throw CapExceeded("parabolic saturation", cap);
                    todo.push_back(std::move(z));
                }
            }
        }
    }
    out.full.assign(seen.begin(), seen.end());
    sort_by_length(g, out.full);
    std::set<Element> reps;
    for (const Element& x : out.full)
        if (g.is_min_right(x, jr)) reps.insert(x);
    out.mod_right.assign(reps.begin(), reps.end());
    sort_by_length(g, out.mod_right);
    return out;
}

}  // namespace twl

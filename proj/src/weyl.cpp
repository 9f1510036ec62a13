#include "twloop/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <regex>
#include <set>

namespace twl {

std::size_t ElementHash::operator()(const Element& e) const
{
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](i64 v) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& row : e.w)
        for (i64 v : row) mix(v);
    for (i64 v : e.t) mix(v);
    return h;
}

WeylGroup::WeylGroup(FiniteRootDatum fin) : fin_(std::move(fin))
{
    const int l = rank();
    const int n = nodes();
    theta_coeffs_ = fin_.highest_root;
    denom_ = 1;
    for (i64 c : theta_coeffs_) denom_ += c;

    simples_.resize(n);
    for (int node = 0; node < n; ++node) {
        Element s{identity_matrix(l), Vec(l, 0)};
        if (node == fin_.special) {
            for (int j = 0; j < l; ++j)
                for (int m = 0; m < l; ++m) s.w[j][m] -= fin_.h_theta[j] * theta_coeffs_[m];
            s.t = fin_.h_theta;
        } else {
            int k = fin_.finite_index[node];
            for (int j = 0; j < l; ++j) s.w[j][k] -= fin_.cartan[k][j];
        }
        if (mul(s, s) != identity()) throw DomainError("simple reflection is not an involution");
        simples_[node] = s;
    }

    // length-zero elements: close the Omega parts of the unit translations
    std::set<Element> found{identity()};
    std::vector<Element> gens;
    for (int j = 0; j < l; ++j) {
        Vec e(l, 0);
        e[j] = 1;
        gens.push_back(reduced_word(translation(e)).omega);
    }
    std::vector<Element> todo{identity()};
    while (!todo.empty()) {
        Element a = todo.back();
        todo.pop_back();
        for (const Element& g : gens) {
            Element b = mul(a, g);
            if (found.insert(b).second) todo.push_back(b);
        }
    }
    omega_.assign(found.begin(), found.end());
    std::sort(omega_.begin(), omega_.end(), [this](const Element& a, const Element& b) {
        Vec ca = omega_component(a), cb = omega_component(b);
        return ca < cb;
    });
}

Element WeylGroup::identity() const { return {identity_matrix(rank()), Vec(rank(), 0)}; }

Element WeylGroup::simple(int node) const
{
    if (node < 0 || node >= nodes()) throw DomainError("node " + std::to_string(node) + " out of range");
    return simples_[node];
}

Element WeylGroup::translation(const Vec& lambda) const
{
    if (static_cast<int>(lambda.size()) != rank())
        throw DomainError("translation needs " + std::to_string(rank()) + " coordinates");
    return {identity_matrix(rank()), lambda};
}

Element WeylGroup::make_element(const Element& finite_part, const Vec& lambda) const
{
    if (finite_part.t != Vec(rank(), 0)) throw DomainError("finite part has a translation component");
    return mul(translation(lambda), finite_part);
}

Element WeylGroup::from_word(const std::vector<int>& word) const
{
    Element e = identity();
    for (int i : word) e = mul(e, simple(i));
    return e;
}

Element WeylGroup::mul(const Element& a, const Element& b) const
{
    Element c;
    c.w = mat_mul(a.w, b.w);
    c.t = mat_vec(a.w, b.t);
    for (std::size_t i = 0; i < c.t.size(); ++i) c.t[i] += a.t[i];
    return c;
}

Element WeylGroup::inv(const Element& a) const
{
    // w^-1 for the finite part is recovered from a word: strip left descents
    Element cur{a.w, Vec(rank(), 0)};
    Element r = identity();
    for (bool more = true; more;) {
        more = false;
        Vec img = mat_vec(cur.w, Vec(rank(), 1));
        for (int j = 0; j < rank(); ++j)
            if (img[j] < 0) {
                const Element& s = simples_[fin_.nodes[j]];
                cur = mul(s, cur);
                r = mul(s, r);
                more = true;
                break;
            }
    }
    Element out;
    out.w = r.w;
    out.t = mat_vec(r.w, a.t);
    for (auto& v : out.t) v = -v;
    return out;
}

Vec WeylGroup::alcove_image(const Element& w) const
{
    Vec v = mat_vec(w.w, Vec(rank(), 1));
    for (int i = 0; i < rank(); ++i) v[i] += denom_ * w.t[i];
    return v;
}

int WeylGroup::length(const Element& w) const
{
    Vec v = alcove_image(w);
    i64 total = 0;
    for (const Vec& r : fin_.positive_roots) {
        i64 b = pairing(r, v);
        if (b % denom_ == 0) throw DomainError("alcove image is not generic");
        total += b > 0 ? b / denom_ : (-b) / denom_ + 1;
    }
    return static_cast<int>(total);
}

bool WeylGroup::is_left_descent(const Element& w, int node) const
{
    Vec v = alcove_image(w);
    if (node == fin_.special) return pairing(theta_coeffs_, v) > denom_;
    return v[fin_.finite_index[node]] < 0;
}

bool WeylGroup::is_right_descent(const Element& w, int node) const { return is_left_descent(inv(w), node); }

NodeSet WeylGroup::left_descents(const Element& w) const
{
    NodeSet s = 0;
    for (int i = 0; i < nodes(); ++i)
        if (is_left_descent(w, i)) s |= node_bit(i);
    return s;
}

NodeSet WeylGroup::right_descents(const Element& w) const { return left_descents(inv(w)); }

ReducedWord WeylGroup::reduced_word(const Element& w) const
{
    ReducedWord out;
    Element cur = w;
    for (;;) {
        int found = -1;
        for (int i = 0; i < nodes() && found < 0; ++i)
            if (is_left_descent(cur, i)) found = i;
        if (found < 0) break;
        out.word.push_back(found);
        cur = mul(simples_[found], cur);
    }
    out.omega = cur;
    return out;
}

Vec WeylGroup::omega_component(const Element& w) const { return fin_.omega.quotient_class(w.t); }

bool WeylGroup::in_affine_weyl(const Element& w) const { return fin_.omega.contains(w.t); }

std::vector<int> WeylGroup::node_permutation(const Element& tau) const
{
    std::vector<int> pi(nodes(), -1);
    Element ti = inv(tau);
    for (int i = 0; i < nodes(); ++i) {
        Element c = mul(mul(tau, simples_[i]), ti);
        for (int j = 0; j < nodes(); ++j)
            if (c == simples_[j]) pi[i] = j;
        if (pi[i] < 0) throw DomainError("element does not normalize the simple reflections");
    }
    return pi;
}

bool WeylGroup::bruhat_leq(const Element& v0, const Element& w0) const
{
    if (omega_component(v0) != omega_component(w0)) return false;
    Element v = v0, w = w0;
    int lv = length(v), lw = length(w);
    for (;;) {
        if (lv > lw) return false;
        if (lw == 0) return v == w;
        int s = -1;
        for (int i = 0; i < nodes() && s < 0; ++i)
            if (is_left_descent(w, i)) s = i;
        w = mul(simples_[s], w);
        --lw;
        if (is_left_descent(v, s)) {
            v = mul(simples_[s], v);
            --lv;
        }
    }
}

Element WeylGroup::coset_min_gen(const Element& w, NodeSet jl, NodeSet jr) const
{
    Element cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < nodes(); ++i) {
            if (has_node(jl, i) && is_left_descent(cur, i)) {
                cur = mul(simples_[i], cur);
                changed = true;
            }
            if (has_node(jr, i) && is_right_descent(cur, i)) {
                cur = mul(cur, simples_[i]);
                changed = true;
            }
        }
    }
    return cur;
}

Element WeylGroup::coset_min(const Element& w, NodeSet yl, NodeSet yr) const
{
    return coset_min_gen(w, all() & ~yl, all() & ~yr);
}

bool WeylGroup::is_min_right(const Element& w, NodeSet jr) const
{
    NodeSet d = right_descents(w);
    return (d & jr) == 0;
}

Element WeylGroup::longest(NodeSet j) const
{
    if (j == all()) throw DomainError("the full affine Weyl group has no longest element");
    Element cur = identity();
    for (int guard = 0; guard < 100000; ++guard) {
        int found = -1;
        for (int i = 0; i < nodes() && found < 0; ++i)
            if (has_node(j, i) && !is_right_descent(cur, i)) found = i;
        if (found < 0) return cur;
        cur = mul(cur, simples_[found]);
    }
    throw DomainError("parabolic subgroup is not finite");
}

Vec WeylGroup::reflect_affine_coroot(int node, const Vec& h) const
{
    return reflect_coroot(affine().cartan, node, h);
}

Vec WeylGroup::reflect_affine_root(int node, const Vec& r) const
{
    const IMat& a = affine().cartan;
    i64 p = 0;
    for (int m = 0; m < nodes(); ++m) p += r[m] * a[node][m];
    Vec out = r;
    out[node] -= p;
    return out;
}

std::string WeylGroup::format_word(const ReducedWord& rw) const
{
    std::string s;
    for (std::size_t i = 0; i < rw.word.size(); ++i) {
        if (i) s += '.';
        s += "s" + std::to_string(rw.word[i]);
    }
    if (rw.omega != identity()) {
        Vec c = omega_component(rw.omega);
        if (!s.empty()) s += '*';
        s += "tau(" + to_string(c) + ")";
    }
    return s.empty() ? "e" : s;
}

nlohmann::json WeylGroup::to_json(const Element& w) const
{
    ReducedWord rw = reduced_word(w);
    nlohmann::json j;
    j["finite_part"] = w.w;
    j["translation"] = w.t;
    j["length"] = rw.word.size();
    j["word"] = rw.word;
    j["omega"] = omega_component(w);
    j["text"] = format_word(rw);
    return j;
}

std::vector<int> parse_word(const std::string& s)
{
    std::vector<int> out;
    if (s.empty() || s == "e") return out;
    static const std::regex letter("^s?([0-9]+)$");
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t dot = s.find('.', start);
        std::string part = s.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        std::smatch m;
        if (!std::regex_match(part, m, letter)) throw DomainError("bad letter '" + part + "' in word '" + s + "'");
        out.push_back(std::stoi(m[1].str()));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return out;
}

Element parse_element(const WeylGroup& g, const std::string& spec)
{
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty element spec");
    static const std::regex tau_pow("^tau(\\^(-?[0-9]+))?$");
    static const std::regex tau_idx("^tau\\[([0-9]+)\\]$");
    static const std::regex trans("^t\\[([-0-9,]*)\\]$");
    static const std::regex fin("^w0\\[([s0-9.]*)\\]$");

    auto tau_of = [&](int j) {
        if (j < 1 || j > g.rank()) throw DomainError("tau index out of range");
        Vec e(g.rank(), 0);
        e[j - 1] = 1;
        return g.reduced_word(g.translation(e)).omega;
    };

    Element out = g.identity();
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t star = s.find('*', start);
        std::string f = s.substr(start, star == std::string::npos ? std::string::npos : star - start);
        std::smatch m;
        Element x;
        if (std::regex_match(f, m, tau_pow)) {
            int k = m[2].matched ? std::stoi(m[2].str()) : 1;
            Element t = tau_of(1);
            if (k < 0) {
                t = g.inv(t);
                k = -k;
            }
            x = g.identity();
            for (int i = 0; i < k; ++i) x = g.mul(x, t);
        } else if (std::regex_match(f, m, tau_idx)) {
            x = tau_of(std::stoi(m[1].str()));
        } else if (std::regex_match(f, m, trans)) {
            x = g.translation(parse_csv_ints(m[1].str()));
        } else if (std::regex_match(f, m, fin)) {
            std::vector<int> w = parse_word(m[1].str());
            for (int i : w)
                if (i == g.finite().special) throw DomainError("w0[...] may only use finite nodes");
            x = g.from_word(w);
        } else {
            x = g.from_word(parse_word(f));
        }
        out = g.mul(out, x);
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return out;
}

int BruhatGraph::find(const Element& w) const
{
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

BruhatGraph bruhat_interval(const WeylGroup& g, const std::vector<Element>& tops, NodeSet j, std::size_t cap)
{
    BruhatGraph out;
    out.generators = j;
    if (tops.empty()) return out;
    const Vec omega0 = g.omega_component(tops.front());
    std::deque<int> queue;
    auto add = [&](const Element& w, int len) {
        auto [it, fresh] = out.index.emplace(w, static_cast<int>(out.elements.size()));
        if (fresh) {
            if (out.elements.size() >= cap) throw CapExceeded("bruhat interval", cap);
            out.elements.push_back(w);
            out.lengths.push_back(len);
            out.down.emplace_back();
            queue.push_back(it->second);
        }
        return it->second;
    };
    for (const Element& t : tops) {
        if (g.omega_component(t) != omega0) throw DomainError("interval tops lie in different Omega classes");
        Element m = g.coset_min_gen(t, 0, j);
        add(m, g.length(m));
    }

    std::map<Element, std::vector<int>> perm_cache;
    const int n = g.nodes();
    while (!queue.empty()) {
        int wi = queue.front();
        queue.pop_front();
        const Element w = out.elements[wi];
        ReducedWord rw = g.reduced_word(w);
        const int k = static_cast<int>(rw.word.size());
        auto pit = perm_cache.find(rw.omega);
        if (pit == perm_cache.end()) pit = perm_cache.emplace(rw.omega, g.node_permutation(rw.omega)).first;
        const std::vector<int>& pi = pit->second;

        std::vector<Element> prefix(k + 1), suffix(k + 1);
        prefix[0] = g.identity();
        for (int t = 0; t < k; ++t) prefix[t + 1] = g.mul(prefix[t], g.simple(rw.word[t]));
        suffix[k] = rw.omega;
        for (int t = k - 1; t >= 0; --t) suffix[t] = g.mul(g.simple(rw.word[t]), suffix[t + 1]);

        for (int p = 0; p < k; ++p) {
            Element v = g.mul(prefix[p], suffix[p + 1]);
            int lv = g.length(v);
            if (lv != k - 1 || !g.is_min_right(v, j)) continue;
            const int node = rw.word[p];
            BruhatEdge e;
            e.upper = wi;
            e.root.assign(n, 0);
            e.root[node] = 1;
            e.coroot.assign(n, 0);
            e.coroot[node] = 1;
            for (int t = p - 1; t >= 0; --t) {
                e.root = g.reflect_affine_root(rw.word[t], e.root);
                e.coroot = g.reflect_affine_coroot(rw.word[t], e.coroot);
            }
            Vec gamma(n, 0);
            gamma[node] = 1;
            for (int t = p + 1; t < k; ++t) gamma = g.reflect_affine_coroot(rw.word[t], gamma);
            e.pull.assign(n, 0);
            // tau^-1 alpha_m^vee = alpha_{pi^-1(m)}^vee, so coordinate i receives gamma[pi(i)]
            for (int i = 0; i < n; ++i) e.pull[i] = gamma[pi[i]];
            e.lower = add(v, lv);
            out.down[wi].push_back(static_cast<int>(out.edges.size()));
            out.edges.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace twl

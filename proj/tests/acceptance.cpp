// One PASS/FAIL line per acceptance criterion.  All comparisons are exact
// integer equalities (tolerance 0); each criterion also has a wall-time budget.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "oracles/lattice_oracles.hpp"
#include "oracles/weyl_oracles.hpp"
#include "twloop/dims.hpp"
#include "twloop/loops.hpp"
#include "twloop/paths.hpp"

using namespace twl;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, double budget, const std::function<Outcome()>& body)
{
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget) {
        o.pass = false;
        o.detail += " (over time budget)";
    }
    if (!o.pass) ++failures;
    std::printf("C%d %s tol=0 time=%.2fs budget=%.0fs %s\n", id, o.pass ? "PASS" : "FAIL", secs, budget, o.detail.c_str());
    std::fflush(stdout);
}

void skip(int id, const std::string& why)
{
    ++failures;
    std::printf("C%d FAIL tol=0 time=0.00s not run: %s\n", id, why.c_str());
}

WeylGroup group(const std::string& name) { return WeylGroup(echelon_system(load_affine_datum(name), 0)); }

std::string fmt(const Vec& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// coherence over all nonempty Y and a in {1, 2}; returns the number of unequal rows
int coherence_grid(const WeylGroup& g, const std::vector<Vec>& mus, int& rows, std::ostream* archive)
{
    int bad = 0;
    for (const Vec& mu : mus)
        for (NodeSet y = 1; y <= g.all(); ++y)
            for (i64 a : {1, 2}) {
                CoherenceReport r = check_coherence(g, mu, y, a);
                ++rows;
                if (!r.equal) ++bad;
                if (archive) {
                    std::vector<int> nodes = node_list(y);
                    *archive << r.datum << ",\"" << fmt(mu) << "\",\"" << fmt(Vec(nodes.begin(), nodes.end())) << "\"," << a << "," << r.lhs << "," << r.rhs << "," << (r.equal ? "true" : "false") << "\n";
                }
            }
    return bad;
}

// ---- criteria -----------------------------------------------------------------

Outcome c4_calibration()
{
    int checked = 0;
    for (const std::string name : {"A(1)_2", "C(1)_2"}) {
        auto g = group(name);
        const int l = g.rank();
        for (Vec f(l, 0);;) {
            i64 two_rho = 0;
            for (const Vec& r : g.finite().positive_roots) two_rho += pairing(f, r);
            if (two_rho <= 8) {
                Vec shape(l + 1, 0);
                for (int i = 0; i < l; ++i) shape[i + 1] = f[i];
                i64 paths = finite_ls_count(g, shape), dim = weyl_dim(g.finite().cartan, f);
                if (paths != dim) return {false, name + " lambda=" + fmt(f) + ": " + std::to_string(paths) + " paths vs dim " + std::to_string(dim)};
                ++checked;
            }
            int k = 0;
            while (k < l && ++f[k] > 8) f[k++] = 0;
            if (k == l) break;
        }
    }
    return {true, std::to_string(checked) + " dominant weights on A2 and C2"};
}

Outcome c1_sl()
{
    int rows = 0, bad = 0;
    for (int n = 2; n <= 4; ++n) {
        auto g = group("A(1)_" + std::to_string(n - 1));
        std::vector<Vec> mus;
        for (int r = 1; r < n; ++r) {
            Vec mu(n, 0);
            for (int i = 0; i < r; ++i) mu[i] = 1;
            mus.push_back(mu);
        }
        bad += coherence_grid(g, mus, rows, nullptr);
    }
    return {bad == 0, std::to_string(rows) + " rows, " + std::to_string(bad) + " unequal"};
}

Outcome c2_sp4()
{
    int rows = 0;
    int bad = coherence_grid(group("C(1)_2"), {{0, 1}}, rows, nullptr);
    return {bad == 0, std::to_string(rows) + " rows, " + std::to_string(bad) + " unequal"};
}

Outcome c3_su3(const std::string& archive_path)
{
    auto g = group("A(2)_2");
    const Vec mu{1, 0, 0};
    const NodeSet y = node_bit(node_of_lattice(3, 0));
    std::string detail;
    bool pass = true;
    for (i64 a : {1, 2}) {
        CoherenceReport r = check_coherence(g, mu, y, a);
        pass = pass && r.equal;
        detail += "a=" + std::to_string(a) + ": " + std::to_string(r.lhs) + "=" + std::to_string(r.rhs) + " ";
    }
    std::ofstream out(archive_path);
    out << "datum,mu,Y,a,h_Y,h,equal\n";
    int rows = 0;
    int other_bad = coherence_grid(g, {mu}, rows, &out);
    detail += "Y=" + std::to_string(node_of_lattice(3, 0)) + "; all-Y report (" + std::to_string(rows) + " rows, " +
              std::to_string(other_bad) + " unequal) archived to " + archive_path;
    return {pass, detail};
}

Outcome c5_hook()
{
    int checked = 0;
    for (int n = 2; n <= 6; ++n) {
        auto d = load_affine_datum("A(1)_" + std::to_string(n - 1));
        for (int r = 1; r < n; ++r)
            for (int m = 1; m <= 5; ++m) {
                Vec mu(n, 0);
                for (int i = 0; i < r; ++i) mu[i] = 1;
                i64 a = h_mu(d, mu, m), b = hook_content(n, r, m);
                if (a != b)
                    return {false, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " m=" + std::to_string(m) + ": " +
                                       std::to_string(a) + " vs " + std::to_string(b)};
                ++checked;
            }
    }
    return {true, std::to_string(checked) + " instances"};
}

using ChainKey = std::vector<std::vector<std::vector<int>>>;

ChainKey key(const LatticeChain& c)
{
    ChainKey k;
    for (const auto& l : c.lattices) k.push_back(l.space().rows());
    return k;
}

Outcome c6_points()
{
    std::ostringstream detail;
    for (int n : {2, 3})
        for (int q : {2, 3}) {
            LoopGroup lg(LoopKind::SplitSL, n, q);
            const WeylGroup& g = lg.weyl();
            const auto pos = lg.full_chain();
            const int box = 6;
            auto ball = oracle::word_ball(g, 4);
            std::map<Element, std::set<ChainKey>> cells;
            std::set<ChainKey> all;
            std::size_t total = 0;
            for (const auto& [w, len] : ball) {
                if (!g.in_affine_weyl(w)) continue;
                auto pts = cell_points(lg, g.reduced_word(w).word, pos, box);
                std::set<ChainKey> ks;
                for (const auto& c : pts) ks.insert(key(c));
                i64 expect = 1;
                for (int i = 0; i < len; ++i) expect *= q;
                if (static_cast<i64>(ks.size()) != expect || static_cast<i64>(pts.size()) != expect)
                    return {false, "cell size at n=" + std::to_string(n) + " q=" + std::to_string(q)};
                total += ks.size();
                all.insert(ks.begin(), ks.end());
                cells[w] = std::move(ks);
            }
            if (all.size() != total) return {false, "cells overlap at n=" + std::to_string(n) + " q=" + std::to_string(q)};
            for (const auto& [w, len] : ball) {
                if (!g.in_affine_weyl(w)) continue;
                ReducedWord rw = g.reduced_word(w);
                i64 sum = 0;
                for (const auto& [v, lv] : ball) {
                    if (!g.in_affine_weyl(v) || !oracle::subword_leq(g, v, rw.word, rw.omega)) continue;
                    i64 p = 1;
                    for (int i = 0; i < lv; ++i) p *= q;
                    sum += p;
                }
                if (sum != schubert_count(g, w, q, 0))
                    return {false, "schubert_count at n=" + std::to_string(n) + " w=" + g.format_word(rw)};
            }
            detail << "SL" << n << "/q" << q << ": " << cells.size() << " cells ok; ";
            if (n != 2) continue;

            // brute-force chains, sorted into relative positions by intersection signatures
            auto brute = oracle::sl2_iwahori_chains(lg.field(), 3, box);
            LatticeChain std_chain = lg.standard_chain(pos, box);
            std::map<std::vector<int>, Element> by_sig;
            std::map<Element, std::vector<int>> words;
            for (const auto& [w, word] : oracle::affine_ball(g, 7)) {
                SMat m = smat_identity(lg.field(), 2);
                for (int i : word) m = smat_mul(m, lg.weyl_lift(i));
                if (!by_sig.emplace(oracle::signature(lg.act(m, pos, box), std_chain, 4), w).second)
                    return {false, "signatures do not separate relative positions"};
                words[w] = word;
            }
            std::map<Element, std::set<ChainKey>> closure;
            for (const auto& c : brute) {
                auto it = by_sig.find(oracle::signature(c, std_chain, 4));
                if (it == by_sig.end()) continue;
                for (const auto& [w, pts] : cells)
                    if (g.bruhat_leq(it->second, w)) closure[w].insert(key(c));
            }
            for (const auto& [w, pts] : cells) {
                std::set<ChainKey> uni;
                for (const auto& [v, vp] : cells)
                    if (g.bruhat_leq(v, w)) uni.insert(vp.begin(), vp.end());
                if (uni != closure[w] || static_cast<i64>(uni.size()) != schubert_count(g, w, q, 0))
                    return {false, "closure of " + g.format_word(g.reduced_word(w)) + " disagrees with brute force at q=" + std::to_string(q)};
            }
            detail << brute.size() << " brute chains matched; ";
        }
    return {true, detail.str()};
}

Outcome c7_kottwitz()
{
    Field f(3);
    const i64 prec = 4;
    std::vector<Series> units;
    for (int code = 0; code < 81; ++code) {
        std::vector<int> c(4);
        int x = code;
        for (int& v : c) {
            v = x % 3;
            x /= 3;
        }
        if (c[0] == 0) continue;
        Series a(&f, 0, c, prec);
        if ((a * a.conj()).agrees(Series::constant(&f, 1))) units.push_back(a);
    }
    for (const Series& a : units) {
        int k = kottwitz_norm_one(a);
        int c0 = a.coeff(0) == 1 ? 1 : -1;
        if (k != c0) return {false, "invariant differs from the constant term for " + a.to_string()};
    }
    long pairs = 0;
    for (const Series& a : units)
        for (const Series& b : units) {
            if (kottwitz_norm_one(a * b) != kottwitz_norm_one(a) * kottwitz_norm_one(b)) return {false, "not multiplicative"};
            ++pairs;
        }
    int s3 = kottwitz_unitary(kottwitz_sign_element(&f, 3)), s4 = kottwitz_unitary(kottwitz_sign_element(&f, 4));
    if (s3 != -1 || s4 != -1) return {false, "sign elements give " + std::to_string(s3) + ", " + std::to_string(s4)};
    return {true, std::to_string(units.size()) + " norm-one units, " + std::to_string(pairs) + " pairs; sign elements -1, -1"};
}

Outcome c8_fiber()
{
    FiberRecord r = enumerate_fiber(3, 1, 3, {0});
    bool ok = r.contains_admissible.value_or(false) && r.naive_count >= r.adm_count;
    return {ok, "naive_count=" + std::to_string(r.naive_count) + " adm_count=" + std::to_string(r.adm_count) +
                    " contains_admissible=" + (r.contains_admissible.value_or(false) ? "true" : "false")};
}

Outcome c9_structure()
{
    // comark and mark null vectors
    for (const auto& name : shipped_datum_names()) {
        auto d = load_affine_datum(name);
        if (vec_mat(d.comarks, d.cartan) != Vec(d.size(), 0) || mat_vec(d.cartan, d.marks) != Vec(d.size(), 0))
            return {false, "null vector fails for " + name};
    }
    // Bruhat order against subwords on A(1)_2
    {
        auto g = group("A(1)_2");
        auto ball = oracle::word_ball(g, 4);
        for (const auto& [w, dw] : ball) {
            ReducedWord rw = g.reduced_word(w);
            for (const auto& [v, dv] : ball) {
                bool ref = g.omega_component(v) == g.omega_component(w) && oracle::subword_leq(g, v, rw.word, rw.omega);
                if (g.bruhat_leq(v, w) != ref) return {false, "Bruhat order disagrees with subwords"};
            }
        }
    }
    int data = 0;
    for (const auto& name : shipped_datum_names()) {
        auto d = load_affine_datum(name);
        if (d.size() > 6) continue;
        auto g = group(name);
        ++data;
        for (const Element& tau : g.omega_elements()) {
            std::vector<int> pi = g.node_permutation(tau);
            std::set<int> img(pi.begin(), pi.end());
            if (static_cast<int>(img.size()) != g.nodes()) return {false, "tau does not permute nodes in " + name};
            for (int i = 0; i < g.nodes(); ++i)
                if (g.mul(tau, g.mul(g.simple(i), g.inv(tau))) != g.simple(pi[i])) return {false, "tau conjugation in " + name};
        }
        if (d.twist_order == 1)
            for (int i = 1; i < d.size(); ++i) {
                Vec fw(d.size() - 1, 0);
                fw[i - 1] = 1;
                if (central_charge(d, iota_embed(d, fw)) != 0) return {false, "central charge of iota in " + name};
            }
        for (const auto& [w, len] : oracle::word_ball(g, d.size() <= 3 ? 5 : 4)) {
            ReducedWord rw = g.reduced_word(w);
            if (static_cast<int>(rw.word.size()) != len || g.mul(g.from_word(rw.word), rw.omega) != w)
                return {false, "reduced word round trip in " + name};
        }
    }
    return {true, std::to_string(shipped_datum_names().size()) + " data null vectors; group checks on " + std::to_string(data) + " data"};
}

}  // namespace

int main(int argc, char** argv)
{
    std::string archive = argc > 1 ? argv[1] : "su3_coherence_reports.csv";
    bool gate = false;
    report(4, 60, [&] {
        Outcome o = c4_calibration();
        gate = o.pass;
        return o;
    });
    if (gate) {
        report(1, 300, c1_sl);
        report(2, 120, c2_sp4);
        report(3, 120, [&] { return c3_su3(archive); });
    } else {
        for (int id : {1, 2, 3}) skip(id, "calibration gate C4 failed");
    }
    report(5, 60, c5_hook);
    report(6, 120, c6_points);
    report(7, 10, c7_kottwitz);
    report(8, 180, c8_fiber);
    report(9, 120, c9_structure);
    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}

#include "twloop/loops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "twloop/admissible.hpp"

namespace twl {

namespace {

SMat zero_matrix(const Field* f, int n) { return SMat(n, std::vector<Series>(n, Series::zero(f))); }

Series cst(const Field* f, int c) { return Series::constant(f, c); }

SMat diagonal_of(const Field* f, const Vec& p)
{
    SMat d = zero_matrix(f, static_cast<int>(p.size()));
    for (std::size_t a = 0; a < p.size(); ++a) d[a][a] = Series::monomial(f, 1, p[a]);
    return d;
}

SMat antidiagonal_form(const Field* f, int n)
{
    SMat j = zero_matrix(f, n);
    for (int a = 0; a < n; ++a) j[a][n - 1 - a] = cst(f, 1);
    return j;
}

bool known_positive(const SMat& m)
{
    for (const auto& row : m)
        for (const auto& x : row)
            if (x.precision() <= 0) return false;
    return true;
}

}  // namespace

// ---- Kottwitz ---------------------------------------------------------------

i64 kottwitz_gm(const Series& f) { return f.ord(); }

int kottwitz_norm_one(const Series& a)
{
    const Field* f = a.field();
    if (f->p() == 2) throw DomainError("norm-one torus needs odd q");
    Series norm = a * a.conj();
    if (norm.precision() <= 0) throw PrecisionError("a * conj(a) is not known to first order");
    if (!norm.agrees(cst(f, 1))) throw DomainError("a * conj(a) != 1: " + norm.to_string());
    int c0 = a.coeff(0);
    if (c0 == 1) return 1;
    if (c0 == f->neg(1)) return -1;
    throw DomainError("constant term of a norm-one element is not +-1");
}

bool is_unitary(const SMat& g)
{
    const Field* f = g[0][0].field();
    const int n = static_cast<int>(g.size());
    SMat lhs = smat_mul(smat_mul(smat_transpose(g), antidiagonal_form(f, n)), smat_conj(g));
    if (!known_positive(lhs)) throw PrecisionError("unitarity cannot be certified at this precision");
    return smat_agrees(lhs, antidiagonal_form(f, n));
}

int kottwitz_unitary(const SMat& g)
{
    if (!is_unitary(g)) throw DomainError("matrix is not unitary for the standard hermitian form");
    return kottwitz_norm_one(smat_det(g));
}

SMat kottwitz_sign_element(const Field* f, int n)
{
    if (n < 2) throw DomainError("need n >= 2");
    SMat g = smat_identity(f, n);
    if (n % 2) {
        g[n / 2][n / 2] = cst(f, f->neg(1));
    } else {
        int a = n / 2 - 1, b = n / 2;
        g[a][a] = g[b][b] = Series::zero(f);
        g[a][b] = g[b][a] = cst(f, 1);
    }
    return g;
}

// ---- dictionary -------------------------------------------------------------

int node_of_lattice(int n, int i)
{
    const int m = n / 2;
    if (n < 3) throw DomainError("the ramified unitary dictionary needs n >= 3");
    if (n % 2) {
        if (i < 0 || i > m) throw DomainError("lattice index outside 0.." + std::to_string(m));
        return m - i;
    }
    if (i == kMPrime) return 1;
    if (i == m) return 0;
    if (i >= 0 && i <= m - 2) return m - i;
    throw DomainError("lattice index " + std::to_string(i) + " is not a vertex for n = " + std::to_string(n));
}

int lattice_of_node(int n, int node)
{
    const int m = n / 2;
    if (n % 2 == 0 && node == 1) return kMPrime;
    if (n % 2 == 0 && node == 0) return m;
    if (node < 0 || node > m || (n % 2 == 0 && node < 2)) throw DomainError("node out of range");
    return m - node;
}

std::vector<int> parse_lattice_set(int n, const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        bool prime = item.back() == '\'';
        if (prime) item.pop_back();
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw DomainError("bad lattice index '" + item + "'");
        int v = std::stoi(item);
        if (prime) {
            if (n % 2 || v != n / 2) throw DomainError("only m' = " + std::to_string(n / 2) + "' exists for n = " + std::to_string(n));
            v = kMPrime;
        }
        out.push_back(v);
    }
    if (out.empty()) throw DomainError("empty lattice index set");
    return out;
}

std::string format_lattice_index(int n, int i) { return i == kMPrime ? std::to_string(n / 2) + "'" : std::to_string(i); }

std::vector<int> i_sharp(int n, std::vector<int> idx)
{
    const int m = n / 2;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    bool has_prime = std::count(idx.begin(), idx.end(), kMPrime) > 0;
    bool has_m = std::count(idx.begin(), idx.end(), m) > 0;
    if (has_prime) {
        if (!has_m) throw DomainError("m' in I requires m in I");
        std::replace(idx.begin(), idx.end(), kMPrime, m - 1);
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    }
    return idx;
}

Vec standard_exponents(int n, int i)
{
    Vec p(n, 0);
    if (i == kMPrime) {
        if (n % 2) throw DomainError("lambda_m' exists only for even n");
        const int m = n / 2;
        for (int a = 0; a < n; ++a) p[a] = (a <= m - 2 || a == m) ? -1 : 0;
        return p;
    }
    if (i < 0 || i > n) throw DomainError("lattice index outside 0..n");
    for (int a = 0; a < i; ++a) p[a] = -1;
    return p;
}

// ---- loop groups ------------------------------------------------------------

LoopGroup::LoopGroup(LoopKind kind, int n, int q) : kind_(kind), n_(n), field_(std::make_shared<Field>(q))
{
    if (kind == LoopKind::SplitSL && (n < 2 || n > 4)) throw DomainError("split SL_n cells support 2 <= n <= 4");
    if (kind == LoopKind::SU3) {
        if (n != 3) throw DomainError("ramified unitary cells are implemented for n = 3 only");
        if (field_->p() == 2) throw DomainError("ramified SU_3 needs odd q");
    }
    weyl_ = std::make_shared<WeylGroup>(echelon_system(load_affine_datum(datum_name()), 0));
    // each root subgroup and lift must preserve the form (SU3) or have det 1
    for (int i = 0; i < nodes(); ++i)
        for (int x = 0; x < q; ++x) {
            SMat m = smat_mul(root_subgroup(i, x), weyl_lift(i));
            if (kind == LoopKind::SU3 && !is_unitary(m)) throw std::logic_error("SU_3 generator is not unitary");
            if (!smat_det(m).agrees(cst(field(), 1))) throw std::logic_error("generator has det != 1");
        }
}

std::string LoopGroup::datum_name() const
{
    return kind_ == LoopKind::SU3 ? "A(2)_2" : "A(1)_" + std::to_string(n_ - 1);
}

SMat LoopGroup::root_subgroup(int node, int x) const
{
    const Field* f = field();
    if (node < 0 || node >= nodes()) throw DomainError("node out of range");
    SMat m = smat_identity(f, n_);
    if (kind_ == LoopKind::SplitSL) {
        if (node == 0)
            m[n_ - 1][0] = Series::monomial(f, x, 1);
        else
            m[node - 1][node] = cst(f, x);
        return m;
    }
    if (node == 0) {
        // the multipliable root: entries -x, x and -x^2/2
        m[0][1] = cst(f, f->neg(x));
        m[1][2] = cst(f, x);
        m[0][2] = cst(f, f->neg(f->mul(f->mul(x, x), f->inv(2))));
    } else {
        m[2][0] = Series::monomial(f, f->neg(x), 1);
    }
    return m;
}

SMat LoopGroup::weyl_lift(int node) const
{
    const Field* f = field();
    if (node < 0 || node >= nodes()) throw DomainError("node out of range");
    SMat m = smat_identity(f, n_);
    if (kind_ == LoopKind::SplitSL) {
        int a = node == 0 ? n_ - 1 : node - 1;
        int b = node == 0 ? 0 : node;
        m[a][a] = m[b][b] = Series::zero(f);
        if (node == 0) {
            m[n_ - 1][0] = Series::monomial(f, 1, 1);
            m[0][n_ - 1] = Series::monomial(f, f->neg(1), -1);
        } else {
            m[a][b] = cst(f, 1);
            m[b][a] = cst(f, f->neg(1));
        }
        return m;
    }
    m = zero_matrix(f, 3);
    if (node == 0) {
        m[0][2] = cst(f, f->neg(f->inv(2)));
        m[1][1] = cst(f, f->neg(1));
        m[2][0] = cst(f, f->neg(2 % f->p()));
    } else {
        m[0][2] = Series::monomial(f, f->neg(1), -1);
        m[1][1] = cst(f, 1);
        m[2][0] = Series::monomial(f, 1, 1);
    }
    return m;
}

std::vector<int> LoopGroup::full_chain() const
{
    std::vector<int> out(n_);
    for (int j = 0; j < n_; ++j) out[j] = j;
    return out;
}

std::vector<int> LoopGroup::chain_positions(const std::vector<int>& isharp) const
{
    std::set<int> pos;
    for (int i : isharp) {
        if (i < 0 || i >= n_) throw DomainError("chain position out of range");
        pos.insert(i);
        if (kind_ == LoopKind::SU3) pos.insert((n_ - i) % n_);
    }
    return {pos.begin(), pos.end()};
}

LatticeChain LoopGroup::act(const SMat& g, const std::vector<int>& positions, int box) const
{
    LatticeChain c;
    c.indices = positions;
    for (int j : positions) c.lattices.push_back(Lattice::from_columns(smat_mul(g, diagonal_of(field(), standard_exponents(n_, j))), box));
    return c;
}

LatticeChain LoopGroup::standard_chain(const std::vector<int>& positions, int box) const
{
    return act(smat_identity(field(), n_), positions, box);
}

// ---- chain validation -------------------------------------------------------

ChainCheck validate_chain(const LoopGroup& g, const LatticeChain& chain)
{
    ChainCheck out;
    auto fail = [&](std::string why) {
        out.ok = false;
        out.failure = std::move(why);
        return out;
    };
    if (chain.lattices.empty() || chain.lattices.size() != chain.indices.size()) return fail("malformed chain");
    const int box = chain.lattices[0].box() + 1;
    std::vector<Lattice> ls, st;
    LatticeChain std_chain = g.standard_chain(chain.indices, box);
    for (std::size_t k = 0; k < chain.lattices.size(); ++k) {
        ls.push_back(chain.lattices[k].rebox(box));
        st.push_back(std_chain.lattices[k]);
    }
    const std::size_t len = ls.size();
    for (std::size_t k = 0; k < len; ++k)
        if (!ls[k].u_stable()) return fail("lattice " + std::to_string(chain.indices[k]) + " is not u-stable");
    for (std::size_t k = 0; k < len; ++k) {
        const Lattice& lo = ls[k];
        Lattice hi = k + 1 < len ? ls[k + 1] : ls[0].shifted(-1);
        Lattice slo = st[k];
        Lattice shi = k + 1 < len ? st[k + 1] : st[0].shifted(-1);
        std::string tag = std::to_string(chain.indices[k]);
        if (hi.dim() - lo.dim() != shi.dim() - slo.dim()) return fail("rank of the quotient after lattice " + tag);
        if (!hi.contains(lo)) return fail("inclusion after lattice " + tag);
    }
    if (g.kind() == LoopKind::SU3) {
        for (std::size_t k = 0; k < len; ++k) {
            std::string tag = std::to_string(chain.indices[k]);
            Lattice d = ls[k].hermitian_dual().shifted(-1);
            Lattice sd = st[k].hermitian_dual().shifted(-1);
            if (d.dim() - ls[k].dim() != sd.dim() - st[k].dim()) return fail("rank of the dual quotient at lattice " + tag);
            // u L in L^ u^-1 in u^-1 L up to the side the standard chain sits on
            for (int shift : {-1, 0, 1}) {
                Lattice a = ls[k].shifted(shift), sa = st[k].shifted(shift);
                if (sa.contains(sd) && !a.contains(d)) return fail("duality sandwich at lattice " + tag);
                if (sd.contains(sa) && !d.contains(a)) return fail("duality sandwich at lattice " + tag);
            }
        }
    }
    for (std::size_t k = 0; k < len; ++k)
        if (ls[k].volume() != st[k].volume()) return fail("determinant (volume) of lattice " + std::to_string(chain.indices[k]));
    return out;
}

// ---- cells ------------------------------------------------------------------

std::vector<LatticeChain> cell_points(const LoopGroup& g, const std::vector<int>& word,
                                      const std::vector<int>& positions, int box, std::size_t cap)
{
    const WeylGroup& w = g.weyl();
    for (int i : word)
        if (i < 0 || i >= g.nodes()) throw DomainError("node " + std::to_string(i) + " out of range");
    if (w.length(w.from_word(word)) != static_cast<int>(word.size())) throw DomainError("word is not reduced");
    const int q = g.field()->q();
    std::size_t total = 1;
    for (std::size_t k = 0; k < word.size(); ++k) {
        total *= static_cast<std::size_t>(q);
        if (total > cap) throw CapExceeded("cell points", cap);
    }
    if (box <= 0) box = static_cast<int>(word.size()) + 2;
    std::vector<LatticeChain> out;
    out.reserve(total);
    std::vector<SMat> lifts;
    for (int i = 0; i < g.nodes(); ++i) lifts.push_back(g.weyl_lift(i));
    std::function<void(std::size_t, const SMat&)> rec = [&](std::size_t k, const SMat& prefix) {
        if (k == word.size()) {
            out.push_back(g.act(prefix, positions, box));
            return;
        }
        for (int x = 0; x < q; ++x) rec(k + 1, smat_mul(smat_mul(prefix, g.root_subgroup(word[k], x)), lifts[word[k]]));
    };
    rec(0, smat_identity(g.field(), g.n()));
    return out;
}

i64 schubert_count(const WeylGroup& g, const Element& w, int q, NodeSet modulo, std::size_t cap)
{
    BruhatGraph bg = bruhat_interval(g, {w}, modulo, cap);
    i64 total = 0;
    for (int len : bg.lengths) {
        i64 p = 1;
        for (int k = 0; k < len; ++k)
            if (__builtin_mul_overflow(p, static_cast<i64>(q), &p)) throw DomainError("schubert count overflows 64 bits");
        if (__builtin_add_overflow(total, p, &total)) throw DomainError("schubert count overflows 64 bits");
    }
    return total;
}

// ---- special fiber of the naive local model -------------------------------

namespace {

using Rows = std::vector<std::vector<int>>;

// RREF bases of all k-dimensional subspaces of F_q^n.
void for_each_subspace(const Field* f, int n, int k, const std::function<void(const Rows&)>& fn)
{
    std::vector<int> piv(k);
    std::function<void(int, int)> choose = [&](int idx, int start) {
        if (idx == k) {
            std::vector<std::pair<int, int>> free;  // (row, col)
            std::vector<bool> is_piv(n, false);
            for (int c : piv) is_piv[c] = true;
            for (int r = 0; r < k; ++r)
                for (int c = piv[r] + 1; c < n; ++c)
                    if (!is_piv[c]) free.emplace_back(r, c);
            std::vector<int> val(free.size(), 0);
            while (true) {
                Rows rows(k, std::vector<int>(n, 0));
                for (int r = 0; r < k; ++r) rows[r][piv[r]] = 1;
                for (std::size_t t = 0; t < free.size(); ++t) rows[free[t].first][free[t].second] = val[t];
                fn(rows);
                std::size_t t = 0;
                while (t < val.size() && ++val[t] == f->q()) val[t++] = 0;
                if (t == val.size()) break;
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            piv[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
}

// u-stable n-dimensional subspaces of k^n (+) u k^n, coordinates (layer, a) -> layer n + a.
std::vector<Subspace> u_stable_subspaces(const Field* f, int n)
{
    std::vector<Subspace> out;
    for (int e = 0; 2 * e <= n; ++e) {
        for_each_subspace(f, n, e, [&](const Rows& bar) {
            Subspace bar_s(f, n, bar);
            for_each_subspace(f, n, n - e, [&](const Rows& krows) {
                Subspace ks(f, n, krows);
                if (!ks.contains(bar_s)) return;
                std::vector<int> freecols;
                std::vector<bool> is_piv(n, false);
                for (int c : ks.pivots()) is_piv[c] = true;
                for (int c = 0; c < n; ++c)
                    if (!is_piv[c]) freecols.push_back(c);
                const int slots = e * static_cast<int>(freecols.size());
                std::vector<int> val(slots, 0);
                while (true) {
                    Rows rows;
                    for (int r = 0; r < e; ++r) {
                        std::vector<int> v(2 * n, 0);
                        for (int a = 0; a < n; ++a) v[a] = bar[r][a];
                        for (std::size_t t = 0; t < freecols.size(); ++t) v[n + freecols[t]] = val[r * freecols.size() + t];
                        rows.push_back(std::move(v));
                    }
                    for (const auto& kr : krows) {
                        std::vector<int> v(2 * n, 0);
                        for (int a = 0; a < n; ++a) v[n + a] = kr[a];
                        rows.push_back(std::move(v));
                    }
                    out.emplace_back(f, 2 * n, std::move(rows));
                    int t = 0;
                    while (t < slots && ++val[t] == f->q()) val[t++] = 0;
                    if (t == slots) break;
                }
            });
        });
    }
    return out;
}

// Pairing Lambda_{-j} (x) k  x  Lambda_j (x) k -> k from <,>, with Lambda_{-j}
// written in the coordinates of Lambda_{n-j} via u.
Rows duality_form(const Field* f, int n, int j)
{
    Vec px = standard_exponents(n, n - j), py = standard_exponents(n, j);
    Rows b(2 * n, std::vector<int>(2 * n, 0));
    for (int lx = 0; lx < 2; ++lx)
        for (int a = 0; a < n; ++a)
            for (int ly = 0; ly < 2; ++ly) {
                int bb = n - 1 - a;
                i64 P = px[a] + 1 + lx, Q = py[bb] + ly;
                if (P + Q != 1) continue;
                b[lx * n + a][ly * n + bb] = f->from_int(Q % 2 == 0 ? 2 : -2);
            }
    return b;
}

// image of Lambda_j (x) k in Lambda_j' (x) k for exponents p (source) and p2 (target)
Subspace transport(const Subspace& e, const Vec& p, const Vec& p2)
{
    const Field* f = e.field();
    const int n = static_cast<int>(p.size());
    Rows rows;
    for (const auto& r : e.rows()) {
        std::vector<int> v(2 * n, 0);
        for (int l = 0; l < 2; ++l)
            for (int a = 0; a < n; ++a) {
                if (!r[l * n + a]) continue;
                i64 d = p[a] - p2[a];
                if (d < 0) throw std::logic_error("transport against the chain order");
                i64 l2 = l + d;
                if (l2 <= 1) v[l2 * n + a] = r[l * n + a];
            }
        rows.push_back(std::move(v));
    }
    return Subspace(f, 2 * n, std::move(rows));
}

double gaussian(int n, int k, int q)
{
    double num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= std::pow(q, n - i) - 1;
        den *= std::pow(q, i + 1) - 1;
    }
    return num / den;
}

// Ebar in Gr(e, n), then K in layer 1 of dim n - e containing u Ebar, then a lift
double candidate_count(int n, int q)
{
    double total = 0;
    for (int e = 0; 2 * e <= n; ++e) total += gaussian(n, e, q) * gaussian(n - e, n - 2 * e, q) * std::pow(q, e * e);
    return total;
}

std::vector<int> normalized_isharp(int n, const std::vector<int>& indices)
{
    const int m = n / 2;
    std::vector<int> idx = indices;
    // an I sharp given with m-1 (even n) stands for {.., m, m'}
    if (n % 2 == 0 && std::count(idx.begin(), idx.end(), m - 1) && !std::count(idx.begin(), idx.end(), m))
        throw DomainError("m-1 is not a vertex unless it replaces m'");
    idx = i_sharp(n, idx);
    for (int i : idx)
        if (i < 0 || i > m) throw DomainError("index " + std::to_string(i) + " outside 0.." + std::to_string(m));
    return idx;
}

}  // namespace

FiberRecord enumerate_fiber(int n, int r, int q, const std::vector<int>& indices, const FiberOptions& opt)
{
    if (n < 3 || n > 4) throw DomainError("fiber enumeration supports n = 3, 4");
    if (r < 0 || r > n) throw DomainError("need 0 <= r <= n");
    Field fld(q);
    const Field* f = &fld;
    if (f->p() == 2) throw DomainError("fiber enumeration needs odd q");

    FiberRecord rec;
    rec.n = n;
    rec.r = r;
    rec.s = n - r;
    rec.q = q;
    rec.isharp = normalized_isharp(n, indices);
    const int m = n / 2;

    std::set<int> pos;
    for (int i : rec.isharp) {
        pos.insert(i);
        pos.insert((n - i) % n);
    }
    rec.positions.assign(pos.begin(), pos.end());
    const int len = static_cast<int>(rec.positions.size());

    // Parahoric labels I (m-1 -> m' once more) give the node set Y.
    std::vector<int> labels = rec.isharp;
    if (n % 2 == 0 && std::count(labels.begin(), labels.end(), m) && std::count(labels.begin(), labels.end(), m - 1))
        std::replace(labels.begin(), labels.end(), m - 1, kMPrime);
    for (int i : labels) rec.y |= node_bit(node_of_lattice(n, i));

    // Gaussian-binomial size of the candidate list, checked before building it
    const double ncand = candidate_count(n, q);
    if (ncand > static_cast<double>(opt.cap)) throw CapExceeded("fiber candidates", opt.cap);
    std::vector<Subspace> cand = u_stable_subspaces(f, n);
    if (static_cast<double>(cand.size()) != ncand) throw std::logic_error("candidate count disagrees with the Gaussian binomial formula");
    rec.candidates = static_cast<i64>(cand.size());
    if (opt.assert_nilpotent) {
        // u^2 = 0 on k^n (+) u k^n, so the characteristic polynomial of u on E is T^n
        for (const Subspace& e : cand) {
            for (const auto& row : e.rows()) {
                std::vector<int> u1(2 * n, 0);
                for (int a = 0; a < n; ++a) u1[n + a] = row[a];
                if (!e.contains(u1)) throw std::logic_error("candidate is not u-stable");
            }
        }
    }

    // each containment test is one unit of work
    const std::size_t work_cap = opt.cap * 10;
    std::size_t work = 0;
    std::vector<int> partner(len);
    for (int t = 0; t < len; ++t) {
        int pj = (n - rec.positions[t]) % n;
        partner[t] = static_cast<int>(std::find(rec.positions.begin(), rec.positions.end(), pj) - rec.positions.begin());
    }
    std::vector<Vec> expo(len);
    std::vector<Rows> forms(len);
    for (int t = 0; t < len; ++t) {
        expo[t] = standard_exponents(n, rec.positions[t]);
        forms[t] = duality_form(f, n, rec.positions[t]);
    }
    Vec wrap = expo[0];
    for (auto& x : wrap) x -= 1;

    std::vector<std::vector<Subspace>> selfdual(len);
    for (int t = 0; t < len; ++t)
        if (partner[t] == t)
            for (const Subspace& e : cand)
                if (e.perp(forms[t]) == e) selfdual[t].push_back(e);

    std::set<std::vector<Subspace>> accepted;
    std::vector<Subspace> cur(len);
    std::function<void(int)> rec_fn = [&](int t) {
        if (t == len) {
            if (cur[0].contains(transport(cur[len - 1], expo[len - 1], wrap))) accepted.insert(cur);
            return;
        }
        auto try_one = [&](const Subspace& e) {
            if (++work > work_cap) throw CapExceeded("fiber containment tests", work_cap);
            if (t > 0 && !e.contains(transport(cur[t - 1], expo[t - 1], expo[t]))) return;
            cur[t] = e;
            rec_fn(t + 1);
        };
        if (partner[t] < t) {
            // E_{n-j} is the complement of E_j under the pairing at position j
            Subspace d = cur[partner[t]].perp(forms[partner[t]]);
            if (d.rank() != n) throw std::logic_error("dual subspace has the wrong rank");
            try_one(d);
        } else if (partner[t] == t) {
            for (const Subspace& e : selfdual[t]) try_one(e);
        } else {
            for (const Subspace& e : cand) try_one(e);
        }
    };
    rec_fn(0);
    rec.naive_count = static_cast<i64>(accepted.size());

    // admissible side
    const std::string dname = n == 3 ? "A(2)_2" : "A(2)_3";
    WeylGroup g(echelon_system(load_affine_datum(dname), 0));
    Vec mu(n, 0);
    for (int a = 0; a < r; ++a) mu[a] = 1;
    Vec lambda = project_coweight(mu, g.affine(), g.finite()).lambda;
    AdmissibleSet as = adm(g, lambda, opt.interval_cap);
    AdmissibleY ay = adm_Y(g, as, rec.y, opt.interval_cap);
    rec.adm_count = 0;
    for (const Element& w : ay.mod_right) {
        i64 p = 1;
        for (int k = 0; k < g.length(w); ++k) p *= q;
        rec.adm_count += p;
    }

    if (n == 3) {
        LoopGroup su(LoopKind::SU3, 3, q);
        bool inside = true;
        std::set<std::vector<Subspace>> seen;
        for (const Element& w : ay.mod_right) {
            ReducedWord rw = g.reduced_word(w);
            if (!(rw.omega == g.identity())) throw std::logic_error("admissible representative outside W_a");
            // the standard lattices are taken in SU_3's own numbering of positions
            int box = static_cast<int>(rw.word.size()) + 2;
            auto points = cell_points(su, rw.word, rec.positions, box, opt.cap);
            LatticeChain base = su.standard_chain(rec.positions, box);
            for (const LatticeChain& c : points) {
                std::vector<Subspace> es;
                bool ok = true;
                for (int t = 0; t < len && ok; ++t) {
                    const Lattice& L = c.lattices[t];
                    const Lattice& lam = base.lattices[t];
                    if (!L.contains(lam.shifted(1)) || !lam.shifted(-1).contains(L)) {
                        ok = false;
                        break;
                    }
                    Lattice ul = L.shifted(1);
                    Rows rows;
                    for (const auto& row : ul.space().rows()) {
                        std::vector<int> v(2 * n, 0);
                        for (int l = 0; l < 2; ++l)
                            for (int a = 0; a < n; ++a) {
                                i64 e = expo[t][a] + l;
                                v[l * n + a] = row[ul.index(static_cast<int>(e), a)];
                            }
                        rows.push_back(std::move(v));
                    }
                    es.emplace_back(f, 2 * n, std::move(rows));
                    if (es.back().rank() != n) ok = false;
                }
                if (!ok || !accepted.count(es)) inside = false;
                seen.insert(es);
            }
        }
        rec.contains_admissible = inside;
        rec.admissible_points = static_cast<i64>(seen.size());
    }
    return rec;
}

}  // namespace twl

#include "twloop/root_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <set>

namespace twl {

namespace {

struct Diagram {
    int size = 0;
    std::vector<i64> len;  // squared root lengths up to a common factor
    std::vector<std::pair<int, int>> edges;
};

IMat matrix_from_diagram(const Diagram& g)
{
    IMat a(g.size, Vec(g.size, 0));
    for (int i = 0; i < g.size; ++i) a[i][i] = 2;
    for (auto [i, j] : g.edges) {
        i64 m = std::max(g.len[i], g.len[j]);
        if (m % g.len[i] || m % g.len[j]) throw DomainError("incompatible root lengths in diagram");
        a[i][j] = -m / g.len[i];
        a[j][i] = -m / g.len[j];
    }
    return a;
}

Diagram chain(int size, std::vector<i64> len)
{
    Diagram g;
    g.size = size;
    g.len = std::move(len);
    for (int i = 0; i + 1 < size; ++i) g.edges.push_back({i, i + 1});
    return g;
}

[[noreturn]] void unsupported(const std::string& name, const std::string& why)
{
    throw DomainError("unsupported affine datum '" + name + "': " + why);
}

AffineRootDatum build(const std::string& name, char x, int k, int n)
{
    AffineRootDatum d;
    d.name = name;
    d.twist_order = k;
    Diagram g;
    auto need = [&](bool ok, const char* why) {
        if (!ok) unsupported(name, why);
    };

    if (k == 1) {
        d.split_parent = std::string(1, x) + std::to_string(n);
        switch (x) {
        case 'A':
            need(n >= 1, "rank must be >= 1");
            if (n == 1) {
                d.cartan = {{2, -2}, {-2, 2}};
                break;
            }
            g = chain(n + 1, std::vector<i64>(n + 1, 1));
            g.edges.push_back({n, 0});
            break;
        case 'B':
            need(n >= 3, "B(1)_n needs n >= 3");
            g.size = n + 1;
            g.len.assign(n + 1, 2);
            g.len[n] = 1;
            g.edges.push_back({0, 2});
            for (int i = 1; i < n; ++i) g.edges.push_back({i, i + 1});
            break;
        case 'C': {
            need(n >= 2, "C(1)_n needs n >= 2");
            std::vector<i64> len(n + 1, 1);
            len[0] = len[n] = 2;
            g = chain(n + 1, len);
            break;
        }
        case 'D':
            need(n >= 4, "D(1)_n needs n >= 4");
            g.size = n + 1;
            g.len.assign(n + 1, 1);
            g.edges.push_back({0, 2});
            for (int i = 1; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
            g.edges.push_back({n - 2, n});
            break;
        case 'E':
            need(n >= 6 && n <= 8, "E(1)_n needs 6 <= n <= 8");
            g.size = n + 1;
            g.len.assign(n + 1, 1);
            g.edges = {{1, 3}, {2, 4}};
            for (int i = 3; i < n; ++i) g.edges.push_back({i, i + 1});
            if (n == 6) g.edges.push_back({0, 2});
            if (n == 7) g.edges.push_back({0, 1});
            if (n == 8) g.edges.push_back({0, 8});
            break;
        case 'F':
            need(n == 4, "F(1)_n needs n = 4");
            g = chain(5, {2, 2, 2, 1, 1});
            break;
        case 'G':
            need(n == 2, "G(1)_n needs n = 2");
            g = chain(3, {3, 3, 1});
            break;
        default:
            unsupported(name, "unknown family");
        }
    } else if (k == 2) {
        if (x == 'A' && n % 2 == 0) {
            int l = n / 2;
            need(l >= 1, "A(2)_2l needs l >= 1");
            d.split_parent = "A" + std::to_string(n);
            if (l == 1) {
                d.cartan = {{2, -4}, {-1, 2}};
            } else {
                std::vector<i64> len(l + 1, 2);
                len[0] = 1;
                len[l] = 4;
                g = chain(l + 1, len);
            }
        } else if (x == 'A') {
            int l = (n + 1) / 2;
            need(l >= 2, "A(2)_(2l-1) needs l >= 2");
            d.split_parent = "A" + std::to_string(n);
            g.size = l + 1;
            g.len.assign(l + 1, 1);
            g.len[l] = 2;
            g.edges = {{0, 2}, {1, 2}};
            for (int i = 2; i < l; ++i) g.edges.push_back({i, i + 1});
        } else if (x == 'D') {
            int l = n - 1;
            need(l >= 2, "D(2)_n needs n >= 3");
            d.split_parent = "D" + std::to_string(n);
            std::vector<i64> len(l + 1, 2);
            len[0] = len[l] = 1;
            g = chain(l + 1, len);
        } else if (x == 'E' && n == 6) {
            d.split_parent = "E6";
            g = chain(5, {1, 1, 1, 2, 2});
        } else {
            unsupported(name, "no twisted form in the Kac tables");
        }
    } else if (k == 3) {
        need(x == 'D' && n == 4, "only D(3)_4 has twist order 3");
        d.split_parent = "D4";
        g = chain(3, {1, 1, 3});
    } else {
        unsupported(name, "twist order must be 1, 2 or 3");
    }
    if (d.cartan.empty()) d.cartan = matrix_from_diagram(g);
    d.kappa.assign(d.cartan.size(), 1);
    if (k == 2 && x == 'A' && n % 2 == 0) d.kappa[0] = 2;
    return d;
}

}  // namespace

std::pair<char, int> parse_finite_type(const std::string& type)
{
    static const std::regex re("^([A-G])([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(type, m, re)) throw DomainError("bad finite type '" + type + "'");
    return {m[1].str()[0], std::stoi(m[2].str())};
}

IMat finite_cartan(const std::string& type)
{
    auto [x, n] = parse_finite_type(type);
    Diagram g;
    switch (x) {
    case 'A':
        if (n < 1) break;
        g = chain(n, std::vector<i64>(n, 1));
        break;
    case 'B': {
        if (n < 2) break;
        std::vector<i64> len(n, 2);
        len[n - 1] = 1;
        g = chain(n, len);
        break;
    }
    case 'C': {
        if (n < 2) break;
        std::vector<i64> len(n, 1);
        len[n - 1] = 2;
        g = chain(n, len);
        break;
    }
    case 'D':
        if (n < 3) break;
        g.size = n;
        g.len.assign(n, 1);
        for (int i = 0; i + 2 < n; ++i) g.edges.push_back({i, i + 1});
        g.edges.push_back({n - 3, n - 1});
        break;
    case 'E':
        if (n < 6 || n > 8) break;
        g.size = n;
        g.len.assign(n, 1);
        g.edges = {{0, 2}, {1, 3}};
        for (int i = 2; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
        break;
    case 'F':
        if (n != 4) break;
        g = chain(4, {2, 2, 1, 1});
        break;
    case 'G':
        if (n != 2) break;
        g = chain(2, {3, 1});
        break;
    }
    if (g.size == 0) throw DomainError("unsupported finite type '" + type + "'");
    return matrix_from_diagram(g);
}

AffineRootDatum complete_datum(AffineRootDatum d)
{
    const int n = d.size();
    if (n < 2) throw DomainError("affine Cartan matrix must have at least two nodes");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(d.cartan[i].size()) != n) throw DomainError("Cartan matrix is not square");
        if (d.cartan[i][i] != 2) throw DomainError("Cartan matrix needs 2 on the diagonal");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (d.cartan[i][j] > 0) throw DomainError("off-diagonal Cartan entries must be <= 0");
            if ((d.cartan[i][j] == 0) != (d.cartan[j][i] == 0))
                throw DomainError("Cartan matrix violates a_ij = 0 <=> a_ji = 0");
        }
    }
    d.marks = kernel_vector(d.cartan);
    d.comarks = kernel_vector(transpose(d.cartan));
    for (i64 v : d.marks)
        if (v <= 0) throw DomainError("matrix is not of affine type (marks not positive)");
    for (i64 v : d.comarks)
        if (v <= 0) throw DomainError("matrix is not of affine type (comarks not positive)");
    if (std::find(d.comarks.begin(), d.comarks.end(), 1) == d.comarks.end())
        throw DomainError("no node with comark 1");
    if (d.kappa.empty()) d.kappa.assign(n, 1);
    if (static_cast<int>(d.kappa.size()) != n) throw DomainError("kappa has the wrong length");
    for (int k : d.kappa)
        if (k != 1 && k != 2) throw DomainError("kappa entries must be 1 or 2");
    if (d.twist_order < 1 || d.twist_order > 3) throw DomainError("twist order must be 1, 2 or 3");
    return d;
}

const std::vector<std::string>& shipped_datum_names()
{
    static const std::vector<std::string> names = {
        "A(1)_1", "A(1)_2", "A(1)_3", "A(1)_4", "B(1)_3", "B(1)_4", "C(1)_2", "C(1)_3", "D(1)_4",
        "D(1)_5", "E(1)_6", "E(1)_7", "E(1)_8", "F(1)_4", "G(1)_2", "A(2)_2", "A(2)_4", "A(2)_6",
        "A(2)_3", "A(2)_5", "A(2)_7", "D(2)_3", "D(2)_4", "D(2)_5", "E(2)_6", "D(3)_4",
    };
    return names;
}

AffineRootDatum load_affine_datum(const std::string& name)
{
    if (name == "G(2)_twisted") {
        AffineRootDatum d = load_affine_datum("D(3)_4");
        d.name = name;
        return d;
    }
    static const std::regex re("^([A-G])\\(([123])\\)_([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(name, m, re))
        throw DomainError("unknown affine datum '" + name + "' (expected e.g. A(1)_2, C(1)_2, A(2)_2)");
    return complete_datum(build(name, m[1].str()[0], std::stoi(m[2].str()), std::stoi(m[3].str())));
}

AffineRootDatum datum_from_json(const nlohmann::json& j)
{
    AffineRootDatum d;
    try {
        d.name = j.at("name").get<std::string>();
        d.cartan = j.at("cartan").get<IMat>();
        d.twist_order = j.at("twist_order").get<int>();
        if (j.contains("kappa")) d.kappa = j.at("kappa").get<std::vector<int>>();
        if (j.contains("split_parent")) d.split_parent = j.at("split_parent").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed root datum: ") + e.what());
    }
    return complete_datum(std::move(d));
}

nlohmann::json datum_to_json(const AffineRootDatum& d)
{
    nlohmann::json j;
    j["name"] = d.name;
    j["cartan"] = d.cartan;
    j["marks"] = d.marks;
    j["comarks"] = d.comarks;
    j["twist_order"] = d.twist_order;
    j["kappa"] = d.kappa;
    j["split_parent"] = d.split_parent;
    return j;
}

std::vector<Vec> positive_roots(const IMat& c)
{
    const int l = static_cast<int>(c.size());
    std::set<Vec> seen;
    std::vector<Vec> frontier;
    for (int i = 0; i < l; ++i) {
        Vec e(l, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& r : frontier)
            for (int i = 0; i < l; ++i) {
                i64 p = 0;
                for (int j = 0; j < l; ++j) p += r[j] * c[i][j];
                if (p == 0) continue;
                Vec s = r;
                s[i] -= p;
                if (std::any_of(s.begin(), s.end(), [](i64 v) { return v < 0; })) continue;
                if (seen.size() > 10000) throw DomainError("Cartan matrix is not of finite type");
                if (seen.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<Vec> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        i64 ha = std::accumulate(a.begin(), a.end(), i64(0));
        i64 hb = std::accumulate(b.begin(), b.end(), i64(0));
        if (ha != hb) return ha < hb;
        return a > b;
    });
    return out;
}

Vec reflect_weight(const IMat& cartan, int i, const Vec& weight)
{
    // alpha_i = sum_j a_ji eps_j
    i64 p = weight[i];
    Vec out = weight;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= p * cartan[j][i];
    return out;
}

Vec reflect_coroot(const IMat& cartan, int i, const Vec& coroot)
{
    // alpha_i(alpha_m^vee) = a_mi
    i64 p = 0;
    for (std::size_t m = 0; m < coroot.size(); ++m) p += coroot[m] * cartan[m][i];
    Vec out = coroot;
    out[i] -= p;
    return out;
}

Rational pairing(const std::vector<Rational>& weight, const Vec& coroot)
{
    if (weight.size() != coroot.size()) throw DomainError("pairing: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * coroot[i];
    return s;
}

i64 pairing(const Vec& weight, const Vec& coroot)
{
    if (weight.size() != coroot.size()) throw DomainError("pairing: dimension mismatch");
    i64 s = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * coroot[i];
    return s;
}

FiniteRootDatum echelon_system(const AffineRootDatum& datum, int x)
{
    const int n = datum.size();
    if (x < 0 || x >= n) throw DomainError("special node out of range");
    if (datum.comarks[x] != 1)
        throw DomainError("node " + std::to_string(x) + " is not special (comark " +
                          std::to_string(datum.comarks[x]) + ")");
    FiniteRootDatum f;
    f.base = std::make_shared<AffineRootDatum>(datum);
    f.special = x;
    f.finite_index.assign(n, -1);
    for (int i = 0; i < n; ++i)
        if (i != x) {
            f.finite_index[i] = static_cast<int>(f.nodes.size());
            f.nodes.push_back(i);
        }
    const int l = f.rank();
    f.gcm_cartan.assign(l, Vec(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) f.gcm_cartan[i][j] = datum.cartan[f.nodes[i]][f.nodes[j]];

    // vector part of the affine coroot, in simple-coroot coordinates
    const i64 ax = datum.marks[x];
    Vec h(l);
    for (int i = 0; i < l; ++i) {
        i64 c = datum.comarks[f.nodes[i]];
        if (c % ax) throw DomainError("theta coroot is not integral in coroot coordinates");
        h[i] = c / ax;
    }
    std::set<Vec> orbit{h};
    std::vector<Vec> todo{h};
    while (!todo.empty()) {
        Vec v = todo.back();
        todo.pop_back();
        for (int i = 0; i < l; ++i) {
            Vec w = reflect_coroot(f.gcm_cartan, i, v);
            if (orbit.insert(w).second) todo.push_back(w);
        }
    }
    IMat gens(orbit.begin(), orbit.end());
    SmithForm m = smith_form(gens, l);
    if (m.order() == 0) throw DomainError("translation lattice is not of full rank");
    f.scale.assign(l, 0);
    for (int i = 0; i < l; ++i) {
        for (i64 c = 1; c <= m.order(); ++c) {
            Vec e(l, 0);
            e[i] = c;
            if (m.contains(e)) {
                f.scale[i] = c;
                break;
            }
        }
    }
    f.cartan.assign(l, Vec(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            i64 num = f.scale[i] * f.gcm_cartan[i][j];
            if (num % f.scale[j]) throw DomainError("echelonnage Cartan matrix is not integral");
            f.cartan[i][j] = num / f.scale[j];
        }
    f.positive_roots = positive_roots(f.cartan);
    f.highest_root = f.positive_roots.back();
    Vec theta(l);
    for (int i = 0; i < l; ++i) theta[i] = datum.marks[f.nodes[i]] * f.scale[i];
    if (theta != f.highest_root)
        throw DomainError("affine node does not match the highest root of the echelonnage system");

    auto to_coweight = [&](const Vec& cor) {
        Vec out(l, 0);
        for (int j = 0; j < l; ++j) {
            i64 s = 0;
            for (int mm = 0; mm < l; ++mm) s += cor[mm] * f.gcm_cartan[mm][j];
            if (s % f.scale[j]) throw DomainError("coroot is not in the coweight lattice");
            out[j] = s / f.scale[j];
        }
        return out;
    };
    f.h_theta = to_coweight(h);
    for (const Vec& g : gens) f.coroot_lattice.push_back(to_coweight(g));
    f.omega = smith_form(f.coroot_lattice, l);

    f.rho.assign(l, Rational(0));
    for (const Vec& r : f.positive_roots)
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) f.rho[j] += Rational(r[i] * f.cartan[j][i], 2);
    return f;
}

Vec coweight_coordinates(const Vec& mu, const std::string& split_parent)
{
    auto [x, n] = parse_finite_type(split_parent);
    if (static_cast<int>(mu.size()) == n) return mu;
    if (x == 'A' && static_cast<int>(mu.size()) == n + 1) {
        Vec out(n);
        for (int i = 0; i < n; ++i) out[i] = mu[i] - mu[i + 1];
        return out;
    }
    throw DomainError("coweight of " + split_parent + " needs " + std::to_string(n) +
                      (x == 'A' ? " or " + std::to_string(n + 1) : std::string()) + " entries, got " +
                      std::to_string(mu.size()));
}

FoldData fold_data(const AffineRootDatum& datum)
{
    auto [x, n] = parse_finite_type(datum.split_parent);
    const int l = datum.size() - 1;
    FoldData fd;
    fd.sigma.resize(n);
    std::iota(fd.sigma.begin(), fd.sigma.end(), 0);
    auto root = [&](std::vector<int> hs) {
        Vec r(n, 0);
        for (int h : hs) r[h] = 1;
        return r;
    };
    if (datum.twist_order == 1) {
        for (int i = 0; i < l; ++i) {
            fd.node_roots.push_back(root({i}));
            fd.orbits.push_back({i});
        }
        return fd;
    }
    if (x == 'A' && n % 2 == 0) {
        for (int h = 0; h < n; ++h) fd.sigma[h] = n - 1 - h;
        for (int i = 1; i <= l; ++i) {
            if (i < l) {
                fd.node_roots.push_back(root({i - 1}));
                fd.orbits.push_back({i - 1, n - i});
            } else {
                fd.node_roots.push_back(root({l - 1, l}));
                fd.orbits.push_back({l - 1, l});
            }
        }
    } else if (x == 'A') {
        for (int h = 0; h < n; ++h) fd.sigma[h] = n - 1 - h;
        for (int i = 1; i <= l; ++i) {
            fd.node_roots.push_back(root({i - 1}));
            if (i < l)
                fd.orbits.push_back({i - 1, n - i});
            else
                fd.orbits.push_back({i - 1});
        }
    } else if (x == 'D' && datum.twist_order == 2) {
        std::swap(fd.sigma[n - 2], fd.sigma[n - 1]);
        for (int i = 1; i <= l; ++i) {
            fd.node_roots.push_back(root({i - 1}));
            if (i < l)
                fd.orbits.push_back({i - 1});
            else
                fd.orbits.push_back({n - 2, n - 1});
        }
    } else if (x == 'E') {
        fd.sigma = {5, 1, 4, 3, 2, 0};
        fd.node_roots = {root({0}), root({2}), root({3}), root({1})};
        fd.orbits = {{0, 5}, {2, 4}, {3}, {1}};
    } else if (x == 'D' && datum.twist_order == 3) {
        fd.sigma = {2, 1, 3, 0};
        fd.node_roots = {root({0}), root({1})};
        fd.orbits = {{0, 2, 3}, {1}};
    } else {
        throw DomainError("no folding data for " + datum.name);
    }
    return fd;
}

ProjectedCoweight project_coweight(const Vec& mu, const AffineRootDatum& datum, const FiniteRootDatum& fin)
{
    if (datum.split_parent.empty()) throw DomainError("datum has no split_parent; cannot project coweights");
    if (fin.special != 0) throw DomainError("project_coweight expects the special node 0");
    auto [x, n] = parse_finite_type(datum.split_parent);
    const int e = datum.twist_order;
    Vec nu = coweight_coordinates(mu, datum.split_parent);
    FoldData fd = fold_data(datum);

    ProjectedCoweight out;
    // coinvariants of sigma on the ambient cocharacter lattice
    {
        const bool eps = (x == 'A' && static_cast<int>(mu.size()) == n + 1);
        const int dim = static_cast<int>(mu.size());
        auto act = [&](const Vec& v) {
            Vec w(dim, 0);
            if (e == 1) return v;
            if (eps) {
                for (int j = 0; j < dim; ++j) w[j] = -v[dim - 1 - j];
            } else {
                for (int h = 0; h < dim; ++h) w[fd.sigma[h]] = v[h];
            }
            return w;
        };
        IMat gens;
        for (int i = 0; i < dim; ++i) {
            Vec b(dim, 0);
            b[i] = 1;
            Vec s = act(b);
            for (int j = 0; j < dim; ++j) s[j] = b[j] - s[j];
            gens.push_back(s);
        }
        SmithForm snf = smith_form(gens, dim);
        out.coinvariant_invariants = snf.invariants();
        out.coinvariant_class = snf.quotient_class(mu);
    }

    Vec norm(n, 0), cur = nu;
    for (int t = 0; t < e; ++t) {
        for (int h = 0; h < n; ++h) norm[h] += cur[h];
        Vec next(n);
        for (int h = 0; h < n; ++h) next[fd.sigma[h]] = cur[h];
        cur = next;
    }
    const int l = fin.rank();
    if (static_cast<int>(fd.node_roots.size()) != l) throw DomainError("folding data does not match the datum");
    out.lambda.assign(l, 0);
    for (int k = 0; k < l; ++k) {
        i64 s = 0;
        for (int h = 0; h < n; ++h) s += fd.node_roots[k][h] * (e == 1 ? nu[h] : norm[h]);
        if (s % fin.scale[k]) throw DomainError("coweight does not project to an integral coweight");
        out.lambda[k] = s / fin.scale[k];
    }
    return out;
}

}  // namespace twl

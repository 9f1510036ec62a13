#include "twloop/dims.hpp"

#include <chrono>

#include <boost/multiprecision/cpp_int.hpp>

#include "twloop/paths.hpp"
#include "twloop/weyl.hpp"

namespace twl {

using boost::multiprecision::cpp_int;

namespace {

i64 exact_quotient(const cpp_int& num, const cpp_int& den, const char* what)
{
    if (num % den != 0) throw DomainError(std::string(what) + ": quotient is not an integer");
    cpp_int q = num / den;
    if (q > std::numeric_limits<i64>::max()) throw DomainError(std::string(what) + ": value exceeds 64 bits");
    return q.convert_to<i64>();
}

}  // namespace

i64 weyl_dim(const IMat& c, const Vec& lambda)
{
    if (lambda.size() != c.size()) throw DomainError("weight has the wrong rank");
    for (i64 v : lambda)
        if (v < 0) throw DomainError("weight is not dominant");
    cpp_int num = 1, den = 1;
    for (const Vec& cor : positive_roots(transpose(c))) {
        i64 h = 0, p = 0;
        for (std::size_t i = 0; i < cor.size(); ++i) {
            h += cor[i];
            p += cor[i] * lambda[i];
        }
        num *= p + h;
        den *= h;
    }
    return exact_quotient(num, den, "weyl_dim");
}

int fundamental_index(const Vec& mu, const std::string& split_parent)
{
    Vec nu = coweight_coordinates(mu, split_parent);
    int r = -1;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] == 0) continue;
        if (nu[i] != 1 || r >= 0) return -1;
        r = static_cast<int>(i);
    }
    return r;
}

bool is_minuscule_node(const std::string& split_parent, int r)
{
    Vec theta = positive_roots(finite_cartan(split_parent)).back();
    return r >= 0 && r < static_cast<int>(theta.size()) && theta[r] == 1;
}

std::vector<int> minuscule_parts(const Vec& mu, const std::string& split_parent)
{
    Vec nu = coweight_coordinates(mu, split_parent);
    std::vector<int> parts;
    for (std::size_t r = 0; r < nu.size(); ++r) {
        if (nu[r] < 0) throw DomainError("coweight is not dominant");
        if (nu[r] > 0 && !is_minuscule_node(split_parent, static_cast<int>(r)))
            throw DomainError("coweight is not a sum of minuscule coweights (node " + std::to_string(r + 1) + ")");
        for (i64 k = 0; k < nu[r]; ++k) parts.push_back(static_cast<int>(r));
    }
    return parts;
}

i64 h_mu_parts(const AffineRootDatum& d, const std::vector<int>& nodes, i64 m)
{
    if (m < 1) throw DomainError("m must be positive");
    IMat c = finite_cartan(d.split_parent);
    i64 out = 1;
    for (int r : nodes) {
        if (!is_minuscule_node(d.split_parent, r)) throw DomainError("part is not minuscule");
        Vec w(c.size(), 0);
        w[r] = d.twist_order * m;
        i64 f = weyl_dim(c, w);
        if (__builtin_mul_overflow(out, f, &out)) throw DomainError("h_mu exceeds 64 bits");
    }
    return out;
}

i64 h_mu(const AffineRootDatum& d, const Vec& mu, i64 m)
{
    int r = fundamental_index(mu, d.split_parent);
    if (r < 0 || !is_minuscule_node(d.split_parent, r))
        throw DomainError("coweight is not minuscule; use h_mu_sum");
    return h_mu_parts(d, {r}, m);
}

i64 h_mu_sum(const AffineRootDatum& d, const std::vector<Vec>& parts, i64 m)
{
    if (parts.empty()) throw DomainError("empty decomposition; pass the zero coweight explicitly");
    std::vector<int> nodes;
    for (const Vec& p : parts) {
        bool zero = std::all_of(p.begin(), p.end(), [](i64 v) { return v == 0; });
        if (zero && parts.size() == 1) return 1;
        int r = fundamental_index(p, d.split_parent);
        if (r < 0 || !is_minuscule_node(d.split_parent, r)) throw DomainError("part is not minuscule");
        nodes.push_back(r);
    }
    return h_mu_parts(d, nodes, m);
}

i64 hook_content(int n, int r, i64 m)
{
    if (!(0 < r && r < n)) throw DomainError("hook_content needs 0 < r < n");
    if (m < 0) throw DomainError("hook_content needs m >= 0");
    cpp_int num = 1, den = 1;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= n - r; ++j) {
            num *= i + j + m - 1;
            den *= i + j - 1;
        }
    return exact_quotient(num, den, "hook_content");
}

i64 central_charge(const AffineRootDatum& d, const Vec& weight)
{
    if (static_cast<int>(weight.size()) != d.size()) throw DomainError("weight has the wrong length");
    return pairing(weight, d.comarks);
}

Vec iota_embed(const AffineRootDatum& d, const Vec& finite_weight)
{
    if (d.twist_order != 1) throw DomainError("iota_embed is defined for split groups only (twist order 1)");
    if (static_cast<int>(finite_weight.size()) != d.size() - 1) throw DomainError("finite weight has the wrong length");
    Vec out(d.size(), 0);
    for (int i = 1; i < d.size(); ++i) {
        out[i] = finite_weight[i - 1];
        out[0] -= d.comarks[i] * finite_weight[i - 1];
    }
    return out;
}

CoherenceReport check_coherence(const WeylGroup& g, const Vec& mu, NodeSet y, i64 a, std::size_t cap)
{
    auto start = std::chrono::steady_clock::now();
    const AffineRootDatum& d = g.affine();
    CoherenceReport rep;
    rep.datum = d.name;
    rep.mu = mu;
    rep.y = y;
    rep.a = a;
    Vec lambda = project_coweight(mu, d, g.finite()).lambda;
    rep.lhs = count_h_Y(g, lambda, y, a, cap).value;
    rep.rhs = h_mu_parts(d, minuscule_parts(mu, d.split_parent), node_count(y) * a);
    rep.equal = rep.lhs == rep.rhs;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace twl
